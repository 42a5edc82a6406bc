"""Hausdorff dimensions of continued-fraction digit-restricted sets and of
their images under the Minkowski question-mark function.

The headline computation: the set of x in (0, 1] whose partial quotients all
lie in {1, ..., 9} has dimension at most 0.985445112 (Jarnik-type bounds),
while its Minkowski image is exactly self-similar with dimension
0.9985778625536... (Moran root) -- so the Minkowski function does not
preserve Hausdorff dimension.
"""

__version__ = "0.1.0"

from .errors import BudgetExceededError, ToleranceError
from .cf_core import (
    DEFAULT_BUDGET,
    ContinuedFraction,
    DigitSet,
    RationalInterval,
    alternate_form,
    canonicalize,
    cf_from_rational,
    cf_value,
    convergents,
    cylinder_interval,
    enumerate_cylinders,
)
from .minkowski_eval import (
    DyadicInterval,
    DyadicRational,
    minkowski_enclosure,
    minkowski_finite,
    minkowski_periodic,
)
from .selfsimilar import (
    ImageCylinder,
    enumerate_image_cylinders,
    image_cylinder,
    image_diameter,
    image_inf,
    image_sup,
    tail_set_diameter,
    tail_set_inf,
    tail_set_sup,
)
from .moran_solver import MoranRoot, bisect_newton, moran_function, moran_root
from .dim_bounds import (
    BoundsInterval,
    Preservation,
    PreservationVerdict,
    jarnik_bounds,
    preservation_verdict,
)
from .empirical_dim import (
    CoveringEstimate,
    Side,
    covering_root_domain,
    covering_root_image,
    estimate_series,
    estimates_to_csv,
    successive_differences,
)

__all__ = [
    "__version__",
    "BudgetExceededError",
    "ToleranceError",
    "DEFAULT_BUDGET",
    "ContinuedFraction",
    "DigitSet",
    "RationalInterval",
    "alternate_form",
    "canonicalize",
    "cf_from_rational",
    "cf_value",
    "convergents",
    "cylinder_interval",
    "enumerate_cylinders",
    "DyadicInterval",
    "DyadicRational",
    "minkowski_enclosure",
    "minkowski_finite",
    "minkowski_periodic",
    "ImageCylinder",
    "enumerate_image_cylinders",
    "image_cylinder",
    "image_diameter",
    "image_inf",
    "image_sup",
    "tail_set_diameter",
    "tail_set_inf",
    "tail_set_sup",
    "MoranRoot",
    "bisect_newton",
    "moran_function",
    "moran_root",
    "BoundsInterval",
    "Preservation",
    "PreservationVerdict",
    "jarnik_bounds",
    "preservation_verdict",
    "CoveringEstimate",
    "Side",
    "covering_root_domain",
    "covering_root_image",
    "estimate_series",
    "estimates_to_csv",
    "successive_differences",
]
