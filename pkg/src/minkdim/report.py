"""Report assembly: exact values with decimal companions, JSON round-trip.

Reports are the public output contract of the CLI.  Exact rationals are
rendered both as "p/q" strings and as decimals with 15 significant digits
(round-half-even); solver outputs carry high-precision decimal strings.  A
report serializes to a JSON object with top-level fields
{schema_version, command, config, result, diagnostics} and reconstructs
losslessly from its own JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any

from mpmath import mp

from . import __version__
from .dim_bounds import BoundsInterval, PreservationVerdict
from .empirical_dim import CoveringEstimate
from .moran_solver import MoranRoot

SCHEMA_VERSION = "1"
DECIMAL_SIGNIFICANT_DIGITS = 15


def fraction_str(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def decimal_str(fr: Fraction, sig: int = DECIMAL_SIGNIFICANT_DIGITS) -> str:
    """Decimal rendering of an exact rational at sig significant digits."""
    with localcontext() as ctx:
        ctx.prec = sig
        ctx.rounding = ROUND_HALF_EVEN
        return str(Decimal(fr.numerator) / Decimal(fr.denominator))


def exact_number(fr: Fraction) -> dict[str, str]:
    """JSON value for an exact rational: exact and decimal forms together."""
    return {"exact": fraction_str(fr), "decimal": decimal_str(fr)}


def mpf_str(x, digits: int = 20) -> str:
    """High-precision decimal string for a solver real."""
    return mp.nstr(x, digits)


def moran_to_dict(root: MoranRoot) -> dict[str, Any]:
    return {
        "s": mpf_str(root.s),
        "s_float": float(root.s),
        "residual": mpf_str(root.residual, 6),
        "iterations": root.iterations,
        "bracket": [mpf_str(root.bracket[0]), mpf_str(root.bracket[1])],
    }


def bounds_to_dict(bounds: BoundsInterval) -> dict[str, Any]:
    return {"n": bounds.n, "lower": bounds.lower, "upper": bounds.upper}


def verdict_to_dict(verdict: PreservationVerdict) -> dict[str, Any]:
    return {
        "n": verdict.n,
        "bounds": bounds_to_dict(verdict.bounds),
        "image_dimension": moran_to_dict(verdict.image_dimension),
        "preserved": verdict.preserved.value,
        "gap": verdict.gap,
        "tol": verdict.tol,
    }


def estimate_to_dict(estimate: CoveringEstimate) -> dict[str, Any]:
    return {
        "side": estimate.side.value,
        "depth": estimate.depth,
        "cylinder_count": estimate.cylinder_count,
        "s_hat": estimate.s_hat,
        "sum_at_root": estimate.sum_at_root,
        "bracket": list(estimate.bracket),
        "wall_time_ms": estimate.wall_time_ms,
    }


@dataclass
class DimensionReport:
    """One CLI invocation's machine-readable output."""

    command: str
    config: dict[str, Any]
    result: dict[str, Any]
    diagnostics: dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        diagnostics = {"tool_version": __version__, **self.diagnostics}
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "config": self.config,
            "result": self.result,
            "diagnostics": diagnostics,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "DimensionReport":
        diagnostics = dict(d["diagnostics"])
        diagnostics.pop("tool_version", None)
        return cls(
            command=d["command"],
            config=d["config"],
            result=d["result"],
            diagnostics=diagnostics,
            schema_version=d["schema_version"],
        )
