"""Command-line interface: parsing, reports, formats, exit codes."""

import json

import pytest

from minkdim import DigitSet
from minkdim.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_cf,
    parse_depth_spec,
    parse_digit_spec,
    parse_rational,
    resolve_budget,
)
from minkdim.report import DimensionReport


class TestParsers:
    def test_digit_specs(self):
        assert parse_digit_spec("1..9") == DigitSet(tuple(range(1, 10)))
        assert parse_digit_spec("1,3,5") == DigitSet((1, 3, 5))
        assert parse_digit_spec("1, 4..6, 9") == DigitSet((1, 4, 5, 6, 9))

    def test_digit_spec_errors(self):
        for text in ("", "a", "5..3", "1,,2", "1..b"):
            with pytest.raises(ValueError):
                parse_digit_spec(text)
        with pytest.raises(ValueError):
            parse_digit_spec("3")  # a single digit is not a digit set

    def test_depth_specs(self):
        assert parse_depth_spec("3") == [3]
        assert parse_depth_spec("1..4") == [1, 2, 3, 4]
        assert parse_depth_spec("4,2,2") == [2, 4]

    def test_rationals(self):
        assert parse_rational("2/3") == (2, 3)
        assert parse_rational("1") == (1, 1)
        with pytest.raises(ValueError):
            parse_rational("x/3")

    def test_cf_forms(self):
        assert parse_cf("0;2,3").preperiod == (2, 3)
        cf = parse_cf("0;1,1,1,...")
        assert (cf.preperiod, cf.period) == ((), (1,))
        cf = parse_cf("0;2,(1,2)")
        assert (cf.preperiod, cf.period) == ((2,), (1, 2))
        cf = parse_cf("[0; 1, 2, 1, 2, ...]")
        assert (cf.preperiod, cf.period) == ((), (1, 2))
        for text in ("1;2", "0;", "0;2,(1,2", "0;x"):
            with pytest.raises(ValueError):
                parse_cf(text)

    def test_budget_resolution(self, monkeypatch):
        monkeypatch.delenv("MINKDIM_BUDGET", raising=False)
        assert resolve_budget(None) == 2_000_000
        assert resolve_budget(50) == 50
        monkeypatch.setenv("MINKDIM_BUDGET", "123")
        assert resolve_budget(None) == 123
        assert resolve_budget(99) == 99  # explicit flag wins
        monkeypatch.setenv("MINKDIM_BUDGET", "junk")
        with pytest.raises(ValueError):
            resolve_budget(None)
        with pytest.raises(ValueError):
            resolve_budget(0)


class TestMoranCommand:
    def test_text_output(self, capsys):
        assert main(["moran", "--digits", "1..9"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "0.99857786255360475" in out

    def test_json_report(self, capsys):
        assert main(["moran", "--digits", "1..9", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema_version"] == "1"
        assert payload["command"] == "moran"
        assert payload["config"]["digits"] == list(range(1, 10))
        s = payload["result"]["moran_root"]["s_float"]
        assert abs(s - 0.9985778625536) <= 1e-10
        assert "tool_version" in payload["diagnostics"]

    def test_json_round_trip(self, capsys):
        main(["moran", "--digits", "1,2", "--format", "json"])
        payload = json.loads(capsys.readouterr().out)
        report = DimensionReport.from_dict(payload)
        assert report.to_dict() == payload

    def test_golden_value(self, capsys):
        assert main(["moran", "--digits", "1,2", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert abs(payload["result"]["moran_root"]["s_float"] - 0.6942419136) <= 1e-9

    def test_usage_errors(self, capsys):
        assert main(["moran", "--digits", "3"]) == EXIT_USAGE
        assert main(["moran", "--digits", "1..9", "--tol", "0.5"]) == EXIT_USAGE
        assert main(["moran", "--digits", "1..9", "--tol", "1e-40"]) == EXIT_USAGE
        assert main(["moran"]) == EXIT_USAGE  # --digits required


class TestBoundsCommand:
    def test_reference_values(self, capsys):
        assert main(["bounds", "--n", "9", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        bounds = payload["result"]["bounds"]
        assert abs(bounds["lower"] - 0.6308969) <= 1e-7
        assert abs(bounds["upper"] - 0.985445112) <= 1e-7

    def test_large_n(self, capsys):
        assert main(["bounds", "--n", "100", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert abs(payload["result"]["bounds"]["lower"] - 0.96678) <= 1e-4

    def test_n8_rejected(self, capsys):
        assert main(["bounds", "--n", "8"]) == EXIT_USAGE
        assert "n > 8" in capsys.readouterr().err


class TestVerdictCommand:
    def test_headline(self, capsys):
        assert main(["verdict", "--n", "9"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "NOT_PRESERVED" in out
        assert "0.99857786255360475" in out

    def test_embeds_both_numbers(self, capsys):
        assert main(["verdict", "--n", "9", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        v = payload["result"]["verdict"]
        assert abs(v["bounds"]["upper"] - 0.985445112) <= 1e-7
        assert abs(v["image_dimension"]["s_float"] - 0.9985778625536) <= 1e-10
        assert v["preserved"] == "not_preserved"
        assert abs(v["gap"] - 0.013132746) <= 1e-6

    def test_wide_tolerance(self, capsys):
        assert main(["verdict", "--n", "9", "--tol", "0.5"]) == EXIT_OK
        assert "INCONCLUSIVE" in capsys.readouterr().out

    def test_n20_computes(self, capsys):
        assert main(["verdict", "--n", "20", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["verdict"]["preserved"] == "not_preserved"


class TestEvalCommand:
    def test_rational(self, capsys):
        assert main(["eval", "--rational", "2/3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "3/4" in out and "0.75" in out

    def test_unit_endpoint(self, capsys):
        assert main(["eval", "--rational", "1/1", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["value"]["exact"] == "1/1"

    def test_periodic_cf(self, capsys):
        assert main(["eval", "--cf", "0;1,1,1,...", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["value"]["exact"] == "2/3"

    def test_mixed_cf(self, capsys):
        assert main(["eval", "--cf", "0;2,(1,2)", "--format", "json"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["result"]["value"]["exact"] == "2/7"

    def test_out_of_domain(self, capsys):
        assert main(["eval", "--rational", "5/3"]) == EXIT_USAGE
        assert main(["eval", "--rational", "0/3"]) == EXIT_USAGE
        assert main(["eval", "--cf", "0;nope"]) == EXIT_USAGE

    def test_requires_exactly_one_input(self, capsys):
        assert main(["eval"]) == EXIT_USAGE
        assert (
            main(["eval", "--rational", "1/2", "--cf", "0;2"]) == EXIT_USAGE
        )


class TestEmpiricalCommand:
    def test_image_series_csv(self, capsys):
        rc = main(
            [
                "empirical", "--digits", "1,2", "--side", "image",
                "--depths", "1..4", "--format", "csv",
            ]
        )
        assert rc == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "depth,cylinder_count,s_hat,sum_at_root,wall_time_ms"
        roots = [float(line.split(",")[2]) for line in lines[1:]]
        assert len(roots) == 4
        assert max(roots) - min(roots) <= 1e-9

    def test_domain_json(self, capsys):
        rc = main(
            ["empirical", "--digits", "1..9", "--side", "domain",
             "--depths", "3", "--format", "json"]
        )
        assert rc == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        est = payload["result"]["series"][0]
        assert est["cylinder_count"] == 729
        assert 0.6308969 < est["s_hat"] < 0.985445112

    def test_budget_exceeded(self, capsys):
        assert (
            main(["empirical", "--digits", "1..9", "--depths", "1..9"])
            == EXIT_BUDGET
        )

    def test_env_budget(self, capsys, monkeypatch):
        monkeypatch.setenv("MINKDIM_BUDGET", "10")
        assert (
            main(["empirical", "--digits", "1,2", "--depths", "4"]) == EXIT_BUDGET
        )
        monkeypatch.setenv("MINKDIM_BUDGET", "not-a-number")
        assert (
            main(["empirical", "--digits", "1,2", "--depths", "2"]) == EXIT_USAGE
        )


class TestConstructCommand:
    def test_depth_zero_whole_image(self, capsys):
        rc = main(["construct", "--digits", "1,2", "--depth", "0", "--format", "json"])
        assert rc == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        rows = payload["result"]["cylinders"]
        assert len(rows) == 1
        assert rows[0]["sup"]["exact"] == "6/7"
        assert rows[0]["inf"]["exact"] == "2/7"

    def test_depth_one_diameters(self, capsys):
        rc = main(["construct", "--digits", "1,2", "--depth", "1", "--format", "csv"])
        assert rc == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith("word,inf_exact,sup_exact")
        diameters = {line.split(",")[5] for line in lines[1:]}
        assert diameters == {"2/7", "1/7"}

    def test_other_digit_set(self, capsys):
        rc = main(["construct", "--digits", "2,3", "--depth", "1", "--format", "csv"])
        assert rc == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        diameters = {line.split(",")[5] for line in lines[1:]}
        assert diameters == {"2/31", "1/31"}

    def test_negative_depth(self, capsys):
        assert main(["construct", "--digits", "1,2", "--depth", "-1"]) == EXIT_USAGE

    def test_budget(self, capsys):
        rc = main(
            ["construct", "--digits", "1..9", "--depth", "9", "--budget", "100"]
        )
        assert rc == EXIT_BUDGET


class TestOutputPlumbing:
    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "report.json"
        rc = main(
            ["bounds", "--n", "9", "--format", "json", "--out", str(target)]
        )
        assert rc == EXIT_OK
        assert capsys.readouterr().out == ""
        payload = json.loads(target.read_text(encoding="utf-8"))
        assert payload["command"] == "bounds"

    def test_csv_out_uses_lf(self, tmp_path):
        target = tmp_path / "series.csv"
        main(
            ["empirical", "--digits", "1,2", "--depths", "1..2",
             "--format", "csv", "--out", str(target)]
        )
        raw = target.read_bytes()
        assert b"\r" not in raw
        assert raw.endswith(b"\n")

    def test_version_flag(self, capsys):
        assert main(["--version"]) == EXIT_OK
        assert "minkdim" in capsys.readouterr().out

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == EXIT_USAGE

    def test_scalar_csv_format(self, capsys):
        assert main(["moran", "--digits", "1,2", "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "digits,s,residual,iterations"
        assert len(lines) == 2
