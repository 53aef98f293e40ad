"""CLI surface: subcommands, output modes, exit codes, determinism."""

import json
from fractions import Fraction as F

import pytest

from beliefcalc import island as island_solvers
from beliefcalc.cli import main

COLD = "scenario: island-cold\nN: 3\np: 1/2\n"
SEARCH = "scenario: island-search\nN: 2\np: 1/2\n"
FAMILY = (
    "scenario: custom-mass\n"
    "outcomes: Father Mother Son\n"
    "mass: Father Mother = 9/10\n"
    "mass: Son = 1/10\n"
    "condition: Father Son\n"
    "query: Father\n"
    "query: Son\n"
)
TWO_DRIVERS = (
    "scenario: custom-mass\n"
    "outcomes: driver_A driver_B\n"
    "mass: driver_A driver_B = 1\n"
    "query: driver_A\n"
    "query: driver_B\n"
    "query: driver_A driver_B\n"
)
MIXTURE = (
    "scenario: ledger\n"
    "mass: G0E0 = 0.5\n"
    "mass: G0E1 = 0.05\n"
    "mass: G0E0 G0E1 = 0.15\n"
    "mass: IV = 0.2\n"
    "mass: V = 0.05\n"
    "mass: VI = 0.05\n"
)


def write(tmp_path, text):
    path = tmp_path / "scenario.bft"
    path.write_text(text)
    return str(path)


class TestEvaluate:
    def test_island_cold_table(self, tmp_path, capsys):
        assert main(["evaluate", write(tmp_path, COLD)]) == 0
        out = capsys.readouterr().out
        assert "1/8 (0.125)" in out
        assert "2/5 (0.4)" in out

    def test_island_search(self, tmp_path, capsys):
        assert main(["evaluate", write(tmp_path, SEARCH)]) == 0
        out = capsys.readouterr().out
        assert "3/7" in out and "7/12" in out

    def test_ledger_mixture(self, tmp_path, capsys):
        assert main(["evaluate", write(tmp_path, MIXTURE)]) == 0
        out = capsys.readouterr().out
        assert "1/2 (0.5)" in out
        assert "2/5 (0.4)" in out
        assert "residual ignorance: 1/10 (0.1)" in out

    def test_total_ignorance_between_two_drivers(self, tmp_path, capsys):
        assert main(["evaluate", write(tmp_path, TWO_DRIVERS)]) == 0
        doc = json.loads(
            _structured(tmp_path, capsys, TWO_DRIVERS)
        )
        beliefs = {row["event"]: F(row["belief"]["fraction"]) for row in doc["rows"]}
        assert beliefs["{driver_A}"] == 0
        assert beliefs["{driver_B}"] == 0
        assert beliefs["{driver_A driver_B}"] == 1

    def test_float_backend_asymptotics(self, tmp_path, capsys):
        path = write(tmp_path, "scenario: island-cold\nN: 1000000\np: 1/1000000\n")
        assert main(["evaluate", path, "--float", "--output", "structured"]) == 0
        doc = json.loads(capsys.readouterr().out)
        belief = float(doc["rows"][0]["belief"]["decimal"])
        assert abs(belief - 0.367879) < 1e-3

    def test_float_rejected_for_ledger(self, tmp_path, capsys):
        assert main(["evaluate", write(tmp_path, MIXTURE), "--float"]) == 1
        assert "float backend" in capsys.readouterr().err

    def test_parse_error_names_location(self, tmp_path, capsys):
        assert main(["evaluate", write(tmp_path, "scenario: island-cold\nN; 3\n")]) == 1
        assert "line 2" in capsys.readouterr().err


def _structured(tmp_path, capsys, text):
    capsys.readouterr()
    assert main(["evaluate", write(tmp_path, text), "--output", "structured"]) == 0
    return capsys.readouterr().out


class TestCondition:
    def test_family_example(self, tmp_path, capsys):
        assert main(["condition", write(tmp_path, FAMILY)]) == 0
        out = capsys.readouterr().out
        assert "{Father} = 9/10 (0.9)" in out
        assert "{Son} = 1/10 (0.1)" in out

    def test_vacuous_conditions_to_certainty(self, tmp_path, capsys):
        text = (
            "scenario: custom-mass\n"
            "outcomes: a b c\n"
            "mass: a b c = 1\n"
            "condition: a b\n"
            "query: a b\n"
        )
        assert main(["condition", write(tmp_path, text)]) == 0
        assert "{a, b} = 1 (1)" in capsys.readouterr().out

    def test_missing_condition_line(self, tmp_path, capsys):
        assert main(["condition", write(tmp_path, TWO_DRIVERS)]) == 1
        assert "condition" in capsys.readouterr().err

    def test_impossible_conditioning_reported(self, tmp_path, capsys):
        text = (
            "scenario: custom-mass\n"
            "outcomes: a b\n"
            "mass: a = 1\n"
            "condition: b\n"
        )
        assert main(["condition", write(tmp_path, text)]) == 1
        assert "ConditioningImpossible" in capsys.readouterr().err


class TestDeterminism:
    def test_structured_output_is_byte_identical(self, tmp_path, capsys):
        first = _structured(tmp_path, capsys, COLD)
        second = _structured(tmp_path, capsys, COLD)
        assert first == second

    def test_verify_structured_deterministic(self, capsys):
        assert main(["verify", "--max-pop", "2", "--output", "structured"]) == 0
        first = capsys.readouterr().out
        assert main(["verify", "--max-pop", "2", "--output", "structured"]) == 0
        assert capsys.readouterr().out == first


class TestVerify:
    def test_default_small_grid_ok(self, capsys):
        assert main(["verify", "--max-pop", "3"]) == 0
        out = capsys.readouterr().out
        assert "result: OK" in out
        assert "mismatches: 0" in out

    def test_custom_grid(self, capsys):
        assert main(["verify", "--max-pop", "2", "--grid", "1/8,7/8"]) == 0
        assert "1/8 7/8" in capsys.readouterr().out

    def test_bad_grid(self, capsys):
        assert main(["verify", "--grid", "huh"]) == 1
        assert "bad probability" in capsys.readouterr().err

    def test_float_rejected(self, capsys):
        assert main(["verify", "--float"]) == 2
        assert "exact-only" in capsys.readouterr().err

    def test_population_cap(self, capsys):
        assert main(["verify", "--max-pop", "20"]) == 1
        assert "FrameTooLarge" in capsys.readouterr().err

    def test_perturbation_fails_and_names_point(self, capsys, monkeypatch):
        # negative control for the exit-status contract
        true_form = island_solvers.search_case_belief

        def skewed(params):
            value = true_form(params)
            if params.population == 2 and params.p == F(3, 4):
                return value + F(1, 1000)
            return value

        monkeypatch.setattr(island_solvers, "search_case_belief", skewed)
        assert main(["verify", "--max-pop", "2"]) == 1
        out = capsys.readouterr().out
        assert "result: FAIL" in out
        assert "MISMATCH" in out
        assert "population=2, p=3/4" in out
