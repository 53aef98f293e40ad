"""Turn scenarios and verification runs into reports.

Every number is carried exactly and rendered twice: as an exact fraction
and as a 6-significant-digit decimal. Structured output is JSON with
rationals as {"fraction", "decimal"} objects, so re-parsing the fraction
field loses nothing; it contains no timing, which keeps identical inputs
producing byte-identical documents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import island as island_mod
from . import oracle as oracle_mod
from . import parental as parental_mod
from .errors import FrameTooLarge, ValidationError
from .ledger import posterior_guilt
from .rationals import decimal_str, format_rational
from .scenario import (
    CustomMassScenario,
    GeneralScenario,
    IslandScenario,
    LedgerScenario,
    ParentalScenario,
    Scenario,
)


@dataclass
class QueryRow:
    event: str
    belief: object
    plausibility: object | None = None
    classical: object | None = None
    method: str = "closed-form"


@dataclass
class MassRow:
    event: tuple[str, ...]
    mass: Fraction


@dataclass
class Report:
    command: str
    header: dict
    rows: list[QueryRow] = field(default_factory=list)
    mass_rows: list[MassRow] | None = None
    extras: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)


def _target_description(noun: str, params) -> str:
    ids = oracle_mod.target_ids(params)
    if len(ids) == 1:
        return f"{noun} is individual {ids[0]}"
    return f"{noun} among individuals {{{', '.join(str(i) for i in ids)}}}"


def _island_header(kind: str, params, backend: str) -> dict:
    return {
        "scenario": kind,
        "N": params.population - 1,
        "p": params.p,
        "suspect": params.suspect,
        "target_set_size": params.target_set_size,
        "backend": backend,
    }


def evaluate_scenario(scenario: Scenario, float_backend: bool = False) -> Report:
    if float_backend and not isinstance(scenario, IslandScenario):
        raise ValidationError(
            "the float backend is for island-cold and island-search asymptotics only"
        )
    if isinstance(scenario, IslandScenario):
        return _evaluate_island(scenario, float_backend)
    if isinstance(scenario, GeneralScenario):
        return _evaluate_general(scenario)
    if isinstance(scenario, ParentalScenario):
        return _evaluate_parental(scenario)
    if isinstance(scenario, LedgerScenario):
        return _evaluate_ledger(scenario)
    if isinstance(scenario, CustomMassScenario):
        if scenario.condition is not None:
            return condition_scenario(scenario)
        return _evaluate_custom(scenario)
    raise ValidationError(f"cannot evaluate scenario of type {type(scenario).__name__}")


def _evaluate_island(scenario: IslandScenario, float_backend: bool) -> Report:
    params = scenario.params
    if float_backend:
        params = island_mod.IslandParams(
            params.population, float(params.p), params.suspect, params.target_set_size
        )
    one = 1.0 if float_backend else Fraction(1)
    report = Report(
        "evaluate", _island_header(scenario.kind, params, "float" if float_backend else "exact")
    )
    if scenario.kind == "island-cold":
        classical = (
            island_mod.cold_case_classical(params) if params.target_set_size == 1 else None
        )
        report.rows.append(
            QueryRow(
                _target_description("culprit", params),
                island_mod.cold_case_belief(params),
                plausibility=one,
                classical=classical,
            )
        )
        if params.target_set_size != 1:
            report.notes.append("classical comparison is defined for a singleton suspect set")
    else:
        report.rows.append(
            QueryRow(
                _target_description("culprit", params) + " (first-found bearer)",
                island_mod.search_case_belief(params),
                plausibility=one,
                classical=island_mod.search_case_classical(params),
            )
        )
    return report


def _evaluate_general(scenario: GeneralScenario) -> Report:
    params = scenario.params
    header = _island_header(scenario.kind, params, "exact")
    header["q"] = params.q
    header["r"] = params.r
    report = Report("evaluate", header)
    report.rows.append(
        QueryRow(
            _target_description("culprit", params),
            island_mod.generalized_cold_case_belief(params),
            plausibility=Fraction(1),
        )
    )
    report.notes.append(
        "no classical comparison: the three-way determination model has no uniform-prior counterpart here"
    )
    return report


def _evaluate_parental(scenario: ParentalScenario) -> Report:
    params = scenario.params
    header = {
        "scenario": scenario.kind,
        "N": params.population - 1,
        "p0": params.p0,
        "p1": params.p1,
        "p2": params.p2,
        "allele_count": params.allele_count,
        "suspect": params.suspect,
        "target_set_size": params.target_set_size,
        "backend": "exact",
    }
    report = Report("evaluate", header)
    if params.allele_count == 2:
        belief = parental_mod.paternity_belief_two_alleles(params)
        plausibility = Fraction(1)
    else:
        belief = parental_mod.paternity_belief_one_allele(params)
        plausibility = _one_allele_plausibility(params)
        if plausibility is None:
            report.notes.append(
                "plausibility omitted: population exceeds the enumeration bound"
            )
        else:
            report.notes.append("plausibility computed by enumeration")
    classical = (
        parental_mod.paternity_classical(params) if params.target_set_size == 1 else None
    )
    report.rows.append(
        QueryRow(
            _target_description("father", params), belief,
            plausibility=plausibility, classical=classical,
        )
    )
    return report


def _one_allele_plausibility(params) -> Fraction | None:
    # unlike every other scenario, a one-copy suspect leaves posterior mass
    # on sets that exclude him, so plausibility < 1 and has no closed form
    try:
        pf = oracle_mod.parental_frame(params.population)
    except FrameTooLarge:
        return None
    _, posterior, _ = oracle_mod._parental_engine(
        params.population,
        Fraction(params.p0),
        Fraction(params.p1),
        Fraction(params.p2),
        params.suspect,
        params.allele_count,
    )
    return posterior.plausibility(oracle_mod.father_target_event(pf, params))


def _evaluate_ledger(scenario: LedgerScenario) -> Report:
    posterior = posterior_guilt(scenario.ledger)
    report = Report(
        "evaluate",
        {"scenario": "ledger", "entries": len(scenario.ledger.entries), "backend": "exact"},
    )
    report.rows.append(
        QueryRow(
            "guilty", posterior.guilty,
            plausibility=posterior.guilty + posterior.ignorance, method="conditioning",
        )
    )
    report.rows.append(
        QueryRow(
            "not guilty", posterior.not_guilty,
            plausibility=posterior.not_guilty + posterior.ignorance, method="conditioning",
        )
    )
    report.extras["residual_ignorance"] = posterior.ignorance
    return report


def _evaluate_custom(scenario: CustomMassScenario) -> Report:
    mass = scenario.mass()
    frame = mass.frame
    report = Report(
        "evaluate",
        {"scenario": "custom-mass", "outcomes": list(scenario.outcomes), "backend": "exact"},
    )
    for text, labels in scenario.queries:
        ev = frame.event_of_labels(labels)
        report.rows.append(
            QueryRow(
                f"{{{text}}}", mass.belief(ev),
                plausibility=mass.plausibility(ev), method="mass-function",
            )
        )
    report.mass_rows = [MassRow(tuple(ev.label_list()), m) for ev, m in mass.items()]
    return report


def condition_scenario(scenario: Scenario) -> Report:
    if not isinstance(scenario, CustomMassScenario):
        raise ValidationError("conditioning works on custom-mass scenarios")
    if scenario.condition is None:
        raise ValidationError("missing required key 'condition' (the event to condition on)")
    mass = scenario.mass()
    frame = mass.frame
    conditioned = mass.condition(frame.event_of_labels(scenario.condition))
    report = Report(
        "condition",
        {
            "scenario": "custom-mass",
            "outcomes": list(scenario.outcomes),
            "condition": sorted(scenario.condition),
            "backend": "exact",
        },
    )
    for text, labels in scenario.queries:
        ev = frame.event_of_labels(labels)
        report.rows.append(
            QueryRow(
                f"{{{text}}}", conditioned.belief(ev),
                plausibility=conditioned.plausibility(ev), method="conditioning",
            )
        )
    report.mass_rows = [MassRow(tuple(ev.label_list()), m) for ev, m in conditioned.items()]
    return report


# -- rendering ----------------------------------------------------------


def _number(value) -> str:
    return f"{format_rational(value)} ({decimal_str(value)})"


def _number_json(value) -> dict:
    return {"fraction": format_rational(value), "decimal": decimal_str(value)}


def _json_value(value):
    if isinstance(value, (Fraction, float)):
        return _number_json(value)
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    return str(value)


def render_table(report: Report) -> str:
    lines = []
    lines.append("  ".join(f"{k}={_header_text(v)}" for k, v in report.header.items()))
    if report.rows:
        lines.append("")
        table = [["event", "belief", "plausibility", "classical"]]
        for row in report.rows:
            table.append(
                [
                    row.event,
                    _number(row.belief),
                    _number(row.plausibility) if row.plausibility is not None else "-",
                    _number(row.classical) if row.classical is not None else "-",
                ]
            )
        lines.extend(_align(table))
    for key, value in report.extras.items():
        lines.append("")
        lines.append(f"{key.replace('_', ' ')}: {_number(value)}")
    if report.mass_rows is not None:
        lines.append("")
        lines.append("conditioned mass:" if report.command == "condition" else "mass:")
        for row in report.mass_rows:
            lines.append(f"  {{{', '.join(row.event)}}} = {_number(row.mass)}")
    for note in report.notes:
        lines.append("")
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"


def _header_text(value) -> str:
    if isinstance(value, (Fraction, float)):
        return format_rational(value)
    if isinstance(value, list):
        return ",".join(str(v) for v in value)
    return str(value)


def _align(table: list[list[str]]) -> list[str]:
    widths = [max(len(row[col]) for row in table) for col in range(len(table[0]))]
    return ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]


def render_structured(report: Report) -> str:
    doc = {
        "command": report.command,
        "scenario": _json_value(report.header),
        "rows": [
            {
                "event": row.event,
                "belief": _number_json(row.belief),
                "plausibility": (
                    _number_json(row.plausibility) if row.plausibility is not None else None
                ),
                "classical": (
                    _number_json(row.classical) if row.classical is not None else None
                ),
                "method": row.method,
            }
            for row in report.rows
        ],
    }
    if report.extras:
        doc.update({k: _number_json(v) for k, v in report.extras.items()})
    if report.mass_rows is not None:
        doc["mass"] = [
            {"event": list(row.event), "mass": _number_json(row.mass)}
            for row in report.mass_rows
        ]
    if report.notes:
        doc["notes"] = list(report.notes)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- verification reports ------------------------------------------------


def render_verification_table(run, max_population: int, trait_probs) -> str:
    lines = [
        f"verification grid: populations 2..{max_population}, "
        f"trait probabilities {' '.join(format_rational(p) for p in trait_probs)}",
        f"oracle reports: {len(run.reports)}   mismatches: {len(run.mismatches)}",
        f"invariant checks: {len(run.checks)}   failed: {len(run.failed_checks)}",
    ]
    for report in run.mismatches:
        lines.append(
            f"MISMATCH {report.scenario} [{report.describe_point()}]: "
            f"closed form {format_rational(report.closed_form)} "
            f"!= oracle {format_rational(report.oracle)}"
        )
    for check in run.failed_checks:
        lines.append(f"FAILED CHECK {check.name} [{check.describe_point()}]")
    lines.append("result: OK" if run.ok else "result: FAIL")
    return "\n".join(lines) + "\n"


def render_verification_structured(run, max_population: int, trait_probs) -> str:
    doc = {
        "command": "verify",
        "grid": {
            "max_population": max_population,
            "trait_probs": [_number_json(p) for p in trait_probs],
        },
        "reports": [
            {
                "scenario": r.scenario,
                "point": _json_value(r.point),
                "closed_form": _number_json(r.closed_form),
                "oracle": _number_json(r.oracle),
                "equal": r.equal,
                "focal_before": r.focal_before,
                "focal_after": r.focal_after,
            }
            for r in run.reports
        ],
        "checks": [
            {"name": c.name, "point": _json_value(c.point), "passed": c.passed}
            for c in run.checks
        ],
        "summary": {
            "reports": len(run.reports),
            "mismatches": len(run.mismatches),
            "checks": len(run.checks),
            "failed_checks": len(run.failed_checks),
            "ok": run.ok,
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
