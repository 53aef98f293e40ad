"""Scenario files: a line-oriented key/value format with exact numbers.

One scenario per file, selected by the ``scenario`` key. All probabilities
and masses parse as exact rationals ('a/b', integers, or finite decimals
like 0.855 = 171/200); nothing goes through floating point. Full-line
comments start with '#'. The grammar lives in docs/formats.md.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Frame, MassFunction
from .errors import ParseError, ValidationError
from .island import GeneralizedParams, IslandParams
from .ledger import Cell, Ledger, parse_cells
from .parental import ParentalParams
from .rationals import parse_rational

SCENARIO_KINDS = (
    "island-cold",
    "island-search",
    "island-general",
    "parental",
    "ledger",
    "custom-mass",
)


@dataclass(frozen=True)
class IslandScenario:
    kind: str  # island-cold | island-search
    params: IslandParams


@dataclass(frozen=True)
class GeneralScenario:
    kind: str
    params: GeneralizedParams


@dataclass(frozen=True)
class ParentalScenario:
    kind: str
    params: ParentalParams


@dataclass(frozen=True)
class LedgerScenario:
    kind: str
    ledger: Ledger


@dataclass(frozen=True)
class CustomMassScenario:
    kind: str
    outcomes: tuple[str, ...]
    entries: tuple[tuple[frozenset[str], Fraction], ...]
    condition: frozenset[str] | None
    queries: tuple[tuple[str, frozenset[str]], ...]  # (display text, labels)

    def frame(self) -> Frame:
        return Frame(len(self.outcomes), self.outcomes)

    def mass(self) -> MassFunction:
        frame = self.frame()
        return MassFunction(
            frame,
            [(frame.event_of_labels(labels), m) for labels, m in self.entries],
        )


Scenario = (
    IslandScenario | GeneralScenario | ParentalScenario | LedgerScenario | CustomMassScenario
)


@dataclass
class _Line:
    number: int
    key: str
    value: str
    value_column: int


def _scan(text: str) -> list[_Line]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ":" not in raw:
            raise ParseError("expected 'key: value'", number, 1)
        key, _, value = raw.partition(":")
        if not key.strip():
            raise ParseError("empty key", number, 1)
        value_column = len(key) + 2 + (len(value) - len(value.lstrip()))
        lines.append(_Line(number, key.strip().lower(), value.strip(), value_column))
    return lines


class _Fields:
    """Key/value access with single-use bookkeeping and located errors."""

    def __init__(self, lines: list[_Line]):
        self.scalars: dict[str, _Line] = {}
        self.repeated: dict[str, list[_Line]] = {}
        for line in lines:
            if line.key in ("mass", "query"):
                self.repeated.setdefault(line.key, []).append(line)
            elif line.key in self.scalars:
                raise ParseError(f"duplicate key {line.key!r}", line.number, 1)
            else:
                self.scalars[line.key] = line
        self.used: set[str] = set()

    def take(self, key: str) -> _Line | None:
        self.used.add(key)
        return self.scalars.get(key)

    def require(self, key: str) -> _Line:
        line = self.take(key)
        if line is None:
            raise ValidationError(f"missing required key {key!r}")
        return line

    def rational(self, key: str, default=None) -> Fraction | None:
        line = self.take(key)
        if line is None:
            return default
        return _rational(line)

    def integer(self, key: str, default=None) -> int | None:
        line = self.take(key)
        if line is None:
            return default
        try:
            return int(line.value)
        except ValueError:
            raise ParseError(
                f"{key} must be an integer, got {line.value!r}",
                line.number,
                line.value_column,
            ) from None

    def finish(self) -> None:
        for key, line in self.scalars.items():
            if key not in self.used:
                raise ParseError(f"unknown key {key!r}", line.number, 1)
        for key, lines in self.repeated.items():
            if key not in self.used:
                raise ParseError(
                    f"{key!r} lines do not belong in this scenario", lines[0].number, 1
                )

    def masses(self) -> list[_Line]:
        self.used.add("mass")
        return self.repeated.get("mass", [])

    def queries(self) -> list[_Line]:
        self.used.add("query")
        return self.repeated.get("query", [])


def _rational(line: _Line) -> Fraction:
    try:
        return parse_rational(line.value)
    except ValueError:
        raise ParseError(
            f"expected a rational number, got {line.value!r}",
            line.number,
            line.value_column,
        ) from None


def _split_mass(line: _Line) -> tuple[list[str], Fraction]:
    head, eq, tail = line.value.rpartition("=")
    if not eq or not head.strip():
        raise ParseError(
            "mass lines look like 'mass: <sets...> = <rational>'",
            line.number,
            line.value_column,
        )
    tokens = head.split()
    try:
        mass = parse_rational(tail)
    except ValueError:
        raise ParseError(
            f"expected a rational mass, got {tail.strip()!r}",
            line.number,
            line.value_column + len(head) + 1,
        ) from None
    return tokens, mass


def parse_scenario(text: str) -> Scenario:
    fields = _Fields(_scan(text))
    kind_line = fields.require("scenario")
    kind = kind_line.value.lower()
    if kind not in SCENARIO_KINDS:
        raise ParseError(
            f"unknown scenario {kind_line.value!r} (expected one of {', '.join(SCENARIO_KINDS)})",
            kind_line.number,
            kind_line.value_column,
        )
    builder = {
        "island-cold": _island,
        "island-search": _island,
        "island-general": _general,
        "parental": _parental,
        "ledger": _ledger,
        "custom-mass": _custom,
    }[kind]
    scenario = builder(kind, fields)
    fields.finish()
    return scenario


def load_scenario(path) -> Scenario:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_scenario(handle.read())


def _common_island_fields(fields: _Fields) -> dict:
    n_others = fields.integer("n")
    if n_others is None:
        raise ValidationError("missing required key 'N' (islanders besides the suspect)")
    return {
        "population": n_others + 1,
        "suspect": fields.integer("suspect", 1),
        "target_set_size": fields.integer("target_set_size", 1),
    }


def _island(kind: str, fields: _Fields) -> IslandScenario:
    common = _common_island_fields(fields)
    p = fields.rational("p")
    if p is None:
        raise ValidationError("missing required key 'p' (trait frequency)")
    return IslandScenario(kind, IslandParams(p=p, **common))


def _general(kind: str, fields: _Fields) -> GeneralScenario:
    common = _common_island_fields(fields)
    values = {}
    for key in ("p", "q", "r"):
        value = fields.rational(key)
        if value is None:
            raise ValidationError(f"missing required key {key!r}")
        values[key] = value
    return GeneralScenario(kind, GeneralizedParams(**common, **values))


def _parental(kind: str, fields: _Fields) -> ParentalScenario:
    common = _common_island_fields(fields)
    values = {}
    for key in ("p0", "p1", "p2"):
        value = fields.rational(key)
        if value is None:
            raise ValidationError(f"missing required key {key!r}")
        values[key] = value
    allele_count = fields.integer("allele_count", 2)
    return ParentalScenario(
        kind, ParentalParams(allele_count=allele_count, **common, **values)
    )


def _ledger(kind: str, fields: _Fields) -> LedgerScenario:
    entries: list[tuple[frozenset[Cell], Fraction]] = []
    for line in fields.masses():
        tokens, mass = _split_mass(line)
        try:
            cells = parse_cells(tokens)
        except ValidationError as exc:
            raise ParseError(str(exc), line.number, line.value_column) from None
        entries.append((cells, mass))
    if not entries:
        raise ValidationError("a ledger scenario needs at least one 'mass:' line")
    return LedgerScenario(kind, Ledger(tuple(entries)))


def _custom(kind: str, fields: _Fields) -> CustomMassScenario:
    outcome_line = fields.require("outcomes")
    outcomes = tuple(outcome_line.value.split())
    if not outcomes:
        raise ParseError("outcomes line is empty", outcome_line.number, outcome_line.value_column)
    if len(set(outcomes)) != len(outcomes):
        raise ValidationError("outcome labels must be pairwise distinct")
    known = set(outcomes)

    def resolve(tokens: list[str], line: _Line) -> frozenset[str]:
        for token in tokens:
            if token not in known:
                raise ParseError(
                    f"unknown outcome {token!r}", line.number, line.value_column
                )
        return frozenset(tokens)

    entries = []
    for line in fields.masses():
        tokens, mass = _split_mass(line)
        entries.append((resolve(tokens, line), mass))
    if not entries:
        raise ValidationError("a custom-mass scenario needs at least one 'mass:' line")

    condition_line = fields.take("condition")
    condition = None
    if condition_line is not None:
        condition = resolve(condition_line.value.split(), condition_line)
        if not condition:
            raise ParseError(
                "condition line is empty", condition_line.number, condition_line.value_column
            )

    queries = []
    for line in fields.queries():
        labels = resolve(line.value.split(), line)
        if not labels:
            raise ParseError("query line is empty", line.number, line.value_column)
        queries.append((" ".join(sorted(labels)), labels))

    scenario = CustomMassScenario(kind, outcomes, tuple(entries), condition, tuple(queries))
    scenario.mass()  # surface mass-function validation problems now
    return scenario
