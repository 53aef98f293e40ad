"""Joint guilt/evidence ledgers on the 2x2 frame.

The frame is the product of a guilt indicator G and an evidence indicator
E, both binary. A ledger assigns mass to subsets of the four (G, E) cells;
conditioning on E = 1 and projecting onto G yields three numbers: belief
in guilt, belief in innocence, and residual ignorance (mass withheld from
both). Residual ignorance is a first-class output here — folding it into
either side would erase the distinction between lack of belief and
disbelief that the ledger exists to preserve.

Nine cell-sets project onto the full {0, 1} guilt margin and so express
total prior ignorance about guilt; they carry roman-numeral names I..IX.
Sets with a singleton guilt projection are allowed too, for informative
priors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import MassFunction
from .errors import InvalidParams, ValidationError
from .frames import Equals, ProductFrame, Variable, build_product_frame
from .rationals import require_exact

Cell = tuple[int, int]  # (guilt, evidence), each 0 or 1

CELLS: tuple[Cell, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))

# The nine cell-sets whose guilt projection is {0, 1}. Roman numerals
# follow the conventional reading: I uninformative, IV perfect
# incriminating evidence, VII perfect exculpatory evidence, the rest
# one-sided perturbations.
CANONICAL_OPTIONS: dict[str, frozenset[Cell]] = {
    "I": frozenset({(0, 0), (1, 0), (0, 1), (1, 1)}),
    "II": frozenset({(0, 0), (1, 0)}),
    "III": frozenset({(0, 1), (1, 1)}),
    "IV": frozenset({(0, 0), (1, 1)}),
    "V": frozenset({(0, 0), (0, 1), (1, 1)}),
    "VI": frozenset({(0, 0), (1, 0), (1, 1)}),
    "VII": frozenset({(1, 0), (0, 1)}),
    "VIII": frozenset({(1, 0), (0, 1), (1, 1)}),
    "IX": frozenset({(0, 0), (1, 0), (0, 1)}),
}


def guilt_evidence_frame() -> ProductFrame:
    return build_product_frame(
        [Variable("G", 2, ("0", "1")), Variable("E", 2, ("0", "1"))]
    )


@dataclass(frozen=True)
class Ledger:
    """Mass assignments over (G, E) cell-sets, summing to exactly 1."""

    entries: tuple[tuple[frozenset[Cell], Fraction], ...]

    def __post_init__(self):
        cleaned = []
        total = Fraction(0)
        for cells, mass in self.entries:
            cells = frozenset(cells)
            if not cells:
                raise ValidationError("a ledger entry needs at least one cell")
            for cell in cells:
                if cell not in CELLS:
                    raise ValidationError(f"unknown ledger cell {cell!r}")
            require_exact("ledger mass", mass)
            mass = Fraction(mass)
            if mass < 0:
                raise ValidationError(f"ledger mass {mass} is negative")
            total += mass
            if mass > 0:
                cleaned.append((cells, mass))
        if total != 1:
            raise ValidationError(f"ledger masses sum to {total}, expected exactly 1")
        object.__setattr__(self, "entries", tuple(cleaned))


@dataclass(frozen=True)
class GuiltPosterior:
    guilty: Fraction
    not_guilty: Fraction
    ignorance: Fraction


def ledger_to_mass(ledger: Ledger, frame: ProductFrame | None = None) -> MassFunction:
    """Realize a ledger as a mass function on the 4-outcome G x E frame."""
    pf = frame or guilt_evidence_frame()
    entries = []
    for cells, mass in ledger.entries:
        members = frozenset(pf.encode(cell) for cell in cells)
        entries.append((members, mass))
    return MassFunction(pf.frame, entries)


def posterior_guilt(ledger: Ledger) -> GuiltPosterior:
    """Condition on the evidence being present and project onto guilt.

    After conditioning on E = 1 every focal set is one of {guilty},
    {not guilty}, or the full guilt margin; the three reported masses sum
    to exactly 1.
    """
    pf = guilt_evidence_frame()
    mass = ledger_to_mass(ledger, pf)
    posterior = mass.condition(pf.event(Equals("E", 1)))
    guilty = posterior.mass_of(pf.frame.event([pf.encode((1, 1))]))
    not_guilty = posterior.mass_of(pf.frame.event([pf.encode((0, 1))]))
    both = posterior.mass_of(
        pf.frame.event([pf.encode((0, 1)), pf.encode((1, 1))])
    )
    return GuiltPosterior(guilty, not_guilty, both)


def cold_case_ledger(n_others: int, p: Fraction) -> Ledger:
    """The cold-case island scenario expressed as a ledger.

    With N = n_others islanders besides the suspect and trait frequency p:
    no evidence can exist when the suspect lacks the trait (mass 1-p on
    option II); evidence is certain when everyone bears it (p^(N+1) on
    III); a false positive is ruled out when the suspect is the only
    bearer (p (1-p)^N on VI); the rest is ignorance (option I). For
    N = 1 the remainder is 0 and the entry is dropped.
    """
    require_exact("p", p)
    p = Fraction(p)
    if n_others < 1:
        raise InvalidParams(f"need at least one other islander, got {n_others}")
    if not 0 < p < 1:
        raise InvalidParams(f"trait frequency must be in (0, 1), got {p}")
    no_evidence = 1 - p
    certain_evidence = p ** (n_others + 1)
    no_false_positive = p * (1 - p) ** n_others
    remainder = p - certain_evidence - no_false_positive
    return Ledger(
        (
            (CANONICAL_OPTIONS["II"], no_evidence),
            (CANONICAL_OPTIONS["III"], certain_evidence),
            (CANONICAL_OPTIONS["VI"], no_false_positive),
            (CANONICAL_OPTIONS["I"], remainder),
        )
    )


def parse_cells(tokens: Iterable[str]) -> frozenset[Cell]:
    """Resolve cell tokens like 'G0E1' (or a roman option name) to cells."""
    cells: set[Cell] = set()
    for token in tokens:
        name = token.strip().upper()
        if name in CANONICAL_OPTIONS:
            cells |= CANONICAL_OPTIONS[name]
            continue
        if (
            len(name) == 4
            and name[0] == "G"
            and name[2] == "E"
            and name[1] in "01"
            and name[3] in "01"
        ):
            cells.add((int(name[1]), int(name[3])))
            continue
        raise ValidationError(
            f"unknown cell {token!r}: expected G<g>E<e> with g,e in 0/1, or I..IX"
        )
    return frozenset(cells)
