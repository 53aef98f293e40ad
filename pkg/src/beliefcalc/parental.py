"""Closed forms for paternity identification at a single locus.

A known mother and child fix the paternal allele; each of ``population``
potential fathers carries 0, 1 or 2 copies of it (population frequencies
p0, p1, p2). A putative father is drawn uniformly and found to carry two
copies, or just one. The belief answers start from complete ignorance
about who the father is; the classical answers impose a uniform prior.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConditioningImpossible, InvalidParams
from .rationals import require_exact


@dataclass(frozen=True)
class ParentalParams:
    """population potential fathers; (p0, p1, p2) allele-count frequencies
    summing to exactly 1; the putative father carries allele_count (1 or 2)
    copies of the paternal allele; B is a candidate set of target_set_size
    containing him."""

    population: int
    p0: Fraction
    p1: Fraction
    p2: Fraction
    allele_count: int = 2
    suspect: int = 1
    target_set_size: int = 1

    def __post_init__(self):
        if self.population < 1:
            raise InvalidParams(f"population must be >= 1, got {self.population}")
        for name in ("p0", "p1", "p2"):
            value = require_exact(name, getattr(self, name))
            if value < 0:
                raise InvalidParams(f"{name} must be >= 0, got {value}")
        if self.p0 + self.p1 + self.p2 != 1:
            raise InvalidParams(
                f"p0 + p1 + p2 = {self.p0 + self.p1 + self.p2}, expected exactly 1"
            )
        if self.allele_count not in (1, 2):
            raise InvalidParams(f"allele_count must be 1 or 2, got {self.allele_count}")
        if not 1 <= self.suspect <= self.population:
            raise InvalidParams(f"suspect {self.suspect} outside population")
        if not 1 <= self.target_set_size <= self.population:
            raise InvalidParams(
                f"target set size {self.target_set_size} outside 1..{self.population}"
            )

    @property
    def n_others(self) -> int:
        return self.population - 1


def paternity_belief_two_alleles(params: ParentalParams) -> Fraction:
    """Belief that the father is in B when the suspect carries two copies.

    (p0^(pop-|B|) + (p0+p1)^(pop-|B|)) / 2: the transmitted-allele
    indicator splits the posterior into a branch where one copy suffices
    to stay unexcluded and a branch where only two copies do.
    """
    if params.allele_count != 2:
        raise InvalidParams("two-allele belief needs allele_count = 2")
    if params.p2 == 0:
        raise ConditioningImpossible(
            "a two-copy suspect has zero probability when p2 = 0"
        )
    e = params.population - params.target_set_size
    return (params.p0**e + (params.p0 + params.p1) ** e) / Fraction(2)


def paternity_belief_one_allele(params: ParentalParams) -> Fraction:
    """Belief that the father is in B when the suspect carries one copy.

    As the two-copy case, minus the branch where the suspect's untransmitted
    copy makes exclusion of everyone impossible, renormalized:
    (p0^(pop-|B|) + (p0+p1)^(pop-|B|) - (p0+p1)^N) / (2 - (p0+p1)^N).
    """
    if params.allele_count != 1:
        raise InvalidParams("one-allele belief needs allele_count = 1")
    if params.p1 == 0:
        raise ConditioningImpossible(
            "a one-copy suspect has zero probability when p1 = 0"
        )
    e = params.population - params.target_set_size
    share = params.p0 + params.p1
    n = params.n_others
    normalizer = 1 - Fraction(share**n, 2)
    if normalizer <= 0:
        raise ConditioningImpossible("conditioning event carries no mass")
    return (params.p0**e + share**e - share**n) / Fraction(2) / normalizer


def paternity_classical(params: ParentalParams) -> Fraction:
    """Uniform-prior posterior that the suspect is the father.

    1/(1 + N(p1/2 + p2)) for a two-copy suspect,
    1/(1 + N(p1 + 2 p2)) for a one-copy suspect; each dominates the
    corresponding belief answer.
    """
    if params.target_set_size != 1:
        raise InvalidParams("the classical comparison is defined for a singleton B")
    n = params.n_others
    if params.allele_count == 2:
        if params.p2 == 0:
            raise ConditioningImpossible(
                "a two-copy suspect has zero probability when p2 = 0"
            )
        return 1 / (1 + n * (params.p1 / Fraction(2) + params.p2))
    if params.p1 == 0:
        raise ConditioningImpossible(
            "a one-copy suspect has zero probability when p1 = 0"
        )
    return 1 / (1 + n * (params.p1 + 2 * params.p2))
