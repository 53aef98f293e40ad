"""Closed forms for the island identification problems.

A crime ties a trait of known frequency to one member of a closed
population of ``population`` individuals. The solvers answer "how strongly
should we believe the suspect (or a suspect set of a given size) is the
culprit" under an uninformative prior over culprit identity, next to the
classical uniform-prior posterior for comparison. Two selection models
are covered: a cold case (suspect drawn uniformly) and a search (first
trait bearer found in random order), plus a generalization where trait
determination itself can fail.

All formulas evaluate exactly on Fractions; the float backend exists for
large populations where exact powers are useless (see ``p`` below).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import MassFunction
from .errors import FrameTooLarge, InvalidParams
from .rationals import numeric_backend, require_exact

# Materialized posteriors and enumeration share this population cap:
# focal counts grow as 2^population.
MAX_ENUMERATED_POPULATION = 12


@dataclass(frozen=True)
class IslandParams:
    """Parameters of a cold-case or search scenario.

    population is the number of inhabitants (the suspect plus
    ``population - 1`` others); p is the trait frequency in (0, 1];
    suspect is a 1-based individual id; target_set_size is the size of
    the suspect set B (which always contains the suspect).
    """

    population: int
    p: Fraction | float
    suspect: int = 1
    target_set_size: int = 1

    def __post_init__(self):
        if self.population < 1:
            raise InvalidParams(f"population must be >= 1, got {self.population}")
        numeric_backend([self.p])
        if not 0 < self.p <= 1:
            raise InvalidParams(f"trait frequency p must be in (0, 1], got {self.p}")
        if not 1 <= self.suspect <= self.population:
            raise InvalidParams(f"suspect {self.suspect} outside population")
        if not 1 <= self.target_set_size <= self.population:
            raise InvalidParams(
                f"target set size {self.target_set_size} outside 1..{self.population}"
            )

    @property
    def n_others(self) -> int:
        return self.population - 1


@dataclass(frozen=True)
class GeneralizedParams:
    """Cold case with three-way trait determination.

    p: probability the trait is determined present; q: determined absent;
    r: undetermined. Exact backend only — p + q + r must equal 1 exactly.
    """

    population: int
    p: Fraction
    q: Fraction
    r: Fraction
    suspect: int = 1
    target_set_size: int = 1

    def __post_init__(self):
        if self.population < 1:
            raise InvalidParams(f"population must be >= 1, got {self.population}")
        for name in ("p", "q", "r"):
            require_exact(name, getattr(self, name))
        if self.p <= 0:
            raise InvalidParams("determined-present probability p must be > 0")
        if self.q < 0 or self.r < 0:
            raise InvalidParams("q and r must be >= 0")
        if self.p + self.q + self.r != 1:
            raise InvalidParams(f"p + q + r = {self.p + self.q + self.r}, expected exactly 1")
        if not 1 <= self.suspect <= self.population:
            raise InvalidParams(f"suspect {self.suspect} outside population")
        if not 1 <= self.target_set_size <= self.population:
            raise InvalidParams(
                f"target set size {self.target_set_size} outside 1..{self.population}"
            )

    @property
    def n_others(self) -> int:
        return self.population - 1


def _one(p):
    """Multiplicative unit in p's backend."""
    return 1.0 if isinstance(p, float) else Fraction(1)


def cold_case_belief(params: IslandParams):
    """Belief that the culprit lies in the suspect set B.

    Equals the probability that everyone outside B is excluded by lacking
    the trait: (1-p) ** (population - |B|).
    """
    one = _one(params.p)
    return (one - params.p) ** (params.population - params.target_set_size)


def cold_case_classical(params: IslandParams):
    """Uniform-prior posterior that the suspect is the culprit: 1/(1 + N p)."""
    _require_singleton(params)
    one = _one(params.p)
    return one / (one + params.n_others * params.p)


def generalized_cold_case_belief(params: GeneralizedParams) -> Fraction:
    """Belief in the suspect set when exclusion requires a determined
    negative: q ** (population - |B|). Independent of p and r."""
    return Fraction(params.q) ** (params.population - params.target_set_size)


def search_case_belief(params: IslandParams):
    """Belief the first-found trait bearer is the culprit.

    p (1-p)^N (N+1) / (1 - (1-p)^(N+1)): the chance a positive
    trait count equals exactly 1. Zero when p = 1 and others exist;
    1 for a single-inhabitant island.
    """
    _require_singleton(params)
    one = _one(params.p)
    n = params.n_others
    miss = one - params.p
    return params.p * miss**n * (n + 1) / (one - miss ** (n + 1))


def search_case_classical(params: IslandParams):
    """Uniform-prior posterior in the search case.

    (1 - (1-p)^(N+1)) / ((N+1) p): the arithmetic mean of
    1, (1-p), ..., (1-p)^N, where the belief answer is their harmonic mean.
    """
    _require_singleton(params)
    one = _one(params.p)
    n = params.n_others
    return (one - (one - params.p) ** (n + 1)) / ((n + 1) * params.p)


def search_case_belief_harmonic(params: IslandParams):
    """Harmonic-mean form of the search-case belief, valid for p < 1."""
    _require_singleton(params)
    if params.p >= 1:
        raise InvalidParams("harmonic form requires p < 1")
    one = _one(params.p)
    n = params.n_others
    miss = one - params.p
    return (n + 1) / sum(miss ** -k for k in range(n + 1))


def cold_case_posterior_mass(params: IslandParams) -> MassFunction:
    """Materialize the cold-case posterior on the product frame.

    One focal set per subset A of the population containing the suspect:
    "culprit in A, suspect selected, traits exactly on A", with mass
    p^(|A|-1) (1-p)^(population-|A|). Focal count is 2^(population-1).
    """
    require_exact("p", params.p)
    if params.population > MAX_ENUMERATED_POPULATION:
        raise FrameTooLarge(
            f"materialized posterior needs population <= {MAX_ENUMERATED_POPULATION}"
        )
    # local import: the oracle module owns frame construction
    from .oracle import island_frame, trait_subset_event

    pf = island_frame(params.population)
    p = Fraction(params.p)
    entries = []
    s = params.suspect
    others = [i for i in range(1, params.population + 1) if i != s]
    for bits in _subsets(others):
        bearers = sorted(bits | {s})
        k = len(bearers) - 1
        mass = p**k * (1 - p) ** (params.n_others - k)
        entries.append((trait_subset_event(pf, bearers, s), mass))
    return MassFunction(pf.frame, entries)


def _subsets(items):
    import itertools

    for r in range(len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield set(combo)


def _require_singleton(params: IslandParams) -> None:
    if params.target_set_size != 1:
        raise InvalidParams("this closed form is defined for a singleton suspect set")
