"""Brute-force verification of every closed-form solver.

For small populations the full product frame is materialized, the prior
is laid down focal set by focal set from its displayed mass formula, the
hypothesis event is built from predicates, and conditioning plus belief
queries run through the generic calculus in ``core``. The oracle never
calls the solvers' arithmetic on its own path, so agreement between the
two is evidence, not tautology.

Each run also checks identities that must hold exactly along the way:
the total prior mass meeting the hypothesis, the posterior's support
staying inside the hypothesis, and (cold case) the posterior focal count.
A violation raises VerificationFailed; a disagreement between oracle and
closed form is recorded in the report and surfaced by ``run_verification``.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import island as island_mod
from . import ledger as ledger_mod
from . import parental as parental_mod
from .core import EventSet, MassFunction
from .errors import FrameTooLarge, InvalidParams, VerificationFailed
from .frames import And, Equals, In, IndirectEquals, ProductFrame, Variable, binary, build_product_frame
from .island import GeneralizedParams, IslandParams
from .parental import ParentalParams
from .rationals import require_exact

MAX_POPULATION = island_mod.MAX_ENUMERATED_POPULATION
# three-valued trait knowledge enumerates 3^population focal sets
MAX_GENERALIZED_POPULATION = 9

COLD_ROUTES = ("direct", "at_least_one")
SEARCH_ROUTES = ("extended_frame", "at_least_one")


# -- frames -----------------------------------------------------------


def _ids(population: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, population + 1))


@lru_cache(maxsize=None)
def island_frame(population: int, searchable: bool = False) -> ProductFrame:
    """culprit x selected x per-individual trait flags.

    ``searchable`` adds the no-bearer-found state '*' to the selected
    coordinate, needed when a search may come back empty.
    """
    _check_population(population, MAX_POPULATION)
    s_labels = _ids(population) + (("*",) if searchable else ())
    variables = [
        Variable("culprit", population, _ids(population)),
        Variable("selected", len(s_labels), s_labels),
    ]
    variables += [binary(f"trait{i}") for i in range(1, population + 1)]
    return build_product_frame(variables)


@lru_cache(maxsize=None)
def parental_frame(population: int) -> ProductFrame:
    """father x selected x transmits x per-individual matching-allele counts.

    ``transmits`` flags whether the true father passes the paternal allele
    when he carries a single copy. The 2^20 frame cap limits this product
    to populations of at most 8.
    """
    variables = [
        Variable("father", population, _ids(population)),
        Variable("selected", population, _ids(population)),
        Variable("transmits", 2, ("0", "1")),
    ]
    variables += [
        Variable(f"alleles{i}", 3, ("0", "1", "2")) for i in range(1, population + 1)
    ]
    return build_product_frame(variables)


def _check_population(population: int, bound: int) -> None:
    if population > bound:
        raise FrameTooLarge(
            f"enumeration supports populations up to {bound}, got {population}"
        )
    if population < 1:
        raise InvalidParams(f"population must be >= 1, got {population}")


# -- focal-set and hypothesis events ----------------------------------


def _box_event(pf: ProductFrame, values: tuple[int, ...], free) -> EventSet:
    """The product set fixing every coordinate to `values` except the
    positions in `free`, which range over their listed value indices.
    `values` must hold 0 at each free position."""
    base = pf.encode(values)
    members = [base]
    for pos, allowed in free:
        stride = pf.strides[pos]
        members = [m + v * stride for m in members for v in allowed]
    return EventSet(pf.frame, frozenset(members))


def trait_pattern_event(pf: ProductFrame, selected: int, bits, culprit_ids=None) -> EventSet:
    """The set {selected individual fixed, trait flags exactly `bits`},
    with the culprit restricted to `culprit_ids` (1-based) when given and
    unconstrained otherwise. `selected` is a value index of the selected
    coordinate, so it can address the '*' state."""
    if culprit_ids is None:
        culprits = range(pf.variable("culprit").size)
    else:
        culprits = [i - 1 for i in culprit_ids]
    return _box_event(pf, (0, selected) + tuple(bits), [(0, culprits)])


def trait_subset_event(pf: ProductFrame, bearer_ids, suspect: int) -> EventSet:
    """The cold-case posterior focal set for a bearer set: culprit among
    the bearers, the suspect selected, traits exactly on the bearers."""
    population = pf.variable("culprit").size
    bits = tuple(1 if i in set(bearer_ids) else 0 for i in range(1, population + 1))
    return trait_pattern_event(pf, suspect - 1, bits, culprit_ids=bearer_ids)


def culprit_trait_hypothesis(pf: ProductFrame, suspect: int) -> EventSet:
    """Suspect selected, suspect bears the trait, culprit bears the trait."""
    return pf.event(
        And(
            Equals("selected", suspect - 1),
            Equals(f"trait{suspect}", 1),
            IndirectEquals("culprit", "trait", 1),
        )
    )


def selected_bearer_hypothesis(pf: ProductFrame, suspect: int) -> EventSet:
    """Suspect selected and bearing the trait (no culprit constraint)."""
    return pf.event(
        And(Equals("selected", suspect - 1), Equals(f"trait{suspect}", 1))
    )


def selection_hypothesis(pf: ProductFrame, suspect: int) -> EventSet:
    return pf.event(Equals("selected", suspect - 1))


def paternity_hypothesis(pf: ProductFrame, suspect: int, observed_count: int) -> EventSet:
    """Suspect selected with `observed_count` matching alleles, and the true
    father able to pass the paternal allele: either he carries two copies,
    or one copy and transmits it."""
    base = And(
        Equals("selected", suspect - 1),
        Equals(f"alleles{suspect}", observed_count),
    )
    two_copies = pf.event(And(base, IndirectEquals("father", "alleles", 2)))
    one_transmitted = pf.event(
        And(base, IndirectEquals("father", "alleles", 1), Equals("transmits", 1))
    )
    return two_copies | one_transmitted


def target_ids(params) -> tuple[int, ...]:
    """The suspect set B: the suspect plus the lowest other ids."""
    ids = [params.suspect]
    for i in range(1, params.population + 1):
        if len(ids) == params.target_set_size:
            break
        if i != params.suspect:
            ids.append(i)
    return tuple(sorted(ids))


@lru_cache(maxsize=64)
def _membership_event(pf: ProductFrame, variable: str, ids: tuple[int, ...]) -> EventSet:
    return pf.event(In(variable, tuple(i - 1 for i in ids)))


def culprit_target_event(pf: ProductFrame, params) -> EventSet:
    return _membership_event(pf, "culprit", target_ids(params))


def father_target_event(pf: ProductFrame, params) -> EventSet:
    return _membership_event(pf, "father", target_ids(params))


# -- priors, each transcribed from its displayed mass formula ----------


def _trait_patterns(population: int):
    return itertools.product((0, 1), repeat=population)


def _binomial_weights(population: int, p: Fraction) -> list[Fraction]:
    """p^k (1-p)^(n-k) for k = 0..n, computed once per prior."""
    hit = [p**k for k in range(population + 1)]
    miss = [(1 - p) ** k for k in range(population + 1)]
    return [hit[k] * miss[population - k] for k in range(population + 1)]


def cold_case_prior(pf: ProductFrame, population: int, p: Fraction) -> MassFunction:
    """Uniform selection, i.i.d. trait flags, culprit unconstrained:
    mass p^k (1-p)^(n-k) / n on each {selected, trait pattern} set."""
    weights = _binomial_weights(population, p)
    w = Fraction(1, population)
    entries = []
    for bits in _trait_patterns(population):
        mass = w * weights[sum(bits)]
        for x in range(population):
            entries.append((trait_pattern_event(pf, x, bits), mass))
    return MassFunction(pf.frame, entries)


def cold_case_prior_at_least_one(pf: ProductFrame, population: int, p: Fraction) -> MassFunction:
    """As the direct prior, but conditioned upfront on some bearer existing
    and already pointing the culprit at the bearers."""
    seen = 1 - (1 - p) ** population
    weights = _binomial_weights(population, p)
    entries = []
    for bits in _trait_patterns(population):
        k = sum(bits)
        if k == 0:
            continue
        bearers = [i + 1 for i in range(population) if bits[i]]
        mass = weights[k] / (population * seen)
        for x in range(population):
            entries.append((trait_pattern_event(pf, x, bits, bearers), mass))
    return MassFunction(pf.frame, entries)


def cold_case_classical_prior(pf: ProductFrame, population: int, p: Fraction) -> MassFunction:
    """Uniform culprit prior: one singleton per (culprit, selected, traits)."""
    weights = _binomial_weights(population, p)
    w = Fraction(1, population * population)
    culprit_stride, selected_stride = pf.strides[0], pf.strides[1]
    entries = []
    for bits in _trait_patterns(population):
        mass = w * weights[sum(bits)]
        base = pf.encode((0, 0) + bits)
        for t in range(population):
            for x in range(population):
                entries.append(
                    ((base + t * culprit_stride + x * selected_stride,), mass)
                )
    return MassFunction(pf.frame, entries)


def generalized_prior(pf: ProductFrame, population: int, p: Fraction, q: Fraction, r: Fraction) -> MassFunction:
    """Three-valued trait knowledge: each individual is determined-positive
    (weight p, trait pinned to 1), determined-negative (q, pinned to 0), or
    undetermined (r, trait coordinate left free)."""
    w = Fraction(1, population)
    pows = {0: [q**k for k in range(population + 1)],
            1: [p**k for k in range(population + 1)],
            2: [r**k for k in range(population + 1)]}
    culprits = range(population)
    entries = []
    for pattern in itertools.product((0, 1, 2), repeat=population):
        mass = (
            w
            * pows[0][pattern.count(0)]
            * pows[1][pattern.count(1)]
            * pows[2][pattern.count(2)]
        )
        bits = tuple(1 if code == 1 else 0 for code in pattern)
        free = [(0, culprits)]
        free += [
            (2 + i, (0, 1)) for i, code in enumerate(pattern) if code == 2
        ]
        for x in range(population):
            entries.append((_box_event(pf, (0, x) + bits, free), mass))
    return MassFunction(pf.frame, entries)


def search_prior(pf: ProductFrame, population: int, p: Fraction) -> MassFunction:
    """First-found-bearer selection on the searchable frame: uniform over
    the k bearers of each trait pattern, plus a no-bearer state."""
    weights = _binomial_weights(population, p)
    entries = []
    for bits in _trait_patterns(population):
        k = sum(bits)
        if k == 0:
            continue
        mass = weights[k] / k
        for x in range(population):
            if bits[x]:
                entries.append((trait_pattern_event(pf, x, bits), mass))
    zeros = (0,) * population
    entries.append(
        (trait_pattern_event(pf, population, zeros), (1 - p) ** population)
    )
    return MassFunction(pf.frame, entries)


def search_prior_at_least_one(pf: ProductFrame, population: int, p: Fraction) -> MassFunction:
    """Search prior conditioned upfront on a bearer existing, culprit
    already pointed at the bearers; lives on the unextended frame."""
    seen = 1 - (1 - p) ** population
    weights = _binomial_weights(population, p)
    entries = []
    for bits in _trait_patterns(population):
        k = sum(bits)
        if k == 0:
            continue
        bearers = [i + 1 for i in range(population) if bits[i]]
        mass = weights[k] / (k * seen)
        for x in range(population):
            if bits[x]:
                entries.append((trait_pattern_event(pf, x, bits, bearers), mass))
    return MassFunction(pf.frame, entries)


def search_classical_prior(pf: ProductFrame, population: int, p: Fraction) -> MassFunction:
    """Uniform culprit prior in the search case: singletons only, selection
    uniform over bearers, no-bearer mass split uniformly over culprits."""
    weights = _binomial_weights(population, p)
    culprit_stride, selected_stride = pf.strides[0], pf.strides[1]
    entries = []
    for bits in _trait_patterns(population):
        k = sum(bits)
        if k == 0:
            continue
        mass = weights[k] / (k * population)
        base = pf.encode((0, 0) + bits)
        for t in range(population):
            for x in range(population):
                if bits[x]:
                    entries.append(
                        ((base + t * culprit_stride + x * selected_stride,), mass)
                    )
    zeros = (0,) * population
    none_found = (1 - p) ** population / population
    star_base = pf.encode((0, population) + zeros)
    for t in range(population):
        entries.append(((star_base + t * culprit_stride,), none_found))
    return MassFunction(pf.frame, entries)


def _allele_weights(population: int, p0: Fraction, p1: Fraction, p2: Fraction):
    pows = [[f**k for k in range(population + 1)] for f in (p0, p1, p2)]

    def weight(counts) -> Fraction:
        return (
            pows[0][counts.count(0)]
            * pows[1][counts.count(1)]
            * pows[2][counts.count(2)]
        )

    return weight


def parental_prior(pf: ProductFrame, population: int, p0: Fraction, p1: Fraction, p2: Fraction) -> MassFunction:
    """Uniform selection, even transmit split, i.i.d. allele counts, father
    unconstrained: mass p0^k0 p1^k1 p2^k2 / (2 n) per pattern."""
    weight = _allele_weights(population, p0, p1, p2)
    w = Fraction(1, 2 * population)
    fathers = [(0, range(population))]
    entries = []
    for counts in itertools.product((0, 1, 2), repeat=population):
        mass = w * weight(counts)
        for x in range(population):
            for a in (0, 1):
                entries.append((_box_event(pf, (0, x, a) + counts, fathers), mass))
    return MassFunction(pf.frame, entries)


def parental_classical_prior(pf: ProductFrame, population: int, p0: Fraction, p1: Fraction, p2: Fraction) -> MassFunction:
    """Uniform father prior: singletons over (father, selected, transmits,
    allele counts)."""
    weight = _allele_weights(population, p0, p1, p2)
    w = Fraction(1, 2 * population * population)
    father_stride, selected_stride, transmit_stride = pf.strides[:3]
    entries = []
    for counts in itertools.product((0, 1, 2), repeat=population):
        mass = w * weight(counts)
        base = pf.encode((0, 0, 0) + counts)
        for f in range(population):
            for x in range(population):
                for a in (0, 1):
                    entries.append(
                        (
                            (
                                base
                                + f * father_stride
                                + x * selected_stride
                                + a * transmit_stride,
                            ),
                            mass,
                        )
                    )
    return MassFunction(pf.frame, entries)


# -- shared conditioning machinery -------------------------------------


def _conditioned(prior: MassFunction, hypothesis: EventSet, expected_normalizer: Fraction, context: str):
    """Condition and check the identities that must hold exactly."""
    normalizer = prior.plausibility(hypothesis)
    if normalizer != expected_normalizer:
        raise VerificationFailed(
            f"{context}: prior mass meeting the hypothesis is {normalizer}, "
            f"expected {expected_normalizer}"
        )
    posterior = prior.condition(hypothesis)
    for ev, _ in posterior.items():
        if not ev <= hypothesis:
            raise VerificationFailed(f"{context}: posterior support escapes the hypothesis")
    return posterior


@dataclass(frozen=True)
class OracleReport:
    """One enumeration run compared against one closed-form value."""

    scenario: str
    point: dict
    closed_form: Fraction
    oracle: Fraction
    focal_before: int
    focal_after: int
    elapsed: float

    @property
    def equal(self) -> bool:
        return self.closed_form == self.oracle

    def describe_point(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.point.items())


def _report(scenario, point, closed, oracle, before, after, start) -> OracleReport:
    return OracleReport(
        scenario=scenario,
        point=point,
        closed_form=Fraction(closed),
        oracle=Fraction(oracle),
        focal_before=before,
        focal_after=after,
        elapsed=time.perf_counter() - start,
    )


def _island_point(params: IslandParams, **extra) -> dict:
    point = {
        "population": params.population,
        "p": Fraction(params.p),
        "suspect": params.suspect,
        "target_set_size": params.target_set_size,
    }
    point.update(extra)
    return point


# Engines build the (frame, posterior, focal_before) triple for one
# parameter point. They are cached: verification grids ask for the same
# posterior once per target-set size.


@lru_cache(maxsize=8)
def _cold_engine(population: int, p: Fraction, suspect: int, route: str):
    pf = island_frame(population)
    if route == "direct":
        prior = cold_case_prior(pf, population, p)
        hypothesis = culprit_trait_hypothesis(pf, suspect)
        expected_norm = p / population
    elif route == "at_least_one":
        prior = cold_case_prior_at_least_one(pf, population, p)
        hypothesis = selected_bearer_hypothesis(pf, suspect)
        expected_norm = p / population / (1 - (1 - p) ** population)
    else:
        raise InvalidParams(f"unknown cold-case route {route!r}")
    posterior = _conditioned(prior, hypothesis, expected_norm, f"cold-case[{route}]")
    # one focal set per bearer set containing the suspect; degenerate at p = 1
    if 0 < p < 1 and posterior.focal_count != 2 ** (population - 1):
        raise VerificationFailed(
            f"cold-case[{route}]: expected {2 ** (population - 1)} posterior focal sets, "
            f"got {posterior.focal_count}"
        )
    return pf, posterior, prior.focal_count


@lru_cache(maxsize=8)
def _cold_classical_engine(population: int, p: Fraction, suspect: int):
    pf = island_frame(population)
    prior = cold_case_classical_prior(pf, population, p)
    if not prior.is_bayesian():
        raise VerificationFailed("cold-case classical prior must be a distribution")
    hypothesis = culprit_trait_hypothesis(pf, suspect)
    n = population - 1
    expected_norm = p * (1 + n * p) / population**2
    posterior = _conditioned(prior, hypothesis, expected_norm, "cold-case[classical]")
    return pf, posterior, prior.focal_count


@lru_cache(maxsize=8)
def _generalized_engine(population: int, p: Fraction, q: Fraction, r: Fraction, suspect: int):
    pf = island_frame(population)
    prior = generalized_prior(pf, population, p, q, r)
    hypothesis = culprit_trait_hypothesis(pf, suspect)
    # a box meets the hypothesis whenever the suspect's trait is not
    # determined absent, so the retained mass is (p + r)/n; the extra r
    # cancels in normalization and leaves the posterior unchanged
    posterior = _conditioned(prior, hypothesis, (p + r) / population, "generalized")
    return pf, posterior, prior.focal_count


@lru_cache(maxsize=8)
def _search_engine(population: int, p: Fraction, suspect: int, route: str):
    if route == "extended_frame":
        pf = island_frame(population, searchable=True)
        prior = search_prior(pf, population, p)
        hypothesis = culprit_trait_hypothesis(pf, suspect)
        expected_norm = (1 - (1 - p) ** population) / population
    elif route == "at_least_one":
        pf = island_frame(population)
        prior = search_prior_at_least_one(pf, population, p)
        hypothesis = selection_hypothesis(pf, suspect)
        expected_norm = Fraction(1, population)
    else:
        raise InvalidParams(f"unknown search route {route!r}")
    posterior = _conditioned(prior, hypothesis, expected_norm, f"search[{route}]")
    return pf, posterior, prior.focal_count


@lru_cache(maxsize=8)
def _search_classical_engine(population: int, p: Fraction, suspect: int):
    pf = island_frame(population, searchable=True)
    prior = search_classical_prior(pf, population, p)
    if not prior.is_bayesian():
        raise VerificationFailed("search classical prior must be a distribution")
    hypothesis = culprit_trait_hypothesis(pf, suspect)
    posterior = _conditioned(prior, hypothesis, p / population, "search[classical]")
    return pf, posterior, prior.focal_count


# the prior does not depend on the observed allele count; share it
# between the two hypotheses at one grid point
@lru_cache(maxsize=4)
def _parental_prior_cached(population: int, p0: Fraction, p1: Fraction, p2: Fraction):
    pf = parental_frame(population)
    return pf, parental_prior(pf, population, p0, p1, p2)


@lru_cache(maxsize=4)
def _parental_classical_prior_cached(population: int, p0: Fraction, p1: Fraction, p2: Fraction):
    pf = parental_frame(population)
    return pf, parental_classical_prior(pf, population, p0, p1, p2)


@lru_cache(maxsize=8)
def _parental_engine(population: int, p0: Fraction, p1: Fraction, p2: Fraction, suspect: int, observed: int):
    pf, prior = _parental_prior_cached(population, p0, p1, p2)
    hypothesis = paternity_hypothesis(pf, suspect, observed)
    n = population - 1
    if observed == 2:
        expected_norm = p2 / population
    else:
        expected_norm = p1 / population * (1 - (p0 + p1) ** n / Fraction(2))
    posterior = _conditioned(prior, hypothesis, expected_norm, f"parental[{observed}]")
    return pf, posterior, prior.focal_count


@lru_cache(maxsize=8)
def _parental_classical_engine(population: int, p0: Fraction, p1: Fraction, p2: Fraction, suspect: int, observed: int):
    pf, prior = _parental_classical_prior_cached(population, p0, p1, p2)
    if not prior.is_bayesian():
        raise VerificationFailed("parental classical prior must be a distribution")
    hypothesis = paternity_hypothesis(pf, suspect, observed)
    n = population - 1
    half = Fraction(1, 2)
    tail = n * (half * p1 + p2)
    if observed == 2:
        expected_norm = p2 * (1 + tail) / population**2
    else:
        expected_norm = p1 * (half + tail) / population**2
    posterior = _conditioned(prior, hypothesis, expected_norm, f"parental-classical[{observed}]")
    return pf, posterior, prior.focal_count


# -- public oracle operations ------------------------------------------


def oracle_cold_case(params: IslandParams, route: str = "direct") -> OracleReport:
    """Enumerated cold-case belief in {culprit in B} vs its closed form."""
    require_exact("p", params.p)
    start = time.perf_counter()
    pf, posterior, before = _cold_engine(
        params.population, Fraction(params.p), params.suspect, route
    )
    value = posterior.belief(culprit_target_event(pf, params))
    closed = island_mod.cold_case_belief(params)
    return _report(
        "island-cold", _island_point(params, route=route), closed, value,
        before, posterior.focal_count, start,
    )


def oracle_cold_case_classical(params: IslandParams) -> OracleReport:
    require_exact("p", params.p)
    if params.target_set_size != 1:
        raise InvalidParams("the classical cold case is enumerated for |B| = 1")
    start = time.perf_counter()
    pf, posterior, before = _cold_classical_engine(
        params.population, Fraction(params.p), params.suspect
    )
    value = posterior.belief(culprit_target_event(pf, params))
    closed = island_mod.cold_case_classical(params)
    return _report(
        "island-cold-classical", _island_point(params), closed, value,
        before, posterior.focal_count, start,
    )


def oracle_generalized(params: GeneralizedParams) -> OracleReport:
    _check_population(params.population, MAX_GENERALIZED_POPULATION)
    start = time.perf_counter()
    pf, posterior, before = _generalized_engine(
        params.population, Fraction(params.p), Fraction(params.q), Fraction(params.r),
        params.suspect,
    )
    value = posterior.belief(culprit_target_event(pf, params))
    closed = island_mod.generalized_cold_case_belief(params)
    point = _island_point(params)
    point["q"] = Fraction(params.q)
    point["r"] = Fraction(params.r)
    return _report(
        "island-general", point, closed, value, before, posterior.focal_count, start
    )


def oracle_search(params: IslandParams, route: str = "extended_frame") -> OracleReport:
    require_exact("p", params.p)
    if params.target_set_size != 1:
        raise InvalidParams("the search case is enumerated for |B| = 1")
    start = time.perf_counter()
    pf, posterior, before = _search_engine(
        params.population, Fraction(params.p), params.suspect, route
    )
    value = posterior.belief(culprit_target_event(pf, params))
    closed = island_mod.search_case_belief(params)
    return _report(
        "island-search", _island_point(params, route=route), closed, value,
        before, posterior.focal_count, start,
    )


def oracle_search_classical(params: IslandParams) -> OracleReport:
    require_exact("p", params.p)
    if params.target_set_size != 1:
        raise InvalidParams("the classical search case is enumerated for |B| = 1")
    start = time.perf_counter()
    pf, posterior, before = _search_classical_engine(
        params.population, Fraction(params.p), params.suspect
    )
    value = posterior.belief(culprit_target_event(pf, params))
    closed = island_mod.search_case_classical(params)
    return _report(
        "island-search-classical", _island_point(params), closed, value,
        before, posterior.focal_count, start,
    )


def oracle_parental(params: ParentalParams) -> OracleReport:
    start = time.perf_counter()
    pf, posterior, before = _parental_engine(
        params.population, Fraction(params.p0), Fraction(params.p1), Fraction(params.p2),
        params.suspect, params.allele_count,
    )
    value = posterior.belief(father_target_event(pf, params))
    if params.allele_count == 2:
        closed = parental_mod.paternity_belief_two_alleles(params)
    else:
        closed = parental_mod.paternity_belief_one_allele(params)
    return _report(
        "parental", _parental_point(params), closed, value,
        before, posterior.focal_count, start,
    )


def oracle_parental_classical(params: ParentalParams) -> OracleReport:
    if params.target_set_size != 1:
        raise InvalidParams("the classical parental case is enumerated for |B| = 1")
    start = time.perf_counter()
    pf, posterior, before = _parental_classical_engine(
        params.population, Fraction(params.p0), Fraction(params.p1), Fraction(params.p2),
        params.suspect, params.allele_count,
    )
    value = posterior.belief(father_target_event(pf, params))
    closed = parental_mod.paternity_classical(params)
    return _report(
        "parental-classical", _parental_point(params), closed, value,
        before, posterior.focal_count, start,
    )


def _parental_point(params: ParentalParams) -> dict:
    return {
        "population": params.population,
        "p0": Fraction(params.p0),
        "p1": Fraction(params.p1),
        "p2": Fraction(params.p2),
        "allele_count": params.allele_count,
        "suspect": params.suspect,
        "target_set_size": params.target_set_size,
    }


def clear_caches() -> None:
    """Drop memoized frames, priors and posteriors (cold-start timing)."""
    for cached in (
        _cold_engine,
        _cold_classical_engine,
        _generalized_engine,
        _search_engine,
        _search_classical_engine,
        _parental_engine,
        _parental_classical_engine,
        _parental_prior_cached,
        _parental_classical_prior_cached,
        _membership_event,
        island_frame,
        parental_frame,
    ):
        cached.cache_clear()


# -- cross-route and ordering checks -----------------------------------


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    point: dict
    passed: bool

    def describe_point(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.point.items())


def cold_routes_agree(params: IslandParams) -> bool:
    """The two cold-case priors must condition to the *same* mass function."""
    p = Fraction(params.p)
    _, direct, _ = _cold_engine(params.population, p, params.suspect, "direct")
    _, indirect, _ = _cold_engine(params.population, p, params.suspect, "at_least_one")
    return direct == indirect


def cold_posterior_matches_solver(params: IslandParams) -> bool:
    """The enumerated posterior equals the solver's materialized one."""
    p = Fraction(params.p)
    _, posterior, _ = _cold_engine(params.population, p, params.suspect, "direct")
    return posterior == island_mod.cold_case_posterior_mass(params)


# -- the verification grid ---------------------------------------------

DEFAULT_TRAIT_PROBS = (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
DEFAULT_PQR_GRID = (
    (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
    (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)),
    (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)),
    (Fraction(1, 2), Fraction(1, 2), Fraction(0)),
    (Fraction(3, 4), Fraction(0), Fraction(1, 4)),
)
DEFAULT_ALLELE_GRID = (
    (Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)),
    (Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)),
    (Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)),
    (Fraction(1, 8), Fraction(3, 8), Fraction(1, 2)),
)
MAX_GRID_POPULATION = 6  # generalized and parental grids stay small


@dataclass
class VerificationRun:
    reports: list[OracleReport] = field(default_factory=list)
    checks: list[InvariantCheck] = field(default_factory=list)

    @property
    def mismatches(self) -> list[OracleReport]:
        return [r for r in self.reports if not r.equal]

    @property
    def failed_checks(self) -> list[InvariantCheck]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.failed_checks

    def extend(self, other: "VerificationRun") -> None:
        self.reports.extend(other.reports)
        self.checks.extend(other.checks)


def run_verification(
    max_population: int = 8,
    trait_probs=DEFAULT_TRAIT_PROBS,
    include_ledger: bool = True,
) -> VerificationRun:
    """Exercise every oracle scenario over the default grids.

    ``max_population`` bounds the cold/search grids (2..max); the
    generalized and parental grids stay within populations 2..6 where
    their enumerations are instant. Raises FrameTooLarge past the
    enumeration bound.
    """
    _check_population(max_population, MAX_POPULATION)
    trait_probs = tuple(Fraction(p) for p in trait_probs)
    run = VerificationRun()
    populations = range(2, max_population + 1)
    for population in populations:
        for p in trait_probs:
            run.extend(_verify_cold_point(population, p))
            run.extend(_verify_search_point(population, p))
    small_pops = range(2, min(max_population, MAX_GRID_POPULATION) + 1)
    for population in small_pops:
        for pqr in DEFAULT_PQR_GRID:
            run.extend(_verify_generalized_point(population, *pqr))
        for probs in DEFAULT_ALLELE_GRID:
            run.extend(_verify_parental_point(population, *probs))
    if include_ledger:
        run.extend(_verify_ledger(trait_probs))
    # a non-default suspect catches indexing slips the symmetric grid hides
    if max_population >= 3:
        alt = IslandParams(3, Fraction(1, 2), suspect=2)
        run.reports.append(oracle_cold_case(alt, "direct"))
        run.reports.append(oracle_search(alt, "extended_frame"))
        run.checks.append(
            InvariantCheck("cold-routes-identical", {"population": 3, "p": Fraction(1, 2), "suspect": 2}, cold_routes_agree(alt))
        )
    return run


def _verify_cold_point(population: int, p: Fraction) -> VerificationRun:
    run = VerificationRun()
    for size in range(1, population + 1):
        params = IslandParams(population, p, target_set_size=size)
        for route in COLD_ROUTES:
            run.reports.append(oracle_cold_case(params, route))
    single = IslandParams(population, p)
    run.reports.append(oracle_cold_case_classical(single))
    point = {"population": population, "p": p}
    run.checks.append(
        InvariantCheck("cold-routes-identical", point, cold_routes_agree(single))
    )
    run.checks.append(
        InvariantCheck(
            "cold-posterior-matches-solver", point, cold_posterior_matches_solver(single)
        )
    )
    if p < 1:
        strict = island_mod.cold_case_belief(single) < island_mod.cold_case_classical(single)
        run.checks.append(InvariantCheck("cold-belief-below-classical", point, strict))
    return run


def _verify_search_point(population: int, p: Fraction) -> VerificationRun:
    run = VerificationRun()
    params = IslandParams(population, p)
    for route in SEARCH_ROUTES:
        run.reports.append(oracle_search(params, route))
    run.reports.append(oracle_search_classical(params))
    point = {"population": population, "p": p}
    belief = island_mod.search_case_belief(params)
    classical = island_mod.search_case_classical(params)
    if p < 1:
        run.checks.append(
            InvariantCheck(
                "search-harmonic-form-agrees", point,
                belief == island_mod.search_case_belief_harmonic(params),
            )
        )
    run.checks.append(
        InvariantCheck("search-harmonic-below-arithmetic", point, belief <= classical)
    )
    return run


def _verify_generalized_point(population: int, p: Fraction, q: Fraction, r: Fraction) -> VerificationRun:
    run = VerificationRun()
    for size in range(1, population + 1):
        params = GeneralizedParams(population, p, q, r, target_set_size=size)
        run.reports.append(oracle_generalized(params))
        if r == 0:
            # q = 1 - p: must reproduce the plain cold case
            cold = IslandParams(population, p, target_set_size=size)
            run.checks.append(
                InvariantCheck(
                    "generalized-reduces-to-cold",
                    {"population": population, "p": p, "target_set_size": size},
                    island_mod.generalized_cold_case_belief(params)
                    == island_mod.cold_case_belief(cold),
                )
            )
    return run


def _verify_parental_point(population: int, p0: Fraction, p1: Fraction, p2: Fraction) -> VerificationRun:
    run = VerificationRun()
    point = {"population": population, "p0": p0, "p1": p1, "p2": p2}
    for count in (1, 2):
        params = ParentalParams(population, p0, p1, p2, allele_count=count)
        run.reports.append(oracle_parental(params))
        run.reports.append(oracle_parental_classical(params))
        dominated = parental_mod.paternity_classical(params) >= (
            parental_mod.paternity_belief_two_alleles(params)
            if count == 2
            else parental_mod.paternity_belief_one_allele(params)
        )
        run.checks.append(
            InvariantCheck(
                "parental-classical-dominates", dict(point, allele_count=count), dominated
            )
        )
    one = ParentalParams(population, p0, p1, p2, allele_count=1)
    two = ParentalParams(population, p0, p1, p2, allele_count=2)
    run.checks.append(
        InvariantCheck(
            "parental-one-allele-below-two",
            point,
            parental_mod.paternity_belief_one_allele(one)
            <= parental_mod.paternity_belief_two_alleles(two),
        )
    )
    return run


def _ledger_report(scenario: str, point: dict, ledger, expectations) -> list[OracleReport]:
    """Reports for (quantity, expected) pairs of one conditioned ledger."""
    start = time.perf_counter()
    posterior = ledger_mod.posterior_guilt(ledger)
    values = {
        "guilty": posterior.guilty,
        "not_guilty": posterior.not_guilty,
        "ignorance": posterior.ignorance,
    }
    after = sum(1 for v in values.values() if v > 0)
    return [
        _report(
            scenario, dict(point, quantity=quantity), expected, values[quantity],
            len(ledger.entries), after, start,
        )
        for quantity, expected in expectations
    ]


def _verify_ledger(trait_probs) -> VerificationRun:
    run = VerificationRun()
    for n_others in range(1, 9):
        for p in trait_probs:
            if not 0 < p < 1:
                continue
            run.reports.extend(
                _ledger_report(
                    "ledger-cold-case",
                    {"n_others": n_others, "p": p},
                    ledger_mod.cold_case_ledger(n_others, p),
                    [("guilty", (1 - p) ** n_others)],
                )
            )
    # the two fixed worked examples: a pure probability ledger and a
    # mixture of a 0.7 innocence indication with residual ignorance
    classical = ledger_mod.Ledger(
        (
            (frozenset({(0, 0)}), Fraction(171, 200)),
            (frozenset({(0, 1)}), Fraction(9, 200)),
            (frozenset({(1, 0)}), Fraction(1, 50)),
            (frozenset({(1, 1)}), Fraction(2, 25)),
        )
    )
    run.reports.extend(
        _ledger_report(
            "ledger-classical", {}, classical,
            [("guilty", Fraction(16, 25)), ("not_guilty", Fraction(9, 25)), ("ignorance", Fraction(0))],
        )
    )
    mixture = ledger_mod.Ledger(
        (
            (frozenset({(0, 0)}), Fraction(1, 2)),
            (frozenset({(0, 1)}), Fraction(1, 20)),
            (frozenset({(0, 0), (0, 1)}), Fraction(3, 20)),
            (frozenset({(0, 0), (1, 1)}), Fraction(1, 5)),
            (frozenset({(0, 0), (0, 1), (1, 1)}), Fraction(1, 20)),
            (frozenset({(0, 0), (1, 0), (1, 1)}), Fraction(1, 20)),
        )
    )
    run.reports.extend(
        _ledger_report(
            "ledger-mixture", {}, mixture,
            [("guilty", Fraction(1, 2)), ("not_guilty", Fraction(2, 5)), ("ignorance", Fraction(1, 10))],
        )
    )
    return run
