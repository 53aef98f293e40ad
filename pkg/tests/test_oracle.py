"""Enumeration oracle: agreement with closed forms at hand-checked points,
route equivalence, bounds, and the mismatch-reporting path."""

from fractions import Fraction as F

import pytest

from beliefcalc import (
    FrameTooLarge,
    GeneralizedParams,
    InvalidParams,
    IslandParams,
    ParentalParams,
)
from beliefcalc import island as island_solvers
from beliefcalc import oracle


class TestColdCase:
    def test_two_inhabitants_either_route(self):
        # the other inhabitant lacks the trait with probability 1/2
        params = IslandParams(2, F(1, 2))
        for route in oracle.COLD_ROUTES:
            report = oracle.oracle_cold_case(params, route)
            assert report.oracle == F(1, 2)
            assert report.equal

    def test_focal_counts(self):
        report = oracle.oracle_cold_case(IslandParams(4, F(1, 2)))
        assert report.focal_before == 4 * 2**4
        assert report.focal_after == 2**3

    def test_alternate_suspect(self):
        report = oracle.oracle_cold_case(IslandParams(4, F(1, 4), suspect=3))
        assert report.equal

    def test_classical(self):
        report = oracle.oracle_cold_case_classical(IslandParams(4, F(1, 2)))
        assert report.oracle == F(2, 5)
        assert report.equal

    def test_routes_give_identical_mass_functions(self):
        for population in (2, 3, 5):
            for p in (F(1, 4), F(3, 4)):
                assert oracle.cold_routes_agree(IslandParams(population, p))

    def test_population_bound(self):
        with pytest.raises(FrameTooLarge):
            oracle.oracle_cold_case(IslandParams(13, F(1, 2)))

    def test_unknown_route(self):
        with pytest.raises(InvalidParams):
            oracle.oracle_cold_case(IslandParams(3, F(1, 2)), "sideways")


class TestSearchCase:
    def test_three_inhabitants_either_route(self):
        params = IslandParams(3, F(1, 2))
        for route in oracle.SEARCH_ROUTES:
            report = oracle.oracle_search(params, route)
            assert report.oracle == F(3, 7)
            assert report.equal

    def test_p_one_no_singleton_knowledge(self):
        report = oracle.oracle_search(IslandParams(3, F(1)), "extended_frame")
        assert report.oracle == 0
        assert report.equal

    def test_classical(self):
        report = oracle.oracle_search_classical(IslandParams(3, F(1, 2)))
        assert report.oracle == F(7, 12)
        assert report.equal


class TestGeneralized:
    def test_frozen_point(self):
        params = GeneralizedParams(3, F(1, 2), F(1, 4), F(1, 4), target_set_size=2)
        report = oracle.oracle_generalized(params)
        assert report.oracle == F(1, 4)
        assert report.equal

    def test_reduces_to_cold_case_when_r_zero(self):
        params = GeneralizedParams(4, F(1, 4), F(3, 4), F(0))
        report = oracle.oracle_generalized(params)
        assert report.equal
        assert report.oracle == island_solvers.cold_case_belief(IslandParams(4, F(1, 4)))

    def test_no_negative_determinations(self):
        params = GeneralizedParams(3, F(1, 2), F(0), F(1, 2))
        report = oracle.oracle_generalized(params)
        assert report.oracle == 0
        assert report.equal

    def test_population_bound(self):
        with pytest.raises(FrameTooLarge):
            oracle.oracle_generalized(GeneralizedParams(10, F(1, 2), F(1, 4), F(1, 4)))


class TestParental:
    def test_two_allele_point(self):
        report = oracle.oracle_parental(ParentalParams(3, F(1, 4), F(1, 2), F(1, 4)))
        assert report.oracle == F(5, 16)
        assert report.equal

    def test_one_allele_point(self):
        report = oracle.oracle_parental(
            ParentalParams(3, F(1, 4), F(1, 2), F(1, 4), allele_count=1)
        )
        assert report.oracle == F(1, 23)
        assert report.equal

    def test_classical_points(self):
        two = oracle.oracle_parental_classical(ParentalParams(3, F(1, 4), F(1, 2), F(1, 4)))
        assert two.oracle == F(1, 2)
        one = oracle.oracle_parental_classical(
            ParentalParams(3, F(1, 4), F(1, 2), F(1, 4), allele_count=1)
        )
        assert one.oracle == F(1, 3)
        assert two.equal and one.equal

    def test_target_sets(self):
        for size in (1, 2, 3):
            params = ParentalParams(3, F(1, 4), F(1, 2), F(1, 4), target_set_size=size)
            assert oracle.oracle_parental(params).equal

    def test_two_allele_belief_splits_by_transmit_branch(self):
        # conditional belief in {father in B} decomposes into the branch
        # where the transmitted copy is known (exclusion needs zero copies)
        # and the one where it is not (exclusion allows one copy)
        from beliefcalc.frames import And, Equals, In

        population, size = 4, 2
        p0, p1, p2 = F(1, 4), F(1, 2), F(1, 4)
        params = ParentalParams(population, p0, p1, p2, target_set_size=size)
        pf, posterior, _ = oracle._parental_engine(population, p0, p1, p2, 1, 2)
        in_b = In("father", tuple(i - 1 for i in oracle.target_ids(params)))
        e = population - size
        transmitted = posterior.belief(pf.event(And(in_b, Equals("transmits", 1))))
        untransmitted = posterior.belief(pf.event(And(in_b, Equals("transmits", 0))))
        assert transmitted == F(1, 2) * p0**e
        assert untransmitted == F(1, 2) * (p0 + p1) ** e
        assert transmitted + untransmitted == posterior.belief(pf.event(in_b))

    def test_population_bound_via_frame_cap(self):
        with pytest.raises(FrameTooLarge):
            oracle.oracle_parental(ParentalParams(9, F(1, 4), F(1, 2), F(1, 4)))


class TestVerificationRun:
    def test_small_grid_is_clean(self):
        run = oracle.run_verification(max_population=3)
        assert run.ok
        assert run.reports and run.checks
        assert all(r.equal for r in run.reports)

    def test_bound_rejected(self):
        with pytest.raises(FrameTooLarge):
            oracle.run_verification(max_population=20)

    def test_perturbed_closed_form_is_caught(self, monkeypatch):
        # negative control: a wrong closed form must surface as a mismatch
        # naming the parameter point, not pass silently
        true_form = island_solvers.cold_case_belief

        def skewed(params):
            value = true_form(params)
            if params.population == 3 and params.p == F(1, 2):
                return value + F(1, 1000)
            return value

        monkeypatch.setattr(island_solvers, "cold_case_belief", skewed)
        run = oracle.run_verification(max_population=3)
        assert not run.ok
        assert run.mismatches
        assert all(r.point["population"] == 3 and r.point["p"] == F(1, 2) for r in run.mismatches)

    def test_reports_expose_points(self):
        report = oracle.oracle_cold_case(IslandParams(2, F(1, 2)))
        assert "population=2" in report.describe_point()
        assert report.elapsed >= 0
