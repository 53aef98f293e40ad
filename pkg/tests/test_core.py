"""Core calculus: construction, belief/plausibility, conditioning."""

from fractions import Fraction as F

import pytest

from beliefcalc import (
    ConditioningImpossible,
    EmptyFocalSet,
    EventSet,
    Frame,
    FrameMismatch,
    MassFunction,
    MassNotNormalized,
    NegativeMass,
    BackendMismatch,
)


@pytest.fixture
def verdict_frame():
    return Frame(2, ("guilty", "innocent"))


@pytest.fixture
def partial_support(verdict_frame):
    """Evidential support p for innocence, ignorance 1-p, nothing for guilt."""
    p = F(3, 10)
    return MassFunction(
        verdict_frame,
        [
            (verdict_frame.event_of_labels(["innocent"]), p),
            (verdict_frame.full(), 1 - p),
        ],
    )


class TestConstruction:
    def test_two_focal_sets(self, partial_support):
        assert partial_support.focal_count == 2

    def test_vacuous(self):
        m = MassFunction.vacuous(Frame(4))
        assert m.focal_count == 1
        assert m.mass_of(Frame(4).full()) == 1

    def test_not_normalized(self):
        fr = Frame(3)
        with pytest.raises(MassNotNormalized):
            MassFunction(fr, [((0,), F(1, 2)), ((1,), F(1, 3))])

    def test_empty_focal_set_rejected(self):
        fr = Frame(2)
        with pytest.raises(EmptyFocalSet):
            MassFunction(fr, [((), F(1, 2)), ((0, 1), F(1, 2))])

    def test_negative_mass_rejected(self):
        fr = Frame(2)
        with pytest.raises(NegativeMass):
            MassFunction(fr, [((0,), F(3, 2)), ((1,), F(-1, 2))])

    def test_zero_mass_entries_dropped(self):
        fr = Frame(3)
        m = MassFunction(fr, [((0,), F(1)), ((1,), F(0)), ((0, 1), F(0))])
        assert m.focal_count == 1

    def test_duplicate_entries_accumulate(self):
        fr = Frame(2)
        m = MassFunction(fr, [((0,), F(1, 4)), ((0,), F(1, 4)), ((1,), F(1, 2))])
        assert m.mass_of(fr.singleton(0)) == F(1, 2)

    def test_float_masses_rejected(self):
        fr = Frame(2)
        with pytest.raises(BackendMismatch):
            MassFunction(fr, [((0,), 0.5), ((1,), 0.5)])

    def test_foreign_frame_rejected(self, verdict_frame):
        other = Frame(2, ("a", "b"))
        with pytest.raises(FrameMismatch):
            MassFunction(verdict_frame, [(other.full(), F(1))])

    def test_out_of_range_index_rejected(self):
        with pytest.raises(FrameMismatch):
            MassFunction(Frame(2), [((0, 5), F(1))])


class TestBelief:
    def test_partial_support(self, partial_support, verdict_frame):
        assert partial_support.belief(verdict_frame.event_of_labels(["guilty"])) == 0
        assert partial_support.belief(verdict_frame.event_of_labels(["innocent"])) == F(3, 10)
        assert partial_support.belief(verdict_frame.full()) == 1

    def test_empty_event(self, partial_support, verdict_frame):
        assert partial_support.belief(verdict_frame.empty()) == 0

    def test_vacuous_gives_zero_to_strict_subsets(self):
        fr = Frame(3)
        m = MassFunction.vacuous(fr)
        for members in [(0,), (1,), (0, 1), (1, 2)]:
            assert m.belief(fr.event(members)) == 0
        assert m.belief(fr.full()) == 1

    def test_union_support_not_divisible(self):
        # evidence for a union gives nothing to either part alone
        fr = Frame(3, ("a", "b", "c"))
        m = MassFunction(
            fr,
            [(fr.event_of_labels(["a", "b"]), F(1, 2)), (fr.full(), F(1, 2))],
        )
        assert m.belief(fr.event_of_labels(["a"])) == 0
        assert m.belief(fr.event_of_labels(["b"])) == 0
        assert m.belief(fr.event_of_labels(["a", "b"])) == F(1, 2)


class TestPlausibility:
    def test_dual_of_belief(self, partial_support, verdict_frame):
        guilty = verdict_frame.event_of_labels(["guilty"])
        assert partial_support.plausibility(guilty) == 1 - partial_support.belief(
            guilty.complement()
        )
        assert partial_support.plausibility(guilty) == F(7, 10)

    def test_vacuous_plausibility_one(self):
        fr = Frame(3)
        m = MassFunction.vacuous(fr)
        assert m.plausibility(fr.singleton(0)) == 1

    def test_bayesian_plausibility_equals_belief(self):
        fr = Frame(3)
        m = MassFunction.from_distribution(fr, [F(1, 6), F(1, 3), F(1, 2)])
        for members in [(0,), (1,), (0, 2), (0, 1, 2)]:
            ev = fr.event(members)
            assert m.plausibility(ev) == m.belief(ev)


class TestFromDistribution:
    def test_uniform(self):
        fr = Frame(2)
        m = MassFunction.from_distribution(fr, [F(1, 2), F(1, 2)])
        assert m.mass_of(fr.singleton(0)) == F(1, 2)
        assert m.is_bayesian()

    def test_degenerate(self):
        fr = Frame(3)
        m = MassFunction.from_distribution(fr, [F(1), F(0), F(0)])
        assert m.focal_count == 1
        assert m.mass_of(fr.singleton(0)) == 1

    def test_additivity(self):
        fr = Frame(2)
        m = MassFunction.from_distribution(fr, [F(1, 4), F(3, 4)])
        assert m.belief(fr.singleton(1)) == F(3, 4)
        assert m.belief(fr.full()) == 1

    def test_wrong_length(self):
        with pytest.raises(MassNotNormalized):
            MassFunction.from_distribution(Frame(3), [F(1, 2), F(1, 2)])


class TestIsBayesian:
    def test_distribution_is_bayesian(self):
        m = MassFunction.from_distribution(Frame(2), [F(1, 2), F(1, 2)])
        assert m.is_bayesian()

    def test_vacuous_is_not(self):
        assert not MassFunction.vacuous(Frame(2)).is_bayesian()

    def test_partial_support_is_not(self, partial_support):
        assert not partial_support.is_bayesian()


class TestConditioning:
    def test_family_example(self):
        # strong evidence for the parents, some for the son; under "it was
        # a man" the parents' share becomes the father's
        fr = Frame(3, ("Father", "Mother", "Son"))
        m = MassFunction(
            fr,
            [
                (fr.event_of_labels(["Father", "Mother"]), F(9, 10)),
                (fr.event_of_labels(["Son"]), F(1, 10)),
            ],
        )
        men = fr.event_of_labels(["Father", "Son"])
        mh = m.condition(men)
        assert mh.mass_of(fr.event_of_labels(["Father"])) == F(9, 10)
        assert mh.mass_of(fr.event_of_labels(["Son"])) == F(1, 10)

    def test_matches_classical_conditioning(self):
        fr = Frame(4)
        m = MassFunction.from_distribution(fr, [F(1, 10), F(2, 10), F(3, 10), F(4, 10)])
        h = fr.event((1, 3))
        mh = m.condition(h)
        assert mh.mass_of(fr.singleton(1)) == F(2, 6)
        assert mh.mass_of(fr.singleton(3)) == F(4, 6)
        assert mh.is_bayesian()

    def test_impossible_event(self):
        fr = Frame(2)
        m = MassFunction(fr, [((0,), F(1))])
        with pytest.raises(ConditioningImpossible):
            m.condition(fr.singleton(1))

    def test_idempotent(self, partial_support, verdict_frame):
        h = verdict_frame.event_of_labels(["innocent"])
        once = partial_support.condition(h)
        assert once.condition(h) == once

    def test_support_inside_event(self):
        fr = Frame(4)
        m = MassFunction(fr, [((0, 1, 2), F(1, 2)), ((2, 3), F(1, 4)), ((0,), F(1, 4))])
        h = fr.event((1, 2))
        for ev, _ in m.condition(h).items():
            assert ev <= h

    def test_vacuous_conditions_to_certainty(self):
        fr = Frame(3)
        h = fr.event((0, 2))
        mh = MassFunction.vacuous(fr).condition(h)
        assert mh.mass_of(h) == 1


class TestEventSet:
    def test_canonical_equality(self):
        fr = Frame(4)
        assert fr.event((2, 1)) == fr.event((1, 2, 2))

    def test_algebra(self):
        fr = Frame(4)
        a, b = fr.event((0, 1)), fr.event((1, 2))
        assert (a & b) == fr.event((1,))
        assert (a | b) == fr.event((0, 1, 2))
        assert (a - b) == fr.event((0,))
        assert a.complement() == fr.event((2, 3))
        assert fr.event((1,)) <= a

    def test_cross_frame_algebra_rejected(self):
        with pytest.raises(FrameMismatch):
            Frame(2).event((0,)) & Frame(3).event((0,))

    def test_frame_label_validation(self):
        with pytest.raises(ValueError):
            Frame(2, ("x", "x"))
        with pytest.raises(ValueError):
            Frame(2, ("x",))
