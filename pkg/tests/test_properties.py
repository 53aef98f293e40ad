"""Property-based checks of the core calculus over random mass functions.

Strategy: random small frames (up to 6 outcomes) with up to 10 focal sets
carrying integer weights, normalized exactly to rational masses. Every
algebraic law is checked with exact equality; there are no tolerances
anywhere in this module.
"""

from fractions import Fraction

from hypothesis import assume, given, strategies as st

from beliefcalc import ConditioningImpossible, Frame, MassFunction


@st.composite
def mass_functions(draw):
    size = draw(st.integers(min_value=1, max_value=6))
    frame = Frame(size)
    outcomes = st.integers(min_value=0, max_value=size - 1)
    focal = draw(
        st.lists(st.frozensets(outcomes, min_size=1), min_size=1, max_size=10)
    )
    weights = draw(
        st.lists(
            st.integers(min_value=1, max_value=24),
            min_size=len(focal),
            max_size=len(focal),
        )
    )
    total = sum(weights)
    entries = [(members, Fraction(w, total)) for members, w in zip(focal, weights)]
    return MassFunction(frame, entries)


@st.composite
def mass_and_event(draw, nonempty=False):
    m = draw(mass_functions())
    outcomes = st.integers(min_value=0, max_value=m.frame.size - 1)
    members = draw(st.frozensets(outcomes, min_size=1 if nonempty else 0))
    return m, m.frame.event(members)


@st.composite
def mass_and_nested_events(draw):
    m = draw(mass_functions())
    outcomes = st.integers(min_value=0, max_value=m.frame.size - 1)
    larger = draw(st.frozensets(outcomes))
    smaller = frozenset(x for x in larger if draw(st.booleans()))
    return m, m.frame.event(smaller), m.frame.event(larger)


@given(mass_functions())
def test_normalization(m):
    assert sum(mass for _, mass in m.items()) == 1


@given(mass_and_nested_events())
def test_belief_monotone(case):
    m, smaller, larger = case
    assert smaller <= larger
    assert m.belief(smaller) <= m.belief(larger)


@given(mass_and_event(), st.data())
def test_superadditive_on_disjoint_events(case, data):
    m, a = case
    rest = sorted(a.complement().members)
    b = m.frame.event(x for x in rest if data.draw(st.booleans()))
    union = a | b
    assert m.belief(union) >= m.belief(a) + m.belief(b)
    # strict exactly when some focal set inside the union straddles both
    straddles = any(
        ev <= union and (ev & a) and (ev & b) for ev, _ in m.items()
    )
    if straddles:
        assert m.belief(union) > m.belief(a) + m.belief(b)
    else:
        assert m.belief(union) == m.belief(a) + m.belief(b)


@given(mass_and_event())
def test_plausibility_duality(case):
    m, a = case
    assert m.plausibility(a) == 1 - m.belief(a.complement())
    assert m.belief(a) <= m.plausibility(a)


@given(mass_and_event(nonempty=True))
def test_conditioning_idempotent_and_supported(case):
    m, h = case
    try:
        conditioned = m.condition(h)
    except ConditioningImpossible:
        assume(False)
    assert conditioned.condition(h) == conditioned
    for ev, mass in conditioned.items():
        assert ev <= h
        assert mass > 0


@given(mass_and_event(nonempty=True))
def test_conditioning_normalizes(case):
    m, h = case
    try:
        conditioned = m.condition(h)
    except ConditioningImpossible:
        assume(False)
    assert sum(mass for _, mass in conditioned.items()) == 1


@st.composite
def distributions(draw):
    size = draw(st.integers(min_value=1, max_value=6))
    weights = draw(
        st.lists(
            st.integers(min_value=0, max_value=24), min_size=size, max_size=size
        ).filter(lambda ws: sum(ws) > 0)
    )
    total = sum(weights)
    return Frame(size), [Fraction(w, total) for w in weights]


@given(distributions(), st.data())
def test_bayesian_reduction(case, data):
    frame, probs = case
    m = MassFunction.from_distribution(frame, probs)
    assert m.is_bayesian()
    members = data.draw(
        st.frozensets(st.integers(min_value=0, max_value=frame.size - 1), min_size=1)
    )
    h = frame.event(members)
    mass_h = sum(probs[i] for i in members)
    if mass_h == 0:
        return
    conditioned = m.condition(h)
    for i in frame.outcomes():
        expected = probs[i] / mass_h if i in members else Fraction(0)
        assert conditioned.mass_of(frame.singleton(i)) == expected
    # additivity: a Bayesian posterior is a probability distribution
    some = data.draw(
        st.frozensets(st.integers(min_value=0, max_value=frame.size - 1))
    )
    a = frame.event(some)
    assert conditioned.belief(a) + conditioned.belief(a.complement()) == 1
