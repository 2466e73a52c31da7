from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from detarcs.grothendieck import L, LaurentPoly, class_grassmannian
from detarcs.partitions import (
    INF,
    PrePartition,
    apply_move,
    applicable_moves,
    codominates,
    conjugate,
    dominates,
    duality_check,
)


@st.composite
def partitions(draw, max_len=5, max_term=6):
    r = draw(st.integers(1, max_len))
    terms = sorted(draw(st.lists(st.integers(0, max_term), min_size=r, max_size=r)), reverse=True)
    return PrePartition(tuple(terms))


@st.composite
def prepartitions(draw, r=3, max_term=5):
    k = draw(st.integers(0, r))
    rest = sorted(draw(st.lists(st.integers(0, max_term), min_size=r - k, max_size=r - k)), reverse=True)
    return PrePartition((INF,) * k + tuple(rest))


@given(partitions(), partitions())
def test_duality(a, b):
    assert duality_check(a, b)


@given(partitions())
def test_conjugate_preserves_size(lam):
    assert conjugate(lam).size() == lam.size()


@given(partitions(), partitions(), partitions())
def test_dominance_transitive(a, b, c):
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


@given(prepartitions(), prepartitions())
def test_codomination_antisymmetric(a, b):
    if codominates(a, b) and codominates(b, a):
        assert a == b


@given(prepartitions())
def test_moves_descend(mu):
    for move in applicable_moves(mu, 5):
        lam = apply_move(mu, move)
        assert lam != mu and codominates(lam, mu)


laurent = st.dictionaries(st.integers(-4, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(laurent, laurent, st.fractions(min_value=Fraction(1, 3), max_value=5))
def test_ring_homomorphism(f, g, x):
    assert (f * g)(x) == f(x) * g(x)
    assert (f + g)(x) == f(x) + g(x)


@given(laurent, st.integers(1, 4))
@settings(max_examples=50)
def test_exact_division_round_trip(f, d):
    g = L**d - 1
    assert (f * g).exact_div(g) == f


@given(st.integers(0, 7), st.integers(0, 7))
def test_pascal_recursion(u, v):
    if 1 <= u <= v - 1:
        lhs = class_grassmannian(u, v)
        rhs = class_grassmannian(u - 1, v - 1) + class_grassmannian(u, v - 1).shift(u)
        assert lhs == rhs
