import pytest
from hypothesis import given, settings, strategies as st

from anticomm.dualdeg import (
    GENS, FlagChowRing, WeightParams, bgg_normalization, bgg_operator, bracket_degree,
    dual_degree_closed_form, dual_degree_weight_two, integrate, kleiman_degree, reduce,
)
from anticomm.exact import QQ, MultiPoly

R4 = FlagChowRing(4)
X, Y = R4.X(), R4.Y()


def test_reduce_examples():
    assert reduce(X**4, R4).is_zero()
    assert reduce(Y**3, R4) == -(X**3) - X**2 * Y - X * Y**2
    assert reduce(X**2 * Y**3, R4) == -(X**3) * Y**2


def test_integrate_examples():
    assert integrate(X**3 * Y**2, R4) == 1
    assert integrate(MultiPoly.one(GENS), R4) == 0
    assert integrate(X**2 * Y**3, R4) == -1


@pytest.mark.parametrize("n", range(2, 8))
def test_ring_structure(n):
    ring = FlagChowRing(n)
    assert len(ring.basis()) == n * (n - 1)
    assert reduce(ring.f1(), ring).is_zero()
    assert reduce(ring.f2(), ring).is_zero()
    assert reduce(ring.Y() ** n, ring).is_zero()


small = st.dictionaries(st.tuples(st.integers(0, 6), st.integers(0, 6)), st.integers(-4, 4), max_size=4)


@settings(max_examples=40, deadline=None)
@given(small, small)
def test_reduce_is_a_ring_map(a, b):
    ring = FlagChowRing(4)
    p, q = MultiPoly(GENS, a, QQ), MultiPoly(GENS, b, QQ)
    rp = reduce(p, ring)
    assert reduce(rp, ring) == rp
    assert reduce(p * q, ring) == reduce(rp * reduce(q, ring), ring)
    assert all(i < 4 and j < 3 for i, j in rp.terms)


def test_bgg_operator_examples():
    gens = ("x1", "x2")
    x1, x2 = MultiPoly.gen("x1", gens), MultiPoly.gen("x2", gens)
    assert bgg_operator(x1, 1, 2) == MultiPoly.one(gens)
    assert bgg_operator(x1 * x2, 1, 2).is_zero()
    assert bgg_operator(x1**2, 1, 2) == x1 + x2


@pytest.mark.parametrize("n", range(3, 9))
def test_bgg_normalization(n):
    assert bgg_normalization(n) == 1


@pytest.mark.parametrize("n,expected", [(4, 24), (5, 90), (6, 276)])
def test_cubic_formula(n, expected):
    assert dual_degree_weight_two(n) == expected
    assert dual_degree_closed_form(n, 2) == expected


@pytest.mark.parametrize("n,expected", [(4, 24), (5, 90)])
def test_kleiman_small(n, expected):
    assert kleiman_degree(n, WeightParams(2, 1)) == expected


def test_closed_form_n3():
    # (6*16 - 12*4 + 6) / 9 = 54 / 9
    assert dual_degree_closed_form(3, 2) == 6
    assert kleiman_degree(3, 2) == 6


def test_closed_form_rejects_small_a():
    with pytest.raises(ValueError):
        dual_degree_closed_form(4, 1)


@pytest.mark.parametrize("n", range(4, 9))
@pytest.mark.parametrize("a", range(2, 6))
def test_three_routes_agree(n, a):
    k = kleiman_degree(n, (a, 1))
    assert k == bracket_degree(n, (a, 1)) == dual_degree_closed_form(n, a)


@pytest.mark.parametrize("n", range(3, 8))
def test_general_weights(n):
    for a in range(1, 5):
        for b in range(1, a + 1):
            w = WeightParams(a, b)
            if w.degenerate:
                continue
            assert kleiman_degree(n, w) == bracket_degree(n, w)


def test_degenerate_weights_still_match():
    # a == b: the two expressions still agree even though the orbit is a Grassmannian
    for n in (4, 5):
        for a in (1, 2, 3):
            assert kleiman_degree(n, (a, a)) == bracket_degree(n, (a, a))


def test_weight_validation():
    with pytest.raises(ValueError):
        WeightParams(1, 2)
    with pytest.raises(ValueError):
        WeightParams(2, 0)
    assert WeightParams(3, 3).degenerate
