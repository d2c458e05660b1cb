import pytest

from anticomm.partitions import EMPTY, Partition, complement, iterate_box
from anticomm.schubert import (
    GrassmannContext, SchubertCycle, admissible_triples, degree_pair, degree_via_pieri,
    grassmannian_degree, pieri_sigma1,
)

P = Partition.of
G24 = GrassmannContext(2, 4)


def test_pieri_sigma1_squared():
    c = pieri_sigma1(SchubertCycle.basis(G24, P(1)))
    assert c == SchubertCycle(G24, {P(2): 1, P(1, 1): 1})


def test_pieri_no_room():
    assert pieri_sigma1(SchubertCycle.basis(G24, P(2, 2))).is_zero()


def test_sigma1_fourth_power():
    c = SchubertCycle.basis(G24, EMPTY)
    for _ in range(4):
        c = pieri_sigma1(c)
    assert c == SchubertCycle(G24, {P(2, 2): 2})


def test_cycle_rejects_oversized():
    with pytest.raises(ValueError):
        SchubertCycle(G24, {P(3): 1})


@pytest.mark.parametrize("fn", [degree_pair, degree_via_pieri])
def test_degree_examples(fn):
    assert fn(EMPTY, EMPTY, 4, G24) == 2
    assert fn(P(1), P(1), 2, G24) == 2
    assert fn(P(2, 2), EMPTY, 0, G24) == 1


def test_duality_pairing_3x3():
    ctx = GrassmannContext(3, 6)
    for lam in iterate_box(3, 3):
        assert degree_pair(lam, complement(lam, 3, 3), 0, ctx) == 1


def test_non_dual_pair_vanishes():
    # (2) is self-dual in the 2x2 box, so (2) against (1,1) pairs to zero
    assert degree_via_pieri(P(2), P(1, 1), 0, G24) == 0
    assert degree_pair(P(2), P(1, 1), 0, G24) == 0


def test_grading_mismatch():
    with pytest.raises(ValueError):
        degree_pair(P(1), P(1), 1, G24)


@pytest.mark.parametrize("m,n", [(m, m + c) for m in range(1, 5) for c in range(1, 5)])
def test_formula_matches_pieri_up_to_4x4(m, n):
    ctx = GrassmannContext(m, n)
    for mu, nu, e in admissible_triples(ctx):
        d = degree_pair(mu, nu, e, ctx)
        assert d >= 0
        assert d == degree_via_pieri(mu, nu, e, ctx)


@pytest.mark.parametrize("m,n", [(2, 4), (2, 5), (3, 6), (3, 7), (4, 8)])
def test_grassmannian_degree(m, n):
    ctx = GrassmannContext(m, n)
    assert degree_pair(EMPTY, EMPTY, ctx.dim, ctx) == grassmannian_degree(ctx)


def test_known_grassmannian_degrees():
    # classical values: Gr(2,4) is a quadric, Gr(2,5) has degree 5, Gr(3,6) has degree 42
    assert [grassmannian_degree(GrassmannContext(*mn)) for mn in [(2, 4), (2, 5), (3, 6)]] == [2, 5, 42]
