import pytest
from hypothesis import given, strategies as st

from anticomm.exact import binomial
from anticomm.partitions import EMPTY, Partition, add_box, complement, conjugate, contains, iterate_box

P = Partition.of


def test_box_1x1():
    assert list(iterate_box(1, 1)) == [EMPTY, P(1)]


def test_box_2x2_contents():
    got = list(iterate_box(2, 2))
    assert len(got) == 6
    assert set(got) == {EMPTY, P(1), P(2), P(1, 1), P(2, 1), P(2, 2)}
    # lexicographic on the part vectors
    assert got == sorted(got, key=lambda p: p.padded(2))


def test_empty_rectangle():
    assert list(iterate_box(3, 0)) == [EMPTY]


@pytest.mark.parametrize("rows", range(0, 9))
def test_box_counts(rows):
    for cols in range(0, 9):
        assert len(list(iterate_box(rows, cols))) == binomial(rows + cols, rows)


@pytest.mark.parametrize("p,expected", [((2, 1), (2, 1)), ((3,), (1, 1, 1)), ((4, 2, 1), (3, 2, 1, 1))])
def test_conjugate(p, expected):
    assert conjugate(P(*p)) == P(*expected)


@pytest.mark.parametrize("p,expected", [((), (2, 2)), ((2, 1), (1,)), ((2, 2), ())])
def test_complement(p, expected):
    assert complement(P(*p), 2, 2) == P(*expected)


def test_complement_requires_fit():
    with pytest.raises(ValueError):
        complement(P(3), 2, 2)


def test_contains():
    assert contains(P(2, 1), P(1, 1))
    assert not contains(P(1), P(2))


def test_rejects_non_partition():
    with pytest.raises(ValueError):
        P(1, 2)
    with pytest.raises(ValueError):
        P(2, -1)


def test_trailing_zeros_trimmed_and_display():
    assert P(2, 0, 0) == P(2)
    assert str(EMPTY) == "()"
    assert Partition.from_json(P(3, 1).to_json()) == P(3, 1)


def test_add_box():
    assert set(add_box(P(1), 2, 2)) == {P(2), P(1, 1)}
    assert list(add_box(P(2, 2), 2, 2)) == []


partitions = st.lists(st.integers(0, 6), max_size=6).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@given(partitions)
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_complement_involution(rows, cols, data):
    p = data.draw(st.sampled_from(list(iterate_box(rows, cols))))
    q = complement(p, rows, cols)
    assert complement(q, rows, cols) == p
    assert p.size + q.size == rows * cols
