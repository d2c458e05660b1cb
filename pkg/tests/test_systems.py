from itertools import product

import pytest

from anticomm.algebra import AnticommAlgebra, Subspace, omega_algebra, random_algebra, random_form, subalgebra_check
from anticomm.count import count_subalgebras_formula
from anticomm.exact import GF
from anticomm.enumerate.systems import (
    PositiveDimensionalError, cell_matrix, charts, count_subalgebras_geometric, fan_count,
    fan_system, ideal_check, subalgebra_points, subalgebra_system, subalgebra_variety_dimension,
    surface_plucker_degree, unit_on_every_cell,
)
from anticomm.enumerate.regular import pentahedral_algebra
from anticomm.schubert import GrassmannContext, grassmannian_degree

F = GF()


def test_below_arity_no_equations():
    A = random_algebra(5, 3, F, seed=1)
    for c in charts(5, 2):
        assert subalgebra_system(A, 2, c).equations == []


def test_zero_algebra_trivial_equations():
    A = AnticommAlgebra.zero(4, 2, F)
    sys = subalgebra_system(A, 3, (0, 1, 2))
    assert all(e.is_zero() for e in sys.equations)


def test_dense_chart_shape():
    A = random_algebra(4, 2, F, seed=1, zero_trace=True)
    sys = subalgebra_system(A, 3, (0, 1, 2))
    assert len(sys.variables) == 3
    assert len(sys.equations) == 3
    assert all(e.total_degree() <= 3 for e in sys.equations)


@pytest.mark.parametrize("n,k,m", [(5, 2, 3), (6, 3, 4), (5, 3, 4)])
def test_equation_count(n, k, m):
    from anticomm.exact import binomial
    A = random_algebra(n, k, F, seed=2)
    for c in charts(n, m):
        assert len(subalgebra_system(A, m, c).equations) == binomial(m, k) * (n - m)


@pytest.mark.parametrize("chart", [(1, 0), (0, 0), (0, 4), ()])
def test_invalid_chart(chart):
    A = random_algebra(4, 2, F, seed=0)
    with pytest.raises(ValueError):
        subalgebra_system(A, 2, chart)


def test_rational_field_rejected():
    from anticomm.exact import QQ
    with pytest.raises(ValueError):
        subalgebra_system(random_algebra(4, 2, QQ, seed=0), 3, (0, 1, 2))


def test_cells_partition_gr24_over_f3():
    field = GF(3)
    # every 2-dimensional subspace of F_3^4 by brute force
    vectors = [v for v in product(range(3), repeat=4) if any(v)]
    everything = set()
    for v in vectors:
        for w in vectors:
            U = Subspace.span([v, w], 4, field)
            if U.dim == 2:
                everything.add(U)
    assert len(everything) == 130  # (3^4 - 1)(3^4 - 3) / ((3^2 - 1)(3^2 - 3))
    from_cells = []
    for c in charts(4, 2):
        names, rows = cell_matrix(4, c, field)
        for point in product(range(3), repeat=len(names)):
            mat = [[x.evaluate(point) for x in row] for row in rows]
            from_cells.append(Subspace.span(mat, 4, field))
    assert len(from_cells) == len(set(from_cells)) == 130
    assert set(from_cells) == everything


@pytest.mark.parametrize("n,k,expected", [(4, 2, 5), (5, 3, 11)])
def test_hyperplane_counts(n, k, expected):
    res = count_subalgebras_geometric(random_algebra(n, k, F, seed=1, zero_trace=True))
    assert res.total == expected
    assert res.all_radical


def test_five_two_agrees_with_formula():
    res = count_subalgebras_geometric(random_algebra(5, 2, F, seed=1, zero_trace=True), 3)
    assert res.total == count_subalgebras_formula((5, 2))


def test_dimension_signatures():
    assert subalgebra_variety_dimension(random_algebra(4, 2, F, seed=1, zero_trace=True)) == 2
    assert subalgebra_variety_dimension(random_algebra(5, 2, F, seed=1, zero_trace=True)) == 3
    assert subalgebra_variety_dimension(AnticommAlgebra.zero(4, 2, F)) == 4


def test_no_intermediate_subalgebras():
    assert unit_on_every_cell(random_algebra(6, 3, F, seed=1, zero_trace=True), 5)


def test_positive_dimensional_reported():
    with pytest.raises(PositiveDimensionalError) as info:
        count_subalgebras_geometric(AnticommAlgebra.zero(4, 2, F), 3)
    assert info.value.krull_dim > 0


def test_rational_points_are_subalgebras():
    A = pentahedral_algebra(1)
    found = subalgebra_points(A, 3)
    assert len(found) == 5
    assert all(U.dim == 3 and subalgebra_check(A, U) for U in found)


def test_random_algebra_points_are_subalgebras():
    A = random_algebra(5, 3, F, seed=4, zero_trace=True)
    for U in subalgebra_points(A, 4):
        assert subalgebra_check(A, U)


def test_plucker_degree_of_zero_algebra():
    rep = surface_plucker_degree(AnticommAlgebra.zero(4, 2, F))
    assert rep.sections == 4
    assert rep.degree == 2 == grassmannian_degree(GrassmannContext(2, 4))


def test_plucker_degree_section_independent():
    A = pentahedral_algebra(1)
    assert {surface_plucker_degree(A, seed=s).degree for s in range(3)} == {5}


def test_fan_system_shape():
    A = random_algebra(4, 2, F, seed=1, zero_trace=True)
    sys = fan_system(A, (0, 1, 2), 0)
    assert len(sys.variables) == 5
    assert len(sys.equations) <= 12


def test_fans_of_zero_algebra_positive_dimensional():
    with pytest.raises(PositiveDimensionalError):
        fan_count(AnticommAlgebra.zero(4, 2, F))


def test_fan_count_regular():
    rep = fan_count(pentahedral_algebra(1))
    assert rep.count == 10 and rep.all_radical
    assert rep.spot_check


def test_ideals_of_omega_algebra():
    rng = __import__("random").Random(0)
    A = omega_algebra(random_form(4, 1, F, rng), 4, 2)
    # the kernel of the covector is a union of ideals
    assert not ideal_check(A, 1).empty
    assert not ideal_check(A, 2).empty


def test_no_ideals_in_regular_algebra():
    A = pentahedral_algebra(1)
    assert ideal_check(A, 1).empty and ideal_check(A, 2).empty
