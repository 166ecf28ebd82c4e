import random
from fractions import Fraction
from math import lcm

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf
from sympy.polys.domains import ZZ

from conftest import E8, FOUR_ONE, random_star_corpus
from seifert_calc.exact_arith import ValidationError
from seifert_calc.graph import StarGraph, expand, intersection_matrix
from seifert_calc.lattice import (
    SingularMatrixError,
    adjunction_residual,
    canonical_cycle_oracle,
    determinant,
    discriminant_group,
    smith_diagonal,
    smith_normal_form,
    solve_exact,
)


def sympy_invariant_factors(rows):
    snf = sympy_snf(sympy.Matrix(rows), domain=ZZ)
    return sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)))


def test_snf_examples():
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    assert smith_normal_form([[-2, 1], [1, -2]]) == [3]
    assert smith_normal_form(intersection_matrix(expand(E8))) == []


def test_snf_matches_sympy_on_random_matrices():
    rng = random.Random(3)
    for _ in range(150):
        size = rng.randint(1, 6)
        rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        diag = smith_diagonal(rows)
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1) if diag[i])
        assert sorted(diag) == sympy_invariant_factors(rows)


def test_snf_product_is_det_on_star_graphs():
    for sg in random_star_corpus(120, seed=5, t_max=6, n_max=30):
        m = intersection_matrix(expand(sg))
        diag = smith_diagonal(m)
        product = 1
        for x in diag:
            product *= x
        assert product == abs(determinant(m))


def test_determinant_matches_sympy():
    rng = random.Random(9)
    for _ in range(100):
        size = rng.randint(1, 7)
        rows = [[rng.randint(-20, 20) for _ in range(size)] for _ in range(size)]
        assert determinant(rows) == sympy.Matrix(rows).det()


def test_discriminant_group_examples():
    assert discriminant_group(expand(E8)).order == 1
    assert discriminant_group(expand(E8)).trivial
    g4 = discriminant_group(expand(StarGraph(0, 4, ())))
    assert g4.invariant_factors == (4,) and g4.order == 4
    g = discriminant_group(expand(FOUR_ONE))
    assert g.order == Fraction(9, 4) * 64 == 144
    assert str(discriminant_group(expand(E8))) == "trivial"


def test_discriminant_group_rejects_non_definite():
    with pytest.raises(ValidationError):
        discriminant_group(expand(StarGraph(0, 1, ((3, 1),) * 3)))


def test_solve_exact_examples():
    assert solve_exact([[1, 0], [0, 1]], [Fraction(1, 3), 5]) == [Fraction(1, 3), 5]
    assert solve_exact([[-2, 1], [1, -2]], [-1, -1]) == [1, 1]
    pg = expand(E8)
    assert solve_exact(intersection_matrix(pg), [0] * len(pg)) == [0] * len(pg)


def test_solve_exact_needs_pivoting_and_rational_rhs():
    rows = [[0, 2, 1], [3, 1, 0], [1, 0, 4]]
    b = [Fraction(1, 2), Fraction(-2, 3), 7]
    x = solve_exact(rows, b)
    assert list(sympy.Matrix(rows).LUsolve(sympy.Matrix(b))) == [sympy.Rational(v.numerator, v.denominator) for v in x]


def test_solve_exact_singular():
    with pytest.raises(SingularMatrixError):
        solve_exact([[1, 2], [2, 4]], [1, 1])


def test_oracle_examples():
    assert set(canonical_cycle_oracle(expand(E8)).coefficients) == {0}
    for d in (1, 2, 5):
        assert canonical_cycle_oracle(expand(StarGraph(1, d, ()))).coefficients == (-1,)
    assert canonical_cycle_oracle(expand(StarGraph(0, 4, ()))).coefficients == (Fraction(-1, 2),)
    cycle = canonical_cycle_oracle(expand(FOUR_ONE))
    assert cycle.z_coefficients()["C"] == Fraction(1, 9)


def test_oracle_residual_exactly_zero(corpus):
    for sg in corpus[:200]:
        pg = expand(sg)
        cycle = canonical_cycle_oracle(pg)
        assert adjunction_residual(pg, cycle) == [0] * len(pg)
        assert cycle.order == lcm(*(k.denominator for k in cycle.coefficients))
