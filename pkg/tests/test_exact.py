import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from petrie import (
    DegreeMismatchError,
    GF2Matrix,
    IntMatrix,
    IntPoly,
    RatPoly,
    SingularMatrixError,
    charpoly,
    det,
    gf2_mul,
    invariant_factors,
    is_invertible_q,
    mat_mul,
    minpoly,
    parse_permutation,
    petrie_matrix,
    petrie_matrix_gf2,
    similar,
    solve_rational,
    trace,
)
from petrie.exact import _berkowitz_big, _det_bareiss_big
from petrie.perms import all_permutations

from conftest import charpoly_by_cofactor, cofactor_det, int_inverse_unimodular, random_unimodular


SIGMA7 = parse_permutation("(1 6 5 7 2 3 4)")


def test_det_identity_and_zero():
    assert det(IntMatrix.identity(3)) == 1
    assert det(IntMatrix.zero(4)) == 0
    assert trace(IntMatrix.zero(5)) == 0


def test_det_sigma7_is_one():
    assert det(petrie_matrix(SIGMA7)) == 1


def test_det_petrie_s5_in_pm1():
    for p in all_permutations(5):
        assert det(petrie_matrix(p)) in (-1, 1)


def test_det_matches_cofactor_oracle(rng):
    for _ in range(80):
        n = rng.randrange(1, 6)
        rows = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(n)]
        assert det(IntMatrix.from_rows(rows)) == cofactor_det(rows)


def test_det_bigint_path_matches_kernel_path(rng):
    # scale entries so the int64 bound fails and the big-integer path runs
    for _ in range(10):
        n = rng.randrange(2, 5)
        rows = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)]
        big = [[v * 10**40 for v in row] for row in rows]
        assert det(IntMatrix.from_rows(big)) == cofactor_det(rows) * 10 ** (40 * n)


def test_trace_examples():
    m = petrie_matrix(parse_permutation("(1 2 3 4 5 6)"))
    assert trace(m) == 1


def test_charpoly_sigma7():
    cp = charpoly(petrie_matrix(SIGMA7))
    assert cp == IntPoly((1, -1, -3, 5, -1, -3, 1))
    assert str(cp) == "x^6 - 3x^5 - x^4 + 5x^3 - 3x^2 - x + 1"


def test_charpoly_identity():
    # (x - 1)^n, ascending coefficients
    assert charpoly(IntMatrix.identity(1)) == IntPoly((-1, 1))
    assert charpoly(IntMatrix.identity(2)) == IntPoly((1, -2, 1))
    assert charpoly(IntMatrix.identity(4)) == IntPoly((1, -4, 6, -4, 1))


def test_charpoly_2x2_fib():
    m = petrie_matrix(parse_permutation("(1 2 3)"))
    assert m.rows == ((0, 1), (1, 1))
    assert charpoly(m) == IntPoly((-1, -1, 1))


def test_charpoly_matches_cofactor_oracle(rng):
    for _ in range(60):
        n = rng.randrange(1, 7)
        rows = [[rng.randrange(0, 2) for _ in range(n)] for _ in range(n)]
        m = IntMatrix.from_rows(rows)
        assert charpoly(m).coeffs == charpoly_by_cofactor(m)


def test_charpoly_bigint_path(rng):
    for _ in range(6):
        n = rng.randrange(1, 5)
        rows = [[rng.randrange(-2, 3) * 10**20 for _ in range(n)] for _ in range(n)]
        m = IntMatrix.from_rows(rows)
        assert charpoly(m).coeffs == charpoly_by_cofactor(m)
        assert _berkowitz_big(m.rows)[::-1] == list(charpoly(m).coeffs)


def test_det_equals_signed_constant_term():
    for p in all_permutations(5):
        m = petrie_matrix(p)
        cp = charpoly(m)
        assert det(m) == (-1) ** m.dim * cp.coeffs[0]


def test_minpoly_regressions():
    m = petrie_matrix(parse_permutation("(3 4 5)@5"))
    assert minpoly(m) == RatPoly.from_ints((1, 0, -2, 1))
    m2 = petrie_matrix(parse_permutation("(1 2)(3 4 5)"))
    assert minpoly(m2) == RatPoly.from_ints((-1, 1, 2, -3, 1))
    assert minpoly(IntMatrix.identity(4)) == RatPoly.from_ints((-1, 1))


def test_invariant_factors_identity():
    facs = invariant_factors(IntMatrix.identity(2))
    assert facs == [RatPoly.from_ints((-1, 1))] * 2


def test_invariant_factors_345():
    facs = invariant_factors(petrie_matrix(parse_permutation("(3 4 5)@5")))
    assert [str(f) for f in facs] == ["x - 1", "x^3 - 2x^2 + 1"]
    # x^3 - 2x^2 + 1 = (x - 1)(x^2 - x - 1)
    assert RatPoly.from_ints((-1, 1)).mul(RatPoly.from_ints((-1, -1, 1))) == facs[1]


def test_invariant_factors_companion():
    comp = IntMatrix.from_rows([[0, 1], [1, 1]])
    assert invariant_factors(comp) == [RatPoly.from_ints((-1, -1, 1))]


def test_invariant_factors_product_and_chain():
    for p in all_permutations(4):
        m = petrie_matrix(p)
        facs = invariant_factors(m)
        prod = RatPoly.from_ints((1,))
        for f in facs:
            prod = prod.mul(f)
        assert prod == RatPoly.from_ints(charpoly(m).coeffs)
        for a, b in zip(facs, facs[1:]):
            q, r = divmod_poly(b, a)
            assert r.is_zero()


def divmod_poly(a: RatPoly, b: RatPoly):
    from petrie.exact import _pdivmod

    q, r = _pdivmod(a.coeffs, b.coeffs)
    return RatPoly(q), RatPoly(r)


def test_similar_reflexive_and_examples():
    m = petrie_matrix(parse_permutation("(3 4 5)@5"))
    assert similar(m, m)
    a = petrie_matrix(parse_permutation("(3 4 5)@5"))
    b = petrie_matrix(parse_permutation("(1 2)(3 4 5)"))
    assert not similar(a, b)
    with pytest.raises(DegreeMismatchError):
        similar(IntMatrix.identity(2), IntMatrix.identity(3))


def test_similar_invariant_under_unimodular_conjugation(rng):
    for p in ["(1 2 3)", "(3 4 5)@5", "(1 2)(3 4 5)", "(1 3)(2 4)"]:
        m = petrie_matrix(parse_permutation(p))
        for _ in range(12):
            u = random_unimodular(m.dim, rng)
            conj = mat_mul(mat_mul(u, m), int_inverse_unimodular(u))
            assert similar(m, conj)
            assert charpoly(m) == charpoly(conj)
            assert trace(m) == trace(conj)


def test_mat_mul_identity_and_inverse():
    m = petrie_matrix(SIGMA7)
    ident = IntMatrix.identity(m.dim)
    assert mat_mul(m, ident) == m
    inv = int_inverse_unimodular(m)  # det is +-1 so the inverse is integral
    assert mat_mul(m, inv) == ident


def test_gf2_mul_example():
    a = petrie_matrix_gf2(parse_permutation("(1 2)@3"))
    b = petrie_matrix_gf2(parse_permutation("(2 3)@3"))
    from petrie import compose

    comp = compose(parse_permutation("(2 3)@3"), parse_permutation("(1 2)@3"))
    assert gf2_mul(a, b).bits == petrie_matrix_gf2(comp).bits
    ident = GF2Matrix.identity(2)
    assert gf2_mul(a, ident).bits == a.bits


def test_solve_rational():
    ident = IntMatrix.identity(3)
    assert solve_rational(ident, [1, 2, 3]) == (1, 2, 3)
    # the map fixing J1+J2 makes (M - I) singular
    m = petrie_matrix(parse_permutation("(1 3)@4"))
    shifted = IntMatrix.from_rows(
        [[m.rows[i][j] - (1 if i == j else 0) for j in range(3)] for i in range(3)]
    )
    with pytest.raises(SingularMatrixError):
        solve_rational(shifted, [1, 0, 0])


def test_solve_rational_row_convention(rng):
    u = random_unimodular(4, rng)
    b = list(u.rows[0])
    x = solve_rational(u, b)
    assert x == (1, 0, 0, 0)
    # x.A = b holds exactly
    n = u.dim
    prod = [sum(x[i] * u.rows[i][j] for i in range(n)) for j in range(n)]
    assert prod == [Fraction(v) for v in b]


def test_is_invertible_q():
    assert is_invertible_q(IntMatrix.identity(3))
    assert not is_invertible_q(IntMatrix.zero(3))
    for p in all_permutations(4):
        assert is_invertible_q(petrie_matrix(p))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=5))
def test_poly_print_parse_stability(coeffs):
    p = IntPoly(tuple(coeffs))
    assert ("x" in str(p)) == (p.degree >= 1)
    assert p.to_json() == list(p.coeffs)


def test_poly_formatting():
    assert str(IntPoly((1, -1, -3, 5, -1, -3, 1))) == "x^6 - 3x^5 - x^4 + 5x^3 - 3x^2 - x + 1"
    assert str(IntPoly((0,))) == "0"
    assert str(IntPoly((-1, 1))) == "x - 1"
    assert str(IntPoly((2,))) == "2"
    assert str(RatPoly((Fraction(1, 2), Fraction(1)))) == "x + 1/2"
    assert str(RatPoly((Fraction(0), Fraction(3, 2)))) == "(3/2)x"
