import pytest
from hypothesis import given, strategies as st

from petrie import (
    AdmissibilityError,
    DegreeMismatchError,
    ParseError,
    Permutation,
    StepMap,
    compose,
    cycle_chain,
    dual,
    family_cor11,
    family_sigma_nk,
    family_thm4_combine,
    family_thm12,
    family_thm13,
    is_cyclic,
    parse_permutation,
)
from petrie.perms import all_permutations


def test_parse_image_list():
    assert parse_permutation("1 2 3").images == (1, 2, 3)
    assert parse_permutation("3 1 4 5 2").images == (3, 1, 4, 5, 2)


def test_parse_cycles_with_degree_suffix():
    assert parse_permutation("(3 4 5)@5").images == (1, 2, 4, 5, 3)
    assert parse_permutation("(1 3 4)(2 5)").images == (3, 5, 4, 1, 2)
    # the cyclic 7-point example: orbit 1 -> 6 -> 5 -> 7 -> 2 -> 3 -> 4 -> 1
    assert parse_permutation("(1 6 5 7 2 3 4)").images == (6, 3, 4, 1, 7, 5, 2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_permutation("1 2 2")
    with pytest.raises(ParseError):
        parse_permutation("1 5 3")
    with pytest.raises(ParseError):
        parse_permutation("(1 2")
    with pytest.raises(ParseError):
        parse_permutation("(1 2)(2 3)")
    with pytest.raises(ParseError):
        parse_permutation("(1 2 3)@2")
    with pytest.raises(ParseError):
        parse_permutation("")


def test_roundtrip_is_exhaustive_over_s5():
    for p in all_permutations(5):
        assert parse_permutation(p.image_string()) == p
        assert parse_permutation(p.cycle_string()) == p


def test_compose_pointwise():
    outer = parse_permutation("(2 3)@3")
    inner = parse_permutation("(1 2)@3")
    assert compose(outer, inner).images == (3, 1, 2)


def test_compose_identity_and_inverse():
    s7 = parse_permutation("(1 6 5 7 2 3 4)")
    ident = Permutation(tuple(range(1, 8)))
    assert compose(ident, s7) == s7
    assert compose(s7, s7.inverse()) == ident


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        compose(parse_permutation("1 2"), parse_permutation("1 2 3"))


def test_compose_step_maps_can_fail_admissibility():
    f = StepMap((1, 3, 1))
    g = StepMap((2, 1, 2))
    # f(g(1)) = 3, f(g(2)) = 1, f(g(3)) = 3 -> fine
    assert compose(f, g).images == (3, 1, 3)
    # g(f(1)) = 2 = g(f(2)) -> the composite is not a step map
    with pytest.raises(AdmissibilityError):
        compose(g, f)


def test_step_map_validation():
    with pytest.raises(AdmissibilityError):
        StepMap((1, 1, 2))
    with pytest.raises(ValueError):
        StepMap((1, 4, 2))


def test_dual_examples():
    assert dual(parse_permutation("(1 2)@3")) == parse_permutation("(2 3)@3")
    ident = Permutation((1, 2, 3, 4))
    assert dual(ident) == ident
    s7 = parse_permutation("(1 6 5 7 2 3 4)")
    assert dual(dual(s7)) == s7


@given(st.integers(min_value=1, max_value=40).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))))
def test_dual_is_involutive(images):
    p = Permutation(tuple(images))
    assert dual(dual(p)) == p
    assert sorted(dual(p).images) == list(range(1, p.degree + 1))


def test_is_cyclic():
    assert is_cyclic(parse_permutation("(1 6 5 7 2 3 4)"))
    assert not is_cyclic(Permutation((1, 2, 3)))
    assert not is_cyclic(parse_permutation("(1 2)(3 4)"))


def test_inverse_and_cycles():
    p = parse_permutation("(1 3 4)(2 5)")
    assert compose(p, p.inverse()).is_identity()
    assert p.cycles() == [(1, 3, 4), (2, 5)]


# ---------------------------------------------------------------------------
# families


def test_family_sigma_nk_examples():
    assert family_sigma_nk(3, 5).images == (3, 1, 4, 5, 2)
    assert family_sigma_nk(2, 5).images == (2, 3, 4, 5, 1)
    assert family_sigma_nk(5, 5).images == (5, 1, 2, 3, 4)


def test_family_sigma_nk_always_cyclic():
    for k in range(4, 9):
        for n in range(2, k + 1):
            assert is_cyclic(family_sigma_nk(n, k)), (n, k)


def test_family_sigma_nk_range_errors():
    with pytest.raises(ValueError):
        family_sigma_nk(1, 5)
    with pytest.raises(ValueError):
        family_sigma_nk(6, 5)
    with pytest.raises(ValueError):
        family_sigma_nk(2, 3)


def test_family_thm12():
    alpha, theta = family_thm12(5)
    assert alpha.images == (3, 5, 2, 1, 4)
    assert theta.images == (5, 3, 4, 1, 2)
    a6, t6 = family_thm12(6)
    assert is_cyclic(a6) and is_cyclic(t6)
    # alpha_5 is also the 5-cycle 1 -> 3 -> 2 -> 5 -> 4 -> 1
    assert alpha == cycle_chain([1, 3, 2, 5, 4])
    with pytest.raises(ValueError):
        family_thm12(4)


def test_family_thm13():
    beta, delta = family_thm13(5)
    assert beta.images == (3, 4, 2, 5, 1)
    assert delta.images == (5, 4, 2, 1, 3)
    for k in (5, 6, 7, 9):
        b, d = family_thm13(k)
        assert is_cyclic(b) and is_cyclic(d)
    with pytest.raises(ValueError):
        family_thm13(4)


def test_family_cor11_recovers_thm12_shape():
    pi5 = cycle_chain([1, 3, 2, 5, 4])
    sigma7, rho7, mu7, nu7 = family_cor11(pi5, 7)
    alpha7, _ = family_thm12(7)
    assert sigma7 == alpha7
    for p in (sigma7, rho7, mu7, nu7):
        assert sorted(p.images) == list(range(1, 8))


def test_family_cor11_second_seed():
    pi5 = cycle_chain([1, 5, 2, 3, 4])
    outs = family_cor11(pi5, 7)
    for p in outs:
        assert sorted(p.images) == list(range(1, 8))


def test_family_cor11_precondition():
    with pytest.raises(ValueError):
        family_cor11(cycle_chain([1, 4, 2, 3, 5]), 7)  # pi(5)=1 < pi(4)=2 fails order
    with pytest.raises(ValueError):
        family_cor11(cycle_chain([1, 3, 2, 5, 4]), 6)  # k too small


def test_family_thm4_combine_remark_instance():
    # sigma_5: 1->3->2->5->4->1 and rho_5: 1->5->2->3->4->1 glued with the
    # descending xi and ascending eta on {4..6}, k = 6
    sigma5 = cycle_chain([1, 3, 2, 5, 4])
    rho5 = cycle_chain([1, 5, 2, 3, 4])
    xi = Permutation((3, 1, 2))   # on {4,5,6}: 4->6, 5->4, 6->5
    eta = Permutation((2, 3, 1))  # on {4,5,6}: 4->5, 5->6, 6->4
    sx, se, re_ = family_thm4_combine(sigma5, rho5, xi, eta, 6)
    assert sx == cycle_chain([1, 3, 2, 6, 5, 4])
    assert re_ == cycle_chain([1, 5, 6, 2, 3, 4])
    for p in (sx, se, re_):
        assert sorted(p.images) == list(range(1, 7))


def test_family_thm4_combine_decomposes():
    from petrie import decompose_left, decompose_right

    sigma5 = cycle_chain([1, 3, 2, 5, 4])
    rho5 = cycle_chain([1, 5, 2, 3, 4])
    xi = Permutation((3, 1, 2))
    eta = Permutation((2, 3, 1))
    sx, se, re_ = family_thm4_combine(sigma5, rho5, xi, eta, 6)
    # (sigma xi)_k is a left extension of xi (width k-l+2 = 3, so base degree 3)
    got = decompose_left(sx, 3)
    assert got is not None
    # (rho eta)_k is a right extension of rho_5
    got = decompose_right(re_, 5)
    assert got is not None and got[0] == rho5


def test_family_thm4_hypothesis_errors():
    sigma5 = cycle_chain([1, 3, 2, 5, 4])
    rho5 = cycle_chain([1, 5, 2, 3, 4])
    xi = Permutation((3, 1, 2))
    bad_eta = Permutation((1, 3, 2))  # eta(4) = 4, violates eta(l-1) = l
    with pytest.raises(ValueError):
        family_thm4_combine(sigma5, rho5, xi, bad_eta, 6)
