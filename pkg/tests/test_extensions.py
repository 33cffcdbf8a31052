import json
from math import factorial

import pytest

from petrie import (
    LeftExtensionSpec,
    Permutation,
    RightExtensionSpec,
    SpecError,
    TwoSidedExtensionSpec,
    decompose_left,
    decompose_right,
    decompose_two_sided,
    dual,
    enumerate_synchronized_left,
    enumerate_synchronized_right,
    enumerate_synchronized_two_sided,
    left_extend,
    parse_permutation,
    right_extend,
    two_sided_extend,
)
from petrie.extensions import (
    enumerate_left_specs,
    enumerate_right_specs,
    enumerate_two_sided_specs,
    spec_from_json,
)
from petrie.perms import all_permutations

ID1 = Permutation((1,))


def test_right_extend_section5_pair():
    spec = RightExtensionSpec(4, ID1, 5)
    assert right_extend(parse_permutation("(3 4)@4"), spec) == parse_permutation("(3 4 5)@5")
    assert right_extend(parse_permutation("(1 2)(3 4)"), spec) == parse_permutation("(1 2)(3 4 5)")


def test_right_extend_keeps_head():
    base = parse_permutation("(1 3 4)(2 5)")
    for spec in enumerate_right_specs(5, 2):
        ext = right_extend(base, spec)
        assert ext.images[:4] == base.images[:4]
        assert ext(spec.slot) == base(5)
        assert ext(5) > 5


def test_left_extend_example():
    base = parse_permutation("(1 2 3)")
    spec = LeftExtensionSpec(3, ID1, 1)
    assert left_extend(base, spec).images == (3, 1, 4, 2)


def test_left_extend_clauses():
    base = parse_permutation("(1 3 4)(2 5)")
    for spec in enumerate_left_specs(5, 2):
        m = spec.size
        ext = left_extend(base, spec)
        for i in range(2, 6):
            assert ext(m + i) == m + base(i)
        assert ext(spec.slot) == m + base(1)
        for j in range(1, m + 2):
            if j != spec.slot:
                assert ext(j) < m + 1


def test_left_right_dual_symmetry():
    # a left extension is the mirror of a right extension of the mirror
    for base in all_permutations(4):
        for spec in enumerate_left_specs(4, 2):
            m = spec.size
            mirrored_filler = dual(spec.filler)
            mirrored_slot = m - spec.slot + 1 + 4
            rspec = RightExtensionSpec(4, mirrored_filler, mirrored_slot)
            assert left_extend(base, spec) == dual(right_extend(dual(base), rspec))


def test_two_sided_extend_structure():
    base = parse_permutation("(1 3 2 5 4)")
    spec = TwoSidedExtensionSpec(5, ID1, 1, ID1, 7)
    ext = two_sided_extend(base, spec)
    assert ext.degree == 7
    for i in range(2, 5):
        assert ext(1 + i) == 1 + base(i)
    assert ext(1) == 1 + base(1)
    assert ext(7) == 1 + base(5)


def test_two_sided_is_left_after_right():
    for base in all_permutations(4):
        spec = TwoSidedExtensionSpec(4, ID1, 1, ID1, 6)
        via_two = two_sided_extend(base, spec)
        step1 = right_extend(base, RightExtensionSpec(4, ID1, 5))
        via_chain = left_extend(step1, LeftExtensionSpec(5, ID1, 1))
        assert via_two == via_chain


def test_spec_validation():
    with pytest.raises(SpecError):
        RightExtensionSpec(4, ID1, 4)  # slot below k+1
    with pytest.raises(SpecError):
        RightExtensionSpec(4, ID1, 6)
    with pytest.raises(SpecError):
        LeftExtensionSpec(4, ID1, 2)
    with pytest.raises(SpecError):
        TwoSidedExtensionSpec(4, ID1, 1, ID1, 5)
    with pytest.raises(SpecError):
        right_extend(Permutation((1, 2, 3)), RightExtensionSpec(4, ID1, 5))


def test_decompose_right_examples():
    got = decompose_right(parse_permutation("(3 4 5)@5"), 4)
    assert got is not None
    base, spec = got
    assert base == parse_permutation("(3 4)@4") and spec.slot == 5
    # the identity on five points fixes position 4, so it is not a right
    # extension of anything on four points (position k must map above k)
    assert decompose_right(Permutation((1, 2, 3, 4, 5)), 4) is None
    # the round trip of the identity *base* routes through position 5
    base, spec = decompose_right(Permutation((1, 2, 3, 5, 4)), 4)
    assert base == Permutation((1, 2, 3, 4)) and spec.slot == 5 and spec.filler == ID1
    assert decompose_right(parse_permutation("(1 5)@5"), 4) is None


def test_round_trip_right():
    for base in all_permutations(4):
        for n in (1, 2, 3):
            for spec in enumerate_right_specs(4, n):
                assert decompose_right(right_extend(base, spec), 4) == (base, spec)


def test_round_trip_left():
    for base in all_permutations(4):
        for m in (1, 2, 3):
            for spec in enumerate_left_specs(4, m):
                assert decompose_left(left_extend(base, spec), 4) == (base, spec)


def test_round_trip_two_sided():
    for base in all_permutations(3):
        for m in (1, 2):
            for n in (1, 2):
                for spec in enumerate_two_sided_specs(3, m, n):
                    ext = two_sided_extend(base, spec)
                    assert decompose_two_sided(ext, 3, m) == (base, spec)


def test_non_extensions_decompose_to_none():
    assert decompose_left(parse_permutation("(1 5)@5"), 4) is None
    assert decompose_two_sided(Permutation((1, 2, 3, 4, 5)), 3, 1) is None


def test_enumeration_counts():
    a = parse_permutation("(1 2 3 4)")
    b = parse_permutation("(1 4 3 2)")
    for n in (1, 2, 3):
        pairs = list(enumerate_synchronized_right(a, b, n))
        assert len(pairs) == factorial(n) * n
    for m in (1, 2):
        assert len(list(enumerate_synchronized_left(a, b, m))) == factorial(m) * m
    assert len(list(enumerate_synchronized_two_sided(a, b, 1, 1))) == 1
    assert len(list(enumerate_synchronized_two_sided(a, b, 2, 2))) == 16


def test_synchronization_clause():
    """Extended pairs agree everywhere except where the bases differ."""
    perms = list(all_permutations(4))
    for a in perms[:8]:
        for b in perms[8:16]:
            for n in (1, 2):
                for ea, eb in enumerate_synchronized_right(a, b, n):
                    lows = [j for j in range(5, 5 + n) if ea(j) <= 4]
                    assert len(lows) == 1
                    t = lows[0]
                    assert ea(t) == a(4) and eb(t) == b(4)
                    for i in range(4, 5 + n):
                        if i != t:
                            assert ea(i) == eb(i)


def test_extensions_are_bijections():
    for base in all_permutations(4):
        for spec in enumerate_two_sided_specs(4, 2, 1):
            ext = two_sided_extend(base, spec)
            assert sorted(ext.images) == list(range(1, 8))


def test_spec_json_round_trip():
    spec = RightExtensionSpec(4, ID1, 5)
    data = spec.to_json()
    assert data == {"kind": "right", "base_degree": 4, "filler": [5], "slot": 5}
    assert spec_from_json(data) == spec
    assert spec_from_json({"kind": "right", "filler": [5], "slot": 5}) == spec

    lspec = LeftExtensionSpec(4, Permutation((2, 1)), 2)
    assert spec_from_json(lspec.to_json()) == lspec

    tspec = TwoSidedExtensionSpec(4, Permutation((2, 1)), 1, ID1, 7)
    data = tspec.to_json()
    assert data["right_filler"] == [7]
    assert spec_from_json(data) == tspec
    assert spec_from_json(json.loads(json.dumps(data))) == tspec


def test_enumeration_is_deterministic():
    first = [s.to_json() for s in enumerate_right_specs(4, 2)]
    second = [s.to_json() for s in enumerate_right_specs(4, 2)]
    assert first == second
    assert first[0] == {"kind": "right", "base_degree": 4, "filler": [5, 6], "slot": 5}
