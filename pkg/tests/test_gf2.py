"""Vector-space layer: spans, flats, cosets, coordinate maps."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binmatroid.gf2 import (
    bits_list,
    check_dim,
    closure,
    closure_mask,
    complementary_flat,
    coordinate_map,
    cosets,
    empty_flat,
    flats_of_dim,
    full_flat,
    gaussian_binomial,
    ground_mask,
    is_flat,
    is_independent,
    mask_of,
    xor_translate,
)


def test_closure_examples():
    F = closure([3, 5], 3)
    assert F.points() == [3, 5, 6] and F.dim == 2
    assert closure([], 3).dim == 0
    assert closure([1, 2, 4, 8], 4).members == ground_mask(4)


def test_closure_rejects_out_of_range():
    with pytest.raises(ValueError):
        closure([8], 3)
    with pytest.raises(ValueError):
        closure([0], 3)


def test_dimension_cap():
    with pytest.raises(ValueError):
        check_dim(17)
    with pytest.raises(ValueError):
        check_dim(-1)
    assert check_dim(16) == 16


def test_is_flat_examples():
    assert is_flat(mask_of([1, 2, 3]), 3)
    assert not is_flat(mask_of([1, 2]), 3)
    assert is_flat(0, 3)


def test_is_flat_agrees_with_pairwise_oracle():
    # a nonempty S is a flat iff x^y lands in S for all distinct x, y
    for n in (2, 3):
        for code in range(1 << ((1 << n) - 1)):
            mask = code << 1
            pts = bits_list(mask)
            oracle = all(
                (mask >> (x ^ y)) & 1 for x in pts for y in pts if x != y
            )
            assert is_flat(mask, n) == oracle, (n, pts)


def test_cosets_examples():
    assert cosets(closure([1], 2)) == [mask_of([2, 3])]
    blocks = cosets(closure([3], 3))
    assert [bits_list(b) for b in blocks] == [[1, 2], [4, 7], [5, 6]]
    singles = cosets(empty_flat(3))
    assert [bits_list(b) for b in singles] == [[v] for v in range(1, 8)]


def test_cosets_reject_full_flat():
    with pytest.raises(ValueError):
        cosets(full_flat(3))


def test_cosets_partition_everything():
    for n in (2, 3, 4):
        for d in range(n):
            for F in flats_of_dim(n, d):
                blocks = cosets(F)
                assert len(blocks) == (1 << (n - d)) - 1
                union = F.members
                for b in blocks:
                    assert b.bit_count() == 1 << d
                    assert union & b == 0
                    union |= b
                assert union == ground_mask(n)


def test_complementary_flat_examples():
    J = complementary_flat(closure([3], 3))
    assert J.points() == [1, 4, 5]
    assert complementary_flat(full_flat(2)).dim == 0
    assert complementary_flat(empty_flat(4)).members == ground_mask(4)


def test_complementary_flat_disjoint_dims_sum():
    for n in (2, 3, 4):
        for d in range(n + 1):
            for F in flats_of_dim(n, d):
                J = complementary_flat(F)
                assert J.dim == n - d
                assert J.members & F.members == 0


def test_flats_of_dim_counts():
    assert sum(1 for _ in flats_of_dim(3, 2)) == 7
    assert sum(1 for _ in flats_of_dim(3, 1)) == 7
    assert sum(1 for _ in flats_of_dim(4, 2)) == 35
    for n in range(6):
        for d in range(n + 1):
            got = sum(1 for _ in flats_of_dim(n, d))
            assert got == gaussian_binomial(n, d), (n, d)


def test_flats_of_dim_distinct():
    seen = set()
    for F in flats_of_dim(4, 2):
        assert F.members not in seen
        seen.add(F.members)
        assert is_flat(F.members, 4)


def test_is_independent():
    assert is_independent([1, 2, 4])
    assert not is_independent([1, 2, 3])
    assert is_independent([])
    assert not is_independent([5, 5])


def test_coordinate_map_examples():
    F = closure([1, 4], 3)
    to_local, from_local = coordinate_map(F)
    assert to_local(1) == 1 and to_local(4) == 2 and to_local(5) == 3
    assert from_local(3) == 5
    assert closure([3], 3).to_local(3) == 1
    G = full_flat(3)
    assert all(G.to_local(v) == v for v in range(8))


def test_coordinate_map_rejects_outsiders():
    F = closure([3], 3)
    with pytest.raises(ValueError):
        F.to_local(1)


def test_coordinate_map_roundtrip():
    for F in flats_of_dim(4, 2):
        for v in F.points():
            assert F.from_local(F.to_local(v)) == v


def test_xor_translate_is_involution_and_correct():
    mask = mask_of([1, 4, 6])
    shifted = xor_translate(mask, 3, 3)
    assert bits_list(shifted) == sorted(v ^ 3 for v in [1, 4, 6])
    assert xor_translate(shifted, 3, 3) == mask


subsets3 = st.integers(min_value=0, max_value=(1 << 7) - 1)


@settings(max_examples=100)
@given(subsets3)
def test_closure_idempotent(code):
    F = closure_mask(code << 1, 3)
    again = closure_mask(F.members, 3)
    assert again == F


@settings(max_examples=100)
@given(subsets3, subsets3)
def test_closure_monotone(a, b):
    F = closure_mask((a | b) << 1, 3)
    assert closure_mask(a << 1, 3).members & ~F.members == 0


def test_empty_flat_is_first_class():
    e = empty_flat(5)
    assert e.dim == 0 and e.members == 0 and e.basis == ()
    assert closure([], 5) == e
