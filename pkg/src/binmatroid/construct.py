"""Builders: lift-joins, doublings, PG-sums, Bose-Burton geometries, targets.

All builders follow one embedding convention: the left factor (or the
distinguished flat) occupies the low coordinate bits, and any new
coordinate is the highest bit.  This makes algebraic identities such as
associativity of the lift-join hold bit for bit, not just up to
isomorphism.
"""

from __future__ import annotations

from .gf2 import MAX_DIM, Flat, check_dim, empty_flat, ground_mask, iter_bits
from .matroid import BinaryMatroid


def lift_join(M1: BinaryMatroid, M2: BinaryMatroid) -> BinaryMatroid:
    """Lift-join: E1 together with a full low-coordinate slab over each
    point of E2.  Noncommutative but associative under the embedding."""
    n1, n2 = M1.n, M2.n
    if n1 + n2 > MAX_DIM:
        raise ValueError(f"lift-join dimension {n1 + n2} exceeds {MAX_DIM}")
    slab = (1 << (1 << n1)) - 1
    E = M1.mask
    for e2 in iter_bits(M2.mask):
        E |= slab << (e2 << n1)
    return BinaryMatroid(n1 + n2, E)


def partial_lift_join(
    M1: BinaryMatroid, F1: Flat, M2: BinaryMatroid, F2: Flat
) -> BinaryMatroid:
    """Common generalisation of direct sum and lift-join.

    Ground set: E1, E2, and the translates of E2 ∩ F2 by the points of
    F1.  Degenerates to the direct sum when either flat is empty and to
    the lift-join when both flats are the whole factor spaces.
    """
    n1, n2 = M1.n, M2.n
    if F1.n != n1 or F2.n != n2:
        raise ValueError("flats must live in the factors' ambient spaces")
    if n1 + n2 > MAX_DIM:
        raise ValueError(f"partial lift-join dimension {n1 + n2} exceeds {MAX_DIM}")
    E = M1.mask
    lifted = M2.mask & F2.members
    for e2 in iter_bits(M2.mask):
        base = e2 << n1
        E |= 1 << base
        if (lifted >> e2) & 1:
            E |= F1.members << base
    return BinaryMatroid(n1 + n2, E)


def direct_sum(M1: BinaryMatroid, M2: BinaryMatroid) -> BinaryMatroid:
    """Disjoint union of the two ground sets in the sum of the spaces."""
    return partial_lift_join(M1, empty_flat(M1.n), M2, empty_flat(M2.n))


def doubling(M: BinaryMatroid) -> BinaryMatroid:
    """One-dimension extension E ∪ (a + E) with a the new top coordinate."""
    n = M.n
    if n + 1 > MAX_DIM:
        raise ValueError(f"doubling dimension {n + 1} exceeds {MAX_DIM}")
    return BinaryMatroid(n + 1, M.mask | (M.mask << (1 << n)))


def semidoubling(M: BinaryMatroid, hyperplane: Flat) -> BinaryMatroid:
    """One-dimension extension E ∪ (a + ((G \\ E) Δ H')) for a hyperplane H'.

    Equivalently: a + x lands in the new ground set iff x is an element
    of E inside H', or a non-element outside H'.
    """
    n = M.n
    if hyperplane.n != n or hyperplane.dim != n - 1:
        raise ValueError("semidoubling requires a hyperplane of the ambient space")
    if n + 1 > MAX_DIM:
        raise ValueError(f"semidoubling dimension {n + 1} exceeds {MAX_DIM}")
    layer = (ground_mask(n) & ~M.mask) ^ hyperplane.members
    return BinaryMatroid(n + 1, M.mask | (layer << (1 << n)))


def pg_sum(d1: int, d2: int) -> BinaryMatroid:
    """Disjoint union of a low-bits flat of dim d1 and a high-bits flat of dim d2."""
    check_dim(d1)
    check_dim(d2)
    n = d1 + d2
    check_dim(n)
    E = (1 << (1 << d1)) - 2
    for v in range(1, 1 << d2):
        E |= 1 << (v << d1)
    return BinaryMatroid(n, E)


def bose_burton(n: int, t: int) -> BinaryMatroid:
    """Order-t Bose-Burton geometry: everything outside a flat of dim n - t."""
    n = check_dim(n)
    if not 0 <= t <= n:
        raise ValueError(f"order must be in [0, {n}], got {t}")
    hole = (1 << (1 << (n - t))) - 2
    return BinaryMatroid(n, ground_mask(n) & ~hole)


def target(n: int, chain_dims: list[int]) -> BinaryMatroid:
    """Union of alternating layers of a nested chain of low-bits flats.

    `chain_dims` are the dimensions of the chain; the ground set is the
    union of the layers between consecutive flats at even positions.
    """
    n = check_dim(n)
    prev = -1
    for d in chain_dims:
        if not 0 <= d <= n:
            raise ValueError(f"chain dimension {d} out of range")
        if d < prev:
            raise ValueError("chain dimensions must be non-decreasing")
        prev = d
    E = 0
    for i in range(0, len(chain_dims) - 1, 2):
        lower = (1 << (1 << chain_dims[i])) - 2
        upper = (1 << (1 << chain_dims[i + 1])) - 2
        E |= upper & ~lower
    return BinaryMatroid(n, E)


# ---------------------------------------------------------------------------
# Named small matroids
# ---------------------------------------------------------------------------


def independent_matroid(t: int) -> BinaryMatroid:
    """The standard basis points in dimension t (a claw when t = 3)."""
    check_dim(t)
    E = 0
    for i in range(t):
        E |= 1 << (1 << i)
    return BinaryMatroid(t, E)


def triangle_matroid() -> BinaryMatroid:
    """The full two-dimensional geometry."""
    return BinaryMatroid(2, 0b1110)


def c4() -> BinaryMatroid:
    """Four points of PG(2,2) summing to zero."""
    return BinaryMatroid.from_points([1, 2, 4, 7], 3)


def p5() -> BinaryMatroid:
    """The unique three-dimensional matroid on five elements."""
    return BinaryMatroid.from_points([1, 2, 3, 4, 5], 3)


def k4() -> BinaryMatroid:
    """The unique three-dimensional matroid on six elements."""
    return BinaryMatroid.from_points([1, 2, 3, 4, 5, 6], 3)


def empty_matroid(n: int) -> BinaryMatroid:
    return BinaryMatroid(check_dim(n), 0)


def full_matroid(n: int) -> BinaryMatroid:
    return BinaryMatroid(check_dim(n), ground_mask(check_dim(n)))
