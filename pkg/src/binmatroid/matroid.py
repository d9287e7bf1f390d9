"""Simple binary matroids: restrictions, invariants, and isomorphism.

A matroid here is a pair (E, G) with G = PG(n-1,2) and E a set of points
of G, stored as a bitset.  The ambient space is part of the identity: E
need not span G.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from .gf2 import (
    Flat,
    bits_list,
    check_dim,
    flats_of_dim,
    ground_mask,
    iter_bits,
    xor_translate,
    _half_masks,
)

#: canonical_form is exact only up to this dimension (cost safeguard).
MAX_CANONICAL_DIM = 6


class BudgetExceeded(RuntimeError):
    """Raised when a search exceeds its cooperative node budget."""


@dataclass(frozen=True)
class BinaryMatroid:
    """Ground set bitset over F_2^n; bit 0 is always clear."""

    n: int
    mask: int

    def __post_init__(self):
        check_dim(self.n)
        if self.mask & 1:
            raise ValueError("ground set cannot contain the zero vector")
        if self.mask >> (1 << self.n):
            raise ValueError(f"ground set out of range for dimension {self.n}")

    @classmethod
    def from_points(cls, points: Iterable[int], n: int) -> "BinaryMatroid":
        m = 0
        for p in points:
            m |= 1 << p
        return cls(n, m)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def points(self) -> list[int]:
        return bits_list(self.mask)

    def __contains__(self, v: int) -> bool:
        return v >= 1 and (self.mask >> v) & 1 == 1


@dataclass(frozen=True)
class InvariantRecord:
    """Report row of the basic invariants (keys are the wire names)."""

    omega: int
    chi: int
    alpha: int
    sigma: int
    full_rank: bool


def restrict(M: BinaryMatroid, flat: Flat) -> BinaryMatroid:
    """Induced restriction M|F, re-embedded into dimension dim F.

    The re-embedding uses the flat's canonical coordinate map, so equal
    inputs give bit-identical outputs.
    """
    sub = M.mask & flat.members
    local = 0
    for v in iter_bits(sub):
        local |= 1 << flat.to_local(v)
    return BinaryMatroid(flat.dim, local)


def complement(M: BinaryMatroid) -> BinaryMatroid:
    """The matroid on G \\ E; an involution."""
    return BinaryMatroid(M.n, ground_mask(M.n) & ~M.mask)


def rank_mask(mask: int, n: int) -> int:
    """Rank of a point bitset, with an early exit at full rank."""
    span = 1
    dim = 0
    full = (ground_mask(n) | 1)
    for p in iter_bits(mask):
        if not (span >> p) & 1:
            span |= xor_translate(span, p, n)
            dim += 1
            if span == full:
                break
    return dim


def rank(M: BinaryMatroid) -> int:
    """Dimension of the closure of the ground set."""
    return rank_mask(M.mask, M.n)


def is_full_rank(M: BinaryMatroid) -> bool:
    """Whether the ground set spans the ambient space."""
    return rank_mask(M.mask, M.n) == M.n


def find_claw(M: BinaryMatroid) -> Optional[tuple[int, int, int]]:
    """First independent triple x,y,z in E whose pairwise and triple sums
    all avoid E, in lexicographic order; None if the matroid is claw-free.

    For each pair x < y with x+y outside E, the valid third points are a
    single mask expression, so pairs whose sum lands in E cost one test.
    """
    E, n = M.mask, M.n
    pts = bits_list(E)
    for i, x in enumerate(pts):
        ex = xor_translate(E, x, n)
        for j in range(i + 1, len(pts)):
            y = pts[j]
            s = x ^ y
            if (E >> s) & 1:
                continue
            zs = (
                E
                & ~ex
                & ~xor_translate(E, y, n)
                & ~xor_translate(E, s, n)
                & ~((1 << (y + 1)) - 1)
            )
            if zs:
                return (x, y, (zs & -zs).bit_length() - 1)
    return None


def find_anticlaw(M: BinaryMatroid) -> Optional[Flat]:
    """First plane whose restriction is the complement of a claw, or None.

    Such a plane P has |E ∩ P| = 4 with the three missing points
    independent (not a triangle).
    """
    if M.n < 3:
        return None
    E = M.mask
    for P in flats_of_dim(M.n, 3):
        inside = E & P.members
        if inside.bit_count() != 4:
            continue
        out = P.members & ~E
        acc = 0
        for v in iter_bits(out):
            acc ^= v
        if acc != 0:
            return P
    return None


def clique_number(M: BinaryMatroid, budget: Optional[int] = None) -> int:
    """Dimension of the largest flat contained in the ground set.

    Depth-first search over greedy-minimal generator sequences.  Each
    node keeps a validity bitset V (points whose whole coset over the
    current span lies in E) so that child candidate sets are a few mask
    operations; a capacity bound prunes branches that cannot beat the
    best dimension found.
    """
    E, n = M.mask, M.n
    if E == 0:
        return 0
    if E == ground_mask(n):
        return n
    halves = _half_masks(n)
    best = 1
    nodes = 0

    def dfs(V: int, C: int, dim: int, pivots: dict[int, int]) -> None:
        nonlocal best, nodes
        if dim > best:
            best = dim
        pop = V.bit_count()
        if dim + ((pop >> dim) + 1).bit_length() - 1 <= best:
            return
        for p in iter_bits(C):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"clique_number budget {budget} exceeded")
            r = p
            while True:
                h = r.bit_length() - 1
                row = pivots.get(h)
                if row is None:
                    break
                r ^= row
            shifted = xor_translate(V, p, n)
            Vc = V & shifted
            Cc = C & shifted & halves[h] & ~((1 << (p + 1)) - 1)
            child_piv = dict(pivots)
            child_piv[h] = r
            dfs(Vc, Cc, dim + 1, child_piv)

    dfs(E, E, 0, {})
    return best


def critical_number(M: BinaryMatroid, budget: Optional[int] = None) -> int:
    """n minus the clique number of the complement."""
    return M.n - clique_number(complement(M), budget=budget)


def independence_number(M: BinaryMatroid, budget: Optional[int] = None) -> int:
    """Clique number of the complement (largest empty restriction)."""
    return clique_number(complement(M), budget=budget)


def induced_independence_number(M: BinaryMatroid, budget: Optional[int] = None) -> int:
    """Largest size of an independent J ⊆ E whose closure meets E only in J.

    Branch and bound over ascending point insertions; two bitsets are
    propagated per node: Z (points whose whole coset avoids E) and the
    candidate set.
    """
    E, n = M.mask, M.n
    if E == 0:
        return 0
    best = 0
    nodes = 0

    def dfs(Z: int, C: int, size: int) -> None:
        nonlocal best, nodes
        if size > best:
            best = size
        if size + C.bit_count() <= best:
            return
        for p in iter_bits(C):
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(
                    f"induced_independence_number budget {budget} exceeded"
                )
            shifted = xor_translate(Z, p, n)
            dfs(Z & shifted, C & shifted & ~((1 << (p + 1)) - 1), size + 1)

    dfs(~E & ((1 << (1 << n)) - 1), E, 0)
    return best


def invariants(M: BinaryMatroid) -> InvariantRecord:
    """All basic invariants in one record."""
    omega = clique_number(M)
    alpha = clique_number(complement(M))
    return InvariantRecord(
        omega=omega,
        chi=M.n - alpha,
        alpha=alpha,
        sigma=induced_independence_number(M),
        full_rank=is_full_rank(M),
    )


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism
# ---------------------------------------------------------------------------
#
# Isomorphisms of PG(n-1,2) are exactly the invertible linear maps of
# F_2^n, so two matroids are isomorphic iff their ground sets lie in the
# same GL(n,2) orbit.  The canonical form of M is the orbit element whose
# membership sequence over point values 1, 2, ..., 2^n - 1 is
# lexicographically least (prefer absences at small values).
#
# The search walks preimages w_1, ..., w_n of the standard basis.  After
# choosing w_1..w_k the image's membership is determined on local values
# 1 .. 2^k - 1, so the sequence is decided in contiguous segments and the
# usual prefix pruning applies.  Ties (automorphisms) are explored, which
# is fine at the supported dimensions for all but the most symmetric
# ground sets; `budget` offers a cooperative cap for those.


def seq_key(mask: int, n: int) -> tuple[int, ...]:
    """Membership sequence of a bitset over point values 1..2^n-1."""
    return tuple((mask >> v) & 1 for v in range(1, 1 << n))


def linear_map_table(images: list[int], n: int) -> list[int]:
    """Point-image table of the linear map sending basis vector i to images[i]."""
    size = 1 << n
    table = [0] * size
    for i in range(n):
        step = 1 << i
        img = images[i]
        for v in range(step, step << 1):
            table[v] = table[v - step] ^ img
    return table


def apply_linear_map(M: BinaryMatroid, images: list[int]) -> BinaryMatroid:
    """Image of the ground set under the linear map given by basis images."""
    table = linear_map_table(images, M.n)
    out = 0
    for v in iter_bits(M.mask):
        out |= 1 << table[v]
    return BinaryMatroid(M.n, out)


@lru_cache(maxsize=None)
def _canonical_mask(n: int, E: int, budget: Optional[int]) -> int:
    import numpy as np

    if n == 0 or E == 0 or E == ground_mask(n):
        return E
    npoints = 1 << n
    e_bits = np.zeros(npoints, dtype=np.int64)
    for v in iter_bits(E):
        e_bits[v] = 1
    weights = {
        1 << k: np.array([1 << ((1 << k) - 1 - j) for j in range(1 << k)], dtype=np.int64)
        for k in range(n)
    }
    best: list[Optional[int]] = [None] * n
    best_pre: list[Optional[list[int]]] = [None]
    auts: list[list[int]] = []  # point tables of discovered automorphisms
    nodes = 0

    def usable_auts(prefix: list[int]) -> list[list[int]]:
        return [t for t in auts if all(t[w] == w for w in prefix)]

    def rec(k: int, span: int, pre: list[int], prefix: list[int]) -> None:
        nonlocal nodes
        L = 1 << (k - 1)  # segment length at this level
        ws = np.array(
            [w for w in range(1, npoints) if not (span >> w) & 1], dtype=np.int64
        )
        bits = e_bits[np.bitwise_xor.outer(ws, np.array(pre, dtype=np.int64))]
        keys = bits @ weights[L]
        order = np.argsort(keys, kind="stable")
        stab = usable_auts(prefix)
        skip = 0  # points equivalent to an already-explored sibling
        for idx in order:
            key = int(keys[idx])
            w = int(ws[idx])
            slot = best[k - 1]
            if slot is not None and key > slot:
                break
            if (skip >> w) & 1:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(f"canonical_form budget {budget} exceeded")
            improved = slot is None or key < slot
            if improved:
                best[k - 1] = key
                for t in range(k, n):
                    best[t] = None
            full_pre = pre + [w ^ u for u in pre]
            if k == n:
                if improved:
                    best_pre[0] = full_pre
                elif best_pre[0] is not None:
                    # a tie exhibits an automorphism of the ground set
                    ref = best_pre[0]
                    inv = [0] * npoints
                    for j, v in enumerate(ref):
                        inv[v] = j
                    auts.append([full_pre[inv[v]] for v in range(npoints)])
            else:
                rec(k + 1, span | xor_translate(span, w, n), full_pre, prefix + [w])
            if stab:
                orbit = {w}
                frontier = [w]
                while frontier:
                    u = frontier.pop()
                    for t in stab:
                        v = t[u]
                        if v not in orbit:
                            orbit.add(v)
                            frontier.append(v)
                for u in orbit:
                    skip |= 1 << u
            stab = usable_auts(prefix)  # ties may have grown the group

    rec(1, 1, [0], [])

    img = 0
    for k in range(1, n + 1):
        L = 1 << (k - 1)
        key = best[k - 1]
        assert key is not None
        for j in range(L):
            if (key >> (L - 1 - j)) & 1:
                img |= 1 << (L + j)
    return img


def canonical_form(M: BinaryMatroid, budget: Optional[int] = None) -> BinaryMatroid:
    """Canonical orbit representative; exact mode is capped at dimension 6."""
    if M.n > MAX_CANONICAL_DIM:
        raise ValueError(
            f"canonical_form is exact only up to dimension {MAX_CANONICAL_DIM}"
        )
    return BinaryMatroid(M.n, _canonical_mask(M.n, M.mask, budget))


def is_isomorphic(M1: BinaryMatroid, M2: BinaryMatroid) -> bool:
    """Orbit equality via canonical forms."""
    if M1.n != M2.n:
        raise ValueError(f"dimension mismatch: {M1.n} != {M2.n}")
    if M1.mask == M2.mask:
        return True
    if M1.size != M2.size:
        return False
    return canonical_form(M1).mask == canonical_form(M2).mask


def has_induced_restriction(M: BinaryMatroid, N: BinaryMatroid) -> bool:
    """Whether some flat F with dim F = dim N has M|F isomorphic to N."""
    if N.n > M.n:
        raise ValueError("the candidate restriction exceeds the host dimension")
    key = canonical_form(N).mask
    want = N.size
    for F in flats_of_dim(M.n, N.n):
        if (M.mask & F.members).bit_count() != want:
            continue
        if canonical_form(restrict(M, F)).mask == key:
            return True
    return False
