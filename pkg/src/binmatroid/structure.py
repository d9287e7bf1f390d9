"""Decomposer discovery, recursive lift-join decomposition, reconstruction.

A decomposer is a nonempty proper flat F with no mixed cosets: every
translate of F either lies inside the ground set or avoids it.  Having
one is equivalent to the matroid splitting as a lift-join of its
restrictions to F and to any maximal flat disjoint from F.

Decomposers are found per anchor point by a fixpoint closure, not by
flat enumeration: the minimal decomposer through a is the closure of a
under "collect every point whose pair under some member of the flat is
mixed".  The fixpoint is monotone, so it underlies every decomposer
containing the anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .construct import lift_join
from .gf2 import (
    Flat,
    closure_mask,
    complementary_flat,
    cosets,
    ground_mask,
    iter_bits,
    xor_translate,
)
from .matroid import BinaryMatroid, linear_map_table, rank_mask, restrict
from .recognize import ClassFlags, classify


class StructureTheoremViolation(RuntimeError):
    """A claw-free leaf fell outside every basic class (never expected)."""


def defect_set(M: BinaryMatroid, a: int) -> int:
    """Points x (other than a) for which exactly one of x, x+a is in E.

    Symmetric under translation by a; empty exactly when {a} is a
    one-point decomposer.
    """
    if not 1 <= a < (1 << M.n):
        raise ValueError(f"anchor {a} out of range")
    E = M.mask
    return (E ^ xor_translate(E, a, M.n)) & ~1 & ~(1 << a)


def minimal_decomposer_containing(M: BinaryMatroid, a: int) -> Optional[Flat]:
    """Fixpoint flat through a, or None if the closure blows up to G.

    Start from cl({a}) and repeatedly absorb the defect sets of all
    members; a stable proper flat has no mixed cosets, and any decomposer
    containing a contains the fixpoint.
    """
    if not 1 <= a < (1 << M.n):
        raise ValueError(f"anchor {a} out of range")
    span = _fixpoint_span(M.mask, M.n, a)
    if span is None:
        return None
    return closure_mask(span & ~1, M.n)


def find_decomposer(M: BinaryMatroid) -> Optional[Flat]:
    """Minimum-dimension decomposer, ties broken by lexicographic basis.

    None iff no proper nonempty flat decomposes M (equivalently, M is
    not a lift-join of smaller matroids).
    """
    best: Optional[Flat] = None
    for a in range(1, 1 << M.n):
        F = minimal_decomposer_containing(M, a)
        if F is None:
            continue
        if best is None or (F.dim, F.basis) < (best.dim, best.basis):
            best = F
            if best.dim == 1:
                break  # later anchors cannot beat a first singleton
    return best


def _fixpoint_span(E: int, n: int, a: int) -> Optional[int]:
    """Span mask of the anchor fixpoint, or None when it blows up to G."""
    full_span = ground_mask(n) | 1
    span = 1 | (1 << a)
    processed = 1
    while span != full_span:
        fresh = span & ~processed
        if not fresh:
            return span
        processed = span
        need = 0
        for b in iter_bits(fresh):
            need |= (E ^ xor_translate(E, b, n)) & ~1 & ~(1 << b)
        for p in iter_bits(need & ~span):
            if not (span >> p) & 1:
                span |= xor_translate(span, p, n)
                if span == full_span:
                    return None
    return None


def has_decomposer_mask(mask: int, n: int) -> bool:
    """Existence-only decomposer check with early exits."""
    if n <= 1:
        return False
    if rank_mask(mask, n) < n:
        return True  # any hyperplane over the closure of E decomposes
    for a in range(1, 1 << n):
        if _fixpoint_span(mask, n, a) is not None:
            return True
    return False


def has_decomposer(M: BinaryMatroid) -> bool:
    """Existence-only variant of find_decomposer."""
    return has_decomposer_mask(M.mask, M.n)


def is_decomposer(M: BinaryMatroid, F: Flat) -> bool:
    """Direct check: every coset of F is contained in or disjoint from E."""
    if F.n != M.n:
        raise ValueError("flat lives in a different ambient space")
    if F.dim == 0 or F.dim == M.n:
        raise ValueError("a decomposer must be a nonempty proper flat")
    E = M.mask
    for c in cosets(F):
        inside = E & c
        if inside and inside != c:
            return False
    return True


# ---------------------------------------------------------------------------
# Decomposition trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    matroid: BinaryMatroid
    tags: ClassFlags


@dataclass(frozen=True)
class Join:
    left: "DecompositionNode"
    right: "DecompositionNode"
    flat: Flat  # the decomposer, in the parent's coordinates
    cofactor: Flat  # the complementary flat used for the right factor


DecompositionNode = Union[Leaf, Join]


def _leaf(M: BinaryMatroid) -> Leaf:
    tags = classify(M)
    if (
        M.n > 1
        and tags.claw_free
        and not (tags.even_plane or tags.complement_triangle_free or tags.strict_pg_sum)
    ):
        raise StructureTheoremViolation(
            f"claw-free matroid (n={M.n}, points={M.points()}) has no decomposer "
            "and is outside every basic class"
        )
    return Leaf(M, tags)


def decompose(M: BinaryMatroid, stop_at_basic: bool = False) -> DecompositionNode:
    """Recursive lift-join factorisation.

    By default leaves are matroids with no decomposer (maximal
    factorisation); with stop_at_basic the recursion also stops when a
    factor lands in a basic class (even-plane, complement triangle-free,
    or strict PG-sum).
    """
    if stop_at_basic:
        tags = classify(M)
        if tags.even_plane or tags.complement_triangle_free or tags.strict_pg_sum:
            return Leaf(M, tags)
    F = find_decomposer(M)
    if F is None:
        return _leaf(M)
    J = complementary_flat(F)
    return Join(
        left=decompose(restrict(M, F), stop_at_basic),
        right=decompose(restrict(M, J), stop_at_basic),
        flat=F,
        cofactor=J,
    )


def reconstruct(node: DecompositionNode) -> BinaryMatroid:
    """Fold the tree back through lift-joins."""
    if isinstance(node, Leaf):
        return node.matroid
    return lift_join(reconstruct(node.left), reconstruct(node.right))


def tree_dim(node: DecompositionNode) -> int:
    if isinstance(node, Leaf):
        return node.matroid.n
    return tree_dim(node.left) + tree_dim(node.right)


def tree_point_map(node: DecompositionNode) -> list[int]:
    """Point table of the coordinate change recorded by the decomposition.

    Applying the returned table to the source matroid's points yields
    reconstruct(node) exactly, which exhibits the isomorphism between a
    matroid and the fold of its decomposition.
    """
    if isinstance(node, Leaf):
        return list(range(1 << node.matroid.n))
    lt = tree_point_map(node.left)
    rt = tree_point_map(node.right)
    dF = node.flat.dim
    n = node.flat.n
    rows = list(node.flat.basis) + list(node.cofactor.basis)
    fwd = linear_map_table(rows, n)
    table = [0] * (1 << n)
    low = (1 << dF) - 1
    for y in range(1 << n):
        table[fwd[y]] = lt[y & low] | (rt[y >> dF] << dF)
    return table


def leaves(node: DecompositionNode) -> list[Leaf]:
    if isinstance(node, Leaf):
        return [node]
    return leaves(node.left) + leaves(node.right)


# ---------------------------------------------------------------------------
# Structure-theorem report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureReport:
    """Which of the four structure outcomes hold for a claw-free matroid."""

    even_plane: bool
    complement_triangle_free: bool
    strict_pg_sum: bool
    decomposer: Optional[Flat]

    @property
    def ok(self) -> bool:
        return (
            self.even_plane
            or self.complement_triangle_free
            or self.strict_pg_sum
            or self.decomposer is not None
        )


def verify_structure_theorem(M: BinaryMatroid) -> StructureReport:
    """Evaluate all four outcomes for a claw-free matroid."""
    from .matroid import find_claw
    from .recognize import (
        is_complement_triangle_free,
        is_even_plane,
        is_strict_pg_sum,
    )

    if find_claw(M) is not None:
        raise ValueError("matroid has a claw; the structure outcomes do not apply")
    return StructureReport(
        even_plane=is_even_plane(M),
        complement_triangle_free=is_complement_triangle_free(M),
        strict_pg_sum=is_strict_pg_sum(M),
        decomposer=find_decomposer(M),
    )


# ---------------------------------------------------------------------------
# Coset confinement under restricted triangles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PartitionInstance:
    """A partition (P, Q, R) of the points, with an optional split of R."""

    n: int
    p_mask: int
    q_mask: int
    r_mask: int
    r1_mask: Optional[int] = None
    r2_mask: Optional[int] = None

    def __post_init__(self):
        g = ground_mask(self.n)
        if self.p_mask | self.q_mask | self.r_mask != g:
            raise ValueError("P, Q, R must cover all points")
        if (
            self.p_mask & self.q_mask
            or self.p_mask & self.r_mask
            or self.q_mask & self.r_mask
        ):
            raise ValueError("P, Q, R must be pairwise disjoint")
        if (self.r1_mask is None) != (self.r2_mask is None):
            raise ValueError("supply both halves of the refinement or neither")
        if self.r1_mask is not None:
            if self.r1_mask & self.r2_mask or self.r1_mask | self.r2_mask != self.r_mask:
                raise ValueError("R1, R2 must partition R")


@dataclass(frozen=True)
class CosetReport:
    hypothesis_met: bool
    closure_inside_pq: Optional[bool] = None
    cosets_confined: Optional[bool] = None
    refinement_hypothesis_met: Optional[bool] = None
    refinement_confined: Optional[bool] = None

    @property
    def ok(self) -> bool:
        """True unless a met hypothesis failed to deliver its conclusion."""
        if not self.hypothesis_met:
            return True
        if not (self.closure_inside_pq and self.cosets_confined):
            return False
        if self.refinement_hypothesis_met and not self.refinement_confined:
            return False
        return True


def check_coset_confinement(inst: PartitionInstance) -> CosetReport:
    """Verify: if no triangle meets P and meets R exactly once, then cl(P)
    stays inside P ∪ Q and every coset of cl(P) lies within Q or within R
    (within Q, R1 or R2 under the refinement hypothesis)."""
    from .tables import triangles

    n = inst.n
    p, q, r = inst.p_mask, inst.q_mask, inst.r_mask
    hypothesis = True
    for x, y, z in triangles(n):
        in_p = ((p >> x) & 1) + ((p >> y) & 1) + ((p >> z) & 1)
        if not in_p:
            continue
        in_r = ((r >> x) & 1) + ((r >> y) & 1) + ((r >> z) & 1)
        if in_r == 1:
            hypothesis = False
            break
    refinement_hyp: Optional[bool] = None
    if inst.r1_mask is not None:
        refinement_hyp = True
        r1, r2 = inst.r1_mask, inst.r2_mask
        for x, y, z in triangles(n):
            t = (1 << x) | (1 << y) | (1 << z)
            if t & p and t & r1 and t & r2:
                refinement_hyp = False
                break
    if not hypothesis:
        return CosetReport(hypothesis_met=False, refinement_hypothesis_met=refinement_hyp)

    F = closure_mask(p, n)
    closure_ok = F.members & ~(p | q) == 0
    confined = True
    refinement_confined: Optional[bool] = True if refinement_hyp else None
    if F.dim < n:
        for c in cosets(F):
            if not (c & ~q == 0 or c & ~r == 0):
                confined = False
                break
        if refinement_hyp:
            for c in cosets(F):
                if not (
                    c & ~q == 0
                    or c & ~inst.r1_mask == 0
                    or c & ~inst.r2_mask == 0
                ):
                    refinement_confined = False
                    break
    return CosetReport(
        hypothesis_met=True,
        closure_inside_pq=closure_ok,
        cosets_confined=confined,
        refinement_hypothesis_met=refinement_hyp,
        refinement_confined=refinement_confined,
    )


# ---------------------------------------------------------------------------
# Small exhaustive claims
# ---------------------------------------------------------------------------


def has_singleton_decomposer(M: BinaryMatroid) -> Optional[int]:
    """The least a with a+E = E or a+(E∪{0}) = E∪{0}, or None.

    These are exactly the one-element decomposers: the first condition
    has a outside E, the second has a inside.
    """
    E, n = M.mask, M.n
    if n <= 1:
        return None
    with_zero = E | 1
    for a in range(1, 1 << n):
        if xor_translate(E, a, n) == E or xor_translate(with_zero, a, n) == with_zero:
            return a
    return None


def check_dim3_odd_singleton_decomposers() -> dict:
    """Every 3-dimensional odd-sized claw-free matroid has a one-element
    decomposer; exhaustive over all 128 ground sets."""
    from .matroid import find_claw

    checked = 0
    failures = []
    for code in range(1 << 7):
        M = BinaryMatroid(3, code << 1)
        if M.size % 2 == 0 or find_claw(M) is not None:
            continue
        checked += 1
        ok = any(
            is_decomposer(M, closure_mask(1 << a, 3)) for a in range(1, 8)
        )
        if not ok:
            failures.append(M.points())
    return {"checked": checked, "failures": failures, "passed": not failures}
