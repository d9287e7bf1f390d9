"""Basic-class predicates and the bounding-formula evaluator.

The PG-sum recognizer runs two independent routes: a direct witness
search (authoritative, returns the two flats) and a forbidden-restriction
scan over planes.  The test suite cross-checks them exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .gf2 import (
    Flat,
    closure_mask,
    flats_of_dim,
    ground_mask,
    is_flat,
    iter_bits,
    xor_translate,
)
from .matroid import BinaryMatroid, rank_mask
from . import tables


@dataclass(frozen=True)
class ClassFlags:
    """Per-matroid class membership record (wire keys for reports)."""

    claw_free: bool
    anticlaw_free: bool
    triangle_free: bool
    complement_triangle_free: bool
    even_plane: bool
    pg_sum: bool
    strict_pg_sum: bool
    bose_burton_order: Optional[int]
    target: bool


def triangle_free_mask(mask: int, n: int) -> bool:
    for x in iter_bits(mask):
        if mask & xor_translate(mask, x, n):
            return False
    return True


def is_triangle_free(M: BinaryMatroid) -> bool:
    """No two ground-set points sum to a third."""
    return triangle_free_mask(M.mask, M.n)


def is_complement_triangle_free(M: BinaryMatroid) -> bool:
    return triangle_free_mask(ground_mask(M.n) & ~M.mask, M.n)


def claw_free_any(mask: int, n: int) -> bool:
    """Claw-freeness at any dimension: plane tables for n <= 6, a pair
    mask-scan beyond (pairs whose sum stays in E cost one test)."""
    if n <= tables.PLANE_TABLE_MAX:
        return tables.claw_free_mask(mask, n)
    pts = list(iter_bits(mask))
    for i, x in enumerate(pts):
        ex = xor_translate(mask, x, n)
        for j in range(i + 1, len(pts)):
            y = pts[j]
            s = x ^ y
            if (mask >> s) & 1:
                continue
            if (
                mask
                & ~ex
                & ~xor_translate(mask, y, n)
                & ~xor_translate(mask, s, n)
                & ~((1 << (y + 1)) - 1)
            ):
                return False
    return True


def is_claw_free(M: BinaryMatroid) -> bool:
    """Fast plane-pattern route for small n; see matroid.find_claw for witnesses."""
    return claw_free_any(M.mask, M.n)


def is_anticlaw_free(M: BinaryMatroid) -> bool:
    if M.n <= tables.PLANE_TABLE_MAX:
        return tables.anticlaw_free_mask(M.mask, M.n)
    from .matroid import find_anticlaw

    return find_anticlaw(M) is None


def is_even_plane(M: BinaryMatroid) -> bool:
    """Every plane meets the ground set evenly; vacuously true for n < 3.

    Plane masks are cached for n <= 6; beyond that the flats are streamed
    from the generator so memory stays flat.
    """
    n = M.n
    if n < 3:
        return True
    if n <= tables.PLANE_TABLE_MAX:
        return tables.even_plane_mask(M.mask, n)
    E = M.mask
    for P in flats_of_dim(n, 3):
        if (E & P.members).bit_count() & 1:
            return False
    return True


def pg_sum_witness_mask(mask: int, n: int) -> Optional[tuple[int, int]]:
    """Masks of two disjoint flats whose union is the ground set, or None.

    For each anchor point, the maximal flat inside E through the anchor
    is grown greedily (validity of a point is monotone, so one ascending
    pass suffices), and the rest of E is tested for flatness.  If E is a
    union of two disjoint flats, every flat inside E through an anchor
    lies wholly in one part, so the first anchor already decides.
    """
    if mask == 0:
        return (0, 0)
    not_allowed = ~(mask | 1)
    for e in iter_bits(mask):
        span = 1 | (1 << e)
        for p in iter_bits(mask & ~span):
            if (span >> p) & 1:
                continue
            coset = xor_translate(span, p, n)
            if coset & not_allowed:
                continue
            span |= coset
        rest = mask & ~span
        if is_flat(rest, n):
            return (span & ~1, rest)
    return None


def is_pg_sum_direct(M: BinaryMatroid) -> Optional[tuple[Flat, Flat]]:
    """Witness pair of disjoint flats whose union is the ground set, or None."""
    witness = pg_sum_witness_mask(M.mask, M.n)
    if witness is None:
        return None
    f1, f2 = witness
    return (closure_mask(f1, M.n), closure_mask(f2, M.n))


def pg_sum_forbidden_mask(mask: int, n: int) -> bool:
    if n < 3:
        return True
    members = (
        tables.flat_members(n, 3)
        if n <= tables.PLANE_TABLE_MAX
        else (F.members for F in flats_of_dim(n, 3))
    )
    for pm in members:
        inside = mask & pm
        s = inside.bit_count()
        if s in (5, 6):
            return False
        if s == 3 or s == 4:
            acc = 0
            for v in iter_bits(inside):
                acc ^= v
            if (s == 3) == (acc != 0):
                return False
    return True


def is_pg_sum_forbidden(M: BinaryMatroid) -> bool:
    """Forbidden-restriction route: no plane restriction is a claw, a
    four-point zero-sum set, or has five or six points."""
    return pg_sum_forbidden_mask(M.mask, M.n)


def is_pg_sum(M: BinaryMatroid) -> bool:
    """Authoritative PG-sum predicate (direct route)."""
    return is_pg_sum_direct(M) is not None


def strict_pg_sum_mask(mask: int, n: int) -> bool:
    witness = pg_sum_witness_mask(mask, n)
    if witness is None or not (witness[0] and witness[1]):
        return False
    return rank_mask(mask, n) == n


def is_strict_pg_sum(M: BinaryMatroid) -> bool:
    """Full-rank with the ground set a union of two disjoint nonempty flats."""
    return strict_pg_sum_mask(M.mask, M.n)


def is_bose_burton(M: BinaryMatroid) -> Optional[int]:
    """The order t if the complement of the ground set is a flat, else None."""
    rest = ground_mask(M.n) & ~M.mask
    flat = closure_mask(rest, M.n)
    if flat.members != rest:
        return None
    return M.n - flat.dim


def _target_descent(E: int, n: int, members: int) -> Optional[list[tuple[int, str]]]:
    """Descent to the empty flat by alternating closures, or None.

    From a flat B, either the outer layer lies in E (descend to
    cl(B \\ E)) or avoids it (descend to cl(B ∩ E)); both branches are
    tried, and a strict dimension decrease is required, so the recursion
    is exact and terminates within n levels.
    """
    if members == 0:
        return []
    for sub, label in ((members & ~E, "in"), (members & E, "out")):
        next_members = closure_mask(sub, n).members
        if next_members != members:
            tail = _target_descent(E, n, next_members)
            if tail is not None:
                return [(next_members, label)] + tail
    return None


def is_target(M: BinaryMatroid) -> Optional[list[Flat]]:
    """Witness chain of nested flats whose alternate layers give E, or None.

    The chain is normalised so that ground-set layers sit at even
    positions; the assembled chain is re-checked against E before being
    returned.
    """
    E, n = M.mask, M.n
    descent = _target_descent(E, n, ground_mask(n))
    if descent is None:
        return None
    # ascending flats; labels[i] labels the layer between masks[i] and masks[i+1]
    masks = [m for m, _ in reversed(descent)] + [ground_mask(n)]
    labels = [lab for _, lab in reversed(descent)]
    chain: list[int] = [masks[0]] if masks else [0]
    for i, lab in enumerate(labels):
        want_even = lab == "in"
        if ((len(chain) - 1) % 2 == 0) != want_even:
            if len(chain) == 1:
                # fold the out-of-E bottom layer into the chain base
                chain = [masks[i + 1]]
                continue
            chain.append(chain[-1])
        chain.append(masks[i + 1])
    while len(chain) >= 2 and (len(chain) - 2) % 2 == 1:
        chain.pop()  # a trailing out-of-E layer carries no content
    rebuilt = 0
    for i in range(0, len(chain) - 1, 2):
        rebuilt |= chain[i + 1] & ~chain[i]
    if rebuilt != E:
        raise AssertionError("target chain assembly disagrees with the ground set")
    return [closure_mask(m, n) for m in chain]


def chi_bound(k: int, dim_n: int) -> int:
    """Critical-number bound (k + 2)·2^(k+1) + k·(dim_n + 4)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k + 2) * (1 << (k + 1)) + k * (dim_n + 4)


def classify(M: BinaryMatroid) -> ClassFlags:
    """All class flags in one record."""
    return ClassFlags(
        claw_free=is_claw_free(M),
        anticlaw_free=is_anticlaw_free(M),
        triangle_free=is_triangle_free(M),
        complement_triangle_free=is_complement_triangle_free(M),
        even_plane=is_even_plane(M),
        pg_sum=is_pg_sum(M),
        strict_pg_sum=is_strict_pg_sum(M),
        bose_burton_order=is_bose_burton(M),
        target=is_target(M) is not None,
    )
