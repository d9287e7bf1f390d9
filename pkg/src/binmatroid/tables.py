"""Cached flat tables and vectorized plane kernels (internal).

The verification sweeps and samplers hammer the same questions (is this
plane pattern a claw? is the intersection even?) across thousands of
ground sets, so the plane lists are materialised once per dimension and
the per-plane patterns are classified through small lookup tables.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .gf2 import Flat, flats_of_dim, ground_mask

#: plane lists are materialised only up to this dimension
PLANE_TABLE_MAX = 6


@lru_cache(maxsize=None)
def flats(n: int, d: int) -> tuple[Flat, ...]:
    """Materialised list of all d-dimensional flats (small n only)."""
    return tuple(flats_of_dim(n, d))


@lru_cache(maxsize=None)
def flat_members(n: int, d: int) -> tuple[int, ...]:
    return tuple(f.members for f in flats(n, d))


@lru_cache(maxsize=None)
def plane_array(n: int) -> np.ndarray:
    """All plane membership masks as a uint64 vector (3 <= n <= 6)."""
    if not 3 <= n <= PLANE_TABLE_MAX:
        raise ValueError(f"plane tables cover 3 <= n <= {PLANE_TABLE_MAX}")
    return np.array(flat_members(n, 3), dtype=np.uint64)


@lru_cache(maxsize=None)
def planes_through_point(n: int) -> tuple[np.ndarray, ...]:
    """For each point value, the masks of the planes containing it."""
    per_point: list[list[int]] = [[] for _ in range(1 << n)]
    for pm in flat_members(n, 3):
        m = pm
        while m:
            low = m & -m
            per_point[low.bit_length() - 1].append(pm)
            m ^= low
    return tuple(np.array(lst, dtype=np.uint64) for lst in per_point)


@lru_cache(maxsize=None)
def triangles(n: int) -> tuple[tuple[int, int, int], ...]:
    """All triangles as sorted point triples (x, y, x^y)."""
    out = []
    for x in range(1, 1 << n):
        for y in range(x + 1, 1 << n):
            z = x ^ y
            if z > y:
                out.append((x, y, z))
    return tuple(out)


def _xor_of_bits(mask: int) -> int:
    acc = 0
    while mask:
        low = mask & -mask
        acc ^= low.bit_length() - 1
        mask ^= low
    return acc


def claw_free_mask(mask: int, n: int) -> bool:
    """Claw-freeness via plane patterns: no plane meets E in a basis."""
    if n < 3:
        return True
    planes = plane_array(n)
    inter = planes & np.uint64(mask)
    hits = np.flatnonzero(np.bitwise_count(inter) == 3)
    for i in hits:
        if _xor_of_bits(int(inter[i])) != 0:
            return False
    return True


def anticlaw_free_mask(mask: int, n: int) -> bool:
    """No plane meets E in four points whose three absentees are independent."""
    if n < 3:
        return True
    planes = plane_array(n)
    inter = planes & np.uint64(mask)
    hits = np.flatnonzero(np.bitwise_count(inter) == 4)
    for i in hits:
        if _xor_of_bits(int(planes[i]) & ~mask) != 0:
            return False
    return True


def even_plane_mask(mask: int, n: int) -> bool:
    """Every plane meets E in an even number of points (vacuous for n < 3)."""
    if n < 3:
        return True
    inter = plane_array(n) & np.uint64(mask)
    return not np.any(np.bitwise_count(inter) & np.uint64(1))


# ---------------------------------------------------------------------------
# Whole-sweep tables for n <= 4: one bool per ground set
# ---------------------------------------------------------------------------
#
# Ground sets are indexed by code k, mask = k << 1 (bit 0 is never used).
# For each plane the seven membership bits are gathered into a 7-bit local
# pattern; linearity makes zero-sums local, so each pattern classifies the
# restriction to that plane outright.

_XORV = np.zeros(128, dtype=np.uint8)
_POP = np.zeros(128, dtype=np.uint8)
for _b in range(128):
    _POP[_b] = bin(_b).count("1")
    acc = 0
    for _i in range(7):
        if (_b >> _i) & 1:
            acc ^= _i + 1
    _XORV[_b] = acc

#: pattern is a claw: three points, independent
_PAT_CLAW = (_POP == 3) & (_XORV != 0)
#: pattern is odd-sized
_PAT_ODD = (_POP & 1).astype(bool)
#: pattern is an anticlaw: four points whose complement is independent
_PAT_ANTICLAW = np.zeros(128, dtype=bool)
for _b in range(128):
    _PAT_ANTICLAW[_b] = _POP[_b] == 4 and _XORV[127 ^ _b] != 0
#: pattern shows the restriction is one of the four non-PG-sum witnesses
_PAT_PG_BAD = (
    ((_POP == 3) & (_XORV != 0))
    | ((_POP == 4) & (_XORV == 0))
    | (_POP == 5)
    | (_POP == 6)
)


def _local_patterns(n: int, codes: np.ndarray) -> list[np.ndarray]:
    """Per-plane 7-bit local patterns for every ground-set code."""
    out = []
    for pm in flat_members(n, 3):
        pts = []
        m = pm
        while m:
            low = m & -m
            pts.append(low.bit_length() - 1)
            m ^= low
        lm = np.zeros(len(codes), dtype=np.uint8)
        for i, p in enumerate(pts):
            lm |= ((codes >> np.uint32(p - 1)) & np.uint32(1)).astype(np.uint8) << np.uint8(i)
        out.append(lm)
    return out


@lru_cache(maxsize=None)
def sweep_tables(n: int) -> dict[str, np.ndarray]:
    """Per-ground-set property columns over all subsets, for n <= 4.

    Keys: claw_free, even_plane, anticlaw_free, pg_sum_forbidden_route.
    Index by code k where mask = k << 1.
    """
    if n > 4:
        raise ValueError("whole-subset sweeps are supported only for n <= 4")
    ncodes = 1 << ((1 << n) - 1)
    codes = np.arange(ncodes, dtype=np.uint32)
    claw_free = np.ones(ncodes, dtype=bool)
    even = np.ones(ncodes, dtype=bool)
    anticlaw_free = np.ones(ncodes, dtype=bool)
    pg_ok = np.ones(ncodes, dtype=bool)
    if n >= 3:
        for lm in _local_patterns(n, codes):
            claw_free &= ~_PAT_CLAW[lm]
            even &= ~_PAT_ODD[lm]
            anticlaw_free &= ~_PAT_ANTICLAW[lm]
            pg_ok &= ~_PAT_PG_BAD[lm]
    return {
        "claw_free": claw_free,
        "even_plane": even,
        "anticlaw_free": anticlaw_free,
        "pg_sum_forbidden_route": pg_ok,
    }


@lru_cache(maxsize=None)
def claw_free_masks_list(n: int) -> tuple[int, ...]:
    """All claw-free ground-set masks at dimension n <= 4, ascending."""
    if n < 3:
        return tuple(range(0, 1 << (1 << n), 2))
    table = sweep_tables(n)["claw_free"]
    return tuple(int(k) << 1 for k in np.flatnonzero(table))


def ground_codes(n: int) -> int:
    """Number of distinct ground sets at dimension n."""
    return 1 << ((1 << n) - 1)


__all__ = [
    "PLANE_TABLE_MAX",
    "flats",
    "flat_members",
    "plane_array",
    "planes_through_point",
    "triangles",
    "claw_free_mask",
    "anticlaw_free_mask",
    "even_plane_mask",
    "sweep_tables",
    "claw_free_masks_list",
    "ground_codes",
    "ground_mask",
]
