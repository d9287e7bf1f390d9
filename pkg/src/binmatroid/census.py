"""Orbit bookkeeping, family enumeration, seeded samplers, and censuses.

Orbits of ground sets under the full linear group are walked with three
generator maps (a coordinate cycle, a swap, and one shear), which
together generate the group.  Walking stays within any closed family, so
an invariant family can be split into isomorphism classes without any
per-element canonical-form search.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

from . import tables
from .gf2 import ground_mask, iter_bits, xor_translate
from .matroid import BinaryMatroid, canonical_form, linear_map_table, seq_key
from .construct import lift_join
from .recognize import classify
from .matroid import is_full_rank
from .structure import has_decomposer


# ---------------------------------------------------------------------------
# GL(n,2) orbit machinery
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def gl_generators(n: int) -> tuple[tuple[int, ...], ...]:
    """Point-permutation tables of maps generating GL(n,2)."""
    if n <= 1:
        return ()
    basis = [1 << i for i in range(n)]
    cycle = [1 << ((i + 1) % n) for i in range(n)]
    swap = list(basis)
    swap[0], swap[1] = swap[1], swap[0]
    shear = list(basis)
    shear[0] = 0b11  # e1 -> e1 + e2
    return tuple(
        tuple(linear_map_table(imgs, n)) for imgs in (cycle, swap, shear)
    )


def transform_mask(mask: int, table: tuple[int, ...]) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= 1 << table[v]
    return out


def orbit_of(mask: int, n: int) -> set[int]:
    """Full GL-orbit of a ground set (use only when orbits are known small)."""
    gens = gl_generators(n)
    seen = {mask}
    frontier = [mask]
    while frontier:
        m = frontier.pop()
        for t in gens:
            im = transform_mask(m, t)
            if im not in seen:
                seen.add(im)
                frontier.append(im)
    return seen


def orbit_split(masks: Iterable[int], n: int) -> dict[int, int]:
    """Map each mask of a GL-closed family to its class representative.

    The representative is the orbit element with the least membership
    sequence, i.e. the canonical form.
    """
    todo = set(masks)
    gens = gl_generators(n)
    out: dict[int, int] = {}
    while todo:
        start = todo.pop()
        orbit = {start}
        frontier = [start]
        while frontier:
            m = frontier.pop()
            for t in gens:
                im = transform_mask(m, t)
                if im not in orbit:
                    orbit.add(im)
                    frontier.append(im)
        rep = min(orbit, key=lambda m: seq_key(m, n))
        for m in orbit:
            out[m] = rep
        todo -= orbit
    return out


@lru_cache(maxsize=None)
def canon_table(n: int) -> dict[int, int]:
    """Canonical representative for every ground set, n <= 4."""
    if n > 4:
        raise ValueError("whole-space canonical tables are kept only for n <= 4")
    return orbit_split(range(0, 1 << (1 << n), 2), n)


# ---------------------------------------------------------------------------
# The even-plane family as a linear solution space
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def even_plane_basis(n: int) -> tuple[int, ...]:
    """Nullspace basis of the per-plane parity constraints.

    A ground set is even-plane iff its bitset is orthogonal to every
    plane mask, so the family is a linear space of bitsets.
    """
    if n < 3:
        free = [1 << v for v in range(1, 1 << n)]
        return tuple(free)
    rows = list(tables.flat_members(n, 3))
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            c = (r & -r).bit_length() - 1
            if c in pivots:
                r ^= pivots[c]
            else:
                pivots[c] = r
                break
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for d in pivots:
            if d != c and (pivots[d] >> c) & 1:
                pivots[d] ^= row
    basis = []
    for f in range(1, 1 << n):
        if f in pivots:
            continue
        v = 1 << f
        for c, row in pivots.items():
            if (row >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return tuple(basis)


@lru_cache(maxsize=None)
def even_plane_masks(n: int) -> tuple[int, ...]:
    """All even-plane ground sets at dimension n (2^k of them)."""
    basis = even_plane_basis(n)
    if len(basis) > 20:
        raise ValueError("even-plane family too large to materialise")
    masks = [0]
    for b in basis:
        masks += [m ^ b for m in masks]
    return tuple(masks)


def random_even_plane_mask(n: int, rng: random.Random) -> int:
    """Uniform member of the even-plane family without materialising it."""
    m = 0
    for b in even_plane_basis(n):
        if rng.getrandbits(1):
            m ^= b
    return m


@lru_cache(maxsize=None)
def even_plane_classes(n: int) -> tuple[int, ...]:
    """Isomorphism-class representatives of the even-plane family."""
    reps = sorted(set(orbit_split(even_plane_masks(n), n).values()))
    return tuple(reps)


# ---------------------------------------------------------------------------
# Seeded samplers
# ---------------------------------------------------------------------------


def _greedy_claw_free(n: int, rng: random.Random) -> int:
    """Random insertion order, random keep rate; claws are blocked as they
    would form, checking only the planes through the new point."""
    order = list(range(1, 1 << n))
    rng.shuffle(order)
    keep = rng.uniform(0.25, 1.0)
    per_point = tables.planes_through_point(n) if n >= 3 else None
    E = 0
    for p in order:
        if rng.random() > keep:
            continue
        cand = E | (1 << p)
        if per_point is None:
            E = cand
            continue
        arr = per_point[p]
        inter = arr & np.uint64(cand)
        ok = True
        for i in np.flatnonzero(np.bitwise_count(inter) == 3):
            if tables._xor_of_bits(int(inter[i])) != 0:
                ok = False
                break
        if ok:
            E = cand
    return E


def _greedy_triangle_free(n: int, rng: random.Random) -> int:
    order = list(range(1, 1 << n))
    rng.shuffle(order)
    keep = rng.uniform(0.3, 1.0)
    T = 0
    for p in order:
        if rng.random() > keep:
            continue
        if T & xor_translate(T, p, n) == 0:
            T |= 1 << p
    return T


def sample_claw_free_mask(n: int, rng: random.Random) -> int:
    """One seeded claw-free ground set from a mixture of strategies:
    greedy insertion, lift-joins of smaller claw-free sets, even-plane
    members, complements of triangle-free sets, dimension extension, and
    plain rejection."""
    if n <= 4:
        pool = tables.claw_free_masks_list(n)
        return pool[rng.randrange(len(pool))]
    if n > tables.PLANE_TABLE_MAX:
        # no plane tables out here: stick to strategies that are
        # claw-free by construction, plus pair-scanned extensions
        from .recognize import claw_free_any

        roll = rng.random()
        if roll < 0.4:
            n1 = rng.randint(1, n - 1)
            left = BinaryMatroid(n1, sample_claw_free_mask(n1, rng))
            right = BinaryMatroid(n - n1, sample_claw_free_mask(n - n1, rng))
            return lift_join(left, right).mask
        if roll < 0.6:
            return random_even_plane_mask(n, rng)
        if roll < 0.8:
            return ground_mask(n) & ~_greedy_triangle_free(n, rng)
        base = sample_claw_free_mask(n - 1, rng)
        half = 1 << (n - 1)
        for _ in range(8):
            layer = base | 1 if rng.random() < 0.5 else base ^ rng.getrandbits(half)
            cand = base | ((layer & ((1 << half) - 1)) << half)
            if claw_free_any(cand, n):
                return cand
        return base | (base << half)  # plain doubling always stays claw-free
    roll = rng.random()
    if roll < 0.30:
        return _greedy_claw_free(n, rng)
    if roll < 0.50:
        n1 = rng.randint(1, n - 1)
        left = BinaryMatroid(n1, sample_claw_free_mask(n1, rng))
        right = BinaryMatroid(n - n1, sample_claw_free_mask(n - n1, rng))
        return lift_join(left, right).mask
    if roll < 0.62:
        return random_even_plane_mask(n, rng)
    if roll < 0.74:
        return ground_mask(n) & ~_greedy_triangle_free(n, rng)
    if roll < 0.92:
        # extend a claw-free set one dimension with a random layer
        base = sample_claw_free_mask(n - 1, rng)
        half = 1 << (n - 1)
        for _ in range(24):
            choice = rng.random()
            if choice < 0.3:
                layer = base | 1  # doubling layer (always claw-free)
            elif choice < 0.6:
                layer = base ^ rng.getrandbits(1 << (n - 1))
            else:
                layer = rng.getrandbits(1 << (n - 1))
            cand = base | ((layer & ((1 << half) - 1)) << half)
            if tables.claw_free_mask(cand, n):
                return cand
        return _greedy_claw_free(n, rng)
    # rejection from uniform subsets at a random density
    density = rng.uniform(0.05, 0.95)
    for _ in range(24):
        cand = 0
        for v in range(1, 1 << n):
            if rng.random() < density:
                cand |= 1 << v
        if tables.claw_free_mask(cand, n):
            return cand
    return _greedy_claw_free(n, rng)


def sample_uniform_mask(n: int, rng: random.Random) -> int:
    return rng.getrandbits((1 << n) - 1) << 1


# ---------------------------------------------------------------------------
# Census records
# ---------------------------------------------------------------------------

CLASS_KEYS = (
    "even_plane",
    "complement_triangle_free",
    "strict_pg_sum",
    "pg_sum",
    "target",
    "bose_burton",
    "triangle_free",
    "decomposable",
)


def _census_from_reps(
    n: int, reps: list[int], filter_claw_free: bool, extra: dict
) -> dict:
    by_class = {k: 0 for k in CLASS_KEYS}
    claw_free_count = 0
    min_density: Optional[int] = None
    witnesses: list[list[int]] = []
    for mask in reps:
        M = BinaryMatroid(n, mask)
        flags = classify(M)
        if flags.claw_free:
            claw_free_count += 1
        family = flags.claw_free if filter_claw_free else True
        if not family:
            continue
        by_class["even_plane"] += flags.even_plane
        by_class["complement_triangle_free"] += flags.complement_triangle_free
        by_class["strict_pg_sum"] += flags.strict_pg_sum
        by_class["pg_sum"] += flags.pg_sum
        by_class["target"] += flags.target
        by_class["bose_burton"] += flags.bose_burton_order is not None
        by_class["triangle_free"] += flags.triangle_free
        by_class["decomposable"] += has_decomposer(M)
        if flags.claw_free and is_full_rank(M):
            size = M.size
            if min_density is None or size < min_density:
                min_density = size
                witnesses = [M.points()]
            elif size == min_density:
                witnesses.append(M.points())
    witnesses.sort()
    record = {
        "n": n,
        "count_total": len(reps),
        "count_claw_free": claw_free_count,
        "count_by_class": by_class,
        "min_density_fullrank": min_density,
        "minimizer_witnesses": witnesses,
    }
    record.update(extra)
    return record


def exhaustive_census(n: int, filter_claw_free: bool = False) -> dict:
    """Canonical-form-deduplicated census over every ground set (n <= 4)."""
    if n > 4:
        raise ValueError("exhaustive enumeration is capped at n = 4")
    table = canon_table(n)
    if filter_claw_free:
        reps = sorted(
            {table[m] for m in tables.claw_free_masks_list(n)},
            key=lambda m: seq_key(m, n) if n else 0,
        )
    else:
        reps = sorted(set(table.values()), key=lambda m: seq_key(m, n) if n else 0)
    return _census_from_reps(
        n, reps, filter_claw_free, {"mode": "exhaustive", "filter": "claw_free" if filter_claw_free else "all"}
    )


def sampled_census(
    n: int, samples: int, seed: int, filter_claw_free: bool = False
) -> dict:
    """Seeded sampled census; representatives are canonical forms for
    n <= 6 and raw masks beyond."""
    rng = random.Random(seed)
    seen: set[int] = set()
    for _ in range(samples):
        if filter_claw_free:
            mask = (
                sample_claw_free_mask(n, rng)
                if n >= 3
                else sample_uniform_mask(n, rng)
            )
        else:
            mask = sample_uniform_mask(n, rng)
        if n <= 6:
            mask = canonical_form(BinaryMatroid(n, mask)).mask
        seen.add(mask)
    reps = sorted(seen, key=lambda m: seq_key(m, n) if n else 0)
    return _census_from_reps(
        n,
        reps,
        filter_claw_free,
        {
            "mode": "sample",
            "samples": samples,
            "seed": seed,
            "filter": "claw_free" if filter_claw_free else "all",
        },
    )
