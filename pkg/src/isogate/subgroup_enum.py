"""Conjugacy classes of subgroups of GL2(F_r) with few generators.

Exhaustive up-to-conjugacy enumeration of all subgroups generated by at
most k elements.  Level 1 lists the cyclic subgroups; each further level
extends every class that first appeared at the previous level by one more
generator.  Used as an independent completeness oracle for the structured
searches elsewhere in the package, not as a primary search itself.

Element conjugacy in GL2 is decided by (trace, det, scalar flag); a cyclic
subgroup's class is decided by the multiset of those labels over its
generators.  For the extension step the candidate generator x only matters
up to x -> hx, xh (h in the subgroup), x -> x^-1, and conjugation by the
subgroup's normalizer, so one closure per orbit of those moves suffices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matgroup import (IDENT, Mat, MatrixGroup, all_gl2, are_conjugate, gl2_order,
                       is_scalar, mat_det, mat_inv, mat_mul, mat_trace,
                       _generating_subset)
from .modfield import validate_modulus


def element_label(m: Mat, r: int) -> tuple[int, int, bool]:
    return (mat_trace(m, r), mat_det(m, r), is_scalar(m))


def cyclic_signature(g: Mat, r: int) -> tuple:
    """Conjugacy-class key for the cyclic subgroup generated by g."""
    powers = [IDENT]
    x = g
    while x != IDENT:
        powers.append(x)
        x = mat_mul(x, g, r)
    n = len(powers)
    labels = []
    for k in range(1, n + 1):
        if _gcd(k, n) == 1:
            labels.append(element_label(powers[k % n], r))
    return tuple(sorted(labels))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _closure_capped(gens, r: int, cap: int):
    """Close the generators; None once the size passes cap (then it is GL2)."""
    seen = {IDENT}
    frontier = [IDENT]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mat_mul(x, g, r)
            if y not in seen:
                if len(seen) >= cap:
                    return None
                seen.add(y)
                frontier.append(y)
    return seen


def _cyclic_classes(r: int) -> list[MatrixGroup]:
    label_reps = {}
    for m in all_gl2(r):
        label_reps.setdefault(element_label(m, r), m)
    by_signature = {}
    for m in label_reps.values():
        sig = cyclic_signature(m, r)
        if sig not in by_signature:
            elements = _closure_capped([m], r, gl2_order(r))
            by_signature[sig] = MatrixGroup(r, elements, (m,))
    return sorted(by_signature.values(), key=lambda g: (g.order, g.elements))


def _normalizer_generators(group: MatrixGroup) -> tuple[Mat, ...]:
    r = group.r
    gens = group.generators or _generating_subset(group.elements, r)
    members = group._set
    norm = []
    for z in all_gl2(r):
        zi = mat_inv(z, r)
        if all(mat_mul(mat_mul(z, g, r), zi, r) in members for g in gens):
            norm.append(z)
    return _generating_subset(norm, r)


def _candidate_orbit_reps(group: MatrixGroup) -> list[Mat]:
    """One representative per orbit of candidate extra generators."""
    r = group.r
    hgens = [g for g in (group.generators or group.elements) if g != IDENT]
    ngens = _normalizer_generators(group)
    ninvs = [mat_inv(z, r) for z in ngens]
    remaining = set(all_gl2(r)) - group._set
    reps = []
    while remaining:
        seed = min(remaining)
        reps.append(seed)
        orbit = {seed}
        frontier = [seed]
        while frontier:
            x = frontier.pop()
            moves = [mat_inv(x, r)]
            for h in hgens:
                moves.append(mat_mul(x, h, r))
                moves.append(mat_mul(h, x, r))
            for z, zi in zip(ngens, ninvs):
                moves.append(mat_mul(mat_mul(z, x, r), zi, r))
            for y in moves:
                if y in orbit:
                    continue
                orbit.add(y)
                frontier.append(y)
        remaining -= orbit
    return reps


@dataclass(frozen=True)
class ClassInventory:
    """Subgroup conjugacy classes reachable with at most max_generators."""
    r: int
    max_generators: int
    classes: tuple[MatrixGroup, ...]
    reaches_full_group: bool

    @property
    def count(self) -> int:
        return len(self.classes)


_LEVEL_CACHE: dict[int, list] = {}


def subgroup_classes(r: int, max_generators: int) -> ClassInventory:
    """All conjugacy classes of proper subgroups with <= max_generators generators.

    The full group GL2 is never listed; reaching it is reported on the flag.
    """
    validate_modulus(r)
    if max_generators < 1:
        raise ValueError("need at least one generator")
    levels = _LEVEL_CACHE.setdefault(r, [])
    if not levels:
        levels.append((_cyclic_classes(r), False))
    while len(levels) < max_generators:
        prev_classes, hit_full = levels[-1]
        older = levels[-2][0] if len(levels) >= 2 else []
        fresh = [g for g in prev_classes if g not in older]
        pool: dict = {}
        for g in prev_classes:
            pool.setdefault(g.fingerprint(), []).append(g)
        cap = gl2_order(r) // 2
        for h_group in fresh:
            hgens = list(h_group.generators or _generating_subset(h_group.elements, r))
            for x in _candidate_orbit_reps(h_group):
                elements = _closure_capped(hgens + [x], r, cap + 1)
                if elements is None or len(elements) > cap:
                    hit_full = True
                    continue
                cand = MatrixGroup(r, elements, tuple(hgens) + (x,))
                bucket = pool.setdefault(cand.fingerprint(), [])
                if not any(are_conjugate(cand, known) for known in bucket):
                    bucket.append(cand)
        merged = sorted((g for bucket in pool.values() for g in bucket),
                        key=lambda g: (g.order, g.elements))
        levels.append((merged, hit_full))
    classes, hit_full = levels[max_generators - 1]
    return ClassInventory(r, max_generators, tuple(classes), hit_full)


def class_counts(r: int, up_to: int) -> list[int]:
    """Class counts at each generator budget from 1 to up_to."""
    return [subgroup_classes(r, k).count for k in range(1, up_to + 1)]
