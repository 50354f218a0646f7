"""Matrices over F_r and finite matrix groups built by closure.

A matrix is a plain 4-tuple (a, b, c, d) for [[a, b], [c, d]] with entries
reduced mod r.  The modulus always travels alongside, either as an argument
or on the owning MatrixGroup.  Groups store their elements sorted
lexicographically, so iteration order is canonical.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import ModulusMismatch, NonInvertibleMatrix
from .modfield import validate_modulus

Mat = tuple[int, int, int, int]

IDENT: Mat = (1, 0, 0, 1)


# ---- elementary matrix algebra ----

def mat_mul(m: Mat, n: Mat, r: int) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return ((a * e + b * g) % r, (a * f + b * h) % r,
            (c * e + d * g) % r, (c * f + d * h) % r)


def mat_det(m: Mat, r: int) -> int:
    return (m[0] * m[3] - m[1] * m[2]) % r


def mat_trace(m: Mat, r: int) -> int:
    return (m[0] + m[3]) % r


def mat_inv(m: Mat, r: int) -> Mat:
    det = mat_det(m, r)
    if det == 0:
        raise NonInvertibleMatrix(f"{m} has determinant 0 mod {r}")
    u = pow(det, -1, r)
    a, b, c, d = m
    return (d * u % r, -b * u % r, -c * u % r, a * u % r)


def mat_pow(m: Mat, k: int, r: int) -> Mat:
    if k < 0:
        return mat_pow(mat_inv(m, r), -k, r)
    out = IDENT
    base = m
    while k:
        if k & 1:
            out = mat_mul(out, base, r)
        base = mat_mul(base, base, r)
        k >>= 1
    return out


def mat_reduce(m, r: int) -> Mat:
    return tuple(int(x) % r for x in m)


def minus_identity(r: int) -> Mat:
    return (r - 1, 0, 0, r - 1)


def is_scalar(m: Mat) -> bool:
    return m[1] == 0 and m[2] == 0 and m[0] == m[3]


_MAT_RE = re.compile(
    r"^\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,"
    r"\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*mod\s*(\d+)\s*$"
)


def parse_matrix(text: str) -> tuple[Mat, int]:
    """Parse '[[a,b],[c,d]] mod r' into a reduced matrix and its modulus."""
    m = _MAT_RE.match(text)
    if m is None:
        raise ValueError(f"expected '[[a,b],[c,d]] mod r', got {text!r}")
    a, b, c, d, r = (int(g) for g in m.groups())
    validate_modulus(r)
    return mat_reduce((a, b, c, d), r), r


def format_matrix(m: Mat, r: int) -> str:
    return f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]] mod {r}"


# ---- ambient group tables ----

def gl2_order(r: int) -> int:
    validate_modulus(r)
    return (r * r - 1) * (r * r - r)


def sl2_order(r: int) -> int:
    validate_modulus(r)
    return r * (r * r - 1)


@lru_cache(maxsize=8)
def all_gl2(r: int) -> tuple[Mat, ...]:
    """All invertible matrices mod r, lexicographically sorted."""
    validate_modulus(r)
    out = []
    for a in range(r):
        for b in range(r):
            for c in range(r):
                bc = b * c
                for d in range(r):
                    if (a * d - bc) % r != 0:
                        out.append((a, b, c, d))
    return tuple(out)


def random_gl2(rng, r: int) -> Mat:
    while True:
        m = (rng.randrange(r), rng.randrange(r), rng.randrange(r), rng.randrange(r))
        if mat_det(m, r) != 0:
            return m


# ---- groups ----

class MatrixGroup:
    """A subgroup of GL2(F_r), stored as an explicit element set."""

    __slots__ = ("r", "elements", "generators", "_set", "_fingerprint")

    def __init__(self, r: int, elements, generators=()):
        validate_modulus(r)
        self.r = r
        self.elements: tuple[Mat, ...] = tuple(sorted(elements))
        self._set = frozenset(self.elements)
        self.generators: tuple[Mat, ...] = tuple(generators)
        self._fingerprint = None

    # construction

    @classmethod
    def close(cls, generators, r: int) -> "MatrixGroup":
        """Subgroup generated by the given matrices, by breadth-first closure."""
        validate_modulus(r)
        gens = [mat_reduce(g, r) for g in generators]
        for g in gens:
            if mat_det(g, r) == 0:
                raise NonInvertibleMatrix(f"generator {g} has determinant 0 mod {r}")
        seen = {IDENT}
        frontier = [IDENT]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = mat_mul(x, g, r)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return cls(r, seen, gens)

    @classmethod
    def full(cls, r: int) -> "MatrixGroup":
        from .modfield import generator
        g = generator(r)
        return cls(r, all_gl2(r), ((1, 1, 0, 1), (1, 0, 1, 1), (g, 0, 0, 1)))

    # basic queries

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Mat) -> bool:
        return m in self._set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixGroup):
            return NotImplemented
        return self.r == other.r and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.r, self.elements))

    def __repr__(self) -> str:
        return f"MatrixGroup(r={self.r}, order={self.order})"

    def _require_same_modulus(self, other: "MatrixGroup") -> None:
        if self.r != other.r:
            raise ModulusMismatch(f"moduli differ: {self.r} vs {other.r}")

    def is_subgroup_of(self, other: "MatrixGroup") -> bool:
        self._require_same_modulus(other)
        return self._set <= other._set

    def contains_group(self, other: "MatrixGroup") -> bool:
        self._require_same_modulus(other)
        return other._set <= self._set

    # invariants

    def fingerprint(self):
        """Conjugation-invariant key: order plus the (trace, det) multiset."""
        if self._fingerprint is None:
            counts: dict[tuple[int, int], int] = {}
            for m in self.elements:
                key = (mat_trace(m, self.r), mat_det(m, self.r))
                counts[key] = counts.get(key, 0) + 1
            self._fingerprint = (len(self.elements), tuple(sorted(counts.items())))
        return self._fingerprint

    def determinant_set(self) -> frozenset:
        return frozenset(mat_det(m, self.r) for m in self.elements)

    def sl2_part(self) -> "MatrixGroup":
        """Determinant-1 subgroup, with a generating set recomputed by closure."""
        r = self.r
        members = [m for m in self.elements if mat_det(m, r) == 1]
        gens = _generating_subset(members, r)
        return MatrixGroup(r, members, gens)

    def conjugate_by(self, m: Mat) -> "MatrixGroup":
        r = self.r
        mi = mat_inv(m, r)
        elems = [mat_mul(mat_mul(m, x, r), mi, r) for x in self.elements]
        gens = tuple(mat_mul(mat_mul(m, g, r), mi, r) for g in self.generators)
        return MatrixGroup(r, elems, gens)

    def scalar_subgroup(self) -> tuple[Mat, ...]:
        return tuple(m for m in self.elements if is_scalar(m))


def _generating_subset(members, r: int):
    """Greedy small generating set for an explicit subgroup element list."""
    target = set(members)
    gens: list[Mat] = []
    seen = {IDENT}
    for m in sorted(target):
        if m in seen:
            continue
        gens.append(m)
        seen.add(m)
        frontier = list(seen)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = mat_mul(x, g, r)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if len(seen) == len(target):
            break
    return tuple(gens)


# ---- conjugacy and applicability ----

def are_conjugate(g_group: MatrixGroup, h_group: MatrixGroup):
    """Conjugating witness m with m G m^-1 = H, or None.

    Cheap conjugation invariants (order, trace-det fingerprint) run first;
    only on agreement does the full witness scan over GL2 start.  Mapping
    the generators into H suffices since both groups have equal order.
    """
    g_group._require_same_modulus(h_group)
    if g_group.order != h_group.order:
        return None
    if g_group.fingerprint() != h_group.fingerprint():
        return None
    r = g_group.r
    gens = g_group.generators or _generating_subset(g_group.elements, r)
    target = h_group._set
    for m in all_gl2(r):
        mi = mat_inv(m, r)
        if all(mat_mul(mat_mul(m, g, r), mi, r) in target for g in gens):
            return m
    return None


def is_applicable(group: MatrixGroup) -> bool:
    """Determinant surjective, and some element has trace 0 and determinant -1."""
    r = group.r
    if len(group.determinant_set()) != r - 1:
        return False
    return any(mat_trace(m, r) == 0 and mat_det(m, r) == r - 1 for m in group.elements)
