"""Named subgroup families of GL2(F_r).

Every family here is built twice over: once element-by-element from its
closed-form description, and once by closing a small natural generating
set.  verify_membership_formula checks the two agree.  The two fixed
exceptional groups (tags g7_13 and g95_5) only have generators, so they
are excluded from that check.
"""

from functools import lru_cache

from .errors import CongruenceViolation, KindModulusMismatch
from .matgroup import Mat, MatrixGroup, mat_mul, mat_pow
from .modfield import epsilon, generator, validate_modulus, _cube_set

# ---- closed-form element sets ----


def _diagonal_elements(r: int) -> list[Mat]:
    return [(a, 0, 0, d) for a in range(1, r) for d in range(1, r)]


def _antidiagonal_elements(r: int) -> list[Mat]:
    return [(0, a, d, 0) for a in range(1, r) for d in range(1, r)]


def _nonsplit_elements(r: int) -> list[Mat]:
    e = epsilon(r)
    return [(a, e * b % r, b, a)
            for a in range(r) for b in range(r) if (a, b) != (0, 0)]


def _nonsplit_reflected_elements(r: int) -> list[Mat]:
    e = epsilon(r)
    return [(c, e * d % r, -d % r, -c % r)
            for c in range(r) for d in range(r) if (c, d) != (0, 0)]


@lru_cache(maxsize=None)
def _nonsplit_generator(r: int) -> Mat:
    """Lex-first element of multiplicative order r^2 - 1 in the nonsplit torus."""
    full = r * r - 1
    for m in sorted(_nonsplit_elements(r)):
        k, x = 1, m
        while x != (1, 0, 0, 1):
            x = mat_mul(x, m, r)
            k += 1
        if k == full:
            return m
    raise AssertionError("nonsplit torus has no generator")  # unreachable


# ---- public constructors ----


def borel(r: int) -> MatrixGroup:
    """Invertible upper-triangular matrices."""
    validate_modulus(r)
    g = generator(r)
    elements = [(a, b, 0, d) for a in range(1, r) for d in range(1, r) for b in range(r)]
    return MatrixGroup(r, elements, ((g, 0, 0, 1), (1, 0, 0, g), (1, 1, 0, 1)))


def split_cartan(r: int) -> MatrixGroup:
    validate_modulus(r)
    g = generator(r)
    return MatrixGroup(r, _diagonal_elements(r), ((g, 0, 0, 1), (1, 0, 0, g)))


def split_cartan_normalizer(r: int) -> MatrixGroup:
    validate_modulus(r)
    g = generator(r)
    elements = _diagonal_elements(r) + _antidiagonal_elements(r)
    return MatrixGroup(r, elements, ((g, 0, 0, 1), (1, 0, 0, g), (0, 1, 1, 0)))


def nonsplit_cartan(r: int) -> MatrixGroup:
    validate_modulus(r)
    return MatrixGroup(r, _nonsplit_elements(r), (_nonsplit_generator(r),))


def nonsplit_cartan_normalizer(r: int) -> MatrixGroup:
    validate_modulus(r)
    elements = _nonsplit_elements(r) + _nonsplit_reflected_elements(r)
    return MatrixGroup(r, elements, (_nonsplit_generator(r), (1, 0, 0, r - 1)))


def nonsplit_cartan_cubes_extended(r: int) -> MatrixGroup:
    """Cubes of the nonsplit torus, extended by the reflection diag(1, -1).

    The reflection normalizes the torus and preserves cubes, so the union
    of the cube subgroup with its reflected coset is a group.
    """
    validate_modulus(r)
    cubes = sorted({mat_pow(m, 3, r) for m in _nonsplit_elements(r)})
    j: Mat = (1, 0, 0, r - 1)
    elements = cubes + [mat_mul(j, m, r) for m in cubes]
    return MatrixGroup(r, elements, (mat_pow(_nonsplit_generator(r), 3, r), j))


def cube_ratio_cartan(r: int) -> MatrixGroup:
    """Diagonal and antidiagonal matrices whose entry ratio is a cube.

    Only defined when r = 1 (mod 3); otherwise every unit is a cube and
    the family degenerates, so that case is rejected.
    """
    validate_modulus(r)
    if r % 3 != 1:
        raise CongruenceViolation(f"cube-ratio family needs r = 1 (mod 3), got r = {r}")
    cubes = _cube_set(r)
    elements = []
    for a in range(1, r):
        for b in range(1, r):
            if a * pow(b, -1, r) % r in cubes:
                elements.append((a, 0, 0, b))
                elements.append((0, a, b, 0))
    g = generator(r)
    g3 = pow(g, 3, r)
    return MatrixGroup(r, elements, ((g, 0, 0, g), (g3, 0, 0, 1), (0, 1, 1, 0)))


_OCT13_GENS: tuple[Mat, ...] = ((2, 0, 0, 2), (2, 0, 0, 3), (0, 12, 1, 0), (1, 1, 12, 1))
_OCT5_GENS: tuple[Mat, ...] = ((2, 0, 0, 1), (1, 0, 0, 2), (0, 4, 1, 0), (1, 1, 1, 4))


def octahedral_group_mod13(r: int = 13) -> MatrixGroup:
    """Fixed order-288 subgroup of GL2(F_13) with octahedral projective image."""
    if r != 13:
        raise KindModulusMismatch(f"this group lives in GL2(F_13), got r = {r}")
    return MatrixGroup.close(_OCT13_GENS, 13)


def octahedral_group_mod5(r: int = 5) -> MatrixGroup:
    """Fixed order-96 subgroup of GL2(F_5) with octahedral projective image."""
    if r != 5:
        raise KindModulusMismatch(f"this group lives in GL2(F_5), got r = {r}")
    return MatrixGroup.close(_OCT5_GENS, 5)


# ---- registry ----

_BUILDERS = {
    "borel": borel,
    "split_cartan": split_cartan,
    "split_cartan_normalizer": split_cartan_normalizer,
    "nonsplit_cartan": nonsplit_cartan,
    "nonsplit_cartan_normalizer": nonsplit_cartan_normalizer,
    "g3": nonsplit_cartan_cubes_extended,
    "g7_13": octahedral_group_mod13,
    "g95_5": octahedral_group_mod5,
    "cube_split": cube_ratio_cartan,
}

_ALIASES = {
    "cs": "split_cartan",
    "cs+": "split_cartan_normalizer",
    "cns": "nonsplit_cartan",
    "cns+": "nonsplit_cartan_normalizer",
    "g7": "g7_13",
    "g95": "g95_5",
    "cube": "cube_split",
}

KINDS = tuple(sorted(_BUILDERS))


def resolve_kind(kind: str) -> str:
    name = _ALIASES.get(kind, kind)
    if name not in _BUILDERS:
        raise KeyError(f"unknown group kind {kind!r}; known: {', '.join(KINDS)}")
    return name


def standard_group(kind: str, r: int) -> MatrixGroup:
    return _BUILDERS[resolve_kind(kind)](r)


# order formulas, checked against construction in the test suite
ORDER_FORMULAS = {
    "borel": lambda r: r * (r - 1) ** 2,
    "split_cartan": lambda r: (r - 1) ** 2,
    "split_cartan_normalizer": lambda r: 2 * (r - 1) ** 2,
    "nonsplit_cartan": lambda r: r * r - 1,
    "nonsplit_cartan_normalizer": lambda r: 2 * (r * r - 1),
    "g3": lambda r: 2 * (r * r - 1) // 3 if r != 3 else 2 * (r * r - 1),
    "cube_split": lambda r: 2 * (r - 1) ** 2 // 3,
    "g7_13": lambda r: 288,
    "g95_5": lambda r: 96,
}

SL2_ORDER_FORMULAS = {
    "borel": lambda r: r * (r - 1),
    "split_cartan": lambda r: r - 1,
    "split_cartan_normalizer": lambda r: 2 * (r - 1),
    "nonsplit_cartan": lambda r: r + 1,
    "nonsplit_cartan_normalizer": lambda r: 2 * (r + 1),
    "g3": lambda r: 2 * (r + 1) // 3,  # valid for r = 2 (mod 3)
}


def verify_membership_formula(kind: str, r: int) -> bool:
    """Check the generator closure equals the element-by-element set."""
    name = resolve_kind(kind)
    if name in ("g7_13", "g95_5"):
        raise ValueError(f"{name} has no closed-form membership description")
    built = _BUILDERS[name](r)
    closed = MatrixGroup.close(built.generators, r)
    return closed == built
