"""Arithmetic in the prime field F_r for small odd moduli.

Residue classes (squares, cubes) are computed by exhaustive enumeration
and cached per modulus.  The supported moduli are the odd primes from
MODULUS_MIN to MODULUS_MAX.
"""

from functools import lru_cache

from .errors import CompositeModulus, ZeroInput

MODULUS_MIN = 3
MODULUS_MAX = 97

_SMALL_PRIMES = (
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)


def validate_modulus(r: int) -> int:
    """Return r if it is a supported odd prime, else raise CompositeModulus."""
    if not isinstance(r, int) or r not in _SMALL_PRIMES:
        raise CompositeModulus(f"modulus must be an odd prime in [{MODULUS_MIN}, {MODULUS_MAX}], got {r!r}")
    return r


def supported_moduli() -> tuple[int, ...]:
    return _SMALL_PRIMES


@lru_cache(maxsize=None)
def _square_set(r: int) -> frozenset:
    return frozenset(x * x % r for x in range(1, r))


@lru_cache(maxsize=None)
def _cube_set(r: int) -> frozenset:
    return frozenset(pow(x, 3, r) for x in range(1, r))


def is_square(a: int, r: int) -> bool:
    """Whether a is a nonzero square mod r.  a = 0 raises ZeroInput."""
    validate_modulus(r)
    if a % r == 0:
        raise ZeroInput(f"residue test needs a unit, got 0 mod {r}")
    return a % r in _square_set(r)


def is_cube(a: int, r: int) -> bool:
    """Whether a is a nonzero cube mod r.  a = 0 raises ZeroInput."""
    validate_modulus(r)
    if a % r == 0:
        raise ZeroInput(f"residue test needs a unit, got 0 mod {r}")
    return a % r in _cube_set(r)


@lru_cache(maxsize=None)
def epsilon(r: int) -> int:
    """Fixed non-residue used to model the quadratic extension of F_r.

    -1 when r = 3 (mod 4), otherwise the smallest non-residue >= 2.
    """
    validate_modulus(r)
    if r % 4 == 3:
        return r - 1
    squares = _square_set(r)
    for c in range(2, r):
        if c not in squares:
            return c
    raise AssertionError("no non-residue found")  # unreachable for prime r > 2


def element_order(a: int, r: int) -> int:
    """Multiplicative order of the unit a mod r."""
    validate_modulus(r)
    a %= r
    if a == 0:
        raise ZeroInput(f"order of 0 mod {r} is undefined")
    k, x = 1, a
    while x != 1:
        x = x * a % r
        k += 1
    return k


@lru_cache(maxsize=None)
def generator(r: int) -> int:
    """Smallest generator of the unit group mod r."""
    validate_modulus(r)
    for g in range(2, r):
        if element_order(g, r) == r - 1:
            return g
    raise AssertionError("no generator found")  # unreachable for prime r


def generates_units(values, r: int) -> bool:
    """Whether the given units together generate the full unit group mod r."""
    validate_modulus(r)
    seen = {1}
    frontier = [1]
    vals = [v % r for v in values if v % r != 0]
    while frontier:
        x = frontier.pop()
        for v in vals:
            y = x * v % r
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == r - 1
