"""Point counting over prime fields and torsion bounds over Q(zeta_r) for
the named genus-one modular curves, via reduction at split primes.

Torsion injects into E(F_q) at any odd prime q of good reduction that
splits completely in the field, and q splits completely in Q(zeta_r)
exactly when q = 1 (mod r).  The gcd of a few such counts is therefore an
upper bound for the torsion order; a direct height-bounded point search
supplies the matching lower bound.  Nothing here touches ranks, so every
report states that the bound is one-sided.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import BadReduction, NoValidPrimes
from .modfield import validate_modulus
from .pointcount import count_by_x_scan
from .ratcurves import CubicFactorType, CurveModel, _cubic_shape, is_probable_prime

_CURVE_FILE = "x0_curves.txt"
_POINT_CAP = 16  # order search cutoff; rational torsion orders stay below it

RANK_CAVEAT = "upper bound only — rank not verified"

Point = tuple[Fraction, Fraction] | None


def negate(model: CurveModel, pt: Point) -> Point:
    if pt is None:
        return None
    x, y = pt
    return (x, -y - model.a1 * x - model.a3)


def add_points(model: CurveModel, p1: Point, p2: Point) -> Point:
    """Chord-tangent addition on a long Weierstrass model, exact."""
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    a1, a2, a3, a4, a6 = model.coefficients()
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2 and y1 + y2 + a1 * x2 + a3 == 0:
        return None
    if p1 == p2:
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / (
            2 * y1 + a1 * x1 + a3
        )
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return (x3, y3)


def point_order(model: CurveModel, pt: Point, cap: int = _POINT_CAP) -> int | None:
    """Order of pt in the group law, or None if it exceeds cap."""
    acc = pt
    for n in range(1, cap + 1):
        if acc is None:
            return n
        acc = add_points(model, acc, pt)
    return None


def on_curve(model: CurveModel, pt: Point) -> bool:
    if pt is None:
        return True
    a1, a2, a3, a4, a6 = model.coefficients()
    x, y = pt
    return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6


@dataclass(frozen=True)
class NamedCurve:
    label: str
    model: CurveModel
    expected_rational_torsion: int


@dataclass(frozen=True)
class TorsionBoundReport:
    curve_label: str
    r: int
    primes: tuple[int, ...]
    counts: tuple[int, ...]
    gcd_bound: int
    rational_points_found: int
    caveat: str = RANK_CAVEAT


def _is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    if n & 63 not in _SQ64:
        return False
    return math.isqrt(n) ** 2 == n


_SQ64 = {(i * i) & 63 for i in range(64)}


def rational_point_search(model: CurveModel, height_bound: int) -> tuple[Point, ...]:
    """All affine points x = a/b^2, y = c/b^3 with |a|, |b|, |c| bounded.

    Clearing denominators turns the curve equation into a monic quadratic
    in c with integer coefficients per (a, b), so each candidate costs one
    discriminant square test.  On an integral model every rational point
    has this shape, and torsion points on the named minimal models land
    well inside bound 1000.
    """
    a1, a2, a3, a4, a6 = (int(c) for c in model.coefficients())
    found = []
    for b in range(1, height_bound + 1):
        b2, b3 = b * b, b * b * b
        b4, b6 = b2 * b2, b3 * b3
        for a in range(-height_bound, height_bound + 1):
            if b > 1 and math.gcd(a, b) != 1:
                continue
            p = a1 * a * b + a3 * b3
            q = ((a + a2 * b2) * a + a4 * b4) * a + a6 * b6
            disc = p * p + 4 * q
            if not _is_perfect_square(disc):
                continue
            root = math.isqrt(disc)
            for c2 in (-p + root, -p - root):
                if c2 % 2:
                    continue
                c = c2 // 2
                if abs(c) > height_bound:
                    continue
                pt = (Fraction(a, b2), Fraction(c, b3))
                if pt not in found:
                    found.append(pt)
    found.sort()
    return tuple(found)


def count_points(model: CurveModel, q: int) -> int:
    """#E(F_q) with the point at infinity, by exhaustive x-scan."""
    if not is_probable_prime(q) or q == 2:
        raise ValueError(f"need an odd prime, got {q}")
    if q > 10 ** 6:
        raise ValueError(f"prime {q} above the 10^6 scan bound")
    if not model.is_integral():
        raise ValueError("integral model required")
    if int(model.discriminant()) % q == 0:
        raise BadReduction(f"discriminant vanishes mod {q}")
    return count_by_x_scan(int(model.b2), int(model.b4), int(model.b6), q)


def good_split_primes(model: CurveModel, r: int, how_many: int) -> tuple[int, ...]:
    """First primes q = 1 (mod r) above r with good reduction."""
    validate_modulus(r)
    disc = int(model.discriminant())
    primes = []
    q = r + 1
    while len(primes) < how_many:
        q += r
        if q > 10 ** 6:
            raise NoValidPrimes(f"no usable primes = 1 mod {r} below 10^6")
        if is_probable_prime(q) and disc % q != 0:
            primes.append(q)
    return tuple(primes)


def _load_curves() -> dict[str, NamedCurve]:
    text = resources.files("isogate.data").joinpath(_CURVE_FILE).read_text("ascii")
    curves: dict[str, NamedCurve] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, *rest = line.split()
        a1, a2, a3, a4, a6, torsion = (int(v) for v in rest)
        curve = NamedCurve(label, CurveModel(a1, a2, a3, a4, a6), torsion)
        _validate_curve(curve)
        curves[label] = curve
    return curves


def _validate_curve(curve: NamedCurve) -> None:
    # CurveModel construction already rejected singular models
    model = curve.model
    points = rational_point_search(model, 50)
    orders = {point_order(model, pt) for pt in points}
    if curve.expected_rational_torsion not in orders:
        raise ValueError(
            f"{curve.label}: no rational point of order "
            f"{curve.expected_rational_torsion} found"
        )
    for q in (101, 103):
        if int(model.discriminant()) % q:
            n = count_points(model, q)
            if abs(n - (q + 1)) > 2 * math.isqrt(4 * q):
                raise ValueError(f"{curve.label}: Hasse violation at {q}")


_CURVES: dict[str, NamedCurve] | None = None


def named_curves() -> dict[str, NamedCurve]:
    global _CURVES
    if _CURVES is None:
        _CURVES = _load_curves()
    return _CURVES


def named_curve(label: str) -> NamedCurve:
    curves = named_curves()
    if label not in curves:
        raise KeyError(f"unknown curve {label!r}; have {sorted(curves)}")
    return curves[label]


def torsion_bound_cyclotomic(
    curve: NamedCurve,
    r: int,
    qs: tuple[int, ...] | None = None,
    height_bound: int = 1000,
) -> TorsionBoundReport:
    """Gcd of #E(F_q) over split good primes q; an upper torsion bound.

    The default prime list is the first eight good primes = 1 (mod r)
    above r, so reports are deterministic.  rational_points_found counts
    the height-bounded search hits plus the point at infinity.
    """
    validate_modulus(r)
    model = curve.model
    if qs is None:
        qs = good_split_primes(model, r, 8)
    else:
        qs = tuple(qs)
        if not qs:
            raise NoValidPrimes("empty prime list")
        disc = int(model.discriminant())
        for q in qs:
            if q % r != 1:
                raise ValueError(f"{q} is not 1 mod {r}")
            if disc % q == 0:
                raise BadReduction(f"bad reduction at {q}")
    counts = tuple(count_points(model, q) for q in sorted(qs))
    bound = math.gcd(*counts)
    found = len(rational_point_search(model, height_bound)) + 1
    return TorsionBoundReport(
        curve.label, r, tuple(sorted(qs)), counts, bound, found
    )


def two_division_shape(curve: NamedCurve) -> CubicFactorType:
    """Factorization shape of the completed-square 2-division cubic."""
    model = curve.model
    return _cubic_shape(1, model.b2, 8 * model.b4, 16 * model.b6)
