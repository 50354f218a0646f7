"""Exact elliptic-curve arithmetic over Q.

Models from j-invariants, discriminants and their square classes,
2-division cubic analysis with exact certificates in both directions,
the two parameterized j-families, and surjectivity certification of the
mod-r Galois image from Frobenius (trace, det) samples.

All rational arithmetic uses fractions.Fraction; nothing here is floating
point.  Root finding never factors the (possibly 40-digit) coefficients:
positive answers come from exact bisection plus verification, negative
ones from a root-free reduction at a witness prime.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (FactorizationIncomplete, InsufficientSamples,
                     PoleAtParameter, SingularCurve, Undecided, ZeroParameter)
from .modfield import generates_units, validate_modulus, _square_set
from .pointcount import count_by_x_scan, primes_upto

Rational = Fraction | int


# ---- factored rational expression syntax ----

def parse_rational_expr(text: str) -> Fraction:
    """Parse 'n', 'n/d', or factored forms like '-17*373^3/2^17'.

    Grammar: optional leading minus, then integer atoms with optional
    '^exponent', combined left-to-right by '*' and '/'.  Unicode minus
    signs and superscripts are normalized away first.
    """
    s = text.strip().replace("−", "-").replace(" ", "")
    if not s:
        raise ValueError("empty rational expression")
    negative = s.startswith("-")
    if negative:
        s = s[1:]
    value = Fraction(1)
    op = "*"
    for piece in _tokenize_factors(s):
        if piece in ("*", "/"):
            op = piece
            continue
        if "^" in piece:
            base_s, _, exp_s = piece.partition("^")
            atom = Fraction(int(base_s)) ** int(exp_s)
        else:
            atom = Fraction(int(piece))
        value = value * atom if op == "*" else value / atom
    return -value if negative else value


def _tokenize_factors(s: str):
    token = ""
    for ch in s:
        if ch in "*/":
            if not token:
                raise ValueError(f"misplaced operator in {s!r}")
            yield token
            yield ch
            token = ""
        elif ch.isdigit() or ch == "^":
            token += ch
        else:
            raise ValueError(f"unexpected character {ch!r} in rational expression")
    if not token:
        raise ValueError(f"trailing operator in {s!r}")
    yield token


def format_rational(q: Rational) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# ---- primality and the factoring pipeline ----

_TRIAL_LIMIT = 10 ** 6
_COFACTOR_CAP = 10 ** 12
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24 with these bases."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, c: int, max_iters: int):
    """One bounded Brent-cycle attempt at a nontrivial factor of odd composite n."""
    batch = 128
    y, g, q_acc = 2, 1, 1
    cycle, iters = 1, 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(cycle):
            y = (y * y + c) % n
        k = 0
        while k < cycle and g == 1:
            ys = y
            steps = min(batch, cycle - k)
            for _ in range(steps):
                y = (y * y + c) % n
                q_acc = q_acc * abs(x - y) % n
            g = math.gcd(q_acc, n)
            k += steps
            iters += steps
        cycle *= 2
        if iters >= max_iters:
            return None
    if g == n:
        # backtrack one step at a time to recover the factor the batch skipped
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            iters += 1
            if iters >= max_iters + batch:
                return None
    return g if 1 < g < n else None


@lru_cache(maxsize=1)
def _trial_primes():
    return primes_upto(_TRIAL_LIMIT)


def _factor_positive(n: int) -> dict[int, int]:
    """Prime exponents of n >= 1; FactorizationIncomplete past the effort cap."""
    out: dict[int, int] = {}
    for p in _trial_primes():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [(n, 1)]
    while stack:
        m, mult = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + mult
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.append((root, 2 * mult))
            continue
        factor = None
        for c in (1, 3):
            factor = _brent_rho(m, c, max_iters=10 ** 6)
            if factor:
                break
        if factor is None:
            if m > _COFACTOR_CAP:
                raise FactorizationIncomplete(f"cofactor {m} resisted the pipeline")
            raise FactorizationIncomplete(f"cofactor {m} unexpectedly hard")  # not reached in practice
        stack.append((factor, mult))
        stack.append((m // factor, mult))
    return out


def squarefree_part(q: Rational) -> int:
    """The unique squarefree integer d with q/d a square in Q."""
    q = Fraction(q)
    if q == 0:
        raise ValueError("0 has no square class")
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in _factor_positive(abs(n)).items():
        if e % 2:
            out *= p
    return out


# ---- Weierstrass models ----

@dataclass(frozen=True)
class CurveModel:
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""
    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.discriminant() == 0:
            raise SingularCurve(f"discriminant 0 for {self}")

    @classmethod
    def short(cls, a: Rational, b: Rational) -> "CurveModel":
        return cls(0, 0, 0, Fraction(a), Fraction(b))

    @property
    def b2(self) -> Fraction:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> Fraction:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Fraction:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> Fraction:
        return (self.a1 * self.a1 * self.a6 + 4 * self.a2 * self.a6
                - self.a1 * self.a3 * self.a4 + self.a2 * self.a3 * self.a3
                - self.a4 * self.a4)

    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self) -> Fraction:
        c4 = self.b2 * self.b2 - 24 * self.b4
        return c4 ** 3 / self.discriminant()

    def is_integral(self) -> bool:
        return all(getattr(self, a).denominator == 1
                   for a in ("a1", "a2", "a3", "a4", "a6"))

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


def discriminant(curve: CurveModel) -> Fraction:
    return curve.discriminant()


def curve_from_j(j: Rational) -> CurveModel:
    """A fixed model with the given j-invariant; any twist works downstream."""
    j = Fraction(j)
    if j == 0:
        return CurveModel.short(0, 1)
    if j == 1728:
        return CurveModel.short(1, 0)
    k = 1728 - j
    return CurveModel.short(3 * j * k, 2 * j * k * k)


def quadratic_twist(curve: CurveModel, d: Rational) -> CurveModel:
    """Twist of a short-form model by d: (A, B) -> (d^2 A, d^3 B)."""
    if (curve.a1, curve.a2, curve.a3) != (0, 0, 0):
        raise ValueError("twisting implemented for short models only")
    d = Fraction(d)
    return CurveModel.short(d * d * curve.a4, d ** 3 * curve.a6)


def disc_square_class_of_j(j: Rational) -> int:
    """Square class shared by the discriminants of all curves with this j."""
    j = Fraction(j)
    if j == 1728:
        raise ValueError("j = 1728 has twists in distinct discriminant classes")
    return squarefree_part(j - 1728)


# ---- exact root extraction for cubics ----

def _poly_eval(coeffs, x):
    out = 0
    for c in coeffs:
        out = out * x + c
    return out


def _poly_derivative(coeffs):
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def _poly_divmod(num, den):
    num = [Fraction(c) for c in num]
    den = [Fraction(c) for c in den]
    quot = []
    while len(num) >= len(den):
        lead = num[0] / den[0]
        quot.append(lead)
        for i in range(len(den)):
            num[i] -= lead * den[i]
        assert num[0] == 0
        num.pop(0)
    while num and num[0] == 0 and len(num) > 1:
        num.pop(0)
    return quot, num


def _poly_gcd(p, q):
    p = [Fraction(c) for c in p]
    q = [Fraction(c) for c in q]
    while any(c != 0 for c in q):
        _, rem = _poly_divmod(p, q)
        if all(c == 0 for c in rem):
            p, q = q, []
        else:
            p, q = q, rem
    return [c / p[0] for c in p]


def _squarefree_reduction(coeffs):
    """Divide out repeated factors; returns primitive integer coefficients."""
    gcd = _poly_gcd(coeffs, _poly_derivative(coeffs))
    if len(gcd) > 1:
        coeffs, rem = _poly_divmod(coeffs, gcd)
        assert all(c == 0 for c in rem)
    lcm = 1
    for c in coeffs:
        c = Fraction(c)
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(Fraction(c) * lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, abs(c))
    return [c // content for c in ints]


def _crit_floor(a: int, d: int, sign: int) -> tuple[int, bool]:
    """floor((-a + sign*sqrt(d))/3) exactly, plus whether the value is integral.

    Comparisons against sqrt(d) are done on squares, so the result is exact
    for arbitrarily large integers.
    """
    s = math.isqrt(d)
    base = (-a + sign * s) // 3
    best = base - 2
    for n in (base - 1, base, base + 1):
        t = 3 * n + a  # n <= crit  <=>  t <= sign*sqrt(d)
        if sign < 0:
            ok = t <= 0 and t * t >= d
        else:
            ok = t <= 0 or t * t <= d
        if ok:
            best = n
    is_integral = s * s == d and (-a + sign * s) % 3 == 0
    return best, is_integral


def _monotone_integer_root(coeffs, lo: int, hi: int, increasing: bool):
    """The integer root in [lo, hi], where the polynomial is monotone."""
    while lo <= hi:
        mid = (lo + hi) // 2
        val = _poly_eval(coeffs, mid)
        if val == 0:
            return mid
        if (val < 0) == increasing:
            lo = mid + 1
        else:
            hi = mid - 1
    return None


def _integer_roots(coeffs: list[int]) -> list[int]:
    """All integer roots of a squarefree monic integer polynomial, degree <= 3.

    The real line is cut at the critical points into monotone regions; a
    binary search on each region finds its root, if any.  No coefficient
    is ever factored, so 40-digit constants are fine.
    """
    assert coeffs[0] == 1
    bound = 1 + max(abs(c) for c in coeffs)
    regions = [(-bound, bound, True)]
    if len(coeffs) == 3:
        a = coeffs[1]
        vertex_floor = (-a) // 2
        vertex_ceil = vertex_floor if a % 2 == 0 else vertex_floor + 1
        regions = [(-bound, vertex_floor, False), (vertex_ceil, bound, True)]
    elif len(coeffs) == 4:
        a, b = coeffs[1], coeffs[2]
        d = a * a - 3 * b
        if d > 0:
            lo_floor, lo_int = _crit_floor(a, d, -1)
            hi_floor, hi_int = _crit_floor(a, d, +1)
            lo_ceil = lo_floor if lo_int else lo_floor + 1
            hi_ceil = hi_floor if hi_int else hi_floor + 1
            regions = [(-bound, lo_floor, True),
                       (lo_ceil, hi_floor, False),
                       (hi_ceil, bound, True)]
    roots = set()
    for lo, hi, increasing in regions:
        root = _monotone_integer_root(coeffs, lo, hi, increasing)
        if root is not None:
            roots.add(root)
    return sorted(roots)


def rational_roots_cubic(c3: Rational, c2: Rational, c1: Rational, c0: Rational) -> list[Fraction]:
    """All distinct rational roots of c3 x^3 + c2 x^2 + c1 x + c0, exactly.

    The polynomial is made squarefree and primitive, then rescaled to a
    monic integer polynomial whose rational roots are integers; every
    candidate is verified against the original coefficients.
    """
    coeffs = [Fraction(c) for c in (c3, c2, c1, c0)]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        raise ValueError("degenerate polynomial")
    ints = _squarefree_reduction(coeffs)
    lead = ints[0]
    # y = lead * x turns lead*x^3 + ... into a monic polynomial in y
    monic = [1] + [ints[i] * lead ** (i - 1) for i in range(1, len(ints))]
    roots = sorted(Fraction(y, lead) for y in _integer_roots(monic))
    verified = [x for x in roots if _poly_eval([Fraction(c) for c in (c3, c2, c1, c0)], x) == 0]
    assert len(verified) == len(roots)
    return verified


_WITNESS_PRIMES = tuple(p for p in primes_upto(2000) if p > 3)


def root_free_witness(coeffs) -> int | None:
    """A prime q not dividing the leading coefficient modulo which the
    polynomial has no root; certifies the absence of rational roots."""
    ints = _squarefree_reduction([Fraction(c) for c in coeffs])
    for q in _WITNESS_PRIMES:
        if ints[0] % q == 0:
            continue
        reduced = [c % q for c in ints]
        if all(_poly_eval(reduced, x) % q for x in range(q)):
            return q
    return None


# ---- 2-division cubic ----

@dataclass(frozen=True)
class CubicFactorType:
    shape: str  # three_rational_roots | one_rational_root | irreducible
    disc_class: int
    roots: tuple[Fraction, ...]
    witness_prime: int | None


def _cubic_shape(c3, c2, c1, c0) -> CubicFactorType:
    roots = rational_roots_cubic(c3, c2, c1, c0)
    c3, c2, c1, c0 = (Fraction(c) for c in (c3, c2, c1, c0))
    disc = (18 * c3 * c2 * c1 * c0 - 4 * c2 ** 3 * c0 + c2 * c2 * c1 * c1
            - 4 * c3 * c1 ** 3 - 27 * c3 * c3 * c0 * c0)
    disc_class = squarefree_part(disc) if disc != 0 else 1
    if len(roots) >= 2:
        shape = "three_rational_roots"
    elif len(roots) == 1:
        shape = "one_rational_root"
    else:
        shape = "irreducible"
        witness = root_free_witness([c3, c2, c1, c0])
        if witness is None:
            raise Undecided("no rational root found and no root-free prime witness")
        return CubicFactorType(shape, disc_class, (), witness)
    return CubicFactorType(shape, disc_class, tuple(roots), None)


def two_division_cubic(j: Rational) -> CubicFactorType:
    """Factorization shape over Q of the 2-division cubic x^3 + Ax + B."""
    curve = curve_from_j(j)
    return _cubic_shape(1, 0, curve.a4, curve.a6)


def has_rational_two_torsion(j: Rational) -> bool:
    return two_division_cubic(j).shape != "irreducible"


# ---- the two j-families ----

def two_torsion_family_j(t: Rational) -> Fraction:
    t = Fraction(t)
    if t == 0:
        raise ZeroParameter("family parameter t = 0 is outside the domain")
    return (t + 16) ** 3 / t


def family_membership(j: Rational) -> tuple[Fraction, ...]:
    """All rational t with (t+16)^3/t = j, via the cleared cubic in t."""
    j = Fraction(j)
    d, n = j.denominator, j.numerator
    roots = rational_roots_cubic(d, 48 * d, 768 * d - n, 4096 * d)
    return tuple(t for t in roots if t != 0)


def g3_family_j(t: Rational) -> Fraction:
    """Exact evaluation of the degree-30 exceptional j-map at rational t."""
    t = Fraction(t)
    den1 = t * t + 5 * t + 5
    den2 = t ** 4 + 5 * t ** 3 + 15 * t * t + 25 * t + 25
    if den1 == 0 or den2 == 0:
        raise PoleAtParameter(f"denominator vanishes at t = {t}")
    num = (5 ** 4 * t ** 3
           * (t * t + 5 * t + 10) ** 3
           * (2 * t * t + 5 * t + 5) ** 3
           * (4 * t ** 4 + 30 * t ** 3 + 95 * t * t + 150 * t + 100) ** 3)
    return num / (den1 ** 5 * den2 ** 5)


# ---- surjectivity certification ----

@dataclass(frozen=True)
class SurjectivityReport:
    status: str  # certified_surjective | inconclusive
    r: int
    sample_bound: int
    sample_count: int
    criteria: tuple[tuple[str, bool], ...]

    @property
    def certified(self) -> bool:
        return self.status == "certified_surjective"


def frobenius_samples(curve: CurveModel, bound: int) -> list[tuple[int, int]]:
    """(q, a_q) at every odd prime q <= bound of good reduction."""
    if not curve.is_integral():
        raise ValueError("Frobenius sampling needs an integral model")
    disc_num = abs(curve.discriminant().numerator)
    out = []
    for q in primes_upto(bound):
        if q == 2 or disc_num % q == 0:
            continue
        count = count_by_x_scan(int(curve.b2) % q, int(curve.b4) % q,
                                int(curve.b6) % q, q)
        out.append((q, q + 1 - count))
    return out


def certificate_criteria(pairs, r: int) -> tuple[tuple[str, bool], ...]:
    """Evaluate the four certification criteria on (trace, det) pairs mod r.

    (i) and (ii) see both quadratic types of maximal torus, (iii) forces a
    surjective determinant, and (iv) rules out the finitely many projective
    images all of whose elements have projective order at most 5.  The same
    rule is applied to subgroup element data by the soundness oracle in the
    test suite, so Frobenius data and group data cannot drift apart.
    """
    validate_modulus(r)
    squares = _square_set(r)
    crit_nonsquare = crit_square = crit_excluder = False
    dets = set()
    for trace, det in pairs:
        trace %= r
        det %= r
        if det == 0:
            continue
        dets.add(det)
        disc = (trace * trace - 4 * det) % r
        if trace != 0 and disc != 0:
            if disc in squares:
                crit_square = True
            else:
                crit_nonsquare = True
        if trace != 0:
            u = trace * trace * pow(det, -1, r) % r
            if u not in (0, 1, 2, 4) and (u * u - 3 * u + 1) % r != 0:
                crit_excluder = True
    return (
        ("nonsquare_frobenius_disc", crit_nonsquare),
        ("square_frobenius_disc", crit_square),
        ("determinants_generate", generates_units(dets, r)),
        ("projective_order_above_5", crit_excluder),
    )


def surjectivity_certificate(curve: CurveModel, r: int, sample_bound: int = 10 ** 4,
                             samples=None) -> SurjectivityReport:
    """Certify the mod-r image is all of GL2(F_r), or report inconclusive.

    Certification requires all four sample criteria; the combination is
    sound for every r >= 5 (no proper subgroup can satisfy it), so a
    certified answer is never a false positive.  Precomputed (q, a_q)
    samples may be passed in to share point counting across moduli.
    """
    validate_modulus(r)
    if r < 5:
        raise ValueError("certification needs r >= 5")
    if samples is None:
        samples = frobenius_samples(curve, sample_bound)
    usable = [(a_q % r, q % r) for q, a_q in samples if q != r]
    if not usable:
        raise InsufficientSamples(f"no good primes <= {sample_bound}")
    criteria = certificate_criteria(usable, r)
    status = "certified_surjective" if all(ok for _, ok in criteria) else "inconclusive"
    return SurjectivityReport(status, r, sample_bound, len(usable), criteria)
