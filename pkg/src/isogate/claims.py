"""Claim registry: every finite computation the package vouches for, as a
named, independently rerunnable check.

Each claim freezes its expected values (closed forms where they exist,
otherwise oracle outputs cross-checked by a second method) and recomputes
them from scratch on demand.  A report compares the two; the aggregate
runner emits a deterministic JSON array, so reruns are diffable except for
timing fields.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .cyclo import (
    cm_isogeny_over_cyclotomic,
    cm_table,
    full_two_torsion_over_cyclotomic,
    is_square_in_cyclotomic,
    quadratic_subfield,
)
from .errors import (
    FactorizationIncomplete,
    InsufficientSamples,
    Undecided,
    UnknownClaim,
)
from .gatefinder import find_gate_groups
from .linaction import acts_freely, fixed_lines, orbits, projective_image
from .matgroup import are_conjugate
from .modcurve import named_curve, torsion_bound_cyclotomic, two_division_shape
from .ratcurves import (
    CurveModel,
    curve_from_j,
    disc_square_class_of_j,
    family_membership,
    frobenius_samples,
    g3_family_j,
    parse_rational_expr,
    surjectivity_certificate,
    two_division_cubic,
    two_torsion_family_j,
)
from .stdgroups import standard_group

SCHEMA = "isogate-report/1"

# the eighteen non-CM j-invariants with a rational 2-torsion point whose
# mod-r images must be certified surjective
FAMILY_J = (
    "-2^2*7^3", "-2^4*3^3", "-2^6", "2^7", "2^4*5^3", "2^11", "2^2*3^6",
    "2^7*3^3", "17^3", "2^5*7^3", "2^5*3^6", "2^4*17^3", "2^3*31^3",
    "2^2*3^6*7^3", "2^2*5^3*13^3", "2*127^3", "2*3^3*43^3", "257^3",
)

# the family parameters t with (t+16)^3/t = j, one per entry of FAMILY_J;
# frozen from an integer divisor search over t | 4096 and reverified
# exactly by the claim
FAMILY_T = (
    "-2", "-4", "-8", "-32", "4", "16", "2", "32", "1", "-128",
    "128", "256", "-512", "-1024", "1024", "-2048", "2048", "4096",
)

# j-invariants the source argument needs to have no rational 2-torsion:
# three from the projective-S4 case at r=13, four from the r >= 17
# square-class cases, two from the r=11 case
NO_TWO_TORSION_J = (
    "2^4*5*13^4*17^3/3^13",
    "-2^12*5^3*11*13^4/3^13",
    "2^18*3^3*13^4*127^3*139^3*157^3*283^3*929/5^13/61^13",
    "-17*373^3/2^17",
    "-17^2*101^3/2",
    "-7*11^3",
    "-7*137^3*2083^3",
    "-11^2",
    "-11*131^3",
)

_ODD_PRIMES_37 = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    params: dict
    status: str  # pass | fail | inconclusive
    expected: object
    computed: object
    elapsed_ms: int

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "claim_id": self.claim_id,
            "params": self.params,
            "status": self.status,
            "expected": self.expected,
            "computed": self.computed,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True)
class Config:
    sample_bound: int = 10 ** 4
    height_bound: int = 1000
    torsion_primes: dict = field(default_factory=dict)  # curve label -> primes

    @classmethod
    def from_json(cls, path: str) -> "Config":
        with open(path) as fh:
            raw = json.load(fh)
        known = {"sample_bound", "height_bound", "torsion_primes"}
        extra = set(raw) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        if "torsion_primes" in raw:
            raw["torsion_primes"] = {
                label: tuple(qs) for label, qs in raw["torsion_primes"].items()
            }
        return cls(**raw)


def _freeze(value):
    """Down-convert to JSON-stable structures; Fractions become strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, bool) or isinstance(value, (int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _freeze(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_freeze(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)}")


def _line_report(group) -> dict:
    dec = orbits(group)
    sizes: dict[str, int] = {}
    for s in dec.sizes:
        sizes[str(s)] = sizes.get(str(s), 0) + 1
    return {
        "order": group.order,
        "free": acts_freely(group),
        "orbit_sizes": sizes,
        "fixed_lines": len(fixed_lines(group)),
    }


# ---- claim bodies ----

def _claim_cartan_lemma(config: Config, moduli) -> tuple[dict, dict]:
    moduli = moduli or _ODD_PRIMES_37
    expected, computed = {}, {}
    for r in moduli:
        expected[str(r)] = {
            "split": {
                "order": 2 * (r - 1),
                "free": True,
                "orbit_sizes": {str(2 * (r - 1)): (r + 1) // 2},
                "fixed_lines": 0,
            },
            "nonsplit": {
                "order": 2 * (r + 1),
                "free": True,
                "orbit_sizes": {str(2 * (r + 1)): (r - 1) // 2},
                "fixed_lines": 0,
            },
        }
        computed[str(r)] = {
            "split": _line_report(standard_group("cs+", r).sl2_part()),
            "nonsplit": _line_report(standard_group("cns+", r).sl2_part()),
        }
    return expected, computed


def _claim_g3_orbits(config: Config, moduli) -> tuple[dict, dict]:
    # a line is fixed exactly when single orbits of size 2(r+1)/3 can fill
    # its r-1 nonzero vectors; 2(r+1)/3 = k(r-1) has the sole solution
    # r=5, k=1, where two eigenlines of the order-4 part appear
    moduli = moduli or (5, 11, 17, 23, 29)
    expected, computed = {}, {}
    for r in moduli:
        n = 2 * (r + 1) // 3
        expected[str(r)] = {
            "order": n,
            "free": True,
            "orbit_sizes": {str(n): (r * r - 1) // n},
            "fixed_lines": 2 if r == 5 else 0,
        }
        computed[str(r)] = _line_report(standard_group("g3", r).sl2_part())
    return expected, computed


_GATE_EXPECTED = {
    # class count, sorted index list, +/- pairs by index rank; the r=5
    # index is not a closed form, it is frozen search output confirmed by
    # the independent generator enumeration
    "5": {"classes": 1, "indices": [30], "pm_pairs": []},
    "7": {"classes": 2, "indices": [56, 112], "pm_pairs": [[0, 1]]},
    "11": {"classes": 2, "indices": [132, 264], "pm_pairs": [[0, 1]]},
    "13": {"classes": 2, "indices": [182, 546], "pm_pairs": []},
}


def _claim_gate_search(config: Config, moduli) -> tuple[dict, dict]:
    moduli = moduli or (5, 7, 11, 13)
    expected, computed = {}, {}
    for r in moduli:
        expected[str(r)] = _GATE_EXPECTED[str(r)]
        res = find_gate_groups(r)
        rank = sorted(range(len(res.indices)), key=res.indices.__getitem__)
        pos = {old: new for new, old in enumerate(rank)}
        pairs = sorted(sorted((pos[i], pos[j])) for i, j in res.plus_minus_pairs)
        computed[str(r)] = {
            "classes": len(res.groups),
            "indices": sorted(res.indices),
            "pm_pairs": [list(p) for p in pairs],
        }
    return expected, computed


def _claim_exc_family(config: Config, moduli) -> tuple[dict, dict]:
    expected = {
        "r5_gate_class_is_cube_torus": True,
        "evaluations": {
            "0": "0",
            "1": str(Fraction(5 ** 4 * 16 ** 3 * 12 ** 3 * 379 ** 3,
                              11 ** 5 * 71 ** 5)),
            "-1": str(Fraction(-(5 ** 4) * 6 ** 3 * 2 ** 3 * 19 ** 3, 11 ** 5)),
        },
        "rational_poles": [],
    }
    gate = find_gate_groups(5).groups[0]
    g3 = standard_group("g3", 5)
    computed = {
        "r5_gate_class_is_cube_torus": are_conjugate(gate, g3) is not None,
        "evaluations": {
            t: str(g3_family_j(Fraction(t))) for t in ("0", "1", "-1")
        },
        "rational_poles": [str(t) for t in _denominator_rational_roots()],
    }
    return expected, computed


def _denominator_rational_roots() -> list[Fraction]:
    # both denominator factors are monic, so integer roots dividing the
    # constant term are the only candidates
    roots = set()
    for coeffs in ((1, 5, 5), (1, 5, 15, 25, 25)):
        for n in (1, 5, 25):
            for t in (n, -n):
                acc = 0
                for c in coeffs:
                    acc = acc * t + c
                if acc == 0:
                    roots.add(Fraction(t))
    return sorted(roots)


def _claim_cube_cartan(config: Config, moduli) -> tuple[dict, dict]:
    moduli = moduli or (7, 13, 19, 31, 37)
    expected, computed = {}, {}
    for r in moduli:
        expected[str(r)] = {
            "order": 2 * (r - 1) ** 2 // 3,
            "sl2_fixed_lines": 0,
        }
        group = standard_group("cube_split", r)
        computed[str(r)] = {
            "order": group.order,
            "sl2_fixed_lines": len(fixed_lines(group.sl2_part())),
        }
    return expected, computed


def _claim_cm_criterion(config: Config, moduli) -> tuple[dict, dict]:
    moduli = moduli or _ODD_PRIMES_37
    expected = {
        "examples": {"-3^3*5^3@7": True, "2^6*3^3@7": False, "2^4*3^3*5^3@7": False},
        "isogeny_moduli": {
            rec.j_expr: [r for r in moduli if (-rec.field_discriminant) % r == 0]
            for rec in cm_table()
        },
    }
    computed = {
        "examples": {
            "-3^3*5^3@7": cm_isogeny_over_cyclotomic(-(3 ** 3) * 5 ** 3, 7),
            "2^6*3^3@7": cm_isogeny_over_cyclotomic(1728, 7),
            "2^4*3^3*5^3@7": cm_isogeny_over_cyclotomic(2 ** 4 * 3 ** 3 * 5 ** 3, 7),
        },
        "isogeny_moduli": {
            rec.j_expr: [
                r for r in moduli if cm_isogeny_over_cyclotomic(rec.j, r)
            ]
            for rec in cm_table()
        },
    }
    return expected, computed


def _claim_family_j(config: Config, moduli) -> tuple[dict, dict]:
    expected = {
        j_expr: {"t": t_expr, "verified": True}
        for j_expr, t_expr in zip(FAMILY_J, FAMILY_T)
    }
    computed = {}
    for j_expr in FAMILY_J:
        j = parse_rational_expr(j_expr)
        roots = family_membership(j)
        entry: dict = {"t": None, "verified": False}
        if roots:
            t = min(roots)
            entry = {
                "t": str(t),
                "verified": two_torsion_family_j(t) == j,
            }
        computed[j_expr] = entry
    return expected, computed


# first root-free primes for the 2-division cubics, frozen from the
# witness search and reverified on every run
_NO_TORSION_WITNESS = (11, 19, 7, 7, 7, 23, 23, 5, 5)


def _claim_exc_2torsion(config: Config, moduli) -> tuple[dict, dict]:
    expected = {
        j_expr: {"two_torsion": False, "witness_prime": w}
        for j_expr, w in zip(NO_TWO_TORSION_J, _NO_TORSION_WITNESS)
    }
    computed = {}
    for j_expr in NO_TWO_TORSION_J:
        cubic = two_division_cubic(parse_rational_expr(j_expr))
        computed[j_expr] = {
            "two_torsion": cubic.shape != "irreducible",
            "witness_prime": cubic.witness_prime,
        }
    return expected, computed


def _claim_surjectivity(config: Config, moduli) -> tuple[dict, dict]:
    moduli = moduli or (11, 13, 17, 19)
    expected: dict = {
        "family": {
            j_expr: {str(r): "certified_surjective" for r in moduli}
            for j_expr in FAMILY_J
        },
        "negative": {"X0(11)@5": "inconclusive", "2^6*3^3@7": "inconclusive"},
    }
    computed: dict = {"family": {}, "negative": {}}
    for j_expr in FAMILY_J:
        curve = curve_from_j(parse_rational_expr(j_expr))
        samples = frobenius_samples(curve, config.sample_bound)
        computed["family"][j_expr] = {
            str(r): surjectivity_certificate(
                curve, r, config.sample_bound, samples=samples
            ).status
            for r in moduli
        }
    computed["negative"]["X0(11)@5"] = surjectivity_certificate(
        named_curve("X0(11)").model, 5, config.sample_bound
    ).status
    computed["negative"]["2^6*3^3@7"] = surjectivity_certificate(
        CurveModel(0, 0, 0, 1, 0), 7, config.sample_bound
    ).status
    return expected, computed


def _torsion_claim(label: str, r: int, gcd_bound: int, points: int,
                   config: Config) -> tuple[dict, dict]:
    curve = named_curve(label)
    qs = config.torsion_primes.get(label)
    report = torsion_bound_cyclotomic(
        curve, r, qs=qs, height_bound=config.height_bound
    )
    expected = {
        "gcd_bound": gcd_bound,
        "rational_points": points,
        "torsion_divides_bound": True,
        "caveat": "upper bound only — rank not verified",
    }
    computed = {
        "gcd_bound": report.gcd_bound,
        "rational_points": report.rational_points_found,
        "torsion_divides_bound": report.gcd_bound % curve.expected_rational_torsion == 0
        and report.gcd_bound % report.rational_points_found == 0,
        "caveat": report.caveat,
    }
    return expected, computed


def _claim_x014(config: Config, moduli) -> tuple[dict, dict]:
    # the gcd over split good primes is 36, strictly above the field
    # torsion order 12 it bounds; both freeze here
    expected, computed = _torsion_claim("X0(14)", 7, 36, 6, config)
    expected["two_division"] = {"shape": "one_rational_root", "disc_class": -7}
    shape = two_division_shape(named_curve("X0(14)"))
    computed["two_division"] = {
        "shape": shape.shape,
        "disc_class": shape.disc_class,
    }
    return expected, computed


def _claim_x020(config: Config, moduli) -> tuple[dict, dict]:
    return _torsion_claim("X0(20)", 5, 12, 6, config)


def _claim_x011(config: Config, moduli) -> tuple[dict, dict]:
    expected, computed = _torsion_claim("X0(11)", 11, 25, 5, config)
    expected["two_division"] = {"shape": "irreducible"}
    computed["two_division"] = {
        "shape": two_division_shape(named_curve("X0(11)")).shape
    }
    return expected, computed


def _claim_disc_7(config: Config, moduli) -> tuple[dict, dict]:
    cases = {"-3^3*5^3": -7, "3^3*5^3*17^3": 7}
    expected = dict(cases)
    computed = {
        expr: disc_square_class_of_j(parse_rational_expr(expr))
        for expr in cases
    }
    return expected, computed


def _claim_sqrt_rule(config: Config, moduli) -> tuple[dict, dict]:
    expected = {
        "subfield": {"5": 5, "7": -7, "17": 17},
        "squares": {"-7@7": True, "7@7": False},
    }
    computed = {
        "subfield": {str(p): quadratic_subfield(p) for p in (5, 7, 17)},
        "squares": {
            "-7@7": is_square_in_cyclotomic(-7, 7),
            "7@7": is_square_in_cyclotomic(7, 7),
        },
    }
    return expected, computed


def _claim_cm_filter(config: Config, moduli) -> tuple[dict, dict]:
    moduli = moduli or (5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    expected = {
        "family_cm": [
            "0", "2^6*3^3", "2^4*3^3*5^3", "2^3*3^3*11^3", "-3^3*5^3",
            "3^3*5^3*17^3", "2^6*5^3",
        ],
        "survivors": {"7": ["-3^3*5^3", "3^3*5^3*17^3"]},
    }
    family_cm = [
        rec.j_expr for rec in cm_table() if family_membership(rec.j)
    ]
    survivors: dict[str, list[str]] = {}
    for r in moduli:
        hits = [
            rec.j_expr
            for rec in cm_table()
            if family_membership(rec.j) and cm_isogeny_over_cyclotomic(rec.j, r)
        ]
        if hits:
            survivors[str(r)] = hits
    computed = {"family_cm": family_cm, "survivors": survivors}
    return expected, computed


def _claim_disc_17_37(config: Config, moduli) -> tuple[dict, dict]:
    classes = {
        "-17*373^3/2^17": -10,
        "-17^2*101^3/2": -10,
        "-7*11^3": -5,
        "-7*137^3*2083^3": -5,
    }
    squares = {"-5@17": False, "-10@17": False, "-5@37": False, "-10@37": False}
    expected = {"disc_classes": dict(classes), "squares": dict(squares)}
    computed = {
        "disc_classes": {
            expr: disc_square_class_of_j(parse_rational_expr(expr))
            for expr in classes
        },
        "squares": {
            key: is_square_in_cyclotomic(int(key.split("@")[0]),
                                         int(key.split("@")[1]))
            for key in squares
        },
    }
    return expected, computed


def _claim_g7_orbits(config: Config, moduli) -> tuple[dict, dict]:
    expected = {
        "order": 288,
        "sl2_order": 24,
        "orbit_count": 7,
        "orbit_sizes": [24] * 7,
    }
    group = standard_group("g7_13", 13)
    sl2 = group.sl2_part()
    dec = orbits(sl2)
    computed = {
        "order": group.order,
        "sl2_order": sl2.order,
        "orbit_count": dec.count,
        "orbit_sizes": sorted(dec.sizes),
    }
    return expected, computed


def _claim_full2(config: Config, moduli) -> tuple[dict, dict]:
    cases = {"-3^3*5^3@7": "yes", "3^3*5^3*17^3@7": "no", "-11^2@11": "no"}
    computed = {}
    for key in cases:
        expr, r = key.split("@")
        decision = full_two_torsion_over_cyclotomic(
            parse_rational_expr(expr), int(r)
        )
        computed[key] = decision.verdict
    return dict(cases), computed


def _claim_g95_s4(config: Config, moduli) -> tuple[dict, dict]:
    expected = {"order": 96, "projective_order": 24, "projective_kind": "S4"}
    group = standard_group("g95_5", 5)
    image = projective_image(group)
    computed = {
        "order": group.order,
        "projective_order": image.order,
        "projective_kind": image.kind,
    }
    return expected, computed


@dataclass(frozen=True)
class ClaimSpec:
    claim_id: str
    description: str
    runner: Callable
    accepts_moduli: bool = False


_REGISTRY: dict[str, ClaimSpec] = {
    spec.claim_id: spec
    for spec in (
        ClaimSpec(
            "cartan-lemma",
            "determinant-one parts of both Cartan normalizers act freely "
            "with no fixed lines, orders 2(r-1) and 2(r+1)",
            _claim_cartan_lemma,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "g3-orbits",
            "the extended cube nonsplit torus has determinant-one part of "
            "order 2(r+1)/3 acting freely; lines survive only at r=5",
            _claim_g3_orbits,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "gate-search",
            "exhaustive search for proper applicable subgroups with "
            "irreducible action and reducible determinant-one part",
            _claim_gate_search,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "exc-family",
            "the unique r=5 gate class is the extended cube torus and the "
            "degree-30 parameterizing map evaluates as frozen",
            _claim_exc_family,
        ),
        ClaimSpec(
            "cube-cartan",
            "the cube-ratio split torus extension has no line fixed by its "
            "determinant-one part",
            _claim_cube_cartan,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "cm-criterion",
            "a CM curve gains an r-isogeny over the r-th cyclotomic field "
            "exactly when r divides its tabulated discriminant",
            _claim_cm_criterion,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "family-j",
            "each of the eighteen listed j-invariants lies on the rational "
            "2-torsion family with an exactly verified parameter",
            _claim_family_j,
        ),
        ClaimSpec(
            "exc-2torsion",
            "the exceptional j-invariants all have trivial rational "
            "2-torsion, certified by root-free witness primes",
            _claim_exc_2torsion,
        ),
        ClaimSpec(
            "surjectivity",
            "mod-r surjectivity certificates for the family curves, plus "
            "pinned inconclusive cases",
            _claim_surjectivity,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "x014-torsion",
            "reduction gcd bound, rational point count, and 2-division "
            "shape for X0(14) over the 7th cyclotomic field",
            _claim_x014,
        ),
        ClaimSpec(
            "disc-7",
            "discriminant square classes -7 and 7 for the two surviving "
            "j-invariants at r=7",
            _claim_disc_7,
        ),
        ClaimSpec(
            "sqrt-rule",
            "quadratic subfield values and the square test in the 7th "
            "cyclotomic field",
            _claim_sqrt_rule,
        ),
        ClaimSpec(
            "cm-filter",
            "the CM j-invariants on the 2-torsion family, and which keep "
            "an r-isogeny for r at least 5",
            _claim_cm_filter,
            accepts_moduli=True,
        ),
        ClaimSpec(
            "disc-17-37",
            "square classes -10 and -5 for the r >= 17 exceptional "
            "j-invariants, none a square in the 17th or 37th cyclotomic field",
            _claim_disc_17_37,
        ),
        ClaimSpec(
            "x020",
            "reduction gcd bound and rational point count for X0(20) over "
            "the 5th cyclotomic field",
            _claim_x020,
        ),
        ClaimSpec(
            "x011",
            "reduction gcd bound, rational point count, and irreducible "
            "2-division cubic for X0(11) over the 11th cyclotomic field",
            _claim_x011,
        ),
        ClaimSpec(
            "g7-orbits",
            "the order-288 exceptional group mod 13: determinant-one part "
            "of order 24 with seven orbits of length 24",
            _claim_g7_orbits,
        ),
        ClaimSpec(
            "full2",
            "full 2-torsion decisions over cyclotomic fields for the three "
            "pinned cases",
            _claim_full2,
        ),
        ClaimSpec(
            "g95-s4",
            "the order-96 group mod 5 has projective image of order 24 "
            "isomorphic to S4",
            _claim_g95_s4,
        ),
    )
}

CLAIM_IDS = tuple(sorted(_REGISTRY))

# acceptance criterion number -> claim ids exercising it
CRITERION_CLAIMS: dict[int, tuple[str, ...]] = {
    1: ("cartan-lemma",),
    2: ("g3-orbits",),
    3: ("gate-search",),
    4: ("gate-search",),
    5: ("cube-cartan",),
    6: ("g7-orbits",),
    7: ("g95-s4",),
    8: ("disc-7", "disc-17-37"),
    9: ("sqrt-rule", "disc-17-37"),
    10: ("full2",),
    11: ("family-j", "exc-2torsion"),
    12: ("surjectivity",),
    13: ("x014-torsion", "x020", "x011"),
    14: CLAIM_IDS,
}


def claim_description(claim_id: str) -> str:
    if claim_id not in _REGISTRY:
        raise UnknownClaim(f"no claim {claim_id!r}; known: {', '.join(CLAIM_IDS)}")
    return _REGISTRY[claim_id].description


def run_claim(
    claim_id: str,
    moduli: tuple[int, ...] | None = None,
    config: Config | None = None,
) -> ClaimReport:
    if claim_id not in _REGISTRY:
        raise UnknownClaim(f"no claim {claim_id!r}; known: {', '.join(CLAIM_IDS)}")
    spec = _REGISTRY[claim_id]
    if moduli and not spec.accepts_moduli:
        raise ValueError(f"claim {claim_id} does not take a moduli list")
    config = config or Config()
    params: dict = {}
    if moduli:
        params["r"] = list(moduli)
    start = time.monotonic()
    try:
        expected, computed = spec.runner(config, moduli)
        status = "pass" if expected == computed else "fail"
    except (Undecided, FactorizationIncomplete, InsufficientSamples) as exc:
        expected, computed = None, {"error": str(exc)}
        status = "inconclusive"
    elapsed = int((time.monotonic() - start) * 1000)
    return ClaimReport(
        claim_id, params, status, _freeze(expected), _freeze(computed), elapsed
    )


def run_all(
    output_path: str | None = None,
    config: Config | None = None,
    stream=None,
) -> tuple[ClaimReport, ...]:
    stream = stream if stream is not None else sys.stdout
    reports = tuple(run_claim(cid, config=config) for cid in CLAIM_IDS)
    width = max(len(cid) for cid in CLAIM_IDS)
    for rep in reports:
        print(f"{rep.claim_id:<{width}}  {rep.status:<12} {rep.elapsed_ms:>7} ms",
              file=stream)
    tally = {"pass": 0, "fail": 0, "inconclusive": 0}
    for rep in reports:
        tally[rep.status] += 1
    print(
        f"{len(reports)} claims: {tally['pass']} pass, {tally['fail']} fail, "
        f"{tally['inconclusive']} inconclusive",
        file=stream,
    )
    if output_path is not None:
        write_reports(output_path, reports)
    return reports


def write_reports(path: str, reports) -> None:
    payload = json.dumps(
        [rep.to_dict() for rep in reports], indent=2, sort_keys=True
    )
    with open(path, "w") as fh:
        fh.write(payload + "\n")
