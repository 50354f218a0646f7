import random
from fractions import Fraction

import pytest

from isogate.errors import (InsufficientSamples, SingularCurve, Undecided,
                            ZeroParameter)
from isogate.matgroup import mat_det, mat_trace
from isogate.ratcurves import (CurveModel, certificate_criteria, curve_from_j,
                               disc_square_class_of_j, discriminant,
                               family_membership, format_rational,
                               frobenius_samples, g3_family_j,
                               is_probable_prime, parse_rational_expr,
                               quadratic_twist, rational_roots_cubic,
                               root_free_witness, squarefree_part,
                               surjectivity_certificate, two_division_cubic,
                               two_torsion_family_j, has_rational_two_torsion)
from isogate.stdgroups import octahedral_group_mod5
from isogate.subgroup_enum import subgroup_classes


def test_parse_rational_expr():
    assert parse_rational_expr("12") == 12
    assert parse_rational_expr("-2^6") == -64
    assert parse_rational_expr("2^4*17^3") == 16 * 4913
    assert parse_rational_expr("-17*373^3/2^17") == Fraction(-17 * 373 ** 3, 2 ** 17)
    assert parse_rational_expr("-7/9") == Fraction(-7, 9)
    # division folds left to right: a/b/c = a/(b*c)
    assert parse_rational_expr("100/2/5") == 10
    assert parse_rational_expr("−2^15") == -32768  # unicode minus


def test_parse_rational_expr_errors():
    for bad in ("", "(2)", "2^", "*3", "3*", "2**3", "a"):
        with pytest.raises(ValueError):
            parse_rational_expr(bad)


def test_format_rational():
    assert format_rational(Fraction(-7, 9)) == "-7/9"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(5) == "5"


def test_is_probable_prime():
    assert is_probable_prime(2) and is_probable_prime(7717)
    assert not is_probable_prime(1) and not is_probable_prime(7717 * 7717)
    assert is_probable_prime(2 ** 61 - 1)


def test_squarefree_part():
    assert squarefree_part(12) == 3
    assert squarefree_part(Fraction(-7, 9)) == -7
    assert squarefree_part(-595520890) == -10
    assert -10 * 7717 ** 2 == -595520890
    assert squarefree_part(49) == 1
    assert squarefree_part(Fraction(2, 3)) == 6


def test_curve_model():
    assert CurveModel.short(1, 0).discriminant() == -64
    assert CurveModel.short(0, 1).discriminant() == -432
    assert CurveModel.short(-1, 0).discriminant() == 64
    assert discriminant(CurveModel.short(1, 0)) == -64
    with pytest.raises(SingularCurve):
        CurveModel.short(0, 0)
    with pytest.raises(SingularCurve):
        CurveModel.short(-3, 2)  # (x-1)^2 (x+2)
    long_model = CurveModel(0, -1, 1, -10, -20)
    assert long_model.discriminant() == -161051  # -11^5
    assert not CurveModel.short(Fraction(1, 2), 1).is_integral()


def test_curve_from_j():
    assert curve_from_j(0).coefficients()[3:] == (0, 1)
    assert curve_from_j(1728).coefficients()[3:] == (1, 0)
    c = curve_from_j(2916)
    assert c.a4 == 3 * 2916 * -1188
    assert c.a6 == 2 * 2916 * 1188 ** 2
    assert c.j_invariant() == 2916


def _random_j(rng):
    if rng.random() < 0.3:
        return Fraction(rng.randint(-10 ** 6, 10 ** 6),
                        rng.randint(1, 10 ** 4))
    return Fraction(rng.randint(-10 ** 9, 10 ** 9))


def test_round_trip_bullet():
    rng = random.Random(200)
    sample = [Fraction(0), Fraction(1728)]
    while len(sample) < 200:
        j = _random_j(rng)
        if j != 0:
            sample.append(j)
    for j in sample:
        assert curve_from_j(j).j_invariant() == j


def test_disc_identity_bullet():
    rng = random.Random(201)
    count = 0
    while count < 200:
        j = _random_j(rng)
        if j in (0, 1728):
            continue
        direct = discriminant(curve_from_j(j))
        assert direct == -(2 ** 12) * 3 ** 6 * j * j * (1728 - j) ** 3
        assert disc_square_class_of_j(j) == squarefree_part(direct)
        count += 1


def test_disc_square_class_examples():
    assert disc_square_class_of_j(parse_rational_expr("-3^3*5^3")) == -7
    assert disc_square_class_of_j(parse_rational_expr("3^3*5^3*17^3")) == 7
    assert disc_square_class_of_j(parse_rational_expr("-17*373^3/2^17")) == -10
    assert disc_square_class_of_j(parse_rational_expr("-17^2*101^3/2")) == -10
    assert disc_square_class_of_j(parse_rational_expr("-7*11^3")) == -5
    assert disc_square_class_of_j(parse_rational_expr("-7*137^3*2083^3")) == -5
    with pytest.raises(ValueError):
        disc_square_class_of_j(1728)


def test_rational_roots_cubic():
    roots = rational_roots_cubic(1, 0, -1, 0)  # x^3 - x
    assert sorted(roots) == [-1, 0, 1]
    assert rational_roots_cubic(1, 0, 0, -8) == [2]
    assert rational_roots_cubic(2, -3, 0, 0) == [0, Fraction(3, 2)]
    assert rational_roots_cubic(1, 0, 1, 1) == []


def test_root_free_witness():
    assert root_free_witness([1, 0, 1, 1]) is not None
    assert root_free_witness([1, 0, -1, 0]) is None


def test_two_division_cubic():
    assert two_division_cubic(1728).shape == "one_rational_root"
    big = parse_rational_expr("2^4*5*13^4*17^3/3^13")
    shape = two_division_cubic(big)
    assert shape.shape == "irreducible"
    assert shape.witness_prime is not None
    assert two_division_cubic(-64).shape != "irreducible"
    assert has_rational_two_torsion(2916)
    assert not has_rational_two_torsion(-121)
    assert not has_rational_two_torsion(parse_rational_expr("-17*373^3/2^17"))


def test_two_torsion_family():
    assert two_torsion_family_j(-16) == 0
    assert two_torsion_family_j(-8) == -64
    assert two_torsion_family_j(16) == 2048
    with pytest.raises(ZeroParameter):
        two_torsion_family_j(0)
    assert family_membership(0) == (-16,)
    assert 16 in family_membership(2048)
    assert 2 in family_membership(2916)
    assert family_membership(5) == ()


def test_family_roots_bullet():
    rng = random.Random(202)
    params = [Fraction(n) for n in range(-20, 21) if n != 0]
    params += [Fraction(rng.randint(1, 99), rng.randint(1, 99)) for _ in range(20)]
    for t in params:
        assert t in family_membership(two_torsion_family_j(t))


def test_g3_family_j():
    assert g3_family_j(0) == 0
    assert g3_family_j(1) == Fraction(5 ** 4 * 16 ** 3 * 12 ** 3 * 379 ** 3,
                                      11 ** 5 * 71 ** 5)
    assert g3_family_j(-1) == Fraction(-(5 ** 4) * 6 ** 3 * 2 ** 3 * 19 ** 3,
                                       11 ** 5)


def test_g3_family_denominators_never_vanish():
    # both denominator factors are monic with constant terms 5 and 25, so
    # any rational zero would be an integer dividing them; none qualifies
    for t in (1, -1, 5, -5, 25, -25):
        assert t * t + 5 * t + 5 != 0
        assert t ** 4 + 5 * t ** 3 + 15 * t * t + 25 * t + 25 != 0


def test_quadratic_twist():
    base = curve_from_j(parse_rational_expr("2^5*7^3"))
    twisted = quadratic_twist(base, 3)
    assert twisted.j_invariant() == base.j_invariant()
    assert twisted.discriminant() == base.discriminant() * 3 ** 6
    with pytest.raises(ValueError):
        quadratic_twist(CurveModel(1, 0, 0, 1, 1), 2)


def test_twist_invariance_bullet():
    rng = random.Random(203)
    for _ in range(20):
        j = _random_j(rng)
        if j in (0, 1728):
            continue
        base = curve_from_j(j)
        d = Fraction(rng.choice([-1, 2, 3, 5, -6, 7, 10]))
        twisted = quadratic_twist(base, d)
        assert twisted.discriminant() == base.discriminant() * d ** 6
        assert (squarefree_part(twisted.discriminant())
                == squarefree_part(base.discriminant()))
    # the 2-division shape and the certification verdict survive twisting
    base = curve_from_j(parse_rational_expr("2^5*7^3"))
    twisted = quadratic_twist(base, 5)
    from isogate.ratcurves import _cubic_shape
    shape_base = _cubic_shape(1, 0, base.a4, base.a6)
    shape_tw = _cubic_shape(1, 0, twisted.a4, twisted.a6)
    assert shape_base.shape == shape_tw.shape
    assert shape_base.disc_class == shape_tw.disc_class
    for r in (7, 11):
        v_base = surjectivity_certificate(base, r, sample_bound=2000)
        v_tw = surjectivity_certificate(twisted, r, sample_bound=2000)
        assert v_base.status == v_tw.status


def test_frobenius_samples():
    samples = frobenius_samples(CurveModel.short(1, 0), 50)
    by_q = dict(samples)
    assert 2 not in by_q
    assert by_q[5] == 5 + 1 - 4
    assert by_q[7] == 0  # supersingular at q = 3 mod 4 for j = 1728
    for q, a_q in samples:
        assert a_q * a_q <= 4 * q
    with pytest.raises(ValueError):
        frobenius_samples(CurveModel.short(Fraction(1, 4), 1), 50)


def test_surjectivity_examples():
    x011 = CurveModel(0, -1, 1, -10, -20)
    assert surjectivity_certificate(x011, 5).status == "inconclusive"
    good = curve_from_j(parse_rational_expr("2^5*7^3"))
    report = surjectivity_certificate(good, 11)
    assert report.status == "certified_surjective"
    assert report.certified
    assert all(ok for _, ok in report.criteria)
    cm = CurveModel.short(1, 0)
    assert surjectivity_certificate(cm, 7).status == "inconclusive"
    with pytest.raises(ValueError):
        surjectivity_certificate(good, 3)
    with pytest.raises(InsufficientSamples):
        surjectivity_certificate(good, 11, sample_bound=2)


def _group_pairs(group):
    r = group.r
    return [(mat_trace(m, r), mat_det(m, r)) for m in group.elements]


def test_certificate_soundness_bullet():
    # no proper subgroup's full (trace, det) pair set may satisfy all four
    # criteria; proper subgroups come from the 2-generator class enumeration
    for r in (5, 7, 11, 13):
        full = None
        from isogate.matgroup import all_gl2, MatrixGroup
        full = MatrixGroup(r, all_gl2(r))
        assert all(ok for _, ok in certificate_criteria(_group_pairs(full), r))
        for cls in subgroup_classes(r, 2).classes:
            flags = certificate_criteria(_group_pairs(cls), r)
            assert not all(ok for _, ok in flags), (r, cls.order)


def test_first_three_criteria_alone_are_insufficient():
    # the order-96 octahedral group is proper in GL2(F_5) yet satisfies the
    # first three criteria; the projective-order criterion is what rejects
    # it, which is why certification requires all four
    flags = dict(certificate_criteria(_group_pairs(octahedral_group_mod5()), 5))
    assert flags["nonsquare_frobenius_disc"]
    assert flags["square_frobenius_disc"]
    assert flags["determinants_generate"]
    assert not flags["projective_order_above_5"]
