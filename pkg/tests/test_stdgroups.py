import pytest

from isogate.errors import CongruenceViolation, KindModulusMismatch
from isogate.matgroup import MatrixGroup, are_conjugate, is_applicable
from isogate.modfield import supported_moduli
from isogate.stdgroups import (KINDS, ORDER_FORMULAS, SL2_ORDER_FORMULAS,
                               borel, cube_ratio_cartan,
                               nonsplit_cartan, nonsplit_cartan_cubes_extended,
                               nonsplit_cartan_normalizer,
                               octahedral_group_mod5, octahedral_group_mod13,
                               resolve_kind, split_cartan,
                               split_cartan_normalizer, standard_group,
                               verify_membership_formula)

_SWEEP = tuple(r for r in supported_moduli() if r <= 37)


def _valid_moduli(kind):
    if kind == "g7_13":
        return (13,)
    if kind == "g95_5":
        return (5,)
    if kind == "cube_split":
        return tuple(r for r in _SWEEP if r % 3 == 1)
    return _SWEEP


def test_examples():
    assert nonsplit_cartan_normalizer(7).order == 96
    assert nonsplit_cartan_cubes_extended(5).order == 16
    assert octahedral_group_mod13().order == 288
    assert octahedral_group_mod5().order == 96
    assert borel(5).order == 80


def test_order_formula_bullet():
    for kind in KINDS:
        formula = ORDER_FORMULAS[kind]
        for r in _valid_moduli(kind):
            assert standard_group(kind, r).order == formula(r), (kind, r)


def test_sl2_order_bullet():
    for r in _SWEEP:
        assert split_cartan_normalizer(r).sl2_part().order == 2 * (r - 1)
        assert nonsplit_cartan_normalizer(r).sl2_part().order == 2 * (r + 1)
        if r % 3 == 2:
            part = nonsplit_cartan_cubes_extended(r).sl2_part()
            assert part.order == 2 * (r + 1) // 3


def test_applicability_bullet():
    for r in _SWEEP:
        for kind in ("nonsplit_cartan_normalizer", "split_cartan_normalizer",
                     "borel"):
            assert is_applicable(standard_group(kind, r)), (kind, r)


def _displayed_sl2_normalizer(r):
    # diag(a, 1/a) together with antidiag(a, -1/a)
    elements = []
    for a in range(1, r):
        ai = pow(a, -1, r)
        elements.append((a, 0, 0, ai))
        elements.append((0, a, -ai % r, 0))
    return MatrixGroup(r, elements)


def test_displayed_group_conjugacy_bullet():
    for r in (5, 7, 11, 13):
        part = split_cartan_normalizer(r).sl2_part()
        displayed = _displayed_sl2_normalizer(r)
        assert part.order == displayed.order == 2 * (r - 1)
        assert are_conjugate(part, displayed) is not None


def test_membership_formula():
    assert verify_membership_formula("nonsplit_cartan_normalizer", 11)
    assert verify_membership_formula("split_cartan_normalizer", 7)
    assert verify_membership_formula("g3", 11)
    for kind in KINDS:
        if kind in ("g7_13", "g95_5"):
            continue
        for r in (5, 7, 13):
            if kind == "cube_split" and r % 3 != 1:
                continue
            assert verify_membership_formula(kind, r), (kind, r)
    with pytest.raises(ValueError):
        verify_membership_formula("g7", 13)


def test_kind_resolution():
    assert resolve_kind("cns+") == "nonsplit_cartan_normalizer"
    assert resolve_kind("cs") == "split_cartan"
    assert resolve_kind("g7") == "g7_13"
    assert resolve_kind("g95") == "g95_5"
    assert resolve_kind("cube") == "cube_split"
    assert resolve_kind("borel") == "borel"
    with pytest.raises(KeyError):
        resolve_kind("weil")


def test_kind_errors():
    with pytest.raises(KindModulusMismatch):
        octahedral_group_mod13(7)
    with pytest.raises(KindModulusMismatch):
        octahedral_group_mod5(13)
    with pytest.raises(CongruenceViolation):
        cube_ratio_cartan(5)


def test_nonsplit_shape():
    # eq-style membership: (a, eps*b; b, a) with eps = -1 for r = 3 mod 4
    g = nonsplit_cartan(7)
    assert (2, 0, 0, 2) in g
    assert (0, 6, 1, 0) in g  # a=0, b=1, eps = 6
    assert (1, 1, 1, 1) not in g


def test_cube_extended_structure():
    g5 = nonsplit_cartan_cubes_extended(5)
    torus = set(nonsplit_cartan(5).elements)
    inside = [m for m in g5 if m in torus]
    assert len(inside) == (5 * 5 - 1) // 3
    assert g5.order == 2 * len(inside)
