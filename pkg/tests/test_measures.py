from fractions import Fraction

import pytest

from motivelab.catalog import ActionSpec, catalog_lookup
from motivelab.characters import VirtualCharacter, rank
from motivelab.cocycles import central_pairing_cocycle, schur_multiplier
from motivelab.errors import ClassCountMismatch, NonIntegralCharacter, UnsupportedInvariant
from motivelab.groups import cyclic_group, elementary_abelian_group, symmetric_group
from motivelab.measures import (
    K0NCClass,
    K0VarExpr,
    ProductSymbol,
    VarietySymbol,
    blowup_check,
    euler_char_rep,
    evaluate_invariant,
    factorization_check,
    hh_class,
    mu_nc,
    orbifold_dims,
    symbol_skeleton,
)
from motivelab.motives import MotiveSkeleton, induced_atom, restrict_skeleton, twisted_unit


def _c2_symbols():
    C2 = cyclic_group(2)
    pts = VarietySymbol(catalog_lookup("disjoint_points", (2,)),
                        ActionSpec(C2, point_orbits=((0,),)))
    p1 = VarietySymbol(catalog_lookup("projective_space", (1,)), ActionSpec.trivial(C2))
    p2 = VarietySymbol(catalog_lookup("projective_space", (2,)), ActionSpec.trivial(C2))
    pt = VarietySymbol(catalog_lookup("point"), ActionSpec.trivial(C2))
    return C2, pts, p1, p2, pt


def test_mu_nc_point():
    C2, _, _, _, pt = _c2_symbols()
    cls = mu_nc(pt)
    assert len(cls.counts) == 1
    atom, mult = next(iter(cls.counts.items()))
    assert atom.kind == "unit" and atom.unit_class.is_trivial() and mult == 1


def test_mu_nc_swapped_points():
    C2, pts, _, _, _ = _c2_symbols()
    cls = mu_nc(pts)
    atom, mult = next(iter(cls.counts.items()))
    assert atom.kind == "induced" and atom.stabilizer.members == (0,) and mult == 1


def test_mu_nc_p2_trivial():
    _, _, _, p2, _ = _c2_symbols()
    cls = mu_nc(p2)
    assert sum(cls.counts.values()) == 3


def test_class_arithmetic():
    C2, pts, p1, _, pt = _c2_symbols()
    a = mu_nc(p1)
    assert a.sub(a).is_zero()
    doubled = a.add(a)
    assert doubled == a.scale(2)
    assert a != mu_nc(pts)


def test_product_is_tensor():
    C2, pts, p1, _, pt = _c2_symbols()
    assert mu_nc(ProductSymbol(pt, p1)) == mu_nc(p1)
    prod = mu_nc(ProductSymbol(p1, p1))
    assert sum(prod.counts.values()) == 4
    swapped_line = mu_nc(ProductSymbol(pts, p1))
    atom, mult = next(iter(swapped_line.counts.items()))
    assert atom.kind == "induced" and mult == 2


def test_blowup_del_pezzo():
    C2, pts, p1, p2, pt = _c2_symbols()
    dp = VarietySymbol(catalog_lookup("del_pezzo_bl2"), ActionSpec.swap_pair(C2, (0,)))
    bc = blowup_check(K0VarExpr.of(p2), K0VarExpr.of(pts), 2,
                      K0VarExpr.of(dp), K0VarExpr.of(ProductSymbol(pts, p1)))
    assert bc.ok


def test_blowup_fixed_point_variant():
    C2, pts, p1, p2, pt = _c2_symbols()
    bc = blowup_check(K0VarExpr.of(p2), K0VarExpr.of(pt), 2,
                      K0VarExpr.of(p2).add(K0VarExpr.of(pt)), K0VarExpr.of(p1))
    assert bc.ok


def test_blowup_detects_violations():
    C2, pts, p1, p2, pt = _c2_symbols()
    bad = blowup_check(K0VarExpr.of(p2), K0VarExpr.of(pt), 2,
                       K0VarExpr.of(p2), K0VarExpr.of(p1))
    assert not bad.ok and bad.messages


def test_blowup_degenerate_guard():
    C2, pts, p1, p2, pt = _c2_symbols()
    with pytest.raises(ValueError):
        blowup_check(K0VarExpr.of(p2), K0VarExpr.of(p2), 2,
                     K0VarExpr.of(p2), K0VarExpr.of(p1))


def test_evaluate_invariant_projective():
    for G, classes in ((cyclic_group(1), 1), (symmetric_group(3), 3)):
        sym = VarietySymbol(catalog_lookup("projective_space", (3,)),
                            ActionSpec.trivial(G))
        skel = symbol_skeleton(sym)
        assert evaluate_invariant(skel, "HH") == {0: 4 * classes}
        assert evaluate_invariant(skel, "HP") == (4 * classes, 0)
        assert evaluate_invariant(skel, "K0rank") == 4 * classes


def test_evaluate_invariant_central_twist():
    alpha = central_pairing_cocycle(cyclic_group(2))
    G = alpha.group
    M = schur_multiplier(G)
    cls = M.class_of(alpha.promote(G.order))
    skel = MotiveSkeleton(G, (twisted_unit(cls),))
    assert evaluate_invariant(skel, "K0rank") == 1


def test_evaluate_invariant_induced():
    C2 = cyclic_group(2)
    skel = MotiveSkeleton(C2, (induced_atom(C2.trivial_subgroup()),))
    assert evaluate_invariant(skel, "HH") == {0: 1}  # trivial stabilizer: one class
    G4 = elementary_abelian_group(2, 2)
    H = G4.subgroup([0, 1])  # C2 inside E4, trivial multiplier, 2 classes
    skel2 = MotiveSkeleton(G4, (induced_atom(H),))
    assert evaluate_invariant(skel2, "HH") == {0: 2}
    with pytest.raises(UnsupportedInvariant):
        evaluate_invariant(skel, "THH")


def test_euler_char_rep_examples():
    C2 = cyclic_group(2)
    reg = euler_char_rep(C2, [2, 0])
    assert reg == VirtualCharacter.regular_character(C2)
    fixed = euler_char_rep(C2, [2, 2])
    assert fixed == VirtualCharacter.trivial_character(C2).scale(2)
    C1 = cyclic_group(1)
    assert euler_char_rep(C1, [7]) == VirtualCharacter.trivial_character(C1).scale(7)


def test_euler_char_rep_rejects_inconsistent_data():
    C2 = cyclic_group(2)
    with pytest.raises(NonIntegralCharacter):
        euler_char_rep(C2, [1, 0])
    with pytest.raises(ClassCountMismatch):
        euler_char_rep(C2, [2])


def test_hh_class_examples():
    C2 = cyclic_group(2)
    M = schur_multiplier(C2)
    unit_skel = MotiveSkeleton(C2, (twisted_unit(M.trivial_class()),))
    assert hh_class(unit_skel) == VirtualCharacter.trivial_character(C2)
    ind_skel = MotiveSkeleton(C2, (induced_atom(C2.trivial_subgroup()),))
    assert hh_class(ind_skel) == VirtualCharacter.regular_character(C2)


def test_hh_class_del_pezzo():
    C2 = cyclic_group(2)
    dp = VarietySymbol(catalog_lookup("del_pezzo_bl2"), ActionSpec.swap_pair(C2, (0,)))
    skel = symbol_skeleton(dp)
    expected = VirtualCharacter.regular_character(C2).add(
        VirtualCharacter.trivial_character(C2).scale(3))
    assert hh_class(skel) == expected
    assert rank(hh_class(skel)) == 5


def test_hh_rank_equals_restriction_count():
    C2, pts, p1, p2, pt = _c2_symbols()
    for sym in (pts, p1, p2, pt):
        skel = symbol_skeleton(sym)
        assert rank(hh_class(skel)) == restrict_skeleton(skel)


def test_factorization_datasets():
    C2, pts, p1, p2, _ = _c2_symbols()
    assert factorization_check(pts, [2, 0]).ok
    assert factorization_check(p1, [2, 2]).ok
    assert factorization_check(p2, [3, 3]).ok


def test_factorization_detects_wrong_data():
    C2, pts, _, _, _ = _c2_symbols()
    fc = factorization_check(pts, [2, 2])
    assert not fc.ok


def test_orbifold_dims():
    C2 = cyclic_group(2)
    assert orbifold_dims(C2, [(2, 0), (2, 0)]) == (4, 0)
    C1 = cyclic_group(1)
    assert orbifold_dims(C1, [(5, 3)]) == (5, 3)
    with pytest.raises(ClassCountMismatch):
        orbifold_dims(C2, [])


def test_hp_matches_orbifold_on_shipped_data():
    C2, _, p1, _, _ = _c2_symbols()
    hp = evaluate_invariant(symbol_skeleton(p1), "HP")
    assert hp == orbifold_dims(C2, [(2, 0), (2, 0)])
