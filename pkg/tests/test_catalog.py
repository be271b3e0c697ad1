import pytest

from motivelab.catalog import (
    ActionSpec,
    catalog_lookup,
    instantiate,
    parse_catalog_address,
)
from motivelab.errors import InconsistentAction, ParamRange, UnknownEntry
from motivelab.groups import cyclic_group, elementary_abelian_group
from motivelab.motives import check_via


def test_projective_space_entry():
    e = catalog_lookup("projective_space", (2,))
    assert e.collection_length == 3
    assert e.betti_numbers == (1, 0, 1, 0, 1)
    assert e.dimension == 2


def test_del_pezzo_entry():
    e = catalog_lookup("del_pezzo_bl2")
    assert e.collection_length == 5
    assert e.betti_numbers == (1, 0, 3, 0, 1)


def test_quadric_entries():
    even = catalog_lookup("quadric_even", (2,))
    assert even.collection_length == 4
    assert even.betti_numbers == (1, 0, 2, 0, 1)
    odd = catalog_lookup("quadric_odd", (3,))
    assert odd.collection_length == 4
    assert odd.betti_numbers == (1, 0, 1, 0, 1, 0, 1)


def test_grassmannian_betti_are_gaussian_binomials():
    e = catalog_lookup("grassmannian", (2, 4))
    assert e.collection_length == 6
    assert e.dimension == 4
    evens = tuple(e.betti_numbers[2 * r] for r in range(5))
    assert evens == (1, 1, 2, 1, 1)


def test_point_entries():
    assert catalog_lookup("point").collection_length == 1
    e = catalog_lookup("disjoint_points", (3,))
    assert e.collection_length == 3
    assert e.betti_numbers == (3,)


def test_catalog_wide_via_check():
    entries = [catalog_lookup("point"), catalog_lookup("del_pezzo_bl2"),
               catalog_lookup("disjoint_points", (5,))]
    entries += [catalog_lookup("projective_space", (n,)) for n in range(1, 13)]
    entries += [catalog_lookup("quadric_odd", (d,)) for d in (1, 3, 5, 7, 9)]
    entries += [catalog_lookup("quadric_even", (d,)) for d in (2, 4, 6, 8, 10)]
    entries += [catalog_lookup("grassmannian", (n, d))
                for d in range(2, 9) for n in range(1, d + 1)]
    for e in entries:
        assert check_via(e).ok, e.label()
        # Hochschild dims via the diagonal Hodge numbers: all in degree 0
        assert sum(e.hodge_diagonal) == e.collection_length


def test_param_errors():
    with pytest.raises(UnknownEntry):
        catalog_lookup("elliptic_curve")
    with pytest.raises(ParamRange):
        catalog_lookup("projective_space", (13,))
    with pytest.raises(ParamRange):
        catalog_lookup("quadric_odd", (2,))
    with pytest.raises(ParamRange):
        catalog_lookup("quadric_even", (3,))
    with pytest.raises(ParamRange):
        catalog_lookup("grassmannian", (3, 9))


def test_parse_address():
    assert parse_catalog_address("projective_space:3").collection_length == 4
    assert parse_catalog_address("grassmannian:2,4").collection_length == 6
    assert parse_catalog_address("point").collection_length == 1


def test_instantiate_trivial():
    C2 = cyclic_group(2)
    spec = instantiate(catalog_lookup("projective_space", (3,)), ActionSpec.trivial(C2))
    assert len(spec.blocks) == 4
    assert all(b.length == 1 and b.cocycle_class.is_trivial() for b in spec.blocks)


def test_instantiate_quadric_swap():
    C2 = cyclic_group(2)
    spec = instantiate(catalog_lookup("quadric_even", (2,)),
                       ActionSpec.swap_pair(C2, (0,)))
    lengths = sorted(b.length for b in spec.blocks)
    assert lengths == [1, 1, 2]


def test_instantiate_powers_follow_line_class():
    E4 = elementary_abelian_group(2, 2)
    spec = instantiate(catalog_lookup("projective_space", (3,)),
                       ActionSpec(E4, line_class=(1,)))
    coords = [b.cocycle_class.coords for b in spec.blocks]
    assert coords == [(0,), (1,), (0,), (1,)]


def test_inconsistent_actions():
    C2 = cyclic_group(2)
    with pytest.raises(InconsistentAction):
        instantiate(catalog_lookup("projective_space", (2,)),
                    ActionSpec.swap_pair(C2, (0,)))  # no special slots
    with pytest.raises(InconsistentAction):
        instantiate(catalog_lookup("quadric_even", (2,)),
                    ActionSpec.swap_pair(C2, (0, 1)))  # index-1 stabilizer
    with pytest.raises(InconsistentAction):
        instantiate(catalog_lookup("disjoint_points", (3,)),
                    ActionSpec(C2, point_orbits=((0,),)))  # covers 2 of 3
    with pytest.raises(InconsistentAction):
        instantiate(catalog_lookup("projective_space", (2,)),
                    ActionSpec(C2, line_class=(1, 1)))  # wrong arity (H2 = 0)


def test_point_orbit_partition():
    C2 = cyclic_group(2)
    spec = instantiate(catalog_lookup("disjoint_points", (4,)),
                       ActionSpec(C2, point_orbits=((0,), (0,))))
    assert sorted(b.length for b in spec.blocks) == [2, 2]


def test_hodge_numbers_diagonal():
    e = catalog_lookup("grassmannian", (2, 4))
    assert e.hodge_number(2, 2) == 2
    assert e.hodge_number(1, 2) == 0
    assert e.hodge_number(5, 5) == 0
    total = sum(e.hodge_number(p, p) for p in range(e.dimension + 1))
    assert total == e.collection_length
