import numpy as np
import pytest

from motivelab.cocycles import (
    TwoCocycle,
    central_pairing_cocycle,
    random_cocycle,
    schur_multiplier,
)
from motivelab.errors import NotACocycle, SizeBound
from motivelab.groups import (
    cyclic_group,
    dihedral_group,
    elementary_abelian_group,
    product_group,
    symmetric_group,
)
from motivelab.twisted import (
    alpha_regular,
    build_twisted,
    center_basis,
    invariant_copies,
    wedderburn_dims,
)


def test_build_trivial_is_group_algebra():
    G = symmetric_group(3)
    algebra = build_twisted(G, TwoCocycle.trivial(G, 6))
    for g in G.elements():
        for h in G.elements():
            expo, k = algebra.basis_product(g, h)
            assert expo == 0 and k == G.mul(g, h)


def test_build_central_pairing():
    alpha = central_pairing_cocycle(cyclic_group(2))
    algebra = build_twisted(alpha.group, alpha)
    assert algebra.dimension == 4


def test_build_rejects_corrupted_table():
    alpha = central_pairing_cocycle(cyclic_group(2))
    table = [list(r) for r in alpha.table]
    table[3][2] = (table[3][2] + 1) % 2
    with pytest.raises(NotACocycle):
        build_twisted(alpha.group, TwoCocycle.from_exponents(alpha.group, 2, table))


def test_regular_trivial_cocycle():
    for G in (symmetric_group(3), dihedral_group(8), cyclic_group(6)):
        reg = alpha_regular(G, TwoCocycle.trivial(G, G.order))
        assert reg.count == len(G.conjugacy_classes())
        assert all(reg.flags)


def test_regular_central_pairing():
    alpha = central_pairing_cocycle(cyclic_group(2))
    reg = alpha_regular(alpha.group, alpha)
    assert reg.count == 1
    assert reg.flags[0]  # the identity class is always regular
    # independent scan over all 16 pairs
    G = alpha.group
    for g in G.elements():
        expected = all(alpha.table[g][h] == alpha.table[h][g]
                       for h in G.elements())  # abelian: centralizer is G
        assert reg.flags[G.class_index_of(g)] == expected


def test_regular_d8_twist():
    G = dihedral_group(8)
    M = schur_multiplier(G)
    alpha = M.class_from_coords((1,)).representative
    reg = alpha_regular(G, alpha)
    assert reg.count < 5
    # frozen oracle value: the twisted algebra splits into two 2x2 blocks
    assert reg.count == 2
    profile = wedderburn_dims(build_twisted(G, alpha))
    assert profile.dims == (2, 2)


def test_center_trivial_cocycle_class_sums():
    G = symmetric_group(3)
    algebra = build_twisted(G, TwoCocycle.trivial(G, 6))
    basis = center_basis(algebra)
    assert len(basis) == 3
    # each vector is the indicator of one conjugacy class
    from motivelab.cyclotomic import Cyclotomic
    one, zero = Cyclotomic.one(), Cyclotomic.zero()
    supports = sorted(tuple(i for i, v in enumerate(vec) if v == one)
                      for vec in basis)
    classes = sorted(c.members for c in G.conjugacy_classes())
    assert supports == classes


def test_center_central_pairing_is_scalars():
    alpha = central_pairing_cocycle(cyclic_group(2))
    algebra = build_twisted(alpha.group, alpha)
    assert len(center_basis(algebra)) == 1


def test_center_coboundary_shift_keeps_dimension():
    G = elementary_abelian_group(2, 2)
    n = G.order
    rng = np.random.default_rng(4)
    d = [0] + [int(rng.integers(0, n)) for _ in range(n - 1)]
    table = [[(d[r] + d[s] - d[G.mul(r, s)]) % n for s in G.elements()]
             for r in G.elements()]
    algebra = build_twisted(G, TwoCocycle.from_exponents(G, n, table))
    assert len(center_basis(algebra)) == len(G.conjugacy_classes())


def test_center_matches_numeric_nullspace():
    """Independent oracle: numeric kernel of the commutation equations."""
    rng = np.random.default_rng(8)
    import cmath
    for G in (cyclic_group(4), elementary_abelian_group(2, 2), symmetric_group(3)):
        n_ord = G.order
        n = G.order
        alpha = random_cocycle(G, n, rng)
        algebra = build_twisted(G, alpha)
        exact_dim = len(center_basis(algebra))
        rows = []
        m = alpha.modulus
        for tau in G.elements():
            block = np.zeros((n_ord, n_ord), dtype=complex)
            for x in G.elements():
                block[G.mul(x, tau), x] += cmath.exp(2j * cmath.pi * alpha.table[x][tau] / m)
                block[G.mul(tau, x), x] -= cmath.exp(2j * cmath.pi * alpha.table[tau][x] / m)
            rows.append(block)
        M = np.vstack(rows)
        numeric_dim = n_ord - np.linalg.matrix_rank(M, tol=1e-9)
        assert exact_dim == numeric_dim


def test_wedderburn_profiles():
    S3 = symmetric_group(3)
    assert wedderburn_dims(build_twisted(S3, TwoCocycle.trivial(S3, 6))).dims == (1, 1, 2)
    alpha = central_pairing_cocycle(cyclic_group(2))
    assert wedderburn_dims(build_twisted(alpha.group, alpha)).dims == (2,)
    for n in (3, 5, 7):
        C = cyclic_group(n)
        assert wedderburn_dims(build_twisted(C, TwoCocycle.trivial(C, n))).dims == (1,) * n


def test_wedderburn_seed_stability():
    alpha = central_pairing_cocycle(cyclic_group(3))
    algebra = build_twisted(alpha.group, alpha)
    for seed in (0, 1, 17):
        assert wedderburn_dims(algebra, seed=seed).dims == (3,)


def test_wedderburn_guard():
    G = dihedral_group(1024)
    with pytest.raises(SizeBound):
        wedderburn_dims(build_twisted(G, TwoCocycle.trivial(G, 2)))


def test_invariant_copies():
    G = elementary_abelian_group(2, 2)
    M = schur_multiplier(G)
    assert invariant_copies(M.trivial_class()) == 4
    alpha = central_pairing_cocycle(cyclic_group(2))
    cls = M.class_of(alpha.promote(4))
    assert invariant_copies(cls) == 1


def test_invariant_copies_depends_only_on_class():
    G = elementary_abelian_group(2, 2)
    n = G.order
    M = schur_multiplier(G)
    alpha = central_pairing_cocycle(cyclic_group(2)).promote(n)
    base = alpha_regular(G, alpha).count
    rng = np.random.default_rng(6)
    for _ in range(6):
        d = [0] + [int(rng.integers(0, n)) for _ in range(n - 1)]
        shift = [[(alpha.table[r][s] + d[r] + d[s] - d[G.mul(r, s)]) % n
                  for s in G.elements()] for r in G.elements()]
        shifted = TwoCocycle.from_exponents(G, n, shift)
        assert M.class_of(shifted) == M.class_of(alpha)
        assert alpha_regular(G, shifted).count == base


def test_center_equals_regular_equals_blocks_random():
    rng = np.random.default_rng(12)
    for G in (cyclic_group(4), elementary_abelian_group(2, 2), dihedral_group(8),
              product_group(cyclic_group(2), cyclic_group(4)),
              elementary_abelian_group(2, 3), symmetric_group(3)):
        n = G.order
        for _ in range(6):
            alpha = random_cocycle(G, n, rng)
            algebra = build_twisted(G, alpha)
            reg = alpha_regular(G, alpha)
            dim = len(center_basis(algebra))
            profile = wedderburn_dims(algebra, seed=1)
            assert dim == reg.count == len(profile.dims)
            assert sum(d * d for d in profile.dims) == G.order


def test_cluster_helpers_direct():
    from motivelab.twisted import _cluster, _min_intercluster_gap
    eigs = np.array([1.0 + 0j, 1.0 + 1e-12j, 2.0 + 0j, 2.0 + 1e-12j])
    clusters = _cluster(eigs, 1e-8)
    assert sorted(len(c) for c in clusters) == [2, 2]
    assert _min_intercluster_gap(eigs, clusters) == pytest.approx(1.0, rel=1e-6)


def test_cluster_ambiguity_band():
    """Eigenvalue gaps inside (tol, 10 tol) must raise, not silently cluster."""
    from motivelab.errors import ClusterAmbiguity
    from motivelab.twisted import _cluster, _min_intercluster_gap
    tol = 1e-8
    eigs = np.array([0.0 + 0j, 5 * tol + 0j])
    clusters = _cluster(eigs, tol)
    gap = _min_intercluster_gap(eigs, clusters)
    assert tol < gap < 10 * tol  # this is exactly the band wedderburn_dims rejects


def test_non_square_cluster_detected():
    from motivelab.errors import NonSquareCluster
    from motivelab.twisted import _cluster
    # three coincident eigenvalues cannot be a matrix-block square
    eigs = np.array([1.0, 1.0, 1.0, 2.0])
    clusters = _cluster(eigs, 1e-8)
    sizes = sorted(len(c) for c in clusters)
    assert sizes == [1, 3]
    d = round(3 ** 0.5)
    assert d * d != 3
