"""Twisted group algebras over C.

The algebra attached to a cocycle alpha has basis {e_g} and product
e_g e_h = zeta^alpha(g,h) e_{gh}; associativity is literally the cocycle
identity.  The center is computed exactly by transporting coefficients
along conjugation; its dimension must agree with the count of regular
conjugacy classes (classes whose cocycle values commute with the whole
centralizer), which is also the number of simple blocks.  Block dimensions
are recovered numerically from the spectrum of a random central element,
cross-checked against the two exact constraints (sum of squares = |G| and
block count = regular class count).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .cocycles import CohomClass, TwoCocycle, cocycle_validate
from .cyclotomic import Cyclotomic
from .errors import ClusterAmbiguity, NonSquareCluster, NotACocycle, SizeBound
from .groups import FiniteGroup

SPECTRAL_ORDER_GUARD = 256
EXHAUSTIVE_COCYCLE_BOUND = 64
COCYCLE_SAMPLES = 10_000


def _check_cocycle(alpha: TwoCocycle) -> None:
    """Associativity check: all triples up to order 64, sampled above."""
    G = alpha.group
    if G.order <= EXHAUSTIVE_COCYCLE_BOUND:
        report = cocycle_validate(alpha)
        if not report.ok:
            raise NotACocycle(report.message)
        return
    E = alpha.as_array()
    m = alpha.modulus
    n = G.order
    if (E[0, :] % m).any() or (E[:, 0] % m).any():
        raise NotACocycle("normalization fails")
    rng = np.random.default_rng(0)
    t = G.cayley
    trip = rng.integers(0, n, size=(COCYCLE_SAMPLES, 3))
    tau, rho, sigma = trip[:, 0], trip[:, 1], trip[:, 2]
    lhs = E[rho, sigma] + E[tau, t[rho, sigma]]
    rhs = E[tau, rho] + E[t[tau, rho], sigma]
    bad = np.nonzero((lhs - rhs) % m)[0]
    if bad.size:
        i = int(bad[0])
        raise NotACocycle(
            f"cocycle identity fails at ({int(tau[i])}, {int(rho[i])}, {int(sigma[i])})")


@dataclass(frozen=True)
class TwistedGroupAlgebra:
    group: FiniteGroup
    cocycle: TwoCocycle

    @property
    def dimension(self) -> int:
        return self.group.order

    def basis_product(self, g: int, h: int) -> tuple[int, int]:
        """e_g e_h = zeta^expo e_k; returns (expo, k)."""
        return self.cocycle.table[g][h], self.group.mul(g, h)


def build_twisted(G: FiniteGroup, alpha: TwoCocycle) -> TwistedGroupAlgebra:
    if alpha.group is not G and alpha.group.order != G.order:
        raise NotACocycle("cocycle attached to a different group")
    _check_cocycle(alpha)
    return TwistedGroupAlgebra(G, alpha)


@dataclass(frozen=True)
class RegularityReport:
    flags: tuple[bool, ...]  # per conjugacy class, in canonical class order
    count: int


def alpha_regular(G: FiniteGroup, alpha: TwoCocycle) -> RegularityReport:
    """Classes whose elements commute with their centralizer under alpha."""
    _check_cocycle(alpha)
    table = alpha.table

    def regular(g: int) -> bool:
        cent = G.centralizer(g)
        return all(table[g][h] == table[h][g] for h in cent.members)

    flags = []
    for cls in G.conjugacy_classes():
        values = {regular(x) for x in cls.members}
        if len(values) != 1:
            raise NotACocycle(
                "regularity is not constant on a conjugacy class; "
                "the table violates the cocycle identity")
        flags.append(values.pop())
    return RegularityReport(tuple(flags), sum(flags))


def center_basis(algebra: TwistedGroupAlgebra) -> list[list[Cyclotomic]]:
    """Exact basis of the center, one twisted class sum per regular class."""
    exps = _center_exponents(algebra)
    n = algebra.cocycle.modulus
    G = algebra.group
    out = []
    for support in exps:
        vec = [Cyclotomic.zero(n if n > 1 else 1) for _ in range(G.order)]
        for x, t in support.items():
            vec[x] = Cyclotomic.root_of_unity(n, t) if n > 1 else Cyclotomic.one()
        out.append(vec)
    return out


def _center_exponents(algebra: TwistedGroupAlgebra) -> list[dict[int, int]]:
    """Center basis in exponent form: per consistent class, x -> t(x) with
    coefficient zeta^t(x).  Cross-checked against the regular-class test and
    against exact centrality."""
    G = algebra.group
    E = algebra.cocycle.table
    n = algebra.cocycle.modulus
    supports: list[dict[int, int]] = []
    consistent_classes = []
    for ci, cls in enumerate(G.conjugacy_classes()):
        g0 = cls.representative
        t = {g0: 0}
        queue = [g0]
        ok = True
        while queue and ok:
            x = queue.pop()
            for h in G.elements():
                y = G.conjugate(h, x)
                hi = G.inv(h)
                gamma = (E[h][x] + E[G.mul(h, x)][hi] - E[h][hi]) % n
                ty = (t[x] + gamma) % n
                if y in t:
                    if t[y] != ty:
                        ok = False
                        break
                else:
                    t[y] = ty
                    queue.append(y)
        if ok:
            supports.append(t)
            consistent_classes.append(ci)
    reg = alpha_regular(G, algebra.cocycle)
    regular_classes = [i for i, f in enumerate(reg.flags) if f]
    assert consistent_classes == regular_classes, \
        "transport consistency must match the regular-class test"
    for t in supports:
        _assert_central(algebra, t)
    return supports


def _assert_central(algebra: TwistedGroupAlgebra, t: dict[int, int]) -> None:
    G = algebra.group
    E = algebra.cocycle.table
    n = algebra.cocycle.modulus
    support = set(t)
    for tau in G.elements():
        ti = G.inv(tau)
        for y in G.elements():
            x1 = G.mul(y, ti)
            x2 = G.mul(ti, y)
            in1, in2 = x1 in support, x2 in support
            assert in1 == in2
            if in1:
                lhs = (t[x1] + E[x1][tau]) % n
                rhs = (t[x2] + E[tau][x2]) % n
                assert lhs == rhs, "center candidate fails exact centrality"


@dataclass(frozen=True)
class WedderburnProfile:
    dims: tuple[int, ...]
    tol: float


def wedderburn_dims(algebra: TwistedGroupAlgebra, seed: int = 0,
                    tol: float = 1e-8) -> WedderburnProfile:
    """Simple-block dimensions from the spectrum of a random central element."""
    G = algebra.group
    n = G.order
    if n > SPECTRAL_ORDER_GUARD:
        raise SizeBound(f"spectral path limited to order {SPECTRAL_ORDER_GUARD}")
    supports = _center_exponents(algebra)
    m = algebra.cocycle.modulus
    reg_count = len(supports)
    rng = np.random.default_rng(seed)
    weights = rng.standard_normal(reg_count)
    coeff = np.zeros(n, dtype=complex)
    for w, support in zip(weights, supports):
        for x, t in support.items():
            coeff[x] += w * cmath.exp(2j * cmath.pi * t / m)
    # left multiplication matrix of z on the basis {e_tau}
    A = np.zeros((n, n), dtype=complex)
    for x in range(n):
        if coeff[x] == 0:
            continue
        for tau in range(n):
            expo = algebra.cocycle.table[x][tau]
            A[G.mul(x, tau), tau] += coeff[x] * cmath.exp(2j * cmath.pi * expo / m)
    eigs = np.linalg.eigvals(A)
    clusters = _cluster(eigs, tol)
    gap = _min_intercluster_gap(eigs, clusters)
    if gap < 10 * tol:
        raise ClusterAmbiguity(
            f"eigenvalue gap {gap:.3e} inside the ambiguous band for tol {tol:.1e}; "
            "retry with a different seed")
    dims = []
    for members in clusters:
        size = len(members)
        d = int(round(size ** 0.5))
        if d * d != size:
            raise NonSquareCluster(f"cluster of size {size} is not a square")
        dims.append(d)
    dims.sort()
    assert len(dims) == reg_count, "block count must equal the regular class count"
    assert sum(d * d for d in dims) == n
    return WedderburnProfile(tuple(dims), tol)


def _cluster(eigs: np.ndarray, tol: float) -> list[list[int]]:
    k = len(eigs)
    parent = list(range(k))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(k):
        for j in range(i + 1, k):
            if abs(eigs[i] - eigs[j]) <= tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _min_intercluster_gap(eigs: np.ndarray, clusters: list[list[int]]) -> float:
    if len(clusters) <= 1:
        return float("inf")
    reps = [np.mean([eigs[i] for i in members]) for members in clusters]
    gap = float("inf")
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            gap = min(gap, abs(reps[i] - reps[j]))
    return gap


def invariant_copies(cls: CohomClass) -> int:
    """Multiplicity of the base-field summand any additive invariant assigns
    to the twisted unit of this class: the regular class count."""
    return alpha_regular(cls.group, cls.representative).count
