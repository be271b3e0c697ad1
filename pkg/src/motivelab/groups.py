"""Finite groups as explicit Cayley tables.

Elements are integers 0..order-1 with 0 the identity.  Constructors fix a
canonical numbering so that downstream golden tests are byte-stable.  Tables
are validated eagerly: associativity is checked on all triples up to order
64 and on 10^4 seeded random triples above that.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NonAssociative,
    NotASubgroup,
    NotClosed,
    OrderBound,
    SizeBound,
)
from .intlinalg import crt_pair, inv_mod, smith_normal_form

DEFAULT_MAX_ORDER = 2048
EXHAUSTIVE_ASSOC_BOUND = 64
ASSOC_SAMPLES = 10_000
_RELATION_BOX_GUARD = 1 << 22


def max_order() -> int:
    return int(os.environ.get("MOTIVELAB_MAX_ORDER", DEFAULT_MAX_ORDER))


class FiniteGroup:
    """A finite group materialized as an order x order Cayley table."""

    def __init__(self, cayley: np.ndarray, label: str = "", gens: Sequence[int] = (),
                 _validated: bool = False):
        table = np.asarray(cayley, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n):
            raise NotClosed("Cayley table must be square")
        if n == 0:
            raise NoIdentity("empty table")
        if n > max_order():
            raise OrderBound(f"order {n} exceeds bound {max_order()}")
        if table.min() < 0 or table.max() >= n:
            raise NotClosed("table entries out of element range")
        self.order = n
        self.cayley = table
        self.cayley.setflags(write=False)
        self.label = label or f"G{n}"
        self.identity = 0
        if not _validated:
            self._validate()
        self.inverses = self._compute_inverses()
        self._gens = tuple(gens) if gens else None
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._abelianization = None

    # -- validation -----------------------------------------------------

    def _validate(self) -> None:
        n = self.order
        t = self.cayley
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise NoIdentity("element 0 is not a two-sided identity")
        if n <= EXHAUSTIVE_ASSOC_BOUND:
            left = t[t, :]    # (a*b)*c indexed [a, b, c]
            right = t[:, t]   # a*(b*c) indexed [a, b, c]
            bad = np.argwhere(left != right)
            if bad.size:
                a, b, c = (int(x) for x in bad[0])
                raise NonAssociative(f"associativity fails at triple ({a}, {b}, {c})")
        else:
            rng = np.random.default_rng(0)
            trip = rng.integers(0, n, size=(ASSOC_SAMPLES, 3))
            a, b, c = trip[:, 0], trip[:, 1], trip[:, 2]
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise NonAssociative("associativity fails on sampled triples")

    def _compute_inverses(self) -> np.ndarray:
        n = self.order
        inv = np.full(n, -1, dtype=np.int32)
        rows, cols = np.nonzero(self.cayley == 0)
        inv[rows] = cols
        if (inv < 0).any():
            raise NotClosed("some element has no right inverse")
        if not np.array_equal(self.cayley[inv, np.arange(n)], np.zeros(n, dtype=np.int32)):
            raise NotClosed("left and right inverses disagree")
        inv.setflags(write=False)
        return inv

    # -- basic operations --------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1."""
        return int(self.cayley[self.cayley[h, g], self.inverses[h]])

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, g: int) -> int:
        if self._orders is None:
            self._orders = self._compute_orders()
        return int(self._orders[g])

    def _compute_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        for g in range(n):
            k, x = 1, g
            while x != 0:
                x = self.mul(x, g)
                k += 1
            orders[g] = k
        return orders

    def exponent(self) -> int:
        if self._orders is None:
            self._orders = self._compute_orders()
        return lcm(*(int(o) for o in self._orders)) if self.order > 1 else 1

    def is_abelian(self) -> bool:
        return np.array_equal(self.cayley, self.cayley.T)

    def power(self, g: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(g), -k)
        out, base = 0, g
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def commutator(self, g: int, h: int) -> int:
        return self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))

    # -- generators ----------------------------------------------------------

    def generating_set(self) -> tuple[int, ...]:
        """A small generating set (constructor-provided when available)."""
        if self._gens is not None:
            return self._gens
        by_order = sorted(range(1, self.order),
                          key=lambda g: (-self.element_order(g), g))
        gens: list[int] = []
        closure = {0}
        for g in by_order:
            if g not in closure:
                gens.append(g)
                closure = self._closure(closure | {g})
                if len(closure) == self.order:
                    break
        self._gens = tuple(gens)
        return self._gens

    def _closure(self, seed: set[int]) -> set[int]:
        out = set(seed) | {0}
        frontier = list(out)
        while frontier:
            x = frontier.pop()
            for g in list(out):
                for y in (self.mul(x, g), self.mul(g, x)):
                    if y not in out:
                        out.add(y)
                        frontier.append(y)
        return out

    # -- conjugacy ----------------------------------------------------------

    def conjugacy_classes(self) -> list["ConjugacyClass"]:
        if self._classes is None:
            self._compute_classes()
        return list(self._classes)

    def class_index_of(self, g: int) -> int:
        if self._class_of is None:
            self._compute_classes()
        return int(self._class_of[g])

    def _compute_classes(self) -> None:
        n = self.order
        all_h = np.arange(n)
        assigned = np.full(n, -1, dtype=np.int64)
        raw: list[tuple[int, ...]] = []
        for g in range(n):
            if assigned[g] >= 0:
                continue
            orbit = np.unique(self.cayley[self.cayley[all_h, g], self.inverses[all_h]])
            idx = len(raw)
            assigned[orbit] = idx
            raw.append(tuple(int(x) for x in orbit))
        order_keys = sorted(range(len(raw)), key=lambda i: (len(raw[i]), raw[i][0]))
        classes = []
        relabel = np.zeros(len(raw), dtype=np.int64)
        for new_idx, old_idx in enumerate(order_keys):
            members = raw[old_idx]
            classes.append(ConjugacyClass(representative=members[0], members=members))
            relabel[old_idx] = new_idx
        self._classes = classes
        self._class_of = relabel[assigned]

    def centralizer(self, g: int) -> "Subgroup":
        if not 0 <= g < self.order:
            raise ValueError("element out of range")
        mask = self.cayley[:, g] == self.cayley[g, :]
        members = tuple(int(x) for x in np.nonzero(mask)[0])
        sub = Subgroup(self, members)
        cls = self.conjugacy_classes()[self.class_index_of(g)]
        assert len(cls.members) * len(members) == self.order, \
            "orbit-stabilizer consistency violated"
        return sub

    # -- misc -----------------------------------------------------------------

    def subgroup(self, members: Iterable[int]) -> "Subgroup":
        return Subgroup(self, tuple(sorted(set(int(m) for m in members))))

    def generated_subgroup(self, gens: Iterable[int]) -> "Subgroup":
        closure = self._closure(set(int(g) for g in gens))
        return Subgroup(self, tuple(sorted(closure)))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


def same_group(a: FiniteGroup, b: FiniteGroup) -> bool:
    return a is b or (a.order == b.order and np.array_equal(a.cayley, b.cayley))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class Subgroup:
    """A validated subgroup given by its sorted member set."""

    def __init__(self, parent: FiniteGroup, members: tuple[int, ...]):
        members = tuple(sorted(set(int(m) for m in members)))
        if 0 not in members:
            raise NotASubgroup("missing identity")
        mset = set(members)
        for a in members:
            if parent.inv(a) not in mset:
                raise NotASubgroup(f"missing inverse of {a}")
            for b in members:
                if parent.mul(a, b) not in mset:
                    raise NotASubgroup(f"not closed: {a}*{b}")
        self.parent = parent
        self.members = members
        self._as_group: tuple[FiniteGroup, list[int]] | None = None

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def is_whole_group(self) -> bool:
        return self.order == self.parent.order

    def contains(self, g: int) -> bool:
        return g in set(self.members)

    def as_group(self) -> tuple[FiniteGroup, list[int]]:
        """Re-number members 0..|H|-1; returns (group, member list)."""
        if self._as_group is None:
            idx = {m: i for i, m in enumerate(self.members)}
            n = len(self.members)
            table = np.zeros((n, n), dtype=np.int32)
            for i, a in enumerate(self.members):
                for j, b in enumerate(self.members):
                    table[i, j] = idx[self.parent.mul(a, b)]
            grp = FiniteGroup(table, label=f"{self.parent.label}|sub{n}")
            self._as_group = (grp, list(self.members))
        return self._as_group

    def conjugate_by(self, g: int) -> "Subgroup":
        p = self.parent
        return Subgroup(p, tuple(sorted(p.conjugate(g, m) for m in self.members)))

    def canonical_conjugate(self) -> tuple[int, ...]:
        """Lexicographically least member tuple among all conjugates."""
        p = self.parent
        best = self.members
        for g in p.elements():
            cand = tuple(sorted(p.conjugate(g, m) for m in self.members))
            if cand < best:
                best = cand
        return best

    def key(self) -> tuple[int, ...]:
        return self.members

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.label})"


@dataclass(frozen=True)
class CosetSpace:
    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    action: tuple[tuple[int, ...], ...]  # action[g] permutes coset indices

    @property
    def size(self) -> int:
        return len(self.cosets)

    def coset_index(self, g: int) -> int:
        for i, coset in enumerate(self.cosets):
            if g in coset:
                return i
        raise ValueError("element not found in any coset")


def coset_space(G: FiniteGroup, H: Subgroup) -> CosetSpace:
    """Left cosets gH with the left-translation action of G."""
    if H.parent is not G and not same_group(H.parent, G):
        raise NotASubgroup("subgroup belongs to a different group")
    members = H.members
    seen = {}
    cosets: list[tuple[int, ...]] = []
    for g in G.elements():
        coset = tuple(sorted(G.mul(g, m) for m in members))
        if coset[0] not in seen:
            for x in coset:
                seen[x] = len(cosets)
            cosets.append(coset)
    coset_of = [seen[g] for g in G.elements()]
    action = []
    for g in G.elements():
        perm = tuple(coset_of[G.mul(g, c[0])] for c in cosets)
        action.append(perm)
    space = CosetSpace(H, tuple(cosets), tuple(action))
    _check_coset_space(G, H, space)
    return space


def _check_coset_space(G: FiniteGroup, H: Subgroup, space: CosetSpace) -> None:
    assert space.size * H.order == G.order
    stab0 = tuple(sorted(g for g in G.elements() if space.action[g][0] == 0))
    assert stab0 == H.members, "stabilizer of the subgroup coset must be H"
    if G.order <= EXHAUSTIVE_ASSOC_BOUND:
        for a in G.elements():
            for b in G.elements():
                ab = G.mul(a, b)
                composed = tuple(space.action[a][space.action[b][i]]
                                 for i in range(space.size))
                assert composed == space.action[ab], "coset action is not a homomorphism"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise OrderBound("order must be positive")
    if n > max_order():
        raise OrderBound(f"order {n} exceeds bound {max_order()}")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, label=f"C{n}", gens=(1,) if n > 1 else ())


def symmetric_group(n: int) -> FiniteGroup:
    if not 1 <= n <= 6:
        raise OrderBound("symmetric groups supported for 1 <= n <= 6")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    order = len(perms)
    table = np.zeros((order, order), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[tuple(p[q[x]] for x in range(n))]
    gens = []
    if n >= 2:
        gens.append(index[tuple([1, 0] + list(range(2, n)))])
    if n >= 3:
        gens.append(index[tuple(list(range(1, n)) + [0])])
    return FiniteGroup(table, label=f"S{n}", gens=gens)


def dihedral_group(order: int) -> FiniteGroup:
    if order < 2 or order % 2:
        raise OrderBound("dihedral constructor needs an even order >= 2")
    if order > max_order():
        raise OrderBound(f"order {order} exceeds bound {max_order()}")
    n = order // 2
    table = np.zeros((order, order), dtype=np.int32)
    for e in (0, 1):
        for i in range(n):
            for f in (0, 1):
                for j in range(n):
                    rot = (i + (j if e == 0 else -j)) % n
                    table[e * n + i, f * n + j] = (e ^ f) * n + rot
    gens = [1, n] if n > 1 else [n]
    return FiniteGroup(table, label=f"D{order}", gens=gens)


def elementary_abelian_group(p: int, k: int) -> FiniteGroup:
    if p < 2 or any(p % d == 0 for d in range(2, p)):
        raise OrderBound("p must be prime")
    if k < 1:
        raise OrderBound("k must be positive")
    order = p ** k
    if order > max_order():
        raise OrderBound(f"order {order} exceeds bound {max_order()}")
    idx = np.arange(order)
    digits = np.stack([(idx // p ** j) % p for j in range(k)], axis=1)
    table = np.zeros((order, order), dtype=np.int32)
    weights = np.array([p ** j for j in range(k)])
    for a in range(order):
        table[a] = ((digits[a][None, :] + digits) % p) @ weights
    gens = [p ** j for j in range(k)]
    return FiniteGroup(table, label=f"E{order}", gens=gens)


def product_group(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    order = a.order * b.order
    if order > max_order():
        raise OrderBound(f"order {order} exceeds bound {max_order()}")
    nb = b.order
    idx = np.arange(order)
    ai, bi = idx // nb, idx % nb
    table = a.cayley[np.ix_(ai, ai)].astype(np.int64) * nb + b.cayley[np.ix_(bi, bi)]
    gens = [g * nb for g in a.generating_set()] + [g for g in b.generating_set()]
    return FiniteGroup(table.astype(np.int32), label=f"{a.label}x{b.label}", gens=gens)


def group_from_cayley(table: Sequence[Sequence[int]]) -> FiniteGroup:
    arr = np.asarray(table, dtype=np.int64)
    n = arr.shape[0]
    if arr.shape != (n, n):
        raise NotClosed("Cayley table must be square")
    if n and (arr.min() < 0 or arr.max() >= n):
        raise NotClosed("table entries out of element range")
    # locate the identity and renumber so it sits at index 0
    ident = None
    rng = np.arange(n)
    for e in range(n):
        if np.array_equal(arr[e], rng) and np.array_equal(arr[:, e], rng):
            ident = e
            break
    if ident is None:
        raise NoIdentity("no two-sided identity element")
    if ident != 0:
        perm = [ident] + [x for x in range(n) if x != ident]
        pos = np.argsort(perm)
        arr = pos[arr[np.ix_(perm, perm)]]
    return FiniteGroup(arr.astype(np.int32), label=f"G{n}")


def group_from_permutations(degree: int, gens: Sequence[Sequence[int]]) -> FiniteGroup:
    if degree > 16:
        raise OrderBound("permutation degree limited to 16")
    base = tuple(range(degree))
    gen_tuples = []
    for g in gens:
        t = tuple(int(x) for x in g)
        if sorted(t) != list(range(degree)):
            raise NotClosed(f"not a permutation of 0..{degree - 1}: {g}")
        gen_tuples.append(t)
    elems = {base}
    frontier = [base]
    while frontier:
        x = frontier.pop()
        for g in gen_tuples:
            y = tuple(g[x[i]] for i in range(degree))
            if y not in elems:
                if len(elems) >= max_order():
                    raise OrderBound(f"closure exceeds bound {max_order()}")
                elems.add(y)
                frontier.append(y)
    ordered = sorted(elems)
    index = {p: i for i, p in enumerate(ordered)}
    n = len(ordered)
    table = np.zeros((n, n), dtype=np.int32)
    for i, p in enumerate(ordered):
        for j, q in enumerate(ordered):
            table[i, j] = index[tuple(p[q[x]] for x in range(degree))]
    gen_idx = [index[g] for g in gen_tuples]
    return FiniteGroup(table, label=f"P{n}", gens=gen_idx)


def construct_group(spec) -> FiniteGroup:
    """Build a group from a JSON-style spec dict (see package docs)."""
    if isinstance(spec, FiniteGroup):
        return spec
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ValueError(f"bad group spec: {spec!r}")
    kind = spec["kind"]
    if kind == "cyclic":
        return cyclic_group(int(spec["n"]))
    if kind == "symmetric":
        return symmetric_group(int(spec["n"]))
    if kind == "dihedral":
        return dihedral_group(int(spec["order"]))
    if kind == "elem_abelian":
        return elementary_abelian_group(int(spec["p"]), int(spec["k"]))
    if kind == "product":
        return product_group(construct_group(spec["a"]), construct_group(spec["b"]))
    if kind == "cayley":
        return group_from_cayley(spec["table"])
    if kind == "perm_gens":
        return group_from_permutations(int(spec["degree"]), spec["gens"])
    raise ValueError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# Abelianization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Abelianization:
    """G^ab presented as a direct sum of cyclic groups Z/d_i (d_1 | d_2 | ...)."""

    invariant_factors: tuple[int, ...]
    projection: tuple[tuple[int, ...], ...]  # element index -> coordinate tuple
    quotient_order: int


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    comms = {G.commutator(g, h) for g in G.elements() for h in G.elements()}
    return G.generated_subgroup(comms)


def abelianization(G: FiniteGroup) -> Abelianization:
    if G._abelianization is not None:
        return G._abelianization
    K = commutator_subgroup(G)
    quotient, coset_of = _quotient_group(G, K)
    factors, coords = _abelian_structure(quotient)
    projection = tuple(coords[coset_of[g]] for g in G.elements())
    result = Abelianization(tuple(factors), projection, quotient.order)
    G._abelianization = result
    return result


def _quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, list[int]]:
    """Quotient by a normal subgroup; returns (Q, element -> coset index)."""
    space = coset_space(G, N)
    reps = [c[0] for c in space.cosets]
    coset_of = [space.coset_index(g) for g in G.elements()]
    k = len(reps)
    table = np.zeros((k, k), dtype=np.int32)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i, j] = coset_of[G.mul(a, b)]
    return FiniteGroup(table, label=f"{G.label}^ab"), coset_of


def _abelian_structure(Q: FiniteGroup) -> tuple[list[int], list[tuple[int, ...]]]:
    """Invariant factors (>1) and per-element coordinates of an abelian group."""
    n = Q.order
    if n == 1:
        return [], [()]
    assert Q.is_abelian()
    factor_data = []  # per prime: (factors desc, coords per element of Q)
    for p, a in _factor(n):
        pa = p ** a
        m = n // pa
        t = inv_mod(m % pa, pa) if pa > 1 else 1
        part_of = [Q.power(g, m * t) for g in Q.elements()]
        part_elems = sorted(set(part_of))
        factors, coords = _primary_structure(Q, part_elems, p)
        coord_of = {e: c for e, c in zip(part_elems, coords)}
        factor_data.append((p, factors, [coord_of[part_of[g]] for g in Q.elements()]))

    depth = max(len(factors) for _, factors, _ in factor_data) if factor_data else 0
    merged: list[int] = []
    for j in range(depth):
        d = 1
        for p, factors, _ in factor_data:
            if j < len(factors):
                d *= factors[j]
        merged.append(d)
    # merged is descending; report ascending divisibility d_1 | d_2 | ...
    element_coords: list[tuple[int, ...]] = []
    for g in Q.elements():
        coord = []
        for j in range(depth):
            r, mmod = 0, 1
            for p, factors, per_elem in factor_data:
                if j < len(factors):
                    r = crt_pair(r, mmod, per_elem[g][j], factors[j])
                    mmod *= factors[j]
            coord.append(r)
        element_coords.append(tuple(reversed(coord)))
    return list(reversed(merged)), element_coords


def _primary_structure(Q: FiniteGroup, elems: list[int], p: int) -> tuple[list[int], list[tuple[int, ...]]]:
    """Structure of the p-part subgroup given by its element list.

    Returns (cyclic orders descending, coordinates per element in elems order).
    """
    if len(elems) == 1:
        return [], [()]
    elem_set = set(elems)
    by_order = sorted(elems[1:] if elems[0] == 0 else elems,
                      key=lambda g: (-Q.element_order(g), g))
    by_order = [g for g in by_order if g != 0]
    gens: list[int] = []
    dlog: dict[int, tuple[int, ...]] = {0: ()}
    for g in by_order:
        if g in dlog:
            continue
        gens.append(g)
        o = Q.element_order(g)
        new_dlog: dict[int, tuple[int, ...]] = {}
        for x, vec in dlog.items():
            acc = x
            for e in range(o):
                key = acc
                if key not in dlog and key not in new_dlog:
                    new_dlog[key] = vec + (e,)
                acc = Q.mul(acc, g)
        for x, vec in dlog.items():
            dlog[x] = vec + (0,)
        dlog.update(new_dlog)
        if len(dlog) == len(elem_set):
            break
    k = len(gens)
    orders = [Q.element_order(g) for g in gens]
    # pad discrete logs of elements found before later generators existed
    for x in list(dlog):
        v = dlog[x]
        if len(v) < k:
            dlog[x] = v + (0,) * (k - len(v))
    box = 1
    for o in orders:
        box *= o
    if box > _RELATION_BOX_GUARD:
        raise SizeBound("abelian relation search space too large")
    rel_rows = [[orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
    for tup in itertools.product(*(range(o) for o in orders)):
        if all(v == 0 for v in tup):
            continue
        acc = 0
        for i, e in enumerate(tup):
            acc = Q.mul(acc, Q.power(gens[i], e))
        if acc == 0:
            rel_rows.append(list(tup))
    snf = smith_normal_form(rel_rows)
    diag = list(snf.invariant_factors) + [0] * (k - len(snf.invariant_factors))
    V = np.asarray(snf.V, dtype=object)
    keep = [j for j in range(k) if diag[j] > 1]
    factors = [diag[j] for j in keep]
    coords = []
    for x in elems:
        vec = np.asarray(dlog[x], dtype=object)
        y = vec @ V
        coords.append(tuple(int(y[j]) % diag[j] for j in keep))
    # descending order for merging
    order_idx = sorted(range(len(factors)), key=lambda i: -factors[i])
    factors_sorted = [factors[i] for i in order_idx]
    coords_sorted = [tuple(c[i] for i in order_idx) for c in coords]
    return factors_sorted, coords_sorted


def _factor(n: int) -> list[tuple[int, int]]:
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            out.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup of a small group (intended for test batteries)."""
    if G.order > 64:
        raise SizeBound("subgroup enumeration limited to order 64")
    cyclics = set()
    for g in G.elements():
        members = frozenset(G.generated_subgroup([g]).members)
        cyclics.add(members)
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        H = frontier.pop()
        for C in cyclics:
            if C <= H:
                continue
            new = frozenset(G.generated_subgroup(H | C).members)
            if new not in found:
                found.add(new)
                frontier.append(new)
    subs = [Subgroup(G, tuple(sorted(h))) for h in found]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs
