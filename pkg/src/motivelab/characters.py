"""Character tables over C and the representation ring R(G).

Tables are computed by Dixon's modular method: class-sum structure constants
are diagonalized over F_p for a prime p = 1 (mod exp(G)), p > 2*sqrt(|G|),
and character values are lifted to exact cyclotomics through the discrete
logarithm of a fixed primitive root of unity mod p.  Abelian groups take a
direct dual-group path.  The table is canonicalized by sorting rows, so the
splitting seed never shows in the output.

Virtual characters store integer (or rational) coordinates over the
irreducible basis; class-function values are derived on demand, which makes
integrality checks trivial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import (
    GroupMismatch,
    NonIntegralCharacter,
    NonIntegralDecomposition,
    PrimeSearchFailed,
)
from .groups import FiniteGroup, Subgroup, abelianization, coset_space, same_group

PRIME_SEARCH_LIMIT = 1_000_000
_ORTHOGONALITY_CHECK_BOUND = 48


@dataclass(frozen=True)
class CharacterTable:
    group: FiniteGroup
    exponent: int
    irreducibles: tuple[tuple[Cyclotomic, ...], ...]  # [irrep][class]
    degrees: tuple[int, ...]

    @property
    def num_irreducibles(self) -> int:
        return len(self.irreducibles)

    def class_sizes(self) -> list[int]:
        return [c.size for c in self.group.conjugacy_classes()]

    def value(self, irrep: int, class_index: int) -> Cyclotomic:
        return self.irreducibles[irrep][class_index]

    def verify_orthogonality(self) -> None:
        """Exact first orthogonality of rows; raises AssertionError on failure."""
        sizes = self.class_sizes()
        n = self.group.order
        k = self.num_irreducibles
        for i in range(k):
            for j in range(i, k):
                acc = Cyclotomic.zero()
                for c in range(k):
                    acc = acc + sizes[c] * self.irreducibles[i][c] * \
                        self.irreducibles[j][c].conjugate()
                expected = Fraction(n) if i == j else Fraction(0)
                assert acc == Cyclotomic.from_rational(expected), \
                    f"row orthogonality fails at ({i},{j})"


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    cached = getattr(G, "_char_table", None)
    if cached is not None:
        return cached
    if G.is_abelian():
        table = _abelian_table(G)
    else:
        table = _dixon_table(G, seed)
    assert sum(d * d for d in table.degrees) == G.order, "degree sum check failed"
    if table.num_irreducibles <= _ORTHOGONALITY_CHECK_BOUND:
        table.verify_orthogonality()
    G._char_table = table
    return table


def _canonical_rows(G: FiniteGroup, e: int, rows: list[list[Cyclotomic]],
                    degrees: list[int]) -> CharacterTable:
    order = sorted(range(len(rows)),
                   key=lambda i: (degrees[i],
                                  tuple(v.sort_key(e) for v in rows[i])))
    return CharacterTable(
        G, e,
        tuple(tuple(rows[i]) for i in order),
        tuple(degrees[i] for i in order))


def _abelian_table(G: FiniteGroup) -> CharacterTable:
    e = G.exponent()
    ab = abelianization(G)
    factors = ab.invariant_factors
    reps = [c.representative for c in G.conjugacy_classes()]
    rows = []
    # characters indexed by dual coordinates in the same invariant factors
    import itertools
    for dual in itertools.product(*(range(d) for d in factors)) if factors else [()]:
        row = []
        for g in reps:
            coords = ab.projection[g]
            expo = sum(x * y * (e // d) for x, y, d in zip(coords, dual, factors)) % e
            row.append(Cyclotomic.root_of_unity(e, expo) if e > 1
                       else Cyclotomic.one())
        rows.append(row)
    return _canonical_rows(G, e, rows, [1] * len(rows))


# ---------------------------------------------------------------------------
# Dixon's method
# ---------------------------------------------------------------------------


def _find_prime(e: int, n: int) -> int:
    bound = 2 * isqrt(n) + 1
    p = e + 1
    while p < PRIME_SEARCH_LIMIT:
        if p > bound and _is_prime(p):
            return p
        p += e
    raise PrimeSearchFailed(f"no prime = 1 mod {e} above {bound} below {PRIME_SEARCH_LIMIT}")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
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


def _primitive_root(p: int) -> int:
    factors = set()
    m = p - 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.add(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise PrimeSearchFailed("no primitive root found")


def _dixon_table(G: FiniteGroup, seed: int) -> CharacterTable:
    classes = G.conjugacy_classes()
    k = len(classes)
    n = G.order
    e = G.exponent()
    p = _find_prime(e, n)
    reps = [c.representative for c in classes]
    sizes = [c.size for c in classes]
    inv_class = [G.class_index_of(G.inv(r)) for r in reps]

    # class algebra structure constants a[i][j][l]: C_i C_j = sum_l a_ijl C_l
    a = np.zeros((k, k, k), dtype=np.int64)
    for l, z in enumerate(reps):
        for x in G.elements():
            i = G.class_index_of(x)
            j = G.class_index_of(G.mul(G.inv(x), z))
            a[i, j, l] += 1

    mats = [np.array(a[i], dtype=np.int64) % p for i in range(k)]  # A_i[j][l]

    # split the common eigenspaces over F_p
    rng = np.random.default_rng(seed)
    spaces = [np.eye(k, dtype=np.int64)]
    rounds = 0
    while any(s.shape[1] > 1 for s in spaces):
        rounds += 1
        if rounds > 60:
            raise PrimeSearchFailed("eigenspace splitting failed to converge")
        coeffs = rng.integers(0, p, size=k)
        B = np.zeros((k, k), dtype=np.int64)
        for i in range(k):
            if coeffs[i]:
                B = (B + int(coeffs[i]) * mats[i]) % p
        new_spaces = []
        for S in spaces:
            if S.shape[1] == 1:
                new_spaces.append(S)
                continue
            new_spaces.extend(_split_space(B, S, p, rng))
        spaces = new_spaces

    rows: list[list[Cyclotomic]] = []
    degrees: list[int] = []
    z_ord = [G.element_order(r) for r in reps]
    pow_class = [[G.class_index_of(G.power(reps[i], t)) for t in range(z_ord[i])]
                 for i in range(k)]
    g0 = _primitive_root(p)
    z_e = pow(g0, (p - 1) // e, p)
    inv_sizes = [pow(s % p, p - 2, p) for s in sizes]
    for S in spaces:
        w = S[:, 0] % p
        assert w[0] != 0, "central character must be nonzero on the identity class"
        w = w * pow(int(w[0]), p - 2, p) % p
        omega = [int(x) for x in w]
        denom = sum(omega[i] * omega[inv_class[i]] * inv_sizes[i] for i in range(k)) % p
        if denom == 0:
            raise PrimeSearchFailed("degenerate degree denominator")
        d2 = n * pow(denom, p - 2, p) % p
        d = next((t for t in range(1, isqrt(n) + 1) if t * t % p == d2), None)
        if d is None:
            raise PrimeSearchFailed("no integral degree matches the eigenvalue data")
        chi_p = [d * omega[i] * inv_sizes[i] % p for i in range(k)]
        row = []
        for i in range(k):
            o = z_ord[i]
            z_o = pow(z_e, e // o, p)
            inv_o = pow(o % p, p - 2, p)
            val = Cyclotomic.zero(e)
            for u in range(o):
                mu = 0
                for t in range(o):
                    mu = (mu + chi_p[pow_class[i][t]] * pow(z_o, (-u * t) % o, p)) % p
                mu = mu * inv_o % p
                assert mu <= d, "eigenvalue multiplicity exceeds the degree"
                if mu:
                    val = val + mu * Cyclotomic.root_of_unity(e, (u * e) // o)
            row.append(val)
        rows.append(row)
        degrees.append(d)
    return _canonical_rows(G, e, rows, degrees)


def _split_space(B: np.ndarray, S: np.ndarray, p: int, rng) -> list[np.ndarray]:
    """Split the column space S into eigenspaces of B (all matrices mod p)."""
    # restriction A with B S = S A
    A = _solve_columns(S, B @ S % p, p)
    poly = _char_poly(A, p)
    roots = _poly_roots(poly, p, rng)
    out = []
    dim = A.shape[0]
    for lam in roots:
        K = _nullspace(((A - lam * np.eye(dim, dtype=np.int64)) % p), p)
        if K.shape[1]:
            out.append(S @ K % p)
    total = sum(s.shape[1] for s in out)
    assert total == S.shape[1], "eigenspace split lost dimensions"
    return out


def _solve_columns(S: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    """A with S A = Y, S having full column rank mod p."""
    k, m = S.shape
    aug = np.hstack([S, Y]) % p
    # row-reduce
    r = 0
    pivots = []
    for c in range(m):
        rows = [i for i in range(r, k) if aug[i, c] % p]
        if not rows:
            raise PrimeSearchFailed("restriction solve failed")
        i = rows[0]
        aug[[r, i]] = aug[[i, r]]
        aug[r] = aug[r] * pow(int(aug[r, c]), p - 2, p) % p
        for i2 in range(k):
            if i2 != r and aug[i2, c]:
                aug[i2] = (aug[i2] - aug[i2, c] * aug[r]) % p
        pivots.append(c)
        r += 1
    A = np.zeros((m, Y.shape[1]), dtype=np.int64)
    for row_idx, c in enumerate(pivots):
        A[c] = aug[row_idx, m:]
    return A % p


def _nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning {x : M x = 0 mod p}."""
    M = M.copy() % p
    rows, cols = M.shape
    pivots = {}
    r = 0
    for c in range(cols):
        if r == rows:
            break
        cand = [i for i in range(r, rows) if M[i, c]]
        if not cand:
            continue
        i = cand[0]
        M[[r, i]] = M[[i, r]]
        M[r] = M[r] * pow(int(M[r, c]), p - 2, p) % p
        for i2 in range(rows):
            if i2 != r and M[i2, c]:
                M[i2] = (M[i2] - M[i2, c] * M[r]) % p
        pivots[c] = r
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for idx, c in enumerate(free):
        basis[c, idx] = 1
        for pc, pr in pivots.items():
            basis[pc, idx] = (-M[pr, c]) % p
    return basis


def _char_poly(A: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial mod p via Hessenberg reduction."""
    n = A.shape[0]
    H = A.copy() % p
    for c in range(n - 2):
        piv = next((r for r in range(c + 1, n) if H[r, c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            H[[c + 1, piv]] = H[[piv, c + 1]]
            H[:, [c + 1, piv]] = H[:, [piv, c + 1]]
        inv = pow(int(H[c + 1, c]), p - 2, p)
        for r in range(c + 2, n):
            if H[r, c]:
                f = H[r, c] * inv % p
                H[r] = (H[r] - f * H[c + 1]) % p
                H[:, c + 1] = (H[:, c + 1] + f * H[:, r]) % p
    # p_i = det(xI - H[:i,:i]) by the Hessenberg recurrence
    polys = [[1]]
    for i in range(1, n + 1):
        # poly_i = (x - H[i-1,i-1]) * poly_{i-1} - sum over subdiagonal products
        term = _poly_shift_sub(polys[i - 1], int(H[i - 1, i - 1]), p)
        prod = 1
        for j in range(i - 1, 0, -1):
            prod = prod * int(H[j, j - 1]) % p
            coeff = prod * int(H[j - 1, i - 1]) % p
            if coeff:
                term = _poly_axpy(term, polys[j - 1], (-coeff) % p, p)
        polys.append(term)
    return polys[n]


def _poly_shift_sub(poly: list[int], a: int, p: int) -> list[int]:
    """(x - a) * poly mod p."""
    out = [0] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i + 1] = (out[i + 1] + c) % p
        out[i] = (out[i] - a * c) % p
    return out


def _poly_axpy(target: list[int], poly: list[int], coeff: int, p: int) -> list[int]:
    out = list(target)
    for i, c in enumerate(poly):
        out[i] = (out[i] + coeff * c) % p
    return out


def _poly_roots(poly: list[int], p: int, rng) -> list[int]:
    """Distinct roots in F_p of a monic-able polynomial."""
    poly = [c % p for c in poly]
    while poly and poly[-1] == 0:
        poly.pop()
    assert poly, "zero polynomial has no canonical roots"
    inv_lead = pow(poly[-1], p - 2, p)
    poly = [c * inv_lead % p for c in poly]
    # linear-factor part: gcd(x^p - x, poly)
    xp = _poly_powmod([0, 1], p, poly, p)
    lin = _poly_gcd(_poly_sub_mod(xp, [0, 1], p), poly, p)
    roots: list[int] = []
    _collect_roots(lin, p, rng, roots)
    return sorted(roots)


def _collect_roots(f: list[int], p: int, rng, out: list[int]) -> None:
    f = _poly_monic(f, p)
    deg = len(f) - 1
    if deg == 0:
        return
    if deg == 1:
        out.append((-f[0]) % p)
        return
    if f[0] == 0:
        out.append(0)
        _collect_roots(_poly_monic(f[1:], p), p, rng, out)
        return
    while True:
        c = int(rng.integers(0, p))
        # gcd((x+c)^((p-1)/2) - 1, f) splits the roots with prob ~ 1/2
        h = _poly_powmod([c, 1], (p - 1) // 2, f, p)
        h = _poly_sub_mod(h, [1], p)
        g = _poly_gcd(h, f, p)
        if 0 < len(g) - 1 < deg:
            _collect_roots(g, p, rng, out)
            _collect_roots(_poly_div_mod(f, g, p), p, rng, out)
            return


def _poly_monic(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    if not f:
        return []
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_rem(out, mod, p)


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    dm = len(mod) - 1
    inv = pow(mod[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            f = c * inv % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - f * mod[j]) % p
    out = a[:dm]
    while out and out[-1] == 0:
        out.pop()
    return out or [0]

def _poly_powmod(base: list[int], k: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_rem(base, mod, p)
    while k:
        if k & 1:
            result = _poly_mul_mod(result, base, mod, p)
        base = _poly_mul_mod(base, base, mod, p)
        k >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = [c % p for c in a], [c % p for c in b]
    while any(b):
        a, b = b, _poly_rem_strict(a, b, p)
    return _poly_monic(a, p)


def _poly_rem_strict(a: list[int], b: list[int], p: int) -> list[int]:
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    r = _poly_rem(a, b, p)
    return r


def _poly_div_mod(a: list[int], b: list[int], p: int) -> list[int]:
    """Exact quotient a / b mod p."""
    a = [c % p for c in a]
    b = _poly_monic(b, p)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i]
        if c:
            out[i - len(b) + 1] = c
            for j in range(len(b)):
                a[i - len(b) + 1 + j] = (a[i - len(b) + 1 + j] - c * b[j]) % p
    return out


def _poly_sub_mod(a: list[int], b: list[int], p: int) -> list[int]:
    m = max(len(a), len(b))
    a = list(a) + [0] * (m - len(a))
    b = list(b) + [0] * (m - len(b))
    return [(x - y) % p for x, y in zip(a, b)]


# ---------------------------------------------------------------------------
# Virtual characters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VirtualCharacter:
    """Element of R(G) as coordinates over the irreducible characters."""

    group: FiniteGroup
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @staticmethod
    def from_coeffs(G: FiniteGroup, coeffs) -> "VirtualCharacter":
        return VirtualCharacter(G, tuple(Fraction(c) for c in coeffs))

    @staticmethod
    def irreducible(G: FiniteGroup, i: int) -> "VirtualCharacter":
        k = character_table(G).num_irreducibles
        return VirtualCharacter(G, tuple(Fraction(1 if j == i else 0) for j in range(k)))

    @staticmethod
    def trivial_character(G: FiniteGroup) -> "VirtualCharacter":
        table = character_table(G)
        i = _trivial_index(table)
        return VirtualCharacter.irreducible(G, i)

    @staticmethod
    def regular_character(G: FiniteGroup) -> "VirtualCharacter":
        table = character_table(G)
        return VirtualCharacter(G, tuple(Fraction(d) for d in table.degrees))

    @staticmethod
    def zero(G: FiniteGroup) -> "VirtualCharacter":
        k = character_table(G).num_irreducibles
        return VirtualCharacter(G, (Fraction(0),) * k)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def class_value(self, class_index: int) -> Cyclotomic:
        table = character_table(self.group)
        acc = Cyclotomic.zero(table.exponent)
        for c, row in zip(self.coeffs, table.irreducibles):
            if c:
                acc = acc + c * row[class_index]
        return acc

    def class_values(self) -> list[Cyclotomic]:
        k = character_table(self.group).num_irreducibles
        return [self.class_value(c) for c in range(k)]

    def add(self, other: "VirtualCharacter") -> "VirtualCharacter":
        _same(self, other)
        return VirtualCharacter(self.group,
                                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def sub(self, other: "VirtualCharacter") -> "VirtualCharacter":
        _same(self, other)
        return VirtualCharacter(self.group,
                                tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, s) -> "VirtualCharacter":
        s = Fraction(s)
        return VirtualCharacter(self.group, tuple(s * c for c in self.coeffs))

    def mul(self, other: "VirtualCharacter") -> "VirtualCharacter":
        _same(self, other)
        G = self.group
        va = self.class_values()
        vb = other.class_values()
        prod = [a * b for a, b in zip(va, vb)]
        coeffs = decompose_class_function(G, prod, allow_rational=True)
        out = VirtualCharacter(G, coeffs)
        if self.is_integral() and other.is_integral() and not out.is_integral():
            raise NonIntegralDecomposition("product of characters must be integral")
        return out

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return same_group(self.group, other.group) and self.coeffs == other.coeffs

    __hash__ = None


def _same(a: VirtualCharacter, b: VirtualCharacter) -> None:
    if not same_group(a.group, b.group):
        raise GroupMismatch("virtual characters on different groups")


def _trivial_index(table: CharacterTable) -> int:
    one = Cyclotomic.one()
    for i, row in enumerate(table.irreducibles):
        if table.degrees[i] == 1 and all(v == one for v in row):
            return i
    raise AssertionError("trivial character missing from the table")


def rr_arith(op: str, a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    if op == "add":
        return a.add(b)
    if op == "mul":
        return a.mul(b)
    raise ValueError(f"unknown representation-ring operation {op!r}")


def rank(a: VirtualCharacter) -> Fraction:
    """Value at the identity: the rank homomorphism R(G) -> Z."""
    table = character_table(a.group)
    out = sum((c * d for c, d in zip(a.coeffs, table.degrees)), Fraction(0))
    return out


def is_unit_at_I(a: VirtualCharacter) -> bool:
    """Unit test in the localization at the augmentation ideal: rank != 0."""
    return rank(a) != 0


@dataclass(frozen=True)
class RingIdempotents:
    e_plus: VirtualCharacter
    e_minus: VirtualCharacter


def idempotents(G: FiniteGroup) -> RingIdempotents:
    """The averaging idempotent [kG]/|G| and its complement, verified exactly."""
    table = character_table(G)
    n = G.order
    e_plus = VirtualCharacter(G, tuple(Fraction(d, n) for d in table.degrees))
    one = VirtualCharacter.trivial_character(G)
    e_minus = one.sub(e_plus)
    assert e_plus.mul(e_plus) == e_plus
    assert e_minus.mul(e_minus) == e_minus
    assert e_plus.mul(e_minus) == VirtualCharacter.zero(G)
    assert e_plus.add(e_minus) == one
    assert rank(e_plus) == 1 and rank(e_minus) == 0
    return RingIdempotents(e_plus, e_minus)


def decompose_class_function(G: FiniteGroup, values: list[Cyclotomic],
                             allow_rational: bool = False) -> tuple[Fraction, ...]:
    """Coordinates of a class function over the irreducibles, by exact inner
    products; raises NonIntegralCharacter for non-integral outputs unless
    rationals are allowed."""
    table = character_table(G)
    sizes = table.class_sizes()
    n = G.order
    coeffs = []
    for row in table.irreducibles:
        acc = Cyclotomic.zero(table.exponent)
        for c in range(len(sizes)):
            acc = acc + sizes[c] * values[c] * row[c].conjugate()
        acc = acc * Fraction(1, n)
        if not acc.is_rational():
            raise NonIntegralCharacter("inner product is not rational")
        q = acc.rational_value()
        if not allow_rational and q.denominator != 1:
            raise NonIntegralCharacter(f"non-integral multiplicity {q}")
        coeffs.append(q)
    return tuple(coeffs)


def permutation_character(G: FiniteGroup, H: Subgroup) -> VirtualCharacter:
    """Character of the left-translation action on G/H (fixed-coset counts)."""
    space = coset_space(G, H)
    values = []
    for cls in G.conjugacy_classes():
        g = cls.representative
        fixed = sum(1 for i in range(space.size) if space.action[g][i] == i)
        values.append(Cyclotomic.from_rational(fixed))
    coeffs = decompose_class_function(G, values)
    out = VirtualCharacter(G, coeffs)
    assert rank(out) == H.index
    triv = _trivial_index(character_table(G))
    assert out.coeffs[triv] == 1, "transitive action must contain one trivial copy"
    assert all(c >= 0 for c in out.coeffs)
    return out


def restrict(a: VirtualCharacter, H: Subgroup) -> VirtualCharacter:
    """Restriction along H <= G, decomposed over Irr(H)."""
    G = a.group
    if H.parent is not G and not same_group(H.parent, G):
        raise GroupMismatch("subgroup of a different group")
    sub, members = H.as_group()
    table_h = character_table(sub)
    values = []
    for cls in sub.conjugacy_classes():
        g_parent = members[cls.representative]
        values.append(a.class_value(G.class_index_of(g_parent)))
    coeffs = decompose_class_function(sub, values, allow_rational=True)
    out = VirtualCharacter(sub, coeffs)
    if a.is_integral() and not out.is_integral():
        raise NonIntegralDecomposition("restriction of a character must be integral")
    return out
