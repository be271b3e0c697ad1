"""Exact linear algebra over Z/n and Z.

Z/n is not a field, so row reduction uses Howell forms: a canonical echelon
shape whose row span supports a complete membership test even for composite
moduli.  Prime-power moduli additionally get a fast vectorized elimination
used by the cohomology solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import SizeBound, Unsolvable

SNF_DIM_GUARD = 5000


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def inv_mod(a: int, n: int) -> int:
    g, s, _ = xgcd(a % n, n)
    if g != 1:
        raise ValueError(f"{a} is not invertible mod {n}")
    return s % n


def stab_unit(a: int, n: int) -> int:
    """A unit u mod n with u*a == gcd(a, n) mod n.

    Multiplying a row by u normalizes its pivot to a divisor of n without
    changing the row span.
    """
    if n == 1:
        return 1
    a %= n
    d = gcd(a, n)
    if d == 0:
        return 1
    nd = n // d
    g, s, _ = xgcd(a // d, nd)
    assert g == 1
    u = s % nd if nd > 1 else 1
    # u inverts a/d mod n/d; bump by multiples of n/d until coprime to n.
    while gcd(u, n) != 1:
        u += nd
    return u % n


def prime_power_factors(n: int) -> list[tuple[int, int]]:
    """Factor n as a list of (p, a) with p^a || n."""
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


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """The residue mod m1*m2 matching r1 mod m1 and r2 mod m2 (coprime)."""
    g, s, _ = xgcd(m1, m2)
    assert g == 1
    return (r1 + (r2 - r1) * s % m2 * m1) % (m1 * m2)


# ---------------------------------------------------------------------------
# Howell forms over Z/n
# ---------------------------------------------------------------------------


def _leading(v: np.ndarray) -> int:
    nz = np.nonzero(v)[0]
    return int(nz[0]) if nz.size else -1


def _howell_insert(pivots: dict[int, np.ndarray], v: np.ndarray, n: int) -> None:
    """Fold row v into the pivot dictionary, preserving the row span."""
    while True:
        v %= n
        c = _leading(v)
        if c < 0:
            return
        if c not in pivots:
            u = stab_unit(int(v[c]), n)
            v = (v * u) % n
            pivots[c] = v
            return
        p = pivots[c]
        d = int(p[c])  # divisor of n by normalization
        vc = int(v[c])
        if vc % d == 0:
            v = v - (vc // d) * p
            continue
        g, s, t = xgcd(d, vc)
        newp = (s * p + t * v) % n
        newv = ((d // g) * v - (vc // g) * p) % n
        u = stab_unit(int(newp[c]), n)
        pivots[c] = (newp * u) % n
        v = newv


def howell_rows(rows: Iterable[Sequence[int]], n: int, cols: int) -> list[list[int]]:
    """Canonical Howell basis of the Z/n-row span of the given rows."""
    if n == 1:
        return []
    dtype = np.int64 if n <= 1 << 30 else object
    pivots: dict[int, np.ndarray] = {}
    queue = [np.asarray(r, dtype=dtype) % n for r in rows]
    while queue:
        for v in queue:
            _howell_insert(pivots, v.copy(), n)
        queue = []
        # Saturation: the annihilator multiple of each pivot row may expose
        # span elements supported on later columns.
        for c in sorted(pivots):
            p = pivots[c]
            d = int(p[c])
            if d == n:
                continue
            stab = ((n // d) * p) % n
            stab = _reduce_by_pivots(pivots, stab, n)
            if _leading(stab) >= 0:
                queue.append(stab)
    ordered = [pivots[c] for c in sorted(pivots)]
    # Reduce entries above each pivot into [0, pivot): rows bottom-up, each
    # against the already-canonical later rows in ascending pivot order.
    for i in range(len(ordered) - 2, -1, -1):
        row = ordered[i]
        for j in range(i + 1, len(ordered)):
            pj = ordered[j]
            c = _leading(pj)
            q = int(row[c]) // int(pj[c])
            if q:
                row = (row - q * pj) % n
        ordered[i] = row
    return [[int(x) for x in row] for row in ordered]


def _reduce_by_pivots(pivots: dict[int, np.ndarray], v: np.ndarray, n: int) -> np.ndarray:
    v = v % n
    while True:
        c = _leading(v)
        if c < 0 or c not in pivots:
            return v
        p = pivots[c]
        d = int(p[c])
        q = int(v[c]) // d
        v = (v - q * p) % n
        if int(v[c]) != 0:
            return v  # residue below the pivot: irreducible at this column


def reduce_row(basis: Sequence[Sequence[int]], v: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Reduce v against a Howell basis; return (residual, coefficients).

    v is in the row span iff the residual is zero; the coefficients then
    express v as the recorded combination of basis rows.
    """
    dtype = np.int64 if n <= 1 << 30 else object
    v = np.asarray(v, dtype=dtype) % n
    coeffs = [0] * len(basis)
    lead = {_leading(np.asarray(b, dtype=dtype)): i for i, b in enumerate(basis)}
    c = _leading(v)
    while c >= 0 and c in lead:
        i = lead[c]
        b = np.asarray(basis[i], dtype=dtype)
        d = int(b[c])
        q = int(v[c]) // d
        if q == 0 and int(v[c]) != 0:
            break
        v = (v - q * b) % n
        coeffs[i] = (coeffs[i] + q) % n
        if int(v[c]) != 0:
            break
        c = _leading(v)
    return [int(x) for x in v], coeffs


def in_row_span(basis: Sequence[Sequence[int]], v: Sequence[int], n: int) -> bool:
    residual, _ = reduce_row(basis, v, n)
    return not any(residual)


# ---------------------------------------------------------------------------
# Vectorized elimination mod a prime power (internal fast path)
# ---------------------------------------------------------------------------


def _valuations(col: np.ndarray, p: int, a: int) -> np.ndarray:
    """p-adic valuation of each entry, with a for zeros (mod p^a)."""
    val = np.full(col.shape, a, dtype=np.int64)
    tmp = col.copy()
    for v in range(a):
        mask = (tmp != 0) & (tmp % p != 0)
        val[mask & (val == a)] = v
        tmp //= p
    return val


def eliminate_mod_q(A: np.ndarray, p: int, a: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Howell-saturated row reduction of A mod q = p**a.

    Returns (R, pivots) with R a reduced basis of the row span (pivot entries
    p**v, entries above pivots reduced where valuations allow) and pivots a
    list of (col, val).  Rows are folded in geometrically growing chunks so
    tall redundant systems only pay one vectorized reduction pass.
    """
    q = p ** a
    A = np.asarray(A, dtype=np.int64) % q
    if A.shape[0] == 0 or not A.any():
        return np.zeros((0, A.shape[1]), dtype=np.int64), []
    cols = A.shape[1]
    basis = np.zeros((0, cols), dtype=np.int64)
    piv: list[tuple[int, int]] = []
    start = 0
    chunk = max(256, 2 * cols)
    while start < A.shape[0]:
        block = A[start:start + chunk]
        start += chunk
        chunk *= 2
        if piv:
            block = _reduce_block_rows(block, basis, piv, p, q)
        block = block[block.any(axis=1)]
        if block.shape[0]:
            merged = np.vstack([basis, block]) if piv else block
            basis, piv = _echelon_block(merged, p, a)
    while True:
        stabs = []
        for i, (c, v) in enumerate(piv):
            if 0 < v < a:
                s = (p ** (a - v)) * basis[i] % q
                s = _reduce_block_rows(s[None, :], basis, piv, p, q)
                if s.any():
                    stabs.append(s[0])
        if not stabs:
            break
        basis, piv = _echelon_block(
            np.vstack([basis, np.array(stabs, dtype=np.int64)]), p, a)
    return basis, piv


def _echelon_block(M: np.ndarray, p: int, a: int) -> tuple[np.ndarray, list[tuple[int, int]]]:
    q = p ** a
    M = M % q
    m, ncols = M.shape
    r = 0
    piv: list[tuple[int, int]] = []
    for c in range(ncols):
        if r == m:
            break
        col = M[r:, c]
        if not col.any():
            continue
        vals = _valuations(col, p, a)
        i = int(np.argmin(vals))
        v = int(vals[i])
        if v >= a:
            continue
        if i != 0:
            M[[r, r + i]] = M[[r + i, r]]
        pv = p ** v
        unit = int(M[r, c]) // pv
        M[r] = M[r] * inv_mod(unit, q) % q
        f = M[:, c] // pv
        f[r] = 0
        nz = np.nonzero(f)[0]
        if nz.size:
            M[nz] = (M[nz] - np.outer(f[nz], M[r])) % q
        piv.append((c, v))
        r += 1
    return M[:r], piv


def _reduce_block_rows(B: np.ndarray, basis: np.ndarray, piv: list[tuple[int, int]],
                       p: int, q: int) -> np.ndarray:
    B = B % q
    for i, (c, v) in enumerate(piv):
        f = B[:, c] // (p ** v)
        nz = np.nonzero(f)[0]
        if nz.size:
            B[nz] = (B[nz] - np.outer(f[nz], basis[i])) % q
    return B


def diagonalize_mod_q(A: np.ndarray, p: int, a: int) -> tuple[np.ndarray, list[int], np.ndarray]:
    """U A V = diag mod q = p**a with U, V invertible mod q.

    Returns (U, diag_valuations, V); diagonal entries are p**v in ascending
    valuation, truncated at the first missing pivot.
    """
    q = p ** a
    M = np.asarray(A, dtype=np.int64).copy() % q
    m, c = M.shape
    U = np.eye(m, dtype=np.int64)
    V = np.eye(c, dtype=np.int64)
    vals: list[int] = []
    for t in range(min(m, c)):
        sub = M[t:, t:]
        if not sub.any():
            break
        vv = _valuations(sub.reshape(-1), p, a)
        k = int(np.argmin(vv))
        v = int(vv[k])
        if v >= a:
            break
        i, j = divmod(k, sub.shape[1])
        i += t
        j += t
        if i != t:
            M[[t, i]] = M[[i, t]]
            U[[t, i]] = U[[i, t]]
        if j != t:
            M[:, [t, j]] = M[:, [j, t]]
            V[:, [t, j]] = V[:, [j, t]]
        pv = p ** v
        unit = int(M[t, t]) // pv
        ui = inv_mod(unit, q)
        M[t] = M[t] * ui % q
        U[t] = U[t] * ui % q
        f = M[:, t] // pv
        f[t] = 0
        if f.any():
            M -= np.outer(f, M[t])
            U -= np.outer(f, U[t])
            M %= q
            U %= q
        g = M[t, :] // pv
        g[t] = 0
        if g.any():
            M -= np.outer(M[:, t], g)
            V -= np.outer(V[:, t], g)
            M %= q
            V %= q
        vals.append(v)
    return U % q, vals, V % q


def kernel_mod_q(A: np.ndarray, p: int, a: int) -> list[np.ndarray]:
    """Generators of {x : A x == 0 mod p**a}."""
    q = p ** a
    A = np.asarray(A, dtype=np.int64) % q
    c = A.shape[1]
    _, vals, V = diagonalize_mod_q(A, p, a)
    gens = []
    for t, v in enumerate(vals):
        if v > 0:
            gens.append((p ** (a - v)) * V[:, t] % q)
    for t in range(len(vals), c):
        gens.append(V[:, t] % q)
    return gens


def invert_mod_q(M: np.ndarray, p: int, a: int) -> np.ndarray:
    """Inverse of a square matrix invertible mod p**a."""
    q = p ** a
    M = np.asarray(M, dtype=np.int64) % q
    m = M.shape[0]
    U, vals, V = diagonalize_mod_q(M, p, a)
    if len(vals) != m or any(v != 0 for v in vals):
        raise ValueError("matrix not invertible mod prime power")
    return V @ U % q


# ---------------------------------------------------------------------------
# Public matrix types and operations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModMatrix:
    """Dense matrix over Z/n with entries reduced to {0..n-1}."""

    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        reduced = tuple(tuple(int(x) % self.modulus for x in row) for row in self.entries)
        object.__setattr__(self, "entries", reduced)
        widths = {len(r) for r in reduced}
        if len(widths) > 1:
            raise ValueError("ragged rows")

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]], modulus: int) -> "ModMatrix":
        return ModMatrix(modulus, tuple(tuple(int(x) for x in r) for r in rows))


def howell_form(M: ModMatrix) -> ModMatrix:
    """Canonical Howell form of the row space of M."""
    if M.rows == 0 or M.cols == 0 or M.modulus == 1:
        return ModMatrix(M.modulus, ())
    basis = howell_rows(M.entries, M.modulus, M.cols)
    return ModMatrix.from_rows(basis, M.modulus)


def row_space_contains(M: ModMatrix, v: Sequence[int]) -> bool:
    H = howell_form(M)
    if M.modulus == 1:
        return True
    return in_row_span(H.entries, v, M.modulus)


@dataclass(frozen=True)
class ModSolution:
    """Solution set of A x = b over Z/n: one particular solution plus a
    kernel basis spanning all homogeneous solutions."""

    modulus: int
    particular: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...]


def solve_mod(A: ModMatrix, b: Sequence[int]) -> ModSolution:
    """Solve A x = b over Z/n; raise Unsolvable when inconsistent."""
    n = A.modulus
    m, c = A.rows, A.cols
    if len(b) != m:
        raise ValueError("dimension mismatch")
    if n == 1:
        return ModSolution(1, tuple([0] * c), ())
    mat = np.asarray(A.entries, dtype=np.int64) if m else np.zeros((0, c), dtype=np.int64)
    bvec = np.asarray([int(x) % n for x in b], dtype=np.int64)
    particular = np.zeros(c, dtype=object)
    kernel_gens: list[np.ndarray] = []
    for p, a in prime_power_factors(n):
        q = p ** a
        # reduce the augmented system first so transforms stay (c+1)-sized
        aug = np.hstack([mat, bvec[:, None]]) if m else np.zeros((0, c + 1), dtype=np.int64)
        red, _ = eliminate_mod_q(aug, p, a)
        Ared = red[:, :c] if red.size else np.zeros((0, c), dtype=np.int64)
        bred = red[:, c] if red.size else np.zeros(0, dtype=np.int64)
        mr = Ared.shape[0]
        U, vals, V = diagonalize_mod_q(Ared, p, a)
        rhs = U @ bred % q if mr else np.zeros(0, dtype=np.int64)
        z = np.zeros(c, dtype=np.int64)
        for t in range(mr):
            target = int(rhs[t])
            if t < len(vals):
                pv = p ** vals[t]
                if target % pv != 0:
                    raise Unsolvable(f"no solution mod {q}")
                z[t] = target // pv
            elif target % q != 0:
                raise Unsolvable(f"no solution mod {q}")
        xq = V @ z % q
        cq = (n // q) * inv_mod((n // q) % q, q) % n if n != q else 1
        particular = (particular + cq * xq.astype(object)) % n
        for g in kernel_mod_q(Ared, p, a):
            kernel_gens.append(cq * g.astype(object) % n)
    check = (mat.astype(object) @ particular) % n if m else np.zeros(0, dtype=object)
    if m and not np.array_equal(check, bvec.astype(object)):
        raise Unsolvable("inconsistent system")
    kbasis = howell_rows(kernel_gens, n, c) if kernel_gens else []
    return ModSolution(n, tuple(int(x) for x in particular),
                       tuple(tuple(row) for row in kbasis))


# ---------------------------------------------------------------------------
# Integer Smith normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """U A V = diag(invariant_factors) with U, V unimodular."""

    invariant_factors: tuple[int, ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows > SNF_DIM_GUARD or cols > SNF_DIM_GUARD:
        raise SizeBound(f"matrix exceeds {SNF_DIM_GUARD}x{SNF_DIM_GUARD}")
    M = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        M[i] = [a - q * b for a, b in zip(M[i], M[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            M[r][i] -= q * M[r][j]
        for r in range(cols):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        M[i], M[j] = M[j], M[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(rows):
            M[r][i], M[r][j] = M[r][j], M[r][i]
        for r in range(cols):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    t = 0
    while t < min(rows, cols):
        # locate a minimal nonzero pivot in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if M[i][j] != 0 and (best is None or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    row_op(i, t, q)
                    if M[i][t]:
                        swap_rows(t, i)
                        if M[t][t] < 0:
                            M[t] = [-x for x in M[t]]
                            U[t] = [-x for x in U[t]]
                        dirty = True
            for j in range(t + 1, cols):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    col_op(j, t, q)
                    if M[t][j]:
                        swap_cols(t, j)
                        if M[t][t] < 0:
                            M[t] = [-x for x in M[t]]
                            U[t] = [-x for x in U[t]]
                        dirty = True
            if not dirty:
                # enforce divisibility of the trailing block by the pivot
                for i in range(t + 1, rows):
                    bad = next((j for j in range(t + 1, cols) if M[i][j] % M[t][t]), None)
                    if bad is not None:
                        row_op(t, i, -1)  # add row i to row t
                        dirty = True
                        break
        t += 1

    diag = [M[i][i] for i in range(min(rows, cols))]
    while diag and diag[-1] == 0:
        diag.pop()
    return SmithDecomposition(tuple(abs(d) for d in diag),
                              tuple(tuple(r) for r in U),
                              tuple(tuple(r) for r in V))


def abelian_invariants_from_relations(rel_rows: Sequence[Sequence[int]], rank: int) -> list[int]:
    """Invariant factors (>1) of Z^rank modulo the row lattice of rel_rows."""
    if rank == 0:
        return []
    if not rel_rows:
        return [0] * rank
    snf = smith_normal_form(rel_rows)
    diag = list(snf.invariant_factors) + [0] * (rank - len(snf.invariant_factors))
    return [d for d in diag[:rank] if d != 1]
