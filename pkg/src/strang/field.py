"""Exact arithmetic in GF(2^e) and dense matrix kernels.

Elements are encoded as integer bitmasks of polynomial coefficients
(bit i is the coefficient of t^i).  Matrices are ``numpy.uint8`` arrays
holding such encodings, row-major.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

#: Fixed moduli, so serialized matrices are bit-exact everywhere.
MODULI = {
    1: 0b10,  # x
    2: 0b111,  # x^2 + x + 1
    3: 0b1011,  # x^3 + x + 1
    4: 0b10011,  # x^4 + x + 1
    8: 0b100011101,  # x^8 + x^4 + x^3 + x^2 + 1
}


class FieldError(ArithmeticError):
    pass


def _clmul(x: int, y: int) -> int:
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def _polymod(x: int, m: int) -> int:
    dm = m.bit_length() - 1
    while x and x.bit_length() - 1 >= dm:
        x ^= m << (x.bit_length() - 1 - dm)
    return x


def is_irreducible_gf2(m: int) -> bool:
    """Trial division by every polynomial of degree <= deg(m)/2."""
    deg = m.bit_length() - 1
    if deg < 1:
        return False
    for cand in range(2, 1 << (deg // 2 + 1)):
        if _polymod(m, cand) == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    degree: int
    modulus: int
    mul_table: np.ndarray = field(repr=False, compare=False)
    inv_table: np.ndarray = field(repr=False, compare=False)

    @property
    def characteristic(self) -> int:
        return 2

    @property
    def order(self) -> int:
        return 1 << self.degree

    def elements(self) -> range:
        return range(self.order)

    def nonzero(self) -> range:
        return range(1, self.order)

    def add(self, x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_table[x, y])

    def inv(self, x: int) -> int:
        if x == 0:
            raise FieldError("zero-division")
        return int(self.inv_table[x])

    def sqrt(self, x: int) -> int:
        # Frobenius is bijective; x^(2^(e-1)) is the square root.
        for _ in range(self.degree - 1):
            x = self.mul(x, x)
        return x

    def check(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise FieldError(f"{x} is not an element of GF(2^{self.degree})")

    def format(self, x: int) -> str:
        if self.degree == 1 or x < 2:
            return str(x)
        terms = []
        for i in reversed(range(self.degree)):
            if x >> i & 1:
                terms.append("1" if i == 0 else "t" if i == 1 else f"t^{i}")
        return "+".join(terms)


@lru_cache(maxsize=None)
def gf(degree: int) -> FieldCtx:
    """The field GF(2^degree) with the fixed modulus from ``MODULI``."""
    if degree not in MODULI:
        raise FieldError(f"unsupported degree {degree}; choose from {sorted(MODULI)}")
    modulus = MODULI[degree]
    if not is_irreducible_gf2(modulus):
        raise FieldError(f"modulus {modulus:#b} is reducible")
    q = 1 << degree
    table = np.zeros((q, q), dtype=np.uint8)
    for x in range(q):
        for y in range(x, q):
            table[x, y] = table[y, x] = _polymod(_clmul(x, y), modulus)
    inv = np.zeros(q, dtype=np.uint8)
    for x in range(1, q):
        inv[x] = int(np.nonzero(table[x] == 1)[0][0])
    table.setflags(write=False)
    inv.setflags(write=False)
    return FieldCtx(degree, modulus, table, inv)


def parse_field(text: str | int) -> FieldCtx:
    """Accept ``2``, ``4``, ``"2^3"`` or ``"F_4"`` style field names."""
    s = str(text).strip().replace("F_", "").replace("GF", "").strip("()")
    if "^" in s:
        base, exp = s.split("^")
        if int(base) != 2:
            raise FieldError("only characteristic 2 is supported")
        return gf(int(exp))
    q = int(s)
    if q < 2 or q & (q - 1):
        raise FieldError(f"field order {q} is not a power of 2")
    return gf(q.bit_length() - 1)


# --- matrices ---------------------------------------------------------------


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.uint8)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.uint8)


def scale(ctx: FieldCtx, s: int, m: np.ndarray) -> np.ndarray:
    if s == 1:
        return m.copy()
    return ctx.mul_table[s, m]


def matmul(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    if a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    if ctx.degree == 1:
        return ((a.astype(np.int32) @ b.astype(np.int32)) & 1).astype(np.uint8)
    prod = ctx.mul_table[a[:, :, None], b[None, :, :]]
    return np.bitwise_xor.reduce(prod, axis=1)


def matvec(ctx: FieldCtx, a: np.ndarray, v: np.ndarray) -> np.ndarray:
    return matmul(ctx, a, v.reshape(-1, 1)).ravel()


def kron(ctx: FieldCtx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    p, q = a.shape
    r, s = b.shape
    out = ctx.mul_table[a[:, None, :, None], b[None, :, None, :]]
    return out.reshape(p * r, q * s)


def rref(ctx: FieldCtx, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = np.array(m, dtype=np.uint8, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        lead = int(a[r, c])
        if lead != 1:
            a[r] = ctx.mul_table[ctx.inv(lead), a[r]]
        col = a[:, c].copy()
        col[r] = 0
        idx = np.flatnonzero(col)
        if idx.size:
            if ctx.degree == 1:
                a[idx] ^= a[r]
            else:
                a[idx] ^= ctx.mul_table[col[idx][:, None], a[r][None, :]]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(ctx: FieldCtx, m: np.ndarray) -> int:
    if m.size == 0:
        return 0
    return len(rref(ctx, m)[1])


def row_basis(ctx: FieldCtx, vectors: np.ndarray) -> np.ndarray:
    """Reduced echelon basis (as rows) of the row span of ``vectors``."""
    r, piv = rref(ctx, vectors)
    return r[: len(piv)]


def rank_and_kernel(ctx: FieldCtx, m: np.ndarray) -> tuple[int, list[np.ndarray]]:
    """Rank of ``m`` and a reduced-echelon basis of its right kernel."""
    rows, cols = m.shape
    if rows == 0:
        return 0, [identity(cols)[i] for i in range(cols)]
    r, piv = rref(ctx, m)
    free = [c for c in range(cols) if c not in set(piv)]
    vecs = []
    for f in free:
        v = np.zeros(cols, dtype=np.uint8)
        v[f] = 1
        for i, p in enumerate(piv):
            v[p] = r[i, f]  # -x = x in characteristic 2
        vecs.append(v)
    if not vecs:
        return len(piv), []
    basis = row_basis(ctx, np.array(vecs))
    return len(piv), [basis[i] for i in range(basis.shape[0])]


def kernel_matrix(ctx: FieldCtx, m: np.ndarray) -> np.ndarray:
    """Kernel basis as the columns of a matrix."""
    _, ker = rank_and_kernel(ctx, m)
    if not ker:
        return zeros(m.shape[1], 0)
    return np.array(ker, dtype=np.uint8).T


def solve_linear(ctx: FieldCtx, m: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """The echelon-canonical solution of ``m x = b`` (free variables 0), or None."""
    rows, cols = m.shape
    b = np.asarray(b, dtype=np.uint8).reshape(-1)
    if b.shape[0] != rows:
        raise ValueError("dimension mismatch")
    aug = np.concatenate([m, b.reshape(-1, 1)], axis=1)
    r, piv = rref(ctx, aug)
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for i, p in enumerate(piv):
        x[p] = r[i, cols]
    return x


def solve_columns(ctx: FieldCtx, k: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Solve ``k @ x = y`` for a full-column-rank ``k``; raises if inconsistent."""
    n = k.shape[1]
    if n == 0:
        if np.any(y):
            raise FieldError("inconsistent system")
        return zeros(0, y.shape[1])
    aug = np.concatenate([k, y], axis=1)
    r, piv = rref(ctx, aug)
    if piv[:n] != list(range(n)) or (len(piv) > n):
        raise FieldError("inconsistent system")
    return r[:n, n:].copy()


def inverse(ctx: FieldCtx, m: np.ndarray) -> np.ndarray:
    n = m.shape[0]
    if m.shape != (n, n):
        raise ValueError("square matrix required")
    r, piv = rref(ctx, np.concatenate([m, identity(n)], axis=1))
    if piv[:n] != list(range(n)) or (len(piv) > n):
        raise FieldError("singular matrix")
    return r[:, n:].copy()


def complement_basis(ctx: FieldCtx, sub: np.ndarray, dim: int) -> np.ndarray:
    """Standard basis vectors extending the column span of ``sub`` to the full space.

    Returned as columns, chosen greedily in index order.
    """
    chosen = []
    current = sub if sub.size else zeros(dim, 0)
    r = rank(ctx, current.T) if current.shape[1] else 0
    eye = identity(dim)
    for i in range(dim):
        trial = np.concatenate([current, eye[:, i : i + 1]], axis=1)
        tr = rank(ctx, trial.T)
        if tr > r:
            current, r = trial, tr
            chosen.append(i)
    if not chosen:
        return zeros(dim, 0)
    return eye[:, chosen]


def column_space(ctx: FieldCtx, m: np.ndarray) -> np.ndarray:
    """Echelon basis of the column span, as columns."""
    if m.shape[1] == 0:
        return zeros(m.shape[0], 0)
    b = row_basis(ctx, m.T)
    return b.T.copy()
