"""Integer polynomials: the q_l recursion, p_d(t) and its mod-2 reductions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import mpmath


class PolyError(ValueError):
    pass


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with Python-int coefficients in ascending degree, no trailing zeros."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def t(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(tuple(other * x for x in self.coeffs))
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def mod2(self) -> tuple[int, ...]:
        """Coefficients reduced mod 2 (canonical, trailing zeros dropped)."""
        return IntPoly(tuple(c & 1 for c in self.coeffs)).coeffs

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else "t" if i == 1 else f"t^{i}"
            mag = abs(c)
            body = (str(mag) if mag != 1 or i == 0 else "") + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


@lru_cache(maxsize=None)
def minpoly_halfroot(ell: int) -> IntPoly:
    """q_2 = t and q_l = q_{l-1}^2 - 2; q_l has the root 2cos(pi/2^(l-1))."""
    if ell < 2:
        raise PolyError("ℓ must be >= 2")
    if ell == 2:
        return IntPoly.t()
    q = minpoly_halfroot(ell - 1)
    return q * q - IntPoly.const(2)


@lru_cache(maxsize=None)
def pd(d: int) -> IntPoly:
    if d < 3:
        raise PolyError("d must be >= 3")
    out = IntPoly.const(1)
    for ell in range(2, d):
        out = out * minpoly_halfroot(ell)
    return out


def presentation_ideal(d: int) -> list[IntPoly]:
    """Generators t*p_d(t) and 2*p_d(t) of the presentation ideal."""
    p = pd(d)
    return [IntPoly.t() * p, p * 2]


def mod2_quotient_dim(d: int) -> int:
    """dim_k of k[[t]] / (generators reduced mod 2).

    In k[[t]] every nonzero series is a unit times a power of t, so an ideal
    is generated by t^v with v the least valuation among its generators.
    """
    vals = [IntPoly(g.mod2()).valuation() for g in presentation_ideal(d)]
    vals = [v for v in vals if v is not None]
    if not vals:
        raise PolyError("ideal reduces to zero mod 2; quotient is infinite-dimensional")
    return min(vals)


def chebyshev_T(n: int) -> IntPoly:
    """T_n by the three-term recurrence."""
    a, b = IntPoly.const(1), IntPoly.t()
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, IntPoly.t() * b * 2 - a
    return b


def scaled_chebyshev(n: int) -> IntPoly:
    """2 T_n(x/2) as an integer polynomial."""
    out = []
    for i, c in enumerate(chebyshev_T(n).coeffs):
        q, r = divmod(2 * c, 1 << i)
        if r:
            raise PolyError("2 T_n(x/2) has a non-integral coefficient")
        out.append(q)
    return IntPoly(tuple(out))


def _residual(ell: int, bits: int) -> mpmath.mpf:
    with mpmath.workprec(bits):
        x = 2 * mpmath.cos(mpmath.pi / mpmath.mpf(2) ** (ell - 1))
        return abs(minpoly_halfroot(ell)(x))


def root_sanity(ell: int, precision_bits: int = 64) -> float:
    """|q_l(2cos(pi/2^(l-1)))| evaluated with a doubling precision schedule.

    Precision starts at max(precision_bits, 64, 4 * 2^(l-2)) and doubles
    until two consecutive residuals agree to within 2^-40 of each other.
    """
    if precision_bits < 64:
        raise PolyError("precision_bits must be >= 64")
    bits = max(precision_bits, 64, 4 * (1 << (ell - 2)))
    prev = _residual(ell, bits)
    for _ in range(8):
        bits *= 2
        cur = _residual(ell, bits)
        if abs(cur - prev) < mpmath.mpf(2) ** -40:
            return float(cur)
        prev = cur
    return float(cur)


def coefficients(poly: IntPoly) -> list[int]:
    return list(poly.coeffs)


def from_coefficients(cs: Sequence[int]) -> IntPoly:
    return IntPoly(tuple(cs))
