import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from strang.polynomials import (
    IntPoly,
    PolyError,
    chebyshev_T,
    coefficients,
    from_coefficients,
    minpoly_halfroot,
    mod2_quotient_dim,
    pd,
    presentation_ideal,
    root_sanity,
    scaled_chebyshev,
)

t = sympy.Symbol("t")


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], t)


def sympy_q(ell):
    q = t
    for _ in range(ell - 2):
        q = sympy.expand(q**2 - 2)
    return sympy.Poly(q, t)


def test_examples():
    assert coefficients(minpoly_halfroot(2)) == [0, 1]
    assert coefficients(minpoly_halfroot(3)) == [-2, 0, 1]
    assert coefficients(minpoly_halfroot(4)) == [2, 0, -4, 0, 1]
    assert coefficients(pd(3)) == [0, 1]
    assert coefficients(pd(4)) == [0, -2, 0, 1]
    assert str(pd(4)) == "t^3 - 2t"
    assert pd(12).degree == 1023
    with pytest.raises(PolyError):
        minpoly_halfroot(1)
    with pytest.raises(PolyError):
        pd(2)


@pytest.mark.parametrize("ell", range(2, 10))
def test_recursion_matches_sympy(ell):
    assert to_sympy(minpoly_halfroot(ell)) == sympy_q(ell)


@pytest.mark.parametrize("ell", range(2, 8))
def test_q_is_irreducible_minimal_polynomial(ell):
    q = to_sympy(minpoly_halfroot(ell))
    assert q.is_irreducible
    x = 2 * sympy.cos(sympy.pi / 2 ** (ell - 1))
    assert sympy.minimal_polynomial(x, t) == q.as_expr()


def test_factors_pairwise_coprime():
    for a, b in itertools.combinations(range(2, 7), 2):
        r = sympy.resultant(to_sympy(minpoly_halfroot(a)), to_sympy(minpoly_halfroot(b)))
        assert r != 0


@pytest.mark.parametrize("d", range(3, 9))
def test_pd_is_product_and_squarefree(d):
    prod = sympy.Poly(1, t)
    for ell in range(2, d):
        prod *= sympy_q(ell)
    p = to_sympy(pd(d))
    assert p == prod
    assert sympy.gcd(p, p.diff(t)).degree() == 0
    assert pd(d).is_monic() and pd(d).degree == 2 ** (d - 2) - 1


@pytest.mark.parametrize("d", range(3, 11))
def test_mod2_reduction(d):
    n = 2 ** (d - 2)
    assert pd(d).mod2() == (0,) * (n - 1) + (1,)
    assert all(c % 2 == 0 for c in pd(d).coeffs[:-1])
    assert mod2_quotient_dim(d) == n
    gens = presentation_ideal(d)
    assert gens[1].mod2() == ()
    assert IntPoly(gens[0].mod2()).valuation() == n


@pytest.mark.parametrize("n", range(0, 9))
def test_chebyshev_against_sympy(n):
    assert to_sympy(chebyshev_T(n)) == sympy.Poly(sympy.chebyshevt(n, t), t)
    assert to_sympy(scaled_chebyshev(n)) == sympy.Poly(sympy.expand(2 * sympy.chebyshevt(n, t / 2)), t)


@pytest.mark.parametrize("ell", range(2, 9))
def test_q_is_scaled_chebyshev(ell):
    assert minpoly_halfroot(ell) == scaled_chebyshev(2 ** (ell - 2))


def test_root_sanity():
    assert root_sanity(2) < 2.0**-60
    assert root_sanity(3, 128) < 2.0**-100
    assert root_sanity(5, 256) < 2.0**-200
    for ell in range(2, 11):
        assert root_sanity(ell) < 2.0**-40
    with pytest.raises(PolyError):
        root_sanity(3, 32)


def test_root_is_the_largest_real_root():
    for ell in range(3, 7):
        roots = sorted(sympy.Poly(to_sympy(minpoly_halfroot(ell))).nroots())
        assert abs(roots[-1] - 2 * sympy.cos(sympy.pi / 2 ** (ell - 1)).evalf()) < 1e-12


coeff_lists = st.lists(st.integers(-20, 20), max_size=6)


@given(coeff_lists, coeff_lists)
def test_ring_operations_match_sympy(a, b):
    p, q = from_coefficients(a), from_coefficients(b)
    sp, sq = to_sympy(p), to_sympy(q)
    assert to_sympy(p + q) == sp + sq
    assert to_sympy(p - q) == sp - sq
    assert to_sympy(p * q) == sp * sq
    assert p(3) == sp.eval(3)


@given(coeff_lists)
def test_trailing_zeros_are_dropped(a):
    p = from_coefficients(a + [0, 0])
    assert p == from_coefficients(a)
    assert not p.coeffs or p.coeffs[-1] != 0
