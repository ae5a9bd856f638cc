import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem

from strang import field as F
from strang.field import FieldError, gf, parse_field

DEGREES = sorted(F.MODULI)


def _bits(x: int) -> list[int]:
    # sympy dense coefficient list, highest degree first
    return [int(b) for b in bin(x)[2:]] if x else []


def _unbits(cs) -> int:
    out = 0
    for c in cs:
        out = (out << 1) | int(c)
    return out


def sympy_mul(ctx, x, y):
    prod = gf_mul(_bits(x), _bits(y), 2, ZZ)
    return _unbits(gf_rem(prod, _bits(ctx.modulus), 2, ZZ))


@pytest.mark.parametrize("e", DEGREES)
def test_moduli_irreducible_by_sympy(e):
    assert gf_irreducible_p(_bits(F.MODULI[e]), 2, ZZ)


@pytest.mark.parametrize("e", [1, 2, 3, 4])
def test_mul_table_matches_sympy(e):
    ctx = gf(e)
    for x, y in itertools.product(ctx.elements(), repeat=2):
        assert ctx.mul(x, y) == sympy_mul(ctx, x, y)


def test_gf256_sampled_against_sympy():
    ctx = gf(8)
    rng = random.Random(8)
    for _ in range(500):
        x, y = rng.randrange(256), rng.randrange(256)
        assert ctx.mul(x, y) == sympy_mul(ctx, x, y)


@pytest.mark.parametrize("e", DEGREES)
def test_distributivity_1000_triples(e):
    ctx = gf(e)
    rng = random.Random(e)
    for _ in range(1000):
        x, y, z = (rng.randrange(ctx.order) for _ in range(3))
        assert ctx.mul(x, ctx.add(y, z)) == ctx.add(ctx.mul(x, y), ctx.mul(x, z))


@pytest.mark.parametrize("e", DEGREES)
def test_inverses_and_sqrt(e):
    ctx = gf(e)
    for x in ctx.nonzero():
        assert ctx.mul(x, ctx.inv(x)) == 1
        r = ctx.sqrt(x)
        assert ctx.mul(r, r) == x


def test_small_field_examples():
    f4, f2 = gf(2), gf(1)
    assert f4.mul(2, 2) == 3
    assert f2.add(1, 1) == 0
    assert f4.inv(2) == 3
    with pytest.raises(FieldError, match="zero-division"):
        f4.inv(0)


def test_parse_field_spellings():
    assert parse_field("4") is gf(2)
    assert parse_field("2^3") is gf(3)
    assert parse_field("F_16") is gf(4)
    for bad in ("6", "3^2", "32"):
        with pytest.raises(FieldError):
            parse_field(bad)


def test_format():
    f4 = gf(2)
    assert [f4.format(x) for x in f4.elements()] == ["0", "1", "t", "t+1"]


# --- matrices ----------------------------------------------------------------


def matrices(max_side=6, degrees=(1, 2, 3)):
    @st.composite
    def build(draw):
        e = draw(st.sampled_from(degrees))
        r = draw(st.integers(0, max_side))
        c = draw(st.integers(0, max_side))
        q = 1 << e
        vals = draw(st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c))
        return gf(e), np.array(vals, dtype=np.uint8).reshape(r, c)

    return build()


@given(matrices())
def test_rank_equals_rank_of_transpose(cm):
    ctx, m = cm
    assert F.rank(ctx, m) == F.rank(ctx, m.T.copy())


@given(matrices())
def test_kernel_vectors_are_annihilated(cm):
    ctx, m = cm
    r, ker = F.rank_and_kernel(ctx, m)
    assert r + len(ker) == m.shape[1]
    for v in ker:
        assert not F.matvec(ctx, m, v).any()
    if ker:
        assert F.rank(ctx, np.array(ker)) == len(ker)


@given(matrices(max_side=7, degrees=(1,)))
def test_gf2_rank_by_counting_kernel(cm):
    ctx, m = cm
    n = m.shape[1]
    count = sum(1 for v in itertools.product((0, 1), repeat=n) if not (m.astype(int) @ np.array(v, dtype=int) % 2).any())
    assert count == 2 ** (n - F.rank(ctx, m))


@given(matrices(), st.integers(0, 2**16))
def test_solve_linear_consistent_rhs(cm, seed):
    ctx, m = cm
    rng = np.random.default_rng(seed)
    x = rng.integers(0, ctx.order, size=m.shape[1]).astype(np.uint8)
    b = F.matvec(ctx, m, x)
    y = F.solve_linear(ctx, m, b)
    assert y is not None
    assert np.array_equal(F.matvec(ctx, m, y), b)


def test_rank_and_kernel_examples():
    f2 = gf(1)
    r, ker = F.rank_and_kernel(f2, F.identity(3))
    assert (r, ker) == (3, [])
    r, ker = F.rank_and_kernel(f2, np.ones((2, 2), dtype=np.uint8))
    assert r == 1 and [v.tolist() for v in ker] == [[1, 1]]
    r, ker = F.rank_and_kernel(f2, F.zeros(0, 3))
    assert r == 0 and np.array_equal(np.array(ker), F.identity(3))


def test_solve_linear_examples():
    f2 = gf(1)
    b = np.array([1, 0, 1], dtype=np.uint8)
    assert np.array_equal(F.solve_linear(f2, F.identity(3), b), b)
    assert F.solve_linear(f2, F.zeros(2, 2), np.array([1, 0], dtype=np.uint8)) is None
    x = F.solve_linear(f2, np.array([[1, 1], [0, 0]], dtype=np.uint8), np.array([1, 0], dtype=np.uint8))
    assert x.tolist() == [1, 0]


@given(matrices(max_side=5))
def test_inverse_roundtrip(cm):
    ctx, m = cm
    k = min(m.shape)
    sq = m[:k, :k].copy()
    if F.rank(ctx, sq) < k:
        with pytest.raises(FieldError):
            F.inverse(ctx, sq)
        return
    inv = F.inverse(ctx, sq)
    assert np.array_equal(F.matmul(ctx, sq, inv), F.identity(k))


def test_rref_is_reduced():
    ctx = gf(2)
    m = np.array([[2, 1, 3], [1, 0, 1], [3, 1, 2]], dtype=np.uint8)
    r, piv = F.rref(ctx, m)
    for i, p in enumerate(piv):
        assert r[i, p] == 1
        assert sum(1 for row in r if row[p]) == 1
