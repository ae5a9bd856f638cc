"""Hom spaces, stable Hom, Ext^1, projective covers, injective hulls and syzygies."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from . import field as F
from .algebra import ARROWS, projective_module
from .modules import Representation, band_module, direct_sum, quotient, socle_basis, string_module, string_vertices, subrepresentation
from .words import Word, canonical_band_flag, enumerate_words

Map = tuple[np.ndarray, np.ndarray]  # one matrix per vertex

#: exhaustive isomorphism search is used while |F|^h <= 2^EXHAUSTIVE_BITS
EXHAUSTIVE_BITS = 20
RANDOM_TRIALS = 256


class HomologyError(RuntimeError):
    pass


class UnrecognizedError(HomologyError):
    pass


def _check_pair(m: Representation, n: Representation) -> None:
    if m.spec != n.spec or m.ctx.degree != n.ctx.degree:
        raise HomologyError("mismatched spec")


def flatten(f: Map) -> np.ndarray:
    return np.concatenate([f[0].ravel(), f[1].ravel()])


def unflatten(v: np.ndarray, m: Representation, n: Representation) -> Map:
    k = n.dims[0] * m.dims[0]
    return (
        v[:k].reshape(n.dims[0], m.dims[0]).copy(),
        v[k:].reshape(n.dims[1], m.dims[1]).copy(),
    )


def compose(ctx, g: Map, f: Map) -> Map:
    """g after f."""
    return F.matmul(ctx, g[0], f[0]), F.matmul(ctx, g[1], f[1])


def is_intertwiner(f: Map, m: Representation, n: Representation) -> bool:
    ctx = m.ctx
    for a in m.spec.arrow_names:
        s, t = ARROWS[a]
        if not np.array_equal(F.matmul(ctx, f[t], m.arrows[a]), F.matmul(ctx, n.arrows[a], f[s])):
            return False
    return True


def intertwiner_system(m: Representation, n: Representation) -> np.ndarray:
    """Matrix whose kernel is Hom(m, n) in flattened coordinates."""
    ctx = m.ctx
    offs = (0, n.dims[0] * m.dims[0])
    nvars = offs[1] + n.dims[1] * m.dims[1]
    blocks = []
    for a in m.spec.arrow_names:
        s, t = ARROWS[a]
        rows = n.dims[t] * m.dims[s]
        if rows == 0:
            continue
        blk = F.zeros(rows, nvars)
        # f_t M_a  - N_a f_s, rows indexed row-major by (i, j) in dims[t] x dims[s]
        left = F.kron(ctx, F.identity(n.dims[t]), m.arrows[a].T.copy())
        right = F.kron(ctx, n.arrows[a], F.identity(m.dims[s]))
        blk[:, offs[t] : offs[t] + left.shape[1]] ^= left
        blk[:, offs[s] : offs[s] + right.shape[1]] ^= right
        blocks.append(blk)
    if not blocks:
        return F.zeros(0, nvars)
    return np.concatenate(blocks, axis=0)


@dataclass(eq=False)
class HomSpace:
    source: Representation
    target: Representation
    basis: list[Map]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> np.ndarray:
        nv = self.source.dims[0] * self.target.dims[0] + self.source.dims[1] * self.target.dims[1]
        if not self.basis:
            return F.zeros(0, nv)
        return np.array([flatten(f) for f in self.basis], dtype=np.uint8)

    @cached_property
    def projective_sub(self) -> np.ndarray:
        """Echelon basis (rows, flattened) of maps factoring through a projective."""
        m, n = self.source, self.target
        ctx = m.ctx
        if n.dim == 0 or m.dim == 0:
            return F.zeros(0, self.vectors().shape[1])
        p, pi, _ = projective_cover(n)
        through = hom_space(m, p)
        vecs = [flatten(compose(ctx, pi, g)) for g in through.basis]
        if not vecs:
            return F.zeros(0, self.vectors().shape[1])
        return F.row_basis(ctx, np.array(vecs, dtype=np.uint8))

    @property
    def stable_dim(self) -> int:
        return self.dim - self.projective_sub.shape[0]


def hom_space(m: Representation, n: Representation) -> HomSpace:
    _check_pair(m, n)
    system = intertwiner_system(m, n)
    _, ker = F.rank_and_kernel(m.ctx, system)
    return HomSpace(m, n, [unflatten(v, m, n) for v in ker])


def hom_dim(m: Representation, n: Representation) -> int:
    system = intertwiner_system(m, n)
    return system.shape[1] - F.rank(m.ctx, system)


def end_dim(m: Representation) -> int:
    return hom_dim(m, m)


def phom_and_stable(m: Representation, n: Representation) -> tuple[int, int]:
    h = hom_space(m, n)
    ph = h.projective_sub.shape[0]
    return ph, h.dim - ph


def stable_hom_dim(m: Representation, n: Representation) -> int:
    return phom_and_stable(m, n)[1]


def stable_end_dim(m: Representation) -> int:
    return stable_hom_dim(m, m)


# --- covers, hulls, syzygies -------------------------------------------------


def top_generators(m: Representation) -> list[tuple[int, np.ndarray]]:
    """(vertex, vector) pairs spanning a complement of rad M."""
    rad = m.radical_basis()
    gens = []
    for v in (0, 1):
        comp = F.complement_basis(m.ctx, rad[v], m.dims[v])
        gens += [(v, comp[:, k].copy()) for k in range(comp.shape[1])]
    return gens


def _projective_map(m: Representation, u: int, vec: np.ndarray) -> tuple[Representation, Map]:
    """P_u together with the map sending e_u to ``vec`` in M_u."""
    ctx = m.ctx
    p, _ = projective_module(m.spec, ctx, u)
    cols: list[list[np.ndarray]] = [[], []]
    for v in (0, 1):
        for path in p.basis_labels[v]:
            if path == f"e{u}":
                cols[v].append(vec)
            else:
                cols[v].append(F.matvec(ctx, m.path_matrix(path), vec))
    f = tuple(
        np.array(cols[v], dtype=np.uint8).T.reshape(m.dims[v], p.dims[v]) if cols[v] else F.zeros(m.dims[v], 0)
        for v in (0, 1)
    )
    return p, f


def _hstack(ctx, parts: Sequence[Map], rows: tuple[int, int]) -> Map:
    out = []
    for v in (0, 1):
        blocks = [f[v] for f in parts if f[v].shape[1]]
        out.append(np.concatenate(blocks, axis=1) if blocks else F.zeros(rows[v], 0))
    return out[0], out[1]


def _vstack(ctx, parts: Sequence[Map], cols: tuple[int, int]) -> Map:
    out = []
    for v in (0, 1):
        blocks = [f[v] for f in parts if f[v].shape[0]]
        out.append(np.concatenate(blocks, axis=0) if blocks else F.zeros(0, cols[v]))
    return out[0], out[1]


def projective_cover(m: Representation) -> tuple[Representation, Map, list[int]]:
    """Minimal projective cover: (P, surjection P -> M, summand vertices)."""
    if m.dim == 0:
        raise HomologyError("projective cover of the zero module")
    gens = top_generators(m)
    summands, maps = [], []
    for u, vec in gens:
        p, f = _projective_map(m, u, vec)
        summands.append(p)
        maps.append(f)
    cover = direct_sum(*summands).relabel("⊕".join(f"P_{u}" for u, _ in gens))
    pi = _hstack(m.ctx, maps, m.dims)
    return cover, pi, [u for u, _ in gens]


def injective_hull(m: Representation) -> tuple[Representation, Map, list[int]]:
    """Minimal injective hull ``M -> I`` (I a sum of P_u, the algebra being self-injective)."""
    if m.dim == 0:
        raise HomologyError("injective hull of the zero module")
    ctx = m.ctx
    soc = socle_basis(m)
    parts, maps, verts = [], [], []
    for u in (0, 1):
        s = soc[u].shape[1]
        if s == 0:
            continue
        pu, _ = projective_module(m.spec, ctx, u)
        sidx = pu.basis_labels[u].index(m.spec.socle_path(u))
        homs = hom_space(m, pu)
        # functional on soc(M)_u given by each hom
        fun = np.array(
            [F.matmul(ctx, f[u], soc[u])[sidx] for f in homs.basis], dtype=np.uint8
        ).reshape(len(homs.basis), s)
        _, piv = F.rref(ctx, fun.T)
        if len(piv) < s:
            raise HomologyError("no injective extension found")
        for k in piv:
            parts.append(pu)
            maps.append(homs.basis[k])
            verts.append(u)
    hull = direct_sum(*parts).relabel("⊕".join(f"P_{u}" for u in verts))
    iota = _vstack(ctx, maps, m.dims)
    return hull, iota, verts


def _kernel_basis(ctx, f: Map, src_dims) -> tuple[np.ndarray, np.ndarray]:
    return tuple(F.kernel_matrix(ctx, f[v]) if src_dims[v] else F.zeros(0, 0) for v in (0, 1))


def _image_basis(ctx, f: Map) -> tuple[np.ndarray, np.ndarray]:
    return tuple(F.column_space(ctx, f[v]) for v in (0, 1))


def kernel(f: Map, m: Representation, n: Representation, label: str = "") -> Representation:
    ctx = m.ctx
    basis = tuple(F.kernel_matrix(ctx, f[v]) if m.dims[v] else F.zeros(0, 0) for v in (0, 1))
    return subrepresentation(m, basis, label=label)


def image(f: Map, m: Representation, n: Representation, label: str = "") -> Representation:
    return subrepresentation(n, _image_basis(m.ctx, f), label=label)


def cokernel(f: Map, m: Representation, n: Representation, label: str = "") -> Representation:
    return quotient(n, _image_basis(m.ctx, f), label=label)[0]


def syzygy(m: Representation) -> Representation:
    if m.dim == 0:
        raise HomologyError("zero module")
    p, pi, _ = projective_cover(m)
    return kernel(pi, p, m, label=f"Ω({m.label})")


def cosyzygy(m: Representation) -> Representation:
    if m.dim == 0:
        raise HomologyError("zero module")
    i, iota, _ = injective_hull(m)
    return cokernel(iota, m, i, label=f"Ω⁻¹({m.label})")


def omega_power(m: Representation, k: int) -> Representation:
    for _ in range(abs(k)):
        if m.dim == 0:
            return m
        m = syzygy(m) if k > 0 else cosyzygy(m)
    return m


def ext1_dim(m: Representation, n: Representation) -> int:
    if m.dim == 0 or n.dim == 0:
        return 0
    return stable_hom_dim(syzygy(m), n)


# --- isomorphism -------------------------------------------------------------


class IsoResult(NamedTuple):
    isomorphic: bool
    mode: str  # dims | fingerprint | witness | exhaustive | random

    def __bool__(self) -> bool:
        return self.isomorphic


def _invertible(ctx, f: Map) -> bool:
    for blk in f:
        if blk.shape[0] != blk.shape[1]:
            return False
        if blk.shape[0] and F.rank(ctx, blk) < blk.shape[0]:
            return False
    return True


def _batch_invertible_gf2(mats: np.ndarray) -> np.ndarray:
    """Invertibility over GF(2) for a batch of square matrices (B, n, n)."""
    a = mats.copy()
    b, n, _ = a.shape
    ok = np.ones(b, dtype=bool)
    ar = np.arange(b)
    for c in range(n):
        col = a[:, c:, c]
        has = col.any(axis=1)
        ok &= has
        p = c + np.argmax(col, axis=1)
        rowp = a[ar, p].copy()
        rowc = a[:, c].copy()
        a[:, c] = rowp
        a[ar, p] = rowc
        mask = a[:, :, c].astype(bool)
        mask[:, c] = False
        a ^= mask[:, :, None] * a[:, c][:, None, :]
    return ok


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> IsoResult:
    _check_pair(m, n)
    if m.dims != n.dims:
        return IsoResult(False, "dims")
    if m.dim == 0:
        return IsoResult(True, "dims")
    ctx = m.ctx
    h = hom_space(m, n)
    if not (h.dim == hom_dim(n, m) == end_dim(m) == end_dim(n)):
        return IsoResult(False, "fingerprint")
    if h.dim == 0:
        return IsoResult(False, "fingerprint")
    for f in h.basis:
        if _invertible(ctx, f):
            return IsoResult(True, "witness")
    vecs = h.vectors()
    rng = np.random.default_rng(seed)
    for _ in range(32):
        coeffs = rng.integers(0, ctx.order, size=h.dim).astype(np.uint8)
        v = _combine(ctx, coeffs, vecs)
        if _invertible(ctx, unflatten(v, m, n)):
            return IsoResult(True, "witness")
    if h.dim * ctx.degree <= EXHAUSTIVE_BITS:
        return IsoResult(_exhaustive_search(ctx, vecs, m, n), "exhaustive")
    for _ in range(RANDOM_TRIALS - 32):
        coeffs = rng.integers(0, ctx.order, size=h.dim).astype(np.uint8)
        if _invertible(ctx, unflatten(_combine(ctx, coeffs, vecs), m, n)):
            return IsoResult(True, "witness")
    return IsoResult(False, "random")


def _combine(ctx, coeffs: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    if ctx.degree == 1:
        return ((coeffs.astype(np.int32) @ vecs.astype(np.int32)) & 1).astype(np.uint8)
    return np.bitwise_xor.reduce(ctx.mul_table[coeffs[:, None], vecs], axis=0)


def _exhaustive_search(ctx, vecs: np.ndarray, m: Representation, n: Representation) -> bool:
    h = vecs.shape[0]
    if ctx.degree == 1 and m.dims[0] == n.dims[0] and m.dims[1] == n.dims[1]:
        batch = 4096
        total = 1 << h
        for start in range(1, total, batch):
            idx = np.arange(start, min(start + batch, total), dtype=np.int64)
            coeffs = ((idx[:, None] >> np.arange(h)) & 1).astype(np.int32)
            flat = (coeffs @ vecs.astype(np.int32)) & 1
            ok = np.ones(len(idx), dtype=bool)
            k = 0
            for v in (0, 1):
                d = m.dims[v]
                blk = flat[:, k : k + d * d].reshape(-1, d, d).astype(np.uint8)
                k += d * d
                if d:
                    ok &= _batch_invertible_gf2(blk)
            if ok.any():
                return True
        return False
    for coeffs in itertools.product(range(ctx.order), repeat=h):
        if not any(coeffs):
            continue
        v = _combine(ctx, np.array(coeffs, dtype=np.uint8), vecs)
        if _invertible(ctx, unflatten(v, m, n)):
            return True
    return False


# --- recognition -------------------------------------------------------------


class ModuleLabel(NamedTuple):
    kind: str  # string | band | projective
    word: str
    lam: int = 0
    m: int = 1

    def __str__(self) -> str:
        if self.kind == "band":
            return f"M({self.word};λ={self.lam};m={self.m})"
        if self.kind == "projective":
            return self.word
        return f"M({self.word})"

    def build(self, spec, ctx) -> Representation:
        if self.kind == "band":
            return band_module(self.word, self.lam, self.m, spec, ctx)
        if self.kind == "projective":
            return projective_module(spec, ctx, int(self.word[-1]))[0]
        return string_module(self.word, spec, ctx)


def band_label(word: Word | str, lam: int, m: int, ctx) -> ModuleLabel:
    """Canonical label; inverting the band inverts lambda."""
    w, flipped = canonical_band_flag(word)
    return ModuleLabel("band", w.text, ctx.inv(lam) if flipped else lam, m)


def residue_scalar(ctx, e: Map, dim: int) -> int:
    """The scalar c with e - c*id nilpotent, for an endomorphism of a module with
    local endomorphism ring whose residue field is the ground field."""
    k = 0
    while (1 << k) < max(dim, 1):
        k += 1
    p = e
    for _ in range(k):
        p = compose(ctx, p, p)
    vals = set()
    for blk in p:
        d = blk.shape[0]
        if d == 0:
            continue
        diag = np.diag(blk)
        off = blk.copy()
        np.fill_diagonal(off, 0)
        if np.any(off) or len(set(diag.tolist())) > 1:
            raise HomologyError("endomorphism ring is not local with residue field k")
        vals.add(int(diag[0]))
    if len(vals) > 1:
        raise HomologyError("endomorphism ring is not local with residue field k")
    c = vals.pop() if vals else 0
    for _ in range(k):
        c = ctx.sqrt(c)
    return c


def summand_multiplicity(x: Representation, m: Representation) -> int:
    """Multiplicity of an indecomposable ``x`` (local End, residue k) in ``m``."""
    if x.dim == 0 or m.dim == 0:
        return 0
    if x.dims[0] > m.dims[0] or x.dims[1] > m.dims[1]:
        return 0
    ctx = m.ctx
    into = hom_space(x, m)
    if into.dim == 0:
        return 0
    back = hom_space(m, x)
    if back.dim == 0:
        return 0
    phi = F.zeros(into.dim, back.dim)
    for a, f in enumerate(into.basis):
        for b, g in enumerate(back.basis):
            phi[a, b] = residue_scalar(ctx, compose(ctx, g, f), x.dim)
    return F.rank(ctx, phi)


def projective_multiplicities(m: Representation) -> tuple[int, int]:
    """Number of P_u summands: the rank of the socle element of e_u Λ e_u on M_u."""
    out = []
    for u in (0, 1):
        if m.dims[u] == 0:
            out.append(0)
        else:
            out.append(F.rank(m.ctx, m.path_matrix(m.spec.socle_path(u))))
    return out[0], out[1]


def strip_projectives(m: Representation) -> tuple[tuple[int, int], Representation]:
    """Split off projective summands; returns multiplicities and the complement."""
    ctx = m.ctx
    mult = projective_multiplicities(m)
    if mult == (0, 0):
        return mult, m
    maps = []
    for u in (0, 1):
        if not mult[u]:
            continue
        act = m.path_matrix(m.spec.socle_path(u))
        _, piv = F.rref(ctx, act)
        for col in piv:
            vec = np.zeros(m.dims[u], dtype=np.uint8)
            vec[col] = 1
            maps.append(_projective_map(m, u, vec)[1])
    f = _hstack(ctx, maps, m.dims)
    rest = quotient(m, _image_basis(ctx, f), label=f"{m.label} / proj")[0]
    return mult, rest


def candidate_labels(spec, ctx, dims: tuple[int, int], maxlen: int) -> list[ModuleLabel]:
    """String and band labels with dimension vector bounded by ``dims``."""
    out = []
    for w in enumerate_words(spec, "strings", maxlen):
        vs = string_vertices(w)
        dv = (vs.count(0), vs.count(1))
        if dv[0] <= dims[0] and dv[1] <= dims[1]:
            out.append((dv, ModuleLabel("string", w.text)))
    for w in enumerate_words(spec, "bands", maxlen):
        vs = string_vertices(w)[:-1]
        base = (vs.count(0), vs.count(1))
        mm = 1
        while base[0] * mm <= dims[0] and base[1] * mm <= dims[1]:
            for lam in ctx.nonzero():
                out.append(((base[0] * mm, base[1] * mm), ModuleLabel("band", w.text, lam, mm)))
            mm += 1
    # exact dimension matches first, then larger candidates
    out.sort(key=lambda t: (t[0] != dims, -(t[0][0] + t[0][1])))
    return [lab for _, lab in out]


def recognize_indecomposable(m: Representation, maxlen: int) -> ModuleLabel:
    """Label of an indecomposable non-projective module, searching words up to maxlen."""
    for lab in candidate_labels(m.spec, m.ctx, m.dims, maxlen):
        x = lab.build(m.spec, m.ctx)
        if x.dims != m.dims:
            break
        if summand_multiplicity(x, m):
            return lab
    raise UnrecognizedError(f"unrecognized: no candidate of dims {m.dims} within maxlen {maxlen}")


def strip_and_recognize(m: Representation, maxlen: int) -> tuple[tuple[int, int], list[ModuleLabel]]:
    mult, rest = strip_projectives(m)
    labels: list[ModuleLabel] = []
    remaining = list(rest.dims)
    if rest.dim == 0:
        return mult, labels
    for lab in candidate_labels(m.spec, m.ctx, rest.dims, maxlen):
        if remaining == [0, 0]:
            break
        x = lab.build(m.spec, m.ctx)
        if x.dims[0] > remaining[0] or x.dims[1] > remaining[1]:
            continue
        k = summand_multiplicity(x, rest)
        if k:
            labels += [lab] * k
            remaining[0] -= k * x.dims[0]
            remaining[1] -= k * x.dims[1]
    if remaining != [0, 0]:
        raise UnrecognizedError(f"unrecognized remainder of dims {tuple(remaining)} within maxlen {maxlen}")
    return mult, labels
