"""Finite-dimensional representations: string, band and derived modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import field as F
from .algebra import ARROWS, AlgebraSpec, build_algebra
from .field import FieldCtx, gf
from .words import Word, is_band, is_string, letter_end, letter_start, parse_word


class ModuleError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    """Per-vertex dimensions plus one ``dims[t] x dims[s]`` matrix per arrow."""

    spec: AlgebraSpec
    ctx: FieldCtx
    dims: tuple[int, int]
    arrows: dict[str, np.ndarray]
    label: str = ""
    basis_labels: Optional[tuple[tuple[str, ...], tuple[str, ...]]] = None

    def __post_init__(self):
        for a in self.spec.arrow_names:
            s, t = ARROWS[a]
            m = self.arrows.get(a)
            if m is None:
                raise ModuleError(f"missing matrix for arrow {a}")
            if m.shape != (self.dims[t], self.dims[s]):
                raise ModuleError(f"arrow {a}: shape {m.shape}, expected {(self.dims[t], self.dims[s])}")

    @property
    def dim(self) -> int:
        return self.dims[0] + self.dims[1]

    def path_matrix(self, path: str) -> np.ndarray:
        """Action of a directed path (composite, rightmost letter first)."""
        if not path:
            raise ValueError("empty path; use a vertex idempotent")
        m = self.arrows[path[0]]
        for a in path[1:]:
            m = F.matmul(self.ctx, m, self.arrows[a])
        return m

    def relabel(self, label: str) -> "Representation":
        return Representation(self.spec, self.ctx, self.dims, self.arrows, label, self.basis_labels)

    def with_spec(self, spec: AlgebraSpec) -> "Representation":
        return Representation(spec, self.ctx, self.dims, self.arrows, self.label, self.basis_labels)

    def radical_basis(self) -> tuple[np.ndarray, np.ndarray]:
        return _radical(self, (F.identity(self.dims[0]), F.identity(self.dims[1])))

    def loewy_length(self) -> int:
        cur = (F.identity(self.dims[0]), F.identity(self.dims[1]))
        n = 0
        while cur[0].shape[1] + cur[1].shape[1] > 0:
            cur = _radical(self, cur)
            n += 1
        return n

    def to_json(self) -> dict:
        out = {
            "field": {"degree": self.ctx.degree, "modulus": self.ctx.modulus},
            "algebra": self.spec.to_json(),
            "dims": list(self.dims),
            "arrows": {a: self.arrows[a].astype(int).tolist() for a in self.spec.arrow_names},
            "label": self.label,
        }
        if self.basis_labels is not None:
            out["basis"] = [list(b) for b in self.basis_labels]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Representation":
        ctx = gf(int(data["field"]["degree"]))
        if ctx.modulus != int(data["field"]["modulus"]):
            raise ModuleError("modulus does not match the fixed table")
        alg = data["algebra"]
        spec = build_algebra(int(alg["family"]), int(alg["c"]), int(alg["d"]))
        dims = tuple(int(x) for x in data["dims"])
        mats = {}
        for a in spec.arrow_names:
            s, t = ARROWS[a]
            m = np.array(data["arrows"][a], dtype=np.uint8).reshape(dims[t], dims[s])
            mats[a] = m
        labels = None
        if "basis" in data:
            labels = tuple(tuple(b) for b in data["basis"])
        return cls(spec, ctx, dims, mats, data.get("label", ""), labels)

    def same_as(self, other: "Representation") -> bool:
        """Literal equality of the matrix data (not isomorphism)."""
        return (
            self.spec == other.spec
            and self.ctx.degree == other.ctx.degree
            and self.dims == other.dims
            and all(np.array_equal(self.arrows[a], other.arrows[a]) for a in self.spec.arrow_names)
        )


def _radical(rep: Representation, sub: tuple[np.ndarray, np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Column bases of (arrows applied to sub), per vertex."""
    ctx = rep.ctx
    out = []
    for v in (0, 1):
        cols = [F.matmul(ctx, rep.arrows[a], sub[ARROWS[a][0]]) for a in rep.spec.arrow_names if ARROWS[a][1] == v]
        cols = [c for c in cols if c.shape[1]]
        if not cols:
            out.append(F.zeros(rep.dims[v], 0))
        else:
            out.append(F.column_space(ctx, np.concatenate(cols, axis=1)))
    return out[0], out[1]


def zero_module(spec: AlgebraSpec, ctx: FieldCtx) -> Representation:
    mats = {a: F.zeros(0, 0) for a in spec.arrow_names}
    return Representation(spec, ctx, (0, 0), mats, label="0", basis_labels=((), ()))


def simple_module(spec: AlgebraSpec, ctx: FieldCtx, u: int) -> Representation:
    dims = (1, 0) if u == 0 else (0, 1)
    mats = {a: F.zeros(dims[ARROWS[a][1]], dims[ARROWS[a][0]]) for a in spec.arrow_names}
    return Representation(spec, ctx, dims, mats, label=f"S_{u}", basis_labels=(("z0",), ()) if u == 0 else ((), ("z0",)))


def string_positions(word: Word) -> list[tuple[int, int]]:
    """(vertex, index within vertex block) of each canonical basis vector z_j."""
    verts = string_vertices(word)
    counts = [0, 0]
    out = []
    for v in verts:
        out.append((v, counts[v]))
        counts[v] += 1
    return out


def string_vertices(word: Word) -> list[int]:
    if word.is_empty:
        return [word.vertex]
    w = word.letters
    return [letter_end(w[j]) for j in range(len(w))] + [letter_start(w[-1])]


def string_module(word: Word | str, spec: AlgebraSpec, ctx: FieldCtx, check: bool = True) -> Representation:
    if isinstance(word, str):
        word = parse_word(word, spec)
    if check and not is_string(word, spec):
        raise ModuleError(f"{word} is not a string")
    if word.is_empty:
        return simple_module(spec, ctx, word.vertex).relabel(f"M({word.text})")
    w = word.letters
    pos = string_positions(word)
    dims = [0, 0]
    for v, _ in pos:
        dims[v] += 1
    mats = {a: F.zeros(dims[ARROWS[a][1]], dims[ARROWS[a][0]]) for a in spec.arrow_names}
    for j in range(1, len(w) + 1):
        x = w[j - 1]
        if x.islower():  # w_j = zeta: zeta z_j = z_{j-1}
            (_, si), (_, ti) = pos[j], pos[j - 1]
        else:  # w_j = zeta^{-1}: zeta z_{j-1} = z_j
            (_, si), (_, ti) = pos[j - 1], pos[j]
        mats[x.lower()][ti, si] = 1
    labels = tuple(tuple(f"z{j}" for j, (v, _) in enumerate(pos) if v == u) for u in (0, 1))
    return Representation(spec, ctx, (dims[0], dims[1]), mats, label=f"M({word.text})", basis_labels=labels)


def band_module(word: Word | str, lam: int, m: int, spec: AlgebraSpec, ctx: FieldCtx, check: bool = True) -> Representation:
    if isinstance(word, str):
        word = parse_word(word, spec)
    if lam == 0:
        raise ModuleError("lambda must be nonzero")
    ctx.check(lam)
    if m < 1:
        raise ModuleError("multiplicity must be >= 1")
    if check and not is_band(word, spec):
        raise ModuleError(f"{word} is not a band")
    w = word.letters
    n = len(w)
    verts = [letter_end(w[j]) for j in range(n)]  # v(j) = e(w_{j+1})
    pos = {}
    counts = [0, 0]
    for j in range(n):
        for jp in range(m):
            pos[(j, jp)] = (verts[j], counts[verts[j]])
            counts[verts[j]] += 1
    dims = (counts[0], counts[1])
    mats = {a: F.zeros(dims[ARROWS[a][1]], dims[ARROWS[a][0]]) for a in spec.arrow_names}
    lam_inv = ctx.inv(lam)
    # Exactly one seam rule fires: j=1 for a direct first letter, j=0 for an inverse one.
    assert n >= 2, "bands have length >= 2"
    for j in range(n):
        for jp in range(m):
            src = pos[(j, jp)]
            # direct letter w_j (cyclic, w_0 = w_n) acting on z_{j,j'}
            x = w[(j - 1) % n]
            if x.islower():
                if j == 1:
                    targets = [((0, jp), lam)] + ([((0, jp + 1), 1)] if jp + 1 < m else [])
                else:
                    targets = [(((j - 1) % n, jp), 1)]
                for key, coef in targets:
                    tv, ti = pos[key]
                    mats[x][ti, src[1]] ^= coef
            # inverse letter w_{j+1} = zeta^{-1} acting on z_{j,j'}
            y = w[j]
            if y.isupper():
                if j == 0:
                    targets = [((1 % n, jp), lam_inv)] + ([((1 % n, jp + 1), 1)] if jp + 1 < m else [])
                else:
                    targets = [(((j + 1) % n, jp), 1)]
                for key, coef in targets:
                    tv, ti = pos[key]
                    mats[y.lower()][ti, src[1]] ^= coef
    labels = tuple(
        tuple(f"z{j},{jp + 1}" for j in range(n) for jp in range(m) if verts[j] == u) for u in (0, 1)
    )
    label = f"M({word.text};λ={ctx.format(lam)};m={m})"
    return Representation(spec, ctx, dims, mats, label=label, basis_labels=labels)


def check_relations(rep: Representation) -> bool:
    """True iff every generator of I_{i,c} acts as zero."""
    ctx = rep.ctx
    for lhs, rhs in rep.spec.relations:
        total = rep.path_matrix(lhs).copy()
        for coef, path in rhs:
            if coef:
                total ^= F.scale(ctx, coef, rep.path_matrix(path))
        if np.any(total):
            return False
    return True


def direct_sum(*reps: Representation) -> Representation:
    reps = [r for r in reps]
    if not reps:
        raise ModuleError("direct_sum needs at least one summand")
    spec, ctx = reps[0].spec, reps[0].ctx
    for r in reps:
        if r.spec != spec or r.ctx.degree != ctx.degree:
            raise ModuleError("mixed specs")
    dims = (sum(r.dims[0] for r in reps), sum(r.dims[1] for r in reps))
    mats = {}
    for a in spec.arrow_names:
        s, t = ARROWS[a]
        m = F.zeros(dims[t], dims[s])
        ro = co = 0
        for r in reps:
            blk = r.arrows[a]
            m[ro : ro + blk.shape[0], co : co + blk.shape[1]] = blk
            ro += blk.shape[0]
            co += blk.shape[1]
        mats[a] = m
    label = " ⊕ ".join(r.label or "?" for r in reps)
    labels = None
    if all(r.basis_labels is not None for r in reps):
        labels = tuple(
            tuple(f"{k}:{x}" for k, r in enumerate(reps) for x in r.basis_labels[v]) for v in (0, 1)
        )
    return Representation(spec, ctx, dims, mats, label=label, basis_labels=labels)


def subrepresentation(rep: Representation, basis: Sequence[np.ndarray], label: str = "") -> Representation:
    """Restriction to an invariant subspace given by column bases per vertex."""
    ctx = rep.ctx
    dims = (basis[0].shape[1], basis[1].shape[1])
    mats = {}
    for a in rep.spec.arrow_names:
        s, t = ARROWS[a]
        img = F.matmul(ctx, rep.arrows[a], basis[s])
        mats[a] = F.solve_columns(ctx, basis[t], img)
    return Representation(rep.spec, ctx, dims, mats, label=label)


def quotient(rep: Representation, basis: Sequence[np.ndarray], label: str = "") -> tuple[Representation, list[np.ndarray]]:
    """Quotient by an invariant subspace.

    Returns the quotient and, per vertex, the projection matrix onto
    quotient coordinates.
    """
    ctx = rep.ctx
    comps, projs = [], []
    for v in (0, 1):
        k = basis[v]
        cmp_ = F.complement_basis(ctx, k, rep.dims[v])
        full = np.concatenate([k, cmp_], axis=1) if k.shape[1] else cmp_
        inv = F.inverse(ctx, full) if full.shape[0] else F.zeros(0, 0)
        comps.append(cmp_)
        projs.append(inv[k.shape[1] :, :].copy())
    dims = (comps[0].shape[1], comps[1].shape[1])
    mats = {}
    for a in rep.spec.arrow_names:
        s, t = ARROWS[a]
        mats[a] = F.matmul(ctx, projs[t], F.matmul(ctx, rep.arrows[a], comps[s]))
    return Representation(rep.spec, ctx, dims, mats, label=label), projs


def socle_basis(rep: Representation) -> tuple[np.ndarray, np.ndarray]:
    """Joint kernel of all arrows, per vertex (columns)."""
    out = []
    for v in (0, 1):
        outgoing = [rep.arrows[a] for a in rep.spec.arrow_names if ARROWS[a][0] == v]
        stack = np.concatenate(outgoing, axis=0) if outgoing else F.zeros(0, rep.dims[v])
        out.append(F.kernel_matrix(rep.ctx, stack))
    return out[0], out[1]


def structure(rep: Representation, which: str):
    if which == "dim_vector":
        return rep.dims
    if which == "radical":
        return subrepresentation(rep, rep.radical_basis(), label=f"rad {rep.label}")
    if which == "socle":
        return subrepresentation(rep, socle_basis(rep), label=f"soc {rep.label}")
    if which == "top":
        return quotient(rep, rep.radical_basis(), label=f"top {rep.label}")[0]
    raise ModuleError(f"unknown structure {which!r}")


def composition_factors(rep: Representation) -> tuple[int, int]:
    return rep.dims
