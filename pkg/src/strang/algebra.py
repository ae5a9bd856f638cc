"""The basic algebras Lambda_{i,c} = kQ_i / I_{i,c} and their projective modules.

Arrows are named by single letters: ``a`` (alpha: 0->0), ``b`` (beta: 0->1),
``g`` (gamma: 1->0) and, for family 2, ``h`` (eta: 1->1).  A directed path is
a string of arrow letters read as a composite of maps, so ``"bg"`` is
"gamma, then beta".  Its source is the source of its last letter.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Optional

from .field import FieldCtx, zeros

ARROWS: dict[str, tuple[int, int]] = {"a": (0, 0), "b": (0, 1), "g": (1, 0), "h": (1, 1)}
GREEK = {"a": "α", "b": "β", "g": "γ", "h": "η"}
ARROW_ORDER = "abgh"


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Quiver:
    arrows: tuple[tuple[str, int, int], ...]

    @property
    def vertices(self) -> tuple[int, int]:
        return (0, 1)

    @property
    def names(self) -> str:
        return "".join(a for a, _, _ in self.arrows)

    def source(self, arrow: str) -> int:
        return ARROWS[arrow][0]

    def target(self, arrow: str) -> int:
        return ARROWS[arrow][1]


def path_source(path: str) -> int:
    return ARROWS[path[-1]][0]


def path_target(path: str) -> int:
    return ARROWS[path[0]][1]


def is_composable(path: str) -> bool:
    return all(ARROWS[x][0] == ARROWS[y][1] for x, y in zip(path, path[1:]))


# A relation reads lhs = sum(coef * path for coef, path in rhs).
Relation = tuple[str, tuple[tuple[int, str], ...]]


@dataclass(frozen=True)
class AlgebraSpec:
    family: int
    c: int
    d: int
    quiver: Quiver
    forbidden: tuple[str, ...]
    relations: tuple[Relation, ...]

    @property
    def socle_exponent(self) -> int:
        """2^(d-2)."""
        return 1 << (self.d - 2)

    @property
    def arrow_names(self) -> str:
        return self.quiver.names

    @cached_property
    def max_forbidden(self) -> int:
        return max(len(p) for p in self.forbidden)

    def socle_path(self, u: int) -> str:
        """Normal-form path spanning the socle of P_u."""
        n = self.socle_exponent
        if self.family == 1:
            return "agb" * n if u == 0 else "bag" * n
        return "gba" if u == 0 else "bag"

    @cached_property
    def socle_monomials(self) -> dict[str, int]:
        """Paths equal to the socle element of some P_u, with that u."""
        n = self.socle_exponent
        if self.family == 1:
            return {"gba" * n: 0, "agb" * n: 0, "bag" * n: 1}
        return {"gba": 0, "agb": 0, "bag": 1, "h" * n: 1}

    def has_forbidden(self, path: str) -> bool:
        return any(f in path for f in self.forbidden)

    def reduce_path(self, path: str) -> Optional[tuple[int, str]]:
        """Normal form of a directed path in the algebra.

        Returns ``(scalar, normal_path)`` or ``None`` when the path is zero.
        Rewrite rules: socle monomials go to ``socle_path``, ``aa`` goes to
        ``c`` times the socle of P_0, anything else containing a forbidden
        factor is zero.
        """
        if not self.has_forbidden(path):
            return 1, path
        if path in self.socle_monomials:
            return 1, self.socle_path(self.socle_monomials[path])
        if path == "aa":
            return (1, self.socle_path(0)) if self.c else None
        return None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "c": self.c,
            "d": self.d,
            "arrows": [{"name": a, "symbol": GREEK[a], "src": s, "dst": t} for a, s, t in self.quiver.arrows],
            "forbidden": list(self.forbidden),
            "relations": [
                {"lhs": lhs, "rhs": [{"coef": k, "path": p} for k, p in rhs]} for lhs, rhs in self.relations
            ],
        }

    def label(self) -> str:
        return f"Λ_{{{self.family},{self.c}}} (d={self.d})"


@lru_cache(maxsize=None)
def build_algebra(i: int, c: int, d: int) -> AlgebraSpec:
    if i not in (1, 2):
        raise AlgebraError(f"family must be 1 or 2, got {i}")
    if c not in (0, 1):
        raise AlgebraError(f"c must be 0 or 1, got {c}")
    if d < 3:
        raise AlgebraError("defect-too-small")
    n = 1 << (d - 2)
    names = "abg" if i == 1 else "abgh"
    quiver = Quiver(tuple((a, *ARROWS[a]) for a in names))
    if i == 1:
        forbidden = ("bg", "aa", "gba" * n, "agb" * n, "bag" * n)
        relations: tuple[Relation, ...] = (
            ("bg", ()),
            ("aa", ((c, "gba" * n),)),
            ("gba" * n, ((1, "agb" * n),)),
        )
    else:
        forbidden = ("aa", "hb", "gh", "bg", "gba", "agb", "bag", "h" * n)
        relations = (
            ("hb", ()),
            ("gh", ()),
            ("bg", ()),
            ("aa", ((c, "gba"),)),
            ("gba", ((1, "agb"),)),
            ("h" * n, ((1, "bag"),)),
        )
    return AlgebraSpec(i, c, d, quiver, forbidden, relations)


def path_key(path: str) -> tuple[int, tuple[int, ...]]:
    return len(path), tuple(ARROW_ORDER.index(x) for x in path)


@dataclass(frozen=True)
class PathBasis:
    vertex: int
    paths: tuple[str, ...]  # "" stands for the trivial path e_u
    identifications: dict[str, tuple[int, str]] = field(default_factory=dict, compare=False)


def path_basis(spec: AlgebraSpec, u: int) -> PathBasis:
    """Normal-form paths with source ``u``, ordered by (length, arrow order)."""
    found = {""}
    frontier = [""]
    idents: dict[str, tuple[int, str]] = {}
    while frontier:
        nxt = []
        for p in frontier:
            end = u if p == "" else path_target(p)
            for a in spec.arrow_names:
                if ARROWS[a][0] != end:
                    continue
                q = a + p
                red = spec.reduce_path(q)
                if red is None:
                    continue
                coef, nf = red
                if nf != q:
                    idents[q] = (coef, nf)
                if nf not in found and path_source(nf) == u:
                    found.add(nf)
                    if nf == q:
                        nxt.append(q)
        frontier = nxt
    paths = tuple(sorted(found, key=path_key))
    return PathBasis(u, paths, idents)


def path_vertex(path: str, u: int) -> int:
    return u if path == "" else path_target(path)


def projective_module(spec: AlgebraSpec, ctx: FieldCtx, u: int):
    """The indecomposable projective P_u = Lambda e_u on its path basis."""
    from .modules import Representation

    basis = path_basis(spec, u)
    blocks: dict[int, list[str]] = {0: [], 1: []}
    for p in basis.paths:
        blocks[path_vertex(p, u)].append(p)
    index = {p: (path_vertex(p, u), blocks[path_vertex(p, u)].index(p)) for p in basis.paths}
    dims = (len(blocks[0]), len(blocks[1]))
    mats = {}
    for a in spec.arrow_names:
        s, t = ARROWS[a]
        m = zeros(dims[t], dims[s])
        for j, p in enumerate(blocks[s]):
            red = spec.reduce_path(a + p)
            if red is None:
                continue
            coef, nf = red
            if coef == 0:
                continue
            if nf not in index:
                continue
            tv, ti = index[nf]
            assert tv == t
            m[ti, j] ^= coef
        mats[a] = m
    labels = tuple(tuple(f"e{u}" if p == "" else p for p in blocks[v]) for v in (0, 1))
    rep = Representation(spec, ctx, dims, mats, label=f"P_{u}", basis_labels=labels)
    return rep, basis


def socle_index(spec: AlgebraSpec, ctx: FieldCtx, u: int) -> tuple[int, int]:
    """(vertex, index) of the socle basis vector of P_u."""
    rep, basis = projective_module(spec, ctx, u)
    sp = spec.socle_path(u)
    return u, rep.basis_labels[u].index(sp)


def algebra_dim(spec: AlgebraSpec, ctx: FieldCtx) -> int:
    return sum(projective_module(spec, ctx, u)[0].dim for u in (0, 1))


def expected_radical_length(spec: AlgebraSpec, u: int) -> int:
    n = spec.socle_exponent
    if spec.family == 1:
        return 3 * n + 1
    if u == 0:
        return 4
    return 4 if spec.d == 3 else n + 1


@dataclass
class SanityReport:
    checks: list[tuple[str, bool, object, object]]

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _, _ in self.checks)


def symmetric_sanity(spec: AlgebraSpec, ctx: FieldCtx) -> SanityReport:
    """Socle/top/radical-length checks on both projectives."""
    from .modules import check_relations, structure

    checks = []
    for u in (0, 1):
        rep, _ = projective_module(spec, ctx, u)
        simple = (1, 0) if u == 0 else (0, 1)
        checks.append((f"relations(P_{u})", check_relations(rep), True, True))
        soc = structure(rep, "socle").dims
        top = structure(rep, "top").dims
        checks.append((f"soc(P_{u}) = S_{u}", soc == simple, soc, simple))
        checks.append((f"top(P_{u}) = S_{u}", top == simple, top, simple))
        ll = rep.loewy_length()
        exp = expected_radical_length(spec, u)
        checks.append((f"radical length P_{u}", ll == exp, ll, exp))
    return SanityReport(checks)
