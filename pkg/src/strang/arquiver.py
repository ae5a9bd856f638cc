"""Hooks, cohooks and stable Auslander-Reiten components.

Strings are extended on the right (at s(S), after the last letter) or on the
left (at e(S), before the first letter).  The left-side operations are the
right-side ones conjugated by word inversion.  Empty words need an
orientation: appending on the right of ``1_u^σ`` requires a letter whose end
sign is σ, prepending on the left requires start sign -σ.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .algebra import AlgebraSpec
from .field import FieldCtx
from .homology import (
    HomologyError,
    ModuleLabel,
    is_isomorphic,
    omega_power,
    strip_and_recognize,
    summand_multiplicity,
    syzygy,
)
from .modules import Representation
from .words import (
    Word,
    canonical_band_flag,
    canonical_string,
    empty,
    end_sign,
    is_string,
    letter_end,
    letter_start,
    parse_word,
)

log = logging.getLogger(__name__)


class HookError(ValueError):
    pass


@dataclass(frozen=True)
class HookSets:
    family: int
    d: int
    elements: tuple[Word, ...]

    def contains(self, m: Word) -> bool:
        if m.is_empty:
            return any(e.is_empty and e.vertex == m.vertex for e in self.elements)
        return any(e.letters == m.letters for e in self.elements)


def hook_sets(spec: AlgebraSpec) -> HookSets:
    n = spec.socle_exponent
    if spec.family == 1:
        els = (Word("ba" + "gba" * (n - 1)), Word("gb" + "agb" * (n - 1)), Word("ag" + "bag" * (n - 1)), empty(1))
    else:
        els = (Word("gb"), Word("ba"), Word("ag"), Word("h" * (n - 1)) if n > 1 else empty(1))
    return HookSets(spec.family, spec.d, els)


# --- single-letter extension tests -------------------------------------------


def _letters(spec: AlgebraSpec) -> str:
    return spec.arrow_names + spec.arrow_names.upper()


def _oriented(s: Word) -> Word:
    if s.is_empty and s.sign == 0:
        raise HookError("empty word needs an orientation (1_u+ or 1_u-)")
    return s


def can_append(s: Word, y: str, spec: AlgebraSpec) -> bool:
    if s.is_empty:
        _oriented(s)
        return letter_end(y) == s.vertex and end_sign(y) == s.sign
    if letter_start(s.letters[-1]) != letter_end(y):
        return False
    return is_string(Word(s.letters + y), spec)


def can_prepend(s: Word, y: str, spec: AlgebraSpec) -> bool:
    return can_append(s.inverse(), y.swapcase(), spec)


def peak_deep_status(s: Word | str, spec: AlgebraSpec) -> dict[str, bool]:
    if isinstance(s, str):
        s = parse_word(s, spec)
    direct = spec.arrow_names
    inverse = direct.upper()
    return {
        "starts_on_peak": not any(can_append(s, z, spec) for z in direct),
        "starts_in_deep": not any(can_append(s, z, spec) for z in inverse),
        "ends_on_peak": not any(can_prepend(s, z, spec) for z in inverse),
        "ends_in_deep": not any(can_prepend(s, z, spec) for z in direct),
    }


# --- hooks and cohooks -------------------------------------------------------


def _extend_right(s: Word, first_direct: bool, spec: AlgebraSpec) -> Word:
    """S ζ M^{-1} (hook) or S ζ^{-1} M (cohook) on the right."""
    first = spec.arrow_names if first_direct else spec.arrow_names.upper()
    cont = spec.arrow_names.upper() if first_direct else spec.arrow_names
    results = []
    for z in first:
        if not can_append(s, z, spec):
            continue
        w = s + Word(z)
        while True:
            nxt = [y for y in cont if can_append(w, y, spec)]
            if len(nxt) > 1:
                raise HookError(f"ambiguous continuation of {w.text}")
            if not nxt:
                break
            w = Word(w.letters + nxt[0])
        results.append((z, w))
    if not results:
        raise HookError(("on-peak" if first_direct else "in-deep") + f": {s.text}")
    if len(results) > 1:
        raise HookError(f"ambiguous: {s.text} admits {[r[0] for r in results]}")
    z, w = results[0]
    tail = w.letters[len(s.letters) + 1 :]
    m = Word(tail[::-1].swapcase()) if first_direct and tail else Word(tail) if tail else empty(letter_start(z))
    if not hook_sets(spec).contains(m):
        raise HookError(f"hook part {m.text} is not a maximal directed string")
    return w


def _side(s: Word, side: str) -> Word:
    if side == "right":
        return s
    if side == "left":
        return s.inverse()
    raise HookError(f"side must be left or right, got {side!r}")


def add_hook(s: Word | str, side: str, spec: AlgebraSpec) -> Word:
    if isinstance(s, str):
        s = parse_word(s, spec)
    w = _extend_right(_side(_oriented(s), side), True, spec)
    return w if side == "right" else w.inverse()


def add_cohook(s: Word | str, side: str, spec: AlgebraSpec) -> Word:
    if isinstance(s, str):
        s = parse_word(s, spec)
    w = _extend_right(_side(_oriented(s), side), False, spec)
    return w if side == "right" else w.inverse()


def _delete_right(s: Word, hook: bool, spec: AlgebraSpec) -> Optional[Word]:
    """D with S = D_h (hook) or S = D_c (cohook) on the right, if any."""
    x = s.letters
    if not x:
        return None
    # strip the final run (inverse for a hook, direct for a cohook)
    k = len(x)
    run_is = str.isupper if hook else str.islower
    while k > 0 and run_is(x[k - 1]):
        k -= 1
    if k == 0:
        return None
    z = x[k - 1]
    rest = x[: k - 1]
    d = Word(rest) if rest else empty(letter_end(z), end_sign(z))
    back = _extend_right(d, hook, spec)
    if back.letters != x:
        raise HookError(f"deleting a {'hook' if hook else 'cohook'} from {s.text} is not invertible")
    return d


def delete_hook(s: Word | str, side: str, spec: AlgebraSpec) -> Optional[Word]:
    if isinstance(s, str):
        s = parse_word(s, spec)
    d = _delete_right(_side(s, side), True, spec)
    return None if d is None else (d if side == "right" else d.inverse())


def delete_cohook(s: Word | str, side: str, spec: AlgebraSpec) -> Optional[Word]:
    if isinstance(s, str):
        s = parse_word(s, spec)
    d = _delete_right(_side(s, side), False, spec)
    return None if d is None else (d if side == "right" else d.inverse())


# --- neighbours --------------------------------------------------------------

HOOK = "hook-inclusion"
COHOOK = "cohook-projection"


def string_label(w: Word) -> ModuleLabel:
    return ModuleLabel("string", canonical_string(w.unoriented()).text)


def _node_word(label: ModuleLabel, spec: AlgebraSpec) -> Word:
    w = parse_word(label.word, spec)
    if w.is_empty:
        return empty(w.vertex, 1)
    return w


def ar_neighbors(label: ModuleLabel, spec: AlgebraSpec) -> list[tuple[ModuleLabel, str, str]]:
    """(neighbour, "out"|"in", edge kind) for a string or band node."""
    if label.kind == "band":
        out = [(label._replace(m=label.m + 1), "out", HOOK), (label._replace(m=label.m + 1), "in", COHOOK)]
        if label.m > 1:
            out += [(label._replace(m=label.m - 1), "out", COHOOK), (label._replace(m=label.m - 1), "in", HOOK)]
        return out
    if label.kind != "string":
        raise HookError("projective modules are not stable AR nodes")
    s = _node_word(label, spec)
    res = []
    for side in ("right", "left"):
        st = peak_deep_status(s, spec)
        on_peak = st["starts_on_peak"] if side == "right" else st["ends_on_peak"]
        in_deep = st["starts_in_deep"] if side == "right" else st["ends_in_deep"]
        if not on_peak:
            res.append((string_label(add_hook(s, side, spec)), "out", HOOK))
        else:
            d = delete_cohook(s, side, spec)
            if d is not None:
                res.append((string_label(d), "out", COHOOK))
        if not in_deep:
            res.append((string_label(add_cohook(s, side, spec)), "in", COHOOK))
        else:
            d = delete_hook(s, side, spec)
            if d is not None:
                res.append((string_label(d), "in", HOOK))
    return res


# --- components --------------------------------------------------------------


def same_indecomposable(x: Representation, m: Representation) -> bool:
    """Isomorphism test for an indecomposable ``x`` against ``m``."""
    if x.dims != m.dims:
        return False
    try:
        return summand_multiplicity(x, m) > 0
    except HomologyError:
        return bool(is_isomorphic(x, m))


def omega_period(m: Representation, maxp: int) -> Optional[int]:
    cur = m
    for ell in range(1, maxp + 1):
        cur = syzygy(cur)
        if same_indecomposable(m, cur):
            return ell
    return None


@dataclass
class ARNode:
    label: ModuleLabel
    dims: tuple[int, int]
    layer: int


@dataclass
class ARComponentGraph:
    seed: ModuleLabel
    radius: int
    nodes: dict[ModuleLabel, ARNode] = field(default_factory=dict)
    edges: set[tuple[ModuleLabel, ModuleLabel, str]] = field(default_factory=set)
    tau: dict[ModuleLabel, ModuleLabel] = field(default_factory=dict)
    tube_rank: Optional[int] = None

    @property
    def classification(self) -> str:
        if self.tube_rank is not None:
            return f"tube(rank {self.tube_rank})"
        return "ZA-infinity-infinity (heuristic: no tau-period within 2*radius)"

    def ordered_nodes(self) -> list[ARNode]:
        return sorted(self.nodes.values(), key=lambda n: (n.layer, n.label.kind, n.label.word, n.label.lam, n.label.m))

    def has_edge(self, a: ModuleLabel, b: ModuleLabel) -> bool:
        return any(e[0] == a and e[1] == b for e in self.edges)

    def to_json(self) -> dict:
        idx = {n.label: str(n.label) for n in self.ordered_nodes()}
        return {
            "seed": str(self.seed),
            "radius": self.radius,
            "classification": self.classification,
            "tube_rank": self.tube_rank,
            "nodes": [{"label": str(n.label), "dims": list(n.dims), "layer": n.layer} for n in self.ordered_nodes()],
            "edges": [{"src": idx[a], "dst": idx[b], "kind": k} for a, b, k in self._sorted_edges()],
            "tau": [{"src": idx[a], "dst": idx[b]} for a, b in sorted(self.tau.items(), key=lambda t: str(t[0])) if a in idx and b in idx],
        }

    def _sorted_edges(self):
        order = {n.label: i for i, n in enumerate(self.ordered_nodes())}
        return sorted(self.edges, key=lambda e: (order[e[0]], order[e[1]], e[2]))

    def to_dot(self) -> str:
        nodes = self.ordered_nodes()
        ids = {n.label: f"n{i}" for i, n in enumerate(nodes)}
        lines = [f'digraph "AR component of {_dot_escape(str(self.seed))}" {{']
        lines.append(f'  label="{_dot_escape(self.classification)}";')
        for n in nodes:
            text = f"{n.label}\\n({n.dims[0]},{n.dims[1]})"
            lines.append(f'  {ids[n.label]} [label="{_dot_escape(text, keep_newline=True)}"];')
        for a, b, kind in self._sorted_edges():
            lines.append(f'  {ids[a]} -> {ids[b]} [style=solid, tooltip="{kind}"];')
        for a, b in sorted(self.tau.items(), key=lambda t: (ids.get(t[0], ""), ids.get(t[1], ""))):
            if a in ids and b in ids:
                lines.append(f"  {ids[a]} -> {ids[b]} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _dot_escape(s: str, keep_newline: bool = False) -> str:
    s = s.replace('"', '\\"')
    if not keep_newline:
        s = s.replace("\\n", " ")
    return s


def canonical_label(label: ModuleLabel, ctx: FieldCtx) -> ModuleLabel:
    if label.kind == "band":
        w, flipped = canonical_band_flag(label.word)
        return ModuleLabel("band", w.text, ctx.inv(label.lam) if flipped else label.lam, label.m)
    if label.kind == "string":
        return ModuleLabel("string", canonical_string(Word(label.word) if not label.word.startswith("1_") else parse_word(label.word).unoriented()).text)
    return label


def compute_tau(label: ModuleLabel, spec: AlgebraSpec, ctx: FieldCtx) -> ModuleLabel:
    """τ = Ω² by linear algebra, matched first against mesh candidates."""
    x = label.build(spec, ctx)
    t = omega_power(x, 2)
    cands = []
    if label.kind == "string":
        for p, d, _ in ar_neighbors(label, spec):
            if d != "in":
                continue
            for q, d2, _ in ar_neighbors(p, spec):
                if d2 == "in" and q not in cands:
                    cands.append(q)
    else:
        cands.append(label)
    for q in cands:
        qm = q.build(spec, ctx)
        if same_indecomposable(qm, t):
            return q
    mult, labs = strip_and_recognize(t, max(t.dim, 1))
    if mult != (0, 0) or len(labs) != 1:
        raise HookError(f"τ({label}) is not indecomposable non-projective")
    return labs[0]


def tau_period(label: ModuleLabel, spec: AlgebraSpec, ctx: FieldCtx, maxr: int) -> Optional[int]:
    x = label.build(spec, ctx)
    cur = x
    for r in range(1, maxr + 1):
        cur = omega_power(cur, 2)
        if same_indecomposable(x, cur):
            return r
    return None


def grow_component(seed: ModuleLabel, radius: int, spec: AlgebraSpec, ctx: FieldCtx) -> ARComponentGraph:
    if radius < 0:
        raise HookError("radius must be >= 0")
    seed = canonical_label(seed, ctx)
    g = ARComponentGraph(seed, radius)
    g.nodes[seed] = ARNode(seed, seed.build(spec, ctx).dims, 0)
    queue = deque([seed])
    while queue:
        cur = queue.popleft()
        layer = g.nodes[cur].layer
        if layer >= radius:
            continue
        for nb, direction, kind in ar_neighbors(cur, spec):
            nb = canonical_label(nb, ctx)
            if nb not in g.nodes:
                g.nodes[nb] = ARNode(nb, nb.build(spec, ctx).dims, layer + 1)
                queue.append(nb)
            g.edges.add((cur, nb, kind) if direction == "out" else (nb, cur, kind))
    for lab in list(g.nodes):
        t = canonical_label(compute_tau(lab, spec, ctx), ctx)
        g.tau[lab] = t
    g.tube_rank = tau_period(seed, spec, ctx, max(2 * radius, 1))
    log.debug("grew %d nodes around %s", len(g.nodes), seed)
    return g
