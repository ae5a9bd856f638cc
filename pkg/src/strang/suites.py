"""Verification suites producing ``CheckReport`` objects."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

import numpy as np

from . import field as F
from .algebra import AlgebraSpec, build_algebra, projective_module, symmetric_sanity
from .arquiver import canonical_label, grow_component, omega_period, same_indecomposable
from .field import FieldCtx, gf
from .homology import (
    HomologyError,
    ModuleLabel,
    _combine,
    compose,
    end_dim,
    ext1_dim,
    hom_dim,
    hom_space,
    cokernel,
    image,
    kernel,
    omega_power,
    residue_scalar,
    stable_end_dim,
    summand_multiplicity,
    syzygy,
    unflatten,
)
from .krause import admissible_triples, graph_map
from .modules import band_module, check_relations, direct_sum, string_module
from .polynomials import minpoly_halfroot, mod2_quotient_dim, pd, root_sanity, scaled_chebyshev
from .words import enumerate_words, named_family, s010_band

UNISERIALS = ("S_0", "S_1", "S_01", "S_10", "S_001", "S_100")


@dataclass
class Check:
    id: str
    anchor: str
    status: str  # pass | fail | skip
    observed: Any
    expected: Any
    note: str = ""

    def to_json(self) -> dict:
        d = {"id": self.id, "anchor": self.anchor, "status": self.status, "observed": self.observed, "expected": self.expected}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class CheckReport:
    suite: str
    params: dict
    checks: list[Check] = field(default_factory=list)

    def add(self, id: str, anchor: str, ok: bool, observed, expected, note: str = "") -> bool:
        self.checks.append(Check(id, anchor, "pass" if ok else "fail", _plain(observed), _plain(expected), note))
        return ok

    def skip(self, id: str, anchor: str, note: str) -> None:
        self.checks.append(Check(id, anchor, "skip", None, None, note))

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params, "checks": [c.to_json() for c in self.checks], "pass": self.passed}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        rows = [(c.status.upper(), c.id, str(c.observed), str(c.expected), c.anchor) for c in self.checks]
        head = ("STATUS", "CHECK", "OBSERVED", "EXPECTED", "ANCHOR")
        widths = [max(len(r[k]) for r in rows + [head]) for k in range(4)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths) + "  {}"
        lines = [f"suite {self.suite} {json.dumps(self.params, ensure_ascii=False)}", fmt.format(*head)]
        lines += [fmt.format(*r) for r in rows]
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines) + "\n"


def _plain(x):
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, list):
        return [_plain(y) for y in x]
    return x


def _fmt_lam(ctx: FieldCtx, lam: int) -> str:
    return ctx.format(lam)


def _resolve(spec: Optional[AlgebraSpec], i: int, c: int, d: int) -> AlgebraSpec:
    """Algebra the computations run on; expectations always follow (i, c, d)."""
    return spec if spec is not None else build_algebra(i, c, d)


def x_and_y(spec: AlgebraSpec) -> tuple[str, str]:
    """Named words of the modules X (Ext^1 = k) and Y (3-periodic)."""
    return named_family("X", spec).text, named_family("Y", spec).text


# --- relation soundness ------------------------------------------------------


def suite_relations(i: int, c: int, d: int, maxlen: int = 10, band_maxlen: int = 8, ctx: FieldCtx | None = None) -> CheckReport:
    ctx = ctx or gf(2)
    spec = build_algebra(i, c, d)
    rep = CheckReport("relations", {"family": i, "c": c, "d": d, "maxlen": maxlen, "band_maxlen": band_maxlen, "field": ctx.order})
    for u in (0, 1):
        p, _ = projective_module(spec, ctx, u)
        rep.add(f"P_{u}", "projectives satisfy the defining relations", check_relations(p), True, True)
    san = symmetric_sanity(spec, ctx)
    rep.add("symmetric-sanity", "simple top and socle, radical lengths", san.ok, [n for n, ok, _, _ in san.checks if not ok], [])
    bad = [w.text for w in enumerate_words(spec, "strings", maxlen) if not check_relations(string_module(w, spec, ctx, check=False))]
    rep.add("strings", "string modules satisfy the defining relations", not bad, bad[:5], [])
    bad = []
    bands = enumerate_words(spec, "bands", band_maxlen)
    for w in bands:
        for lam in ctx.nonzero():
            for m in (1, 2):
                if not check_relations(band_module(w, lam, m, spec, ctx, check=False)):
                    bad.append((w.text, lam, m))
    rep.add("bands", "band modules satisfy the defining relations", not bad, bad[:5], [], note=f"{len(bands)} bands")
    return rep


# --- Krause oracle -----------------------------------------------------------


def suite_krause(i: int, c: int, d: int = 3, maxlen: int = 6, ctx: FieldCtx | None = None, independence_maxlen: int = 4) -> CheckReport:
    ctx = ctx or gf(1)
    spec = build_algebra(i, c, d)
    rep = CheckReport("krause", {"family": i, "c": c, "d": d, "maxlen": maxlen, "field": ctx.order})
    words = enumerate_words(spec, "strings", maxlen)
    mods = [string_module(w, spec, ctx) for w in words]
    mism = []
    for (s, ms), (t, mt) in itertools.product(zip(words, mods), repeat=2):
        k = len(admissible_triples(s, t, spec))
        h = hom_dim(ms, mt)
        if k != h:
            mism.append((s.text, t.text, k, h))
    rep.add("dims", "graph maps count equals Hom dimension", not mism, mism[:5], [], note=f"{len(words) ** 2} pairs")
    dep = []
    short = [(w, m) for w, m in zip(words, mods) if len(w) <= independence_maxlen]
    for (s, ms), (t, mt) in itertools.product(short, repeat=2):
        maps = [graph_map(s, t, tr, spec, ctx) for tr in admissible_triples(s, t, spec)]
        if maps:
            vecs = np.array([np.concatenate([f[0].ravel(), f[1].ravel()]) for f in maps], dtype=np.uint8)
            if F.rank(ctx, vecs) != len(maps):
                dep.append((s.text, t.text))
    rep.add("independence", "graph maps are intertwiners and linearly independent", not dep, dep[:5], [])
    return rep


# --- stable endomorphisms ----------------------------------------------------


def suite_stablend(i: int, c: int, d: int, maxlen: int = 8, ctx: FieldCtx | None = None, spec: AlgebraSpec | None = None) -> CheckReport:
    ctx = ctx or gf(1)
    spec = _resolve(spec, i, c, d)
    rep = CheckReport("stablend", {"family": i, "c": c, "d": d, "maxlen": maxlen, "field": ctx.order})
    uni = {named_family(n, spec).text: n for n in UNISERIALS}
    for w, n in uni.items():
        e = end_dim(string_module(w, spec, ctx))
        rep.add(f"a:End({n})", "End = k exactly for the six uniserials", e == 1, e, 1)
    low = []
    count = 0
    for w in enumerate_words(spec, "strings", maxlen):
        if w.text in uni:
            continue
        count += 1
        e = end_dim(string_module(w, spec, ctx))
        if e < 2:
            low.append((w.text, e))
    for w in enumerate_words(spec, "bands", maxlen):
        for lam in ctx.nonzero():
            count += 1
            e = end_dim(band_module(w, lam, 1, spec, ctx))
            if e < 2:
                low.append((w.text, lam, e))
    rep.add("a:End>=2", "every other string/band module has End of dimension >= 2", not low, low[:5], [], note=f"{count} modules")
    band = s010_band(spec)
    for lam in ctx.nonzero():
        s = stable_end_dim(band_module(band, lam, 1, spec, ctx))
        rep.add(
            f"b:stEnd(S010^{_fmt_lam(ctx, lam)})",
            "stable End of S010(λ) is k iff c = 1",
            (s == 1) == (c == 1),
            s,
            "1" if c == 1 else ">= 2",
        )
    for n in (1, 2, 3, -1, -2, -3):
        w = named_family("C", spec, n)
        if i == 1 and abs(n) == 3 and d > 3:
            continue
        s = stable_end_dim(string_module(w, spec, ctx))
        rep.add(f"c:stEnd(C_{n})", "stable End = k along the component of S_0", s == 1, s, 1)
    s0 = string_module("1_0", spec, ctx)
    e = ext1_dim(s0, s0)
    rep.add("d:Ext(S_0,S_0)", "Ext^1(S_0,S_0) = k", e == 1, e, 1)
    xw, yw = x_and_y(spec)
    xm, ym = string_module(xw, spec, ctx), string_module(yw, spec, ctx)
    e = ext1_dim(xm, xm)
    rep.add("d:Ext(X,X)", "Ext^1(X,X) = k", e == 1, e, 1, note=f"X = M({xw})")
    e = ext1_dim(ym, ym)
    rep.add("d:Ext(Y,Y)", "Ext^1(Y,Y) = 0", e == 0, e, 0, note=f"Y = M({yw})")
    if c == 1:
        for lam in ctx.nonzero():
            m = band_module(band, lam, 1, spec, ctx)
            e = ext1_dim(m, m)
            rep.add(f"d:Ext(S010^{_fmt_lam(ctx, lam)})", "Ext^1(S010(λ),S010(λ)) = k when c = 1", e == 1, e, 1)
    low = []
    for w in enumerate_words(spec, "bands", min(maxlen, 6)):
        for lam in ctx.nonzero():
            s = stable_end_dim(band_module(w, lam, 2, spec, ctx))
            if s < 2:
                low.append((w.text, lam, s))
    rep.add("e:band m=2", "stable End of band modules with m = 2 has dimension >= 2", not low, low[:5], [])
    return rep


# --- Omega -------------------------------------------------------------------


def suite_omega(i: int, c: int, d: int, ctx: FieldCtx | None = None, maxp: int = 6, spec: AlgebraSpec | None = None) -> CheckReport:
    ctx = ctx or gf(2)
    spec = _resolve(spec, i, c, d)
    rep = CheckReport("omega", {"family": i, "c": c, "d": d, "field": ctx.order, "maxp": maxp})
    s001 = string_module(named_family("S_001", spec), spec, ctx)
    s100 = string_module(named_family("S_100", spec), spec, ctx)
    m = omega_power(s001, -2)
    rep.add("Ω^-2(S_001)≅S_100", "Ω^-2(S_001) ≅ S_100", same_indecomposable(s100, m), list(m.dims), list(s100.dims))
    _, yw = x_and_y(spec)
    y = string_module(yw, spec, ctx)
    p = omega_period(y, maxp)
    rep.add("period(Y)", "Y has Ω-period 3", p == 3, p, 3, note=f"Y = M({yw})")
    band = s010_band(spec)
    c010 = string_module(named_family("C_010", spec), spec, ctx)
    for lam in ctx.nonzero():
        tag = _fmt_lam(ctx, lam)
        s = band_module(band, lam, 1, spec, ctx)
        om = syzygy(s)
        if c == 0:
            rep.add(f"Ω(S010^{tag})", "Ω(S010(λ)) ≅ S010(λ) when c = 0", same_indecomposable(s, om), True, True)
            p = omega_period(s, maxp)
            rep.add(f"period(S010^{tag})", "S010(λ) has Ω-period 1 when c = 0", p == 1, p, 1)
            continue
        mu = lam ^ 1
        if mu == 0:
            ok = same_indecomposable(c010, om)
            rep.add(
                f"Ω(S010^{tag})",
                "Ω(S010(1)) ≅ S010(0), the string module M(C010)",
                ok,
                ok,
                True,
                note="boundary case λ = 1: 1 + λ = 0, compared with the string module",
            )
        else:
            target = band_module(band, mu, 1, spec, ctx)
            rep.add(f"Ω(S010^{tag})", "Ω(S010(λ)) ≅ S010(1+λ) when c = 1", same_indecomposable(target, om), True, True)
        p = omega_period(s, maxp)
        rep.add(f"period(S010^{tag})", "S010(λ) has Ω-period 2 when c = 1", p == 2, p, 2)
    for name in ("S_0", "C"):
        w = named_family(name, spec, 1)
        p = omega_period(string_module(w, spec, ctx), maxp)
        rep.add(f"aperiodic({w.text})", "modules in the component of S_0 are not Ω-periodic", p is None, p if p else f"none <= {maxp}", f"none <= {maxp}")
    return rep


# --- towers ------------------------------------------------------------------


def _nilpotent_endos(v, seed: int = 0, trials: int = 200):
    """Endomorphisms in the radical of End(v): basis first, then random mixes."""
    ctx = v.ctx
    end = hom_space(v, v)
    phis = np.array([[residue_scalar(ctx, f, v.dim)] for f in end.basis], dtype=np.uint8)
    # the kernel of the residue functional is the radical of End(v)
    _, ker = F.rank_and_kernel(ctx, phis.T)
    vecs = end.vectors()
    rad = [_combine(ctx, k, vecs) for k in ker]
    for r in rad:
        yield unflatten(r, v, v)
    if not rad:
        return
    radv = np.array(rad, dtype=np.uint8)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        co = rng.integers(0, ctx.order, size=len(rad)).astype(np.uint8)
        yield unflatten(_combine(ctx, co, radv), v, v)


def _power(ctx, f, k, dims):
    out = (F.identity(dims[0]), F.identity(dims[1]))
    for _ in range(k):
        out = compose(ctx, f, out)
    return out


def _rank(ctx, f) -> int:
    return sum(F.rank(ctx, b) for b in f if b.size)


def suite_towers(i: int = 2, c: int = 1, d: int = 3, lam: Optional[int] = None, nmax: int = 4, ctx: FieldCtx | None = None) -> CheckReport:
    ctx = ctx or gf(2)
    spec = build_algebra(i, c, d)
    lams = [lam] if lam is not None else [x for x in ctx.nonzero() if x != 1] or [1]
    rep = CheckReport("towers", {"family": i, "c": c, "d": d, "lambda": [ctx.format(x) for x in lams], "nmax": nmax, "field": ctx.order})
    band = s010_band(spec)
    for lm in lams:
        base = band_module(band, lm, 1, spec, ctx)
        k = base.dim
        for n in range(1, nmax + 1):
            tag = f"λ={ctx.format(lm)},n={n}"
            v = band_module(band, lm, n, spec, ctx)
            if n == 1:
                rep.add(f"free({tag})", "V is free over k[t]/(t^n)", True, [k, 0], [k, 0], note="τ = 0")
                continue
            want = [k * (n - l) for l in range(n + 1)]
            found = None
            for tau in _nilpotent_endos(v):
                prof = [_rank(ctx, _power(ctx, tau, l, v.dims)) for l in range(n + 1)]
                if prof == want:
                    found = (tau, prof)
                    break
            if found is None:
                rep.add(f"free({tag})", "V is free over k[t]/(t^n)", False, "no τ found", want)
                continue
            tau, prof = found
            rep.add(f"free({tag})", "V is free over k[t]/(t^n)", True, prof, want)
            q = cokernel(tau, v, v)
            rep.add(f"quotient({tag})", "V/τV ≅ V_λ", same_indecomposable(base, q), list(q.dims), list(base.dims))
            im = image(tau, v, v)
            prev = band_module(band, lm, n - 1, spec, ctx)
            rep.add(f"image({tag})", "τV ≅ V_{λ,n-1}", same_indecomposable(prev, im), list(im.dims), list(prev.dims))
            split = summand_multiplicity(base, v)
            rep.add(f"nonsplit({tag})", "0 → V_{λ,n-1} → V_{λ,n} → V_λ → 0 does not split", split == 0, split, 0)
    return rep


# --- mod-2 shapes and the short exact sequence -------------------------------


def ses_search(spec: AlgebraSpec, n: int, ctx: FieldCtx | None = None, limit_bits: int = 20) -> tuple[bool, int, Optional[tuple]]:
    """Exhaustive search for (P_0)^n ⊕ M(α) ↠ M(C_n) with kernel ≅ M(C_n).

    Returns (found, size of the searched space, witness coefficients).
    """
    ctx = ctx or gf(1)
    p0 = projective_module(spec, ctx, 0)[0]
    src = direct_sum(*([p0] * n + [string_module("a", spec, ctx)]))
    tgt = string_module(named_family("C", spec, n), spec, ctx)
    hs = hom_space(src, tgt)
    if hs.dim * ctx.degree > limit_bits:
        raise HomologyError(f"search space 2^{hs.dim * ctx.degree} exceeds the cap")
    vecs = hs.vectors()
    size = ctx.order ** hs.dim
    for co in itertools.product(range(ctx.order), repeat=hs.dim):
        if not any(co):
            continue
        f = unflatten(_combine(ctx, np.array(co, dtype=np.uint8), vecs), src, tgt)
        if any(F.rank(ctx, f[v]) < tgt.dims[v] for v in (0, 1)):
            continue
        if same_indecomposable(tgt, kernel(f, src, tgt)):
            return True, size, co
    return False, size, None


def suite_mod2_and_ses(i: int = 2, c: int = 0, d: int = 3, nmax: int = 1, ctx: FieldCtx | None = None) -> CheckReport:
    ctx = ctx or gf(1)
    spec = build_algebra(i, c, d)
    rep = CheckReport("mod2_ses", {"family": i, "c": c, "d": d, "nmax": nmax, "field": ctx.order})
    n_soc = spec.socle_exponent
    if i == 2:
        ub = string_module(named_family("U_bar", spec), spec, ctx)
        eta = ub.arrows["h"]
        ranks = [F.rank(ctx, _mat_power(ctx, eta, l)) if eta.size else 0 for l in range(n_soc + 1)]
        want = [n_soc - l for l in range(n_soc + 1)]
        rep.add("a:η on U_bar", "η acts on U_bar freely over k[t]/(t^N), N = 2^(d-2)", ranks == want, ranks, want)
        s1 = string_module("1_1", spec, ctx)
        e = ext1_dim(ub, s1)
        rep.add("b:Ext(U_bar,S_1)", "Ext^1(U_bar, S_1) = 0", e == 0, e, 0)
    else:
        rep.skip("a:η on U_bar", "η acts on U_bar freely", "U_bar exists for family 2 only")
    for n in range(0, nmax + 1):
        ok, size, wit = ses_search(spec, n, gf(1))
        rep.add(f"c:SES n={n}", "(P_0)^n ⊕ M(α) ↠ M(C_n) with kernel ≅ M(C_n)", ok, ok, True, note=f"searched {size} maps")
    for n in range(0, 4):
        m = string_module(named_family("C", spec, n), spec, ctx)
        e = ext1_dim(m, m)
        rep.add(f"d:Ext(C_{n},C_{n})", "Ext^1(M(C_n), M(C_n)) = k", e == 1, e, 1)
    return rep


def _mat_power(ctx, m, k):
    out = F.identity(m.shape[0])
    for _ in range(k):
        out = F.matmul(ctx, m, out)
    return out


# --- AR structure ------------------------------------------------------------


def figure_pattern(graph, spec: AlgebraSpec) -> dict[str, bool]:
    """Sectional path S_0 → M(C_1) → M(C_2) with τM(C_1) → S_0."""
    a0 = ModuleLabel("string", "1_0")
    a1 = ModuleLabel("string", named_family("C", spec, 1).text)
    a2 = ModuleLabel("string", named_family("C", spec, 2).text)
    a1 = canonical_label(a1, gf(1))
    a2 = canonical_label(a2, gf(1))
    t1 = graph.tau.get(a1)
    return {
        "A_1 in component": a1 in graph.nodes,
        "A_2 in component": a2 in graph.nodes,
        "A_0 → A_1": graph.has_edge(a0, a1),
        "A_1 → A_2": graph.has_edge(a1, a2),
        "τA_1 → A_0": t1 is not None and graph.has_edge(t1, a0),
    }


def mesh_defects(graph, spec: AlgebraSpec, ctx: FieldCtx) -> list[str]:
    """Nodes whose predecessors, τX and X violate the dimension additivity of the mesh."""
    bad = []
    preds: dict = {}
    for a, b, _ in graph.edges:
        preds.setdefault(b, set()).add(a)
    for lab, node in graph.nodes.items():
        if node.layer >= graph.radius - 1 or lab.kind != "string":
            continue
        t = graph.tau[lab]
        ps = preds.get(lab, set())
        mid = sum(p.build(spec, ctx).dim for p in ps)
        if mid != node.dims[0] + node.dims[1] + sum(t.build(spec, ctx).dims):
            bad.append(str(lab))
    return bad


def suite_ar(i: int = 2, c: int = 1, d: int = 3, radius: int = 4, ctx: FieldCtx | None = None) -> CheckReport:
    ctx = ctx or gf(2)
    spec = build_algebra(i, c, d)
    rep = CheckReport("ar", {"family": i, "c": c, "d": d, "radius": radius, "field": ctx.order})
    _, yw = x_and_y(spec)
    g = grow_component(ModuleLabel("string", yw), radius, spec, ctx)
    rep.add("tube(Y)", "the component of Y is a 3-tube", g.tube_rank == 3, g.tube_rank, 3, note=f"{len(g.nodes)} nodes")
    rep.add("τ-closed(Y)", "τ maps the component into itself", all(t in g.nodes for t in g.tau.values()), True, True)
    band = s010_band(spec).text
    for lam in ctx.nonzero():
        gb = grow_component(ModuleLabel("band", band, lam, 1), 2, spec, ctx)
        rep.add(f"tube(S010^{ctx.format(lam)})", "band modules lie in 1-tubes", gb.tube_rank == 1, gb.tube_rank, 1)
    g0 = grow_component(ModuleLabel("string", "1_0"), 2, spec, ctx)
    pat = figure_pattern(g0, spec)
    rep.add("C_0 pattern", "S_0 → M(C_1) → M(C_2) sectional, τM(C_1) → S_0", all(pat.values()), pat, {k: True for k in pat})
    rep.add("C_0 aperiodic", "the component of S_0 has no τ-period within 2·radius", g0.tube_rank is None, g0.tube_rank, None)
    bad = mesh_defects(g0, spec, ctx) + mesh_defects(g, spec, ctx)
    rep.add("mesh dims", "dim X + dim τX = sum over predecessors", not bad, bad[:5], [])
    return rep


# --- polynomials -------------------------------------------------------------


def suite_pd(dmax: int = 12, cheb_max: int = 8) -> CheckReport:
    rep = CheckReport("pd", {"dmax": dmax, "chebyshev_max": cheb_max})
    for d in range(3, dmax + 1):
        p = pd(d)
        props = {
            "monic": p.is_monic(),
            "degree": p.degree == (1 << (d - 2)) - 1,
            "even": all(x % 2 == 0 for x in p.coeffs[:-1]),
            "mod2": mod2_quotient_dim(d) == 1 << (d - 2),
            "mod2 reduction": list(p.mod2()) == [0] * p.degree + [1],
        }
        rep.add(f"p_{d}", "p_d monic of degree 2^(d-2)-1, even lower coefficients, mod-2 quotient of dimension 2^(d-2)", all(props.values()), props, {k: True for k in props})
    for ell in range(2, cheb_max + 1):
        ok = minpoly_halfroot(ell) == scaled_chebyshev(1 << (ell - 2))
        rep.add(f"chebyshev q_{ell}", "q_ℓ(x) = 2 T_{2^(ℓ-2)}(x/2)", ok, ok, True)
    for ell in range(2, cheb_max + 1):
        r = root_sanity(ell, 128)
        rep.add(f"root q_{ell}", "q_ℓ(2cos(π/2^(ℓ-1))) = 0", r < 2.0**-40, r, "< 2^-40")
    return rep


# --- negative control --------------------------------------------------------


def flipped_spec(spec: AlgebraSpec) -> AlgebraSpec:
    """The same presentation with the socle parameter c toggled."""
    return build_algebra(spec.family, 1 - spec.c, spec.d)


def suite_negative_control(i: int, c: int, d: int = 3, ctx: FieldCtx | None = None) -> CheckReport:
    ctx = ctx or gf(2)
    spec = flipped_spec(build_algebra(i, c, d))
    rep = CheckReport("negative_control", {"family": i, "c": c, "d": d, "field": ctx.order})
    st = suite_stablend(i, c, d, maxlen=4, ctx=ctx, spec=spec)
    om = suite_omega(i, c, d, ctx=ctx, spec=spec)
    fails = [f.id for f in st.failures() + om.failures()]
    rep.add("c flipped", "flipping c must break at least one check", bool(fails), fails, "at least one failure")
    return rep


SUITES: dict[str, Callable[..., CheckReport]] = {
    "ar": suite_ar,
    "krause": suite_krause,
    "mod2_ses": suite_mod2_and_ses,
    "negative_control": suite_negative_control,
    "omega": suite_omega,
    "pd": suite_pd,
    "relations": suite_relations,
    "stablend": suite_stablend,
    "towers": suite_towers,
}


def all_jobs(ds=(3, 4)) -> list[tuple[str, dict]]:
    """Every suite over (i, c, d) with the default caps, ordered by suite name."""
    jobs: list[tuple[str, dict]] = []
    for i, c in itertools.product((1, 2), (0, 1)):
        jobs.append(("ar", {"i": i, "c": c, "d": 3, "radius": 4 if i == 2 else 3}))
        jobs.append(("krause", {"i": i, "c": c, "d": 3, "maxlen": 6}))
        jobs.append(("negative_control", {"i": i, "c": c, "d": 3}))
        for d in ds:
            jobs.append(("mod2_ses", {"i": i, "c": c, "d": d, "nmax": 1 if d == 3 else 0}))
            jobs.append(("omega", {"i": i, "c": c, "d": d}))
            jobs.append(("relations", {"i": i, "c": c, "d": d, "maxlen": 10, "band_maxlen": 8}))
            jobs.append(("stablend", {"i": i, "c": c, "d": d, "maxlen": 8 if d == 3 else 6}))
    for d in ds:
        for i in (1, 2):
            jobs.append(("towers", {"i": i, "c": 1, "d": d, "nmax": 4 if (i, d) == (2, 3) else 2}))
    jobs.append(("pd", {"dmax": 12}))
    jobs.sort(key=lambda j: (j[0], json.dumps(j[1], sort_keys=True)))
    return jobs


def run_job(job: tuple[str, dict]) -> dict:
    name, kw = job
    return SUITES[name](**kw).to_json()
