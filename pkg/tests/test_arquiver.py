import json

import pydot
import pytest

from strang import field as F
from strang.algebra import build_algebra
from strang.arquiver import (
    COHOOK,
    HOOK,
    HookError,
    add_cohook,
    add_hook,
    ar_neighbors,
    can_append,
    can_prepend,
    canonical_label,
    delete_cohook,
    delete_hook,
    grow_component,
    hook_sets,
    omega_period,
    peak_deep_status,
)
from strang.field import gf
from strang.homology import ModuleLabel
from strang.krause import admissible_triples, graph_map
from strang.modules import band_module, string_module
from strang.words import Word, empty, enumerate_words, is_string, named_family, parse_word, s010_band

F2, F4 = gf(1), gf(2)
ALL = [(i, c) for i in (1, 2) for c in (0, 1)]


def oriented(w: Word):
    return [empty(w.vertex, 1), empty(w.vertex, -1)] if w.is_empty else [w]


# --- hook sets and peak/deep flags --------------------------------------------


@pytest.mark.parametrize("i,d", [(1, 3), (1, 4), (2, 3), (2, 4), (2, 5)])
def test_hook_set_elements_are_maximal_directed(i, d):
    spec = build_algebra(i, 0, d)
    hs = hook_sets(spec)
    assert len(hs.elements) == 4
    for m in hs.elements:
        assert is_string(m, spec)
        if m.is_empty:
            continue
        assert m.letters.islower()
        for z in spec.arrow_names:
            for ext in (z + m.letters, m.letters + z):
                try:
                    w = parse_word(ext, spec)
                except ValueError:
                    continue
                assert not is_string(w, spec), ext


def test_hook_set_examples():
    hs = hook_sets(build_algebra(2, 0, 3))
    assert [m.text for m in hs.elements] == ["gb", "ba", "ag", "h"]
    hs = hook_sets(build_algebra(1, 0, 3))
    assert [m.text for m in hs.elements] == ["bagba", "gbagb", "agbag", "1_1"]


def naive_flags(s: Word, spec):
    """Peak/deep flags from direct string-validity scans of one-letter extensions."""
    def ok(text):
        try:
            return is_string(parse_word(text, spec), spec)
        except ValueError:
            return False

    d, inv = spec.arrow_names, spec.arrow_names.upper()
    x = s.letters
    return {
        "starts_on_peak": not any(ok(x + z) for z in d),
        "starts_in_deep": not any(ok(x + z) for z in inv),
        "ends_on_peak": not any(ok(z + x) for z in inv),
        "ends_in_deep": not any(ok(z + x) for z in d),
    }


@pytest.mark.parametrize("i,c", ALL)
def test_peak_deep_matches_naive_scan(i, c):
    spec = build_algebra(i, c, 3)
    for w in enumerate_words(spec, "strings", 6)[2:]:
        for v in (w, w.inverse()):
            assert peak_deep_status(v, spec) == naive_flags(v, spec), v.text


def test_peak_deep_examples():
    spec = build_algebra(2, 0, 3)
    st = peak_deep_status("ba", spec)
    assert st == naive_flags(Word("ba"), spec)
    # both "baa" and "bag" are forbidden, so no direct letter continues "ba"
    assert st["starts_on_peak"] and not st["starts_in_deep"]
    for sign in (1, -1):
        assert not any(peak_deep_status(empty(1, sign), spec).values())
    for m in hook_sets(spec).elements:
        if not m.is_empty:
            st = peak_deep_status(m, spec)
            assert st["starts_on_peak"] and st["ends_in_deep"]


def test_empty_words_need_orientation():
    spec = build_algebra(2, 0, 3)
    with pytest.raises(HookError):
        add_hook(empty(0), "right", spec)
    for u in (0, 1):
        outs = {x for x in spec.arrow_names if can_append(empty(u, 1), x, spec)}
        outs_neg = {x for x in spec.arrow_names if can_append(empty(u, -1), x, spec)}
        assert not outs & outs_neg


# --- hooks and cohooks -------------------------------------------------------


def test_right_hook_of_b():
    spec = build_algebra(2, 0, 3)
    h = add_hook("b", "right", spec)
    assert h.text.startswith("ba")
    tail = h.text[2:]
    assert tail.isupper() or not tail
    m = Word(tail[::-1].swapcase()) if tail else None
    assert m is None or hook_sets(spec).contains(m)
    assert is_string(h, spec)


def test_hooks_of_s1_depend_on_orientation():
    spec = build_algebra(2, 0, 3)
    a = add_hook(empty(1, 1), "right", spec)
    b = add_hook(empty(1, -1), "right", spec)
    assert a != b
    assert (a.text, b.text) == ("hGA", "bAB")


@pytest.mark.parametrize("i,c", ALL)
def test_delete_undoes_add(i, c):
    spec = build_algebra(i, c, 3)
    seen = 0
    for w in enumerate_words(spec, "strings", 5):
        for s in oriented(w):
            for side in ("right", "left"):
                st = peak_deep_status(s, spec)
                peak = st["starts_on_peak"] if side == "right" else st["ends_on_peak"]
                deep = st["starts_in_deep"] if side == "right" else st["ends_in_deep"]
                if not peak:
                    h = add_hook(s, side, spec)
                    assert is_string(h, spec)
                    assert delete_hook(h, side, spec).unoriented() == s.unoriented()
                    seen += 1
                else:
                    with pytest.raises(HookError, match="on-peak"):
                        add_hook(s, side, spec)
                if not deep:
                    cw = add_cohook(s, side, spec)
                    assert is_string(cw, spec)
                    assert delete_cohook(cw, side, spec).unoriented() == s.unoriented()
                    seen += 1
                else:
                    with pytest.raises(HookError, match="in-deep"):
                        add_cohook(s, side, spec)
    assert seen > 50


@pytest.mark.parametrize("i,c", ALL)
def test_hook_inclusions_injective_cohook_projections_surjective(i, c):
    spec = build_algebra(i, c, 3)
    for w in enumerate_words(spec, "strings", 4):
        src = ModuleLabel("string", w.text)
        for nb, direction, kind in ar_neighbors(src, spec):
            a, b = (src, nb) if direction == "out" else (nb, src)
            ma, mb = a.build(spec, F2), b.build(spec, F2)
            maps = [graph_map(a.word, b.word, t, spec, F2) for t in admissible_triples(a.word, b.word, spec)]
            ranks = [sum(F.rank(F2, f[v]) for v in (0, 1)) for f in maps]
            if kind == HOOK:
                assert ma.dim in ranks, (a, b)
            else:
                assert kind == COHOOK and mb.dim in ranks, (a, b)


def test_neighbors_deterministic_and_s0_reaches_c1():
    spec = build_algebra(2, 1, 3)
    s0 = ModuleLabel("string", "1_0")
    n1 = ar_neighbors(s0, spec)
    assert n1 == ar_neighbors(s0, spec)
    c1 = canonical_label(ModuleLabel("string", named_family("C", spec, 1).text), F2)
    assert c1 in {canonical_label(x, F2) for x, d, _ in n1 if d == "out"}


def test_band_neighbors_step_multiplicity():
    spec = build_algebra(2, 1, 3)
    lab = ModuleLabel("band", "aBG", 2, 1)
    ms = sorted({n.m for n, _, _ in ar_neighbors(lab, spec)})
    assert ms == [2]
    ms = sorted({n.m for n, _, _ in ar_neighbors(lab._replace(m=2), spec)})
    assert ms == [1, 3]


# --- components ---------------------------------------------------------------


def _tau_violations(g):
    inner = {lab for lab, n in g.nodes.items() if n.layer < g.radius - 1}
    bad = []
    for a, b, _ in g.edges:
        if a in inner and b in inner:
            ta, tb = g.tau[a], g.tau[b]
            if ta in g.nodes and tb in g.nodes and not g.has_edge(ta, tb):
                bad.append((a, b))
    return bad


def test_tube_from_s001_family2():
    spec = build_algebra(2, 1, 3)
    g = grow_component(ModuleLabel("string", "ba"), 4, spec, F4)
    assert g.tube_rank == 3 and g.classification == "tube(rank 3)"
    assert all(t in g.nodes for t in g.tau.values())
    assert not _tau_violations(g)
    boundary = [lab for lab in g.nodes if lab.kind == "string" and len([e for e in g.edges if e[1] == lab]) == 1]
    assert ModuleLabel("string", "ba") in boundary


@pytest.mark.parametrize("c", [0, 1])
def test_tube_from_s1_family1(c):
    spec = build_algebra(1, c, 3)
    g = grow_component(ModuleLabel("string", "1_1"), 3, spec, F2)
    assert g.tube_rank == 3


def test_band_tube_rank_one():
    spec = build_algebra(2, 0, 3)
    for lam in F4.nonzero():
        g = grow_component(ModuleLabel("band", s010_band(spec).text, lam, 1), 2, spec, F4)
        assert g.tube_rank == 1
        assert g.tau[ModuleLabel("band", "aBG", lam, 1)] == ModuleLabel("band", "aBG", lam, 1)


def test_s0_component_pattern():
    spec = build_algebra(2, 1, 3)
    g = grow_component(ModuleLabel("string", "1_0"), 2, spec, F4)
    assert g.tube_rank is None and g.classification.startswith("ZA")
    c1 = canonical_label(ModuleLabel("string", named_family("C", spec, 1).text), F2)
    c2 = canonical_label(ModuleLabel("string", named_family("C", spec, 2).text), F2)
    assert c1 in g.nodes and c2 in g.nodes
    assert g.has_edge(ModuleLabel("string", "1_0"), c1) and g.has_edge(c1, c2)
    assert not _tau_violations(g)


def test_radius_zero_and_negative():
    spec = build_algebra(2, 0, 3)
    g = grow_component(ModuleLabel("string", "ba"), 0, spec, F2)
    assert list(g.nodes) == [ModuleLabel("string", "ba")] and not g.edges
    with pytest.raises(HookError):
        grow_component(ModuleLabel("string", "ba"), -1, spec, F2)


def test_omega_period_examples():
    for c in (0, 1):
        spec = build_algebra(2, c, 3)
        assert omega_period(string_module("ba", spec, F2), 6) == 3
        band = s010_band(spec)
        for lam in (2, 3):
            assert omega_period(band_module(band, lam, 1, spec, F4), 4) == (1 if c == 0 else 2)
    assert omega_period(string_module("1_0", build_algebra(2, 1, 3), F2), 6) is None


# --- serialization --------------------------------------------------------------


def test_dot_parses_and_is_deterministic():
    spec = build_algebra(2, 1, 3)
    g = grow_component(ModuleLabel("string", "ba"), 3, spec, F4)
    text = g.to_dot()
    assert text == grow_component(ModuleLabel("string", "ba"), 3, spec, F4).to_dot()
    (graph,) = pydot.graph_from_dot_data(text)
    assert len(graph.get_nodes()) == len(g.nodes)
    edges = graph.get_edges()
    solid = [e for e in edges if e.get("style") == "solid"]
    dashed = [e for e in edges if e.get("style") == "dashed"]
    assert len(solid) == len(g.edges)
    assert len(dashed) == sum(1 for a, b in g.tau.items() if b in g.nodes)


def test_json_graph():
    spec = build_algebra(2, 0, 3)
    g = grow_component(ModuleLabel("string", "1_0"), 2, spec, F2)
    data = json.loads(json.dumps(g.to_json()))
    assert data["seed"] == "M(1_0)"
    assert len(data["nodes"]) == len(g.nodes) and len(data["edges"]) == len(g.edges)
    layers = [n["layer"] for n in data["nodes"]]
    assert layers == sorted(layers)


def test_can_prepend_is_mirror_of_append():
    spec = build_algebra(1, 0, 3)
    for w in enumerate_words(spec, "strings", 4)[2:]:
        for y in spec.arrow_names + spec.arrow_names.upper():
            assert can_prepend(w, y, spec) == can_append(w.inverse(), y.swapcase(), spec)
