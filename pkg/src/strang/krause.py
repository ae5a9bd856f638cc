"""Combinatorial Hom bases between string modules.

A basis of Hom(M(S), M(T)) is indexed by pairs (factor segment of S, image
segment of T) carrying the same string, possibly read backwards.  A segment
[a, a+l] of S (basis vectors z_a..z_{a+l}) is a *factor* segment when the
letter entering on the left is direct and the letter leaving on the right is
inverse, so the complement spans a submodule.  Dually an *image* segment of T
is entered by an inverse letter and left by a direct one.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field as F
from .algebra import AlgebraSpec
from .field import FieldCtx
from .homology import is_intertwiner
from .modules import string_module, string_positions, string_vertices
from .words import Word, parse_word


class KrauseError(RuntimeError):
    pass


@dataclass(frozen=True)
class AdmissibleTriple:
    common: str  # letters of the shared string as read inside S ("" when empty)
    s_pos: int  # first basis index of the segment in S
    t_pos: int  # first basis index of the segment in T
    length: int  # number of letters in the shared string
    reversed: bool  # True when the segment sits in T as the inverse word

    def s_range(self) -> range:
        return range(self.s_pos, self.s_pos + self.length + 1)

    def t_index(self, k: int) -> int:
        """T-basis index hit by the S-basis vector ``s_pos + k``."""
        return self.t_pos + (self.length - k if self.reversed else k)


def _as_word(w, spec) -> Word:
    return parse_word(w, spec) if isinstance(w, str) else w


def _letters(w: Word) -> str:
    return w.letters


def factor_segments(s: Word) -> list[tuple[int, int]]:
    """(start, length) of every factor segment of S."""
    x = _letters(s)
    n = len(x)
    out = []
    for a in range(n + 1):
        if a >= 1 and not x[a - 1].islower():
            continue
        for ln in range(n - a + 1):
            b = a + ln
            if b < n and not x[b].isupper():
                continue
            out.append((a, ln))
    return out


def image_segments(t: Word) -> list[tuple[int, int]]:
    """(start, length) of every segment of T spanning a submodule."""
    y = _letters(t)
    n = len(y)
    out = []
    for c in range(n + 1):
        if c >= 1 and not y[c - 1].isupper():
            continue
        for ln in range(n - c + 1):
            d = c + ln
            if d < n and not y[d].islower():
                continue
            out.append((c, ln))
    return out


def admissible_triples(s, t, spec: AlgebraSpec) -> list[AdmissibleTriple]:
    s, t = _as_word(s, spec), _as_word(t, spec)
    sv, tv = string_vertices(s), string_vertices(t)
    x, y = _letters(s), _letters(t)
    imgs: dict[int, list[int]] = {}
    for c, ln in image_segments(t):
        imgs.setdefault(ln, []).append(c)
    out = []
    for a, ln in factor_segments(s):
        seg = x[a : a + ln]
        inv = seg[::-1].swapcase()
        for c in imgs.get(ln, ()):
            tseg = y[c : c + ln]
            if ln == 0:
                if sv[a] == tv[c]:
                    out.append(AdmissibleTriple("", a, c, 0, False))
                continue
            if tseg == seg:
                out.append(AdmissibleTriple(seg, a, c, ln, False))
            elif tseg == inv:
                out.append(AdmissibleTriple(seg, a, c, ln, True))
    out.sort(key=lambda tr: (tr.length, tr.s_pos, tr.t_pos, tr.reversed))
    return out


def graph_map(s, t, triple: AdmissibleTriple, spec: AlgebraSpec, ctx: FieldCtx, check: bool = True):
    """The 0/1 intertwiner M(S) -> M(T) attached to an admissible triple."""
    s, t = _as_word(s, spec), _as_word(t, spec)
    ps, pt = string_positions(s), string_positions(t)
    ds = [sum(1 for v, _ in ps if v == u) for u in (0, 1)]
    dt = [sum(1 for v, _ in pt if v == u) for u in (0, 1)]
    f = [F.zeros(dt[0], ds[0]), F.zeros(dt[1], ds[1])]
    for k, j in enumerate(triple.s_range()):
        vs, is_ = ps[j]
        vt, it = pt[triple.t_index(k)]
        if vs != vt:
            raise KrauseError("segment vertices disagree")
        f[vs][it, is_] = 1
    fm = (f[0], f[1])
    if check:
        if not is_intertwiner(fm, string_module(s, spec, ctx), string_module(t, spec, ctx)):
            raise KrauseError(f"graph map for {triple} is not a homomorphism")
    return fm


def krause_hom_dim(s, t, spec: AlgebraSpec) -> int:
    return len(admissible_triples(s, t, spec))


def krause_basis(s, t, spec: AlgebraSpec, ctx: FieldCtx) -> list[tuple[np.ndarray, np.ndarray]]:
    return [graph_map(s, t, tr, spec, ctx) for tr in admissible_triples(s, t, spec)]
