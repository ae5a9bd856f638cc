"""Words over arrows and formal inverses; strings, bands and canonical forms.

A word is written as a string of letters: lowercase ``a b g h`` for the
arrows alpha, beta, gamma, eta and uppercase for their formal inverses.
``"aBG"`` is alpha . beta^-1 . gamma^-1, with w_1 the leftmost letter.
Empty words are written ``1_0`` / ``1_1``, optionally with an orientation
suffix ``+`` or ``-``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import ceil
from typing import Iterator, Optional

from .algebra import ARROWS, AlgebraSpec

LETTER_ORDER = "abghABGH"
_KEY = {x: i for i, x in enumerate(LETTER_ORDER)}

# Butler-Ringel style signs on arrow tails/heads.  Two letters meeting at a
# vertex form a valid junction exactly when their signs differ (up to the
# longer zero relations, which are checked separately).
TAIL_SIGN = {"a": 1, "b": -1, "g": 1, "h": -1}
HEAD_SIGN = {"a": 1, "b": -1, "g": -1, "h": 1}


class WordError(ValueError):
    pass


def letter_start(x: str) -> int:
    s, t = ARROWS[x.lower()]
    return s if x.islower() else t


def letter_end(x: str) -> int:
    s, t = ARROWS[x.lower()]
    return t if x.islower() else s


def start_sign(x: str) -> int:
    return TAIL_SIGN[x] if x.islower() else HEAD_SIGN[x.lower()]


def end_sign(x: str) -> int:
    return HEAD_SIGN[x] if x.islower() else TAIL_SIGN[x.lower()]


@dataclass(frozen=True)
class Word:
    letters: str
    vertex: Optional[int] = None  # only for empty words
    sign: int = 0  # orientation of an empty word; 0 = unoriented

    def __post_init__(self):
        if not self.letters and self.vertex not in (0, 1):
            raise WordError("empty word needs a vertex")
        if self.letters and self.vertex is not None:
            object.__setattr__(self, "vertex", None)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def text(self) -> str:
        if self.letters:
            return self.letters
        return f"1_{self.vertex}" + {1: "+", -1: "-", 0: ""}[self.sign]

    def __str__(self) -> str:
        return self.text

    @property
    def start(self) -> int:
        """s(w) = s(w_n)."""
        return self.vertex if self.is_empty else letter_start(self.letters[-1])

    @property
    def end(self) -> int:
        """e(w) = e(w_1)."""
        return self.vertex if self.is_empty else letter_end(self.letters[0])

    def inverse(self) -> "Word":
        if self.is_empty:
            return Word("", self.vertex, -self.sign)
        return Word(self.letters[::-1].swapcase())

    def unoriented(self) -> "Word":
        return Word("", self.vertex) if self.is_empty else self

    def __add__(self, other: "Word") -> "Word":
        if self.is_empty:
            return other
        if other.is_empty:
            return self
        return Word(self.letters + other.letters)

    def right_sign(self) -> int:
        """Sign a letter appended on the right must carry at its end."""
        if self.is_empty:
            return self.sign
        return -start_sign(self.letters[-1])

    def left_sign(self) -> int:
        """Sign a letter prepended on the left must carry at its start."""
        if self.is_empty:
            return -self.sign
        return -end_sign(self.letters[0])


def empty(u: int, sign: int = 0) -> Word:
    return Word("", u, sign)


_EMPTY_RE = re.compile(r"^1_([01])([+-]?)$")
_POW_RE = re.compile(r"\(([^()]*)\)\^(\d+)")


def expand_powers(text: str) -> str:
    prev = None
    while prev != text:
        prev = text
        text = _POW_RE.sub(lambda m: m.group(1) * int(m.group(2)), text)
    return text


def parse_word(text: str, spec: Optional[AlgebraSpec] = None) -> Word:
    """Parse the word grammar; raises ``WordError`` on bad letters or junctions."""
    t = text.strip()
    m = _EMPTY_RE.match(t)
    if m:
        sign = {"+": 1, "-": -1, "": 0}[m.group(2)]
        return Word("", int(m.group(1)), sign)
    t = expand_powers(t)
    allowed = spec.arrow_names if spec is not None else "abgh"
    for j, x in enumerate(t):
        if x.lower() not in allowed or not x.isalpha():
            raise WordError(f"unknown letter {x!r} at position {j + 1}")
    if not t:
        raise WordError("empty input; write 1_0 or 1_1 for empty words")
    for j in range(len(t) - 1):
        if letter_start(t[j]) != letter_end(t[j + 1]):
            raise WordError(f"non-composable junction at position {j + 1}")
    return Word(t)


def _runs_ok(letters: str, spec: AlgebraSpec) -> bool:
    """No direct run of the word or its inverse contains a forbidden path."""
    for run in re.findall(r"[a-z]+", letters):
        if spec.has_forbidden(run):
            return False
    for run in re.findall(r"[A-Z]+", letters):
        if spec.has_forbidden(run[::-1].lower()):
            return False
    return True


def _composable(letters: str) -> bool:
    return all(letter_start(x) == letter_end(y) for x, y in zip(letters, letters[1:]))


def _no_backtrack(letters: str) -> bool:
    return all(x != y.swapcase() for x, y in zip(letters, letters[1:]))


def is_string(w: Word | str, spec: AlgebraSpec) -> bool:
    if isinstance(w, str):
        w = parse_word(w, spec)
    if w.is_empty:
        return True
    x = w.letters
    if any(c.lower() not in spec.arrow_names for c in x):
        return False
    return _composable(x) and _no_backtrack(x) and _runs_ok(x, spec)


def _is_proper_power(x: str) -> bool:
    n = len(x)
    return any(n % k == 0 and x[:k] * (n // k) == x for k in range(1, n))


def band_power_bound(spec: AlgebraSpec, n: int) -> int:
    return ceil(spec.max_forbidden / n) + 1


def is_band(w: Word | str, spec: AlgebraSpec, power: Optional[int] = None) -> bool:
    if isinstance(w, str):
        w = parse_word(w, spec)
    x = w.letters
    if not x:
        return False
    if any(c.lower() not in spec.arrow_names for c in x):
        return False
    if not _composable(x) or letter_start(x[-1]) != letter_end(x[0]):
        return False
    if not _no_backtrack(x + x[0]):
        return False
    if _is_proper_power(x):
        return False
    if x.islower() or x.isupper():
        return False
    m = power if power is not None else band_power_bound(spec, len(x))
    return _runs_ok(x * m, spec)


def word_key(x: str) -> tuple[int, ...]:
    return tuple(_KEY[c] for c in x)


def canonical_string(w: Word | str) -> Word:
    if isinstance(w, str):
        w = parse_word(w)
    if w.is_empty:
        return w
    inv = w.inverse()
    return w if word_key(w.letters) <= word_key(inv.letters) else inv


def canonical_band_flag(w: Word | str) -> tuple[Word, bool]:
    """Canonical rotation/inversion of a band and whether inversion was used."""
    if isinstance(w, str):
        w = parse_word(w)
    x = w.letters
    best, flipped = None, False
    for cand, inv in ((x, False), (x[::-1].swapcase(), True)):
        for j in range(len(cand)):
            r = cand[j:] + cand[:j]
            if best is None or word_key(r) < word_key(best):
                best, flipped = r, inv
    return Word(best), flipped


def canonical_band(w: Word | str) -> Word:
    return canonical_band_flag(w)[0]


def rotation(w: Word, j: int) -> Word:
    x = w.letters
    return Word(x[j:] + x[:j])


def _letters(spec: AlgebraSpec) -> str:
    return spec.arrow_names + spec.arrow_names.upper()


def iter_strings(spec: AlgebraSpec, maxlen: int) -> Iterator[str]:
    """All nonempty string representatives (both orientations), pruned DFS."""
    letters = _letters(spec)
    stack = [x for x in reversed(letters)]
    while stack:
        x = stack.pop()
        yield x
        if len(x) >= maxlen:
            continue
        for y in reversed(letters):
            if letter_start(x[-1]) != letter_end(y) or x[-1] == y.swapcase():
                continue
            z = x + y
            if _runs_ok(z[-spec.max_forbidden - 1 :], spec):
                stack.append(z)


def enumerate_words(spec: AlgebraSpec, kind: str, maxlen: int) -> list[Word]:
    """Sorted, duplicate-free canonical strings or bands of length <= maxlen."""
    if maxlen < 0:
        raise WordError("maxlen must be >= 0")
    if kind == "strings":
        found = {canonical_string(Word(x)).letters for x in iter_strings(spec, maxlen)}
        out = [empty(0), empty(1)]
        out += [Word(x) for x in sorted(found, key=lambda s: (len(s), word_key(s)))]
        return out
    if kind == "bands":
        found = set()
        for x in iter_strings(spec, maxlen):
            if len(x) >= 2 and is_band(Word(x), spec):
                found.add(canonical_band(Word(x)).letters)
        return [Word(x) for x in sorted(found, key=lambda s: (len(s), word_key(s)))]
    raise WordError(f"unknown kind {kind!r}")


NAMED = ("S_0", "S_1", "S_01", "S_10", "S_001", "S_100", "C_010", "C", "Z", "X", "Y", "U_bar", "T_00")


def named_family(name: str, spec: AlgebraSpec, n: int = 1) -> Word:
    """Words for the named modules.  ``C`` takes a signed index ``n``."""
    N = spec.socle_exponent
    i = spec.family
    if name == "S_0":
        return empty(0)
    if name == "S_1":
        return empty(1)
    if name == "S_01":
        return Word("b")
    if name == "S_10":
        return Word("g")
    if name == "S_001":
        return Word("ba")
    if name == "S_100":
        return Word("ag")
    if name == "C_010":
        return Word("BG" + "ABG" * (N - 1)) if i == 1 else Word("BG")
    if name == "C":
        if n == 0:
            return empty(0)
        if i == 1:
            unit = "a" + "BGA" * (N - 1) + "BG" if n > 0 else "A" + "gba" * (N - 1) + "gb"
        else:
            unit = "aBG" if n > 0 else "Agb"
        return Word(unit * abs(n))
    if name == "Z":
        if i != 1:
            raise WordError("Z is defined for family 1")
        return Word("BGA" * (N - 1) + "B")
    if name == "X":
        return Word("ba") if i == 1 else empty(1)
    if name == "Y":
        return empty(1) if i == 1 else Word("ba")
    if name == "U_bar":
        if i != 2:
            raise WordError("U_bar is defined for family 2")
        return Word("h" * (N - 1))
    if name == "T_00":
        return Word("a")
    raise WordError(f"unknown name {name!r}")


def s010_band(spec: AlgebraSpec) -> Word:
    """The band alpha . C_010 underlying S^(lambda)_010."""
    return Word("a" + named_family("C_010", spec).letters)
