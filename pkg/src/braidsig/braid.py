"""
Positive braid words and their twist-region structure.

A positive braid on ``n`` strings is stored as the sequence of generator
indices ``i`` (meaning sigma_i, 1 <= i <= n-1). Twist regions are maximal
powers sigma_i^k; the closure is read cyclically, so the first and last
regions may belong together.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BraidParseError",
    "BraidWord",
    "SyllableWord",
    "Permutation",
    "parse_braid",
    "syllables",
    "normalize_far_commutation",
    "twist_number",
    "permutation",
    "components",
    "is_sufficiently_complicated",
    "hyperbolicity_criterion",
    "format_syllables",
]


class BraidParseError(ValueError):
    """Raised for text that is not a well-formed positive braid word."""


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 2:
            raise ValueError(f"a braid needs at least 2 strands, got {self.strands}")
        for x in self.letters:
            if not 1 <= x <= self.strands - 1:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_syllables(syllables(self, cyclic=False).syllables)

    @property
    def columns(self) -> range:
        return range(1, self.strands)

    def used_columns(self) -> set[int]:
        return set(self.letters)

    def unused_columns(self) -> list[int]:
        used = self.used_columns()
        return [i for i in self.columns if i not in used]

    def rotate(self, k: int) -> "BraidWord":
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])


@dataclass(frozen=True)
class SyllableWord:
    """Run-length form of a braid word: a list of (column, exponent) pairs."""

    strands: int
    syllables: tuple[tuple[int, int], ...]
    cyclic: bool = True

    def __post_init__(self):
        object.__setattr__(self, "syllables", tuple((int(c), int(k)) for c, k in self.syllables))
        for c, k in self.syllables:
            if not 1 <= c <= self.strands - 1 or k < 1:
                raise ValueError(f"bad syllable ({c}, {k}) on {self.strands} strands")

    def __len__(self):
        return len(self.syllables)

    def __str__(self):
        return format_syllables(self.syllables)

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.syllables)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.syllables)

    def expand(self) -> BraidWord:
        letters = [c for c, k in self.syllables for _ in range(k)]
        return BraidWord(self.strands, tuple(letters))


def format_syllables(sylls: Iterable[tuple[int, int]]) -> str:
    return " ".join(str(c) if k == 1 else f"{c}^{k}" for c, k in sylls)


_TOKEN = re.compile(r"^([0-9]+)(?:\^([0-9]+))?$")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """
    Parse a word such as ``"1^3 2 2 1^3"``.

    Tokens are separated by spaces or tabs; ``i^k`` stands for k copies of
    generator i. Without ``strands`` the braid index is taken to be one more
    than the largest generator. Blank text is the empty braid and then
    ``strands`` is required.
    """
    tokens = [tok for tok in re.split(r"[ \t]+", text.strip(" \t")) if tok]
    letters: list[int] = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise BraidParseError(f"malformed token {tok!r}")
        idx = int(m.group(1))
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if idx < 1:
            raise BraidParseError(f"generator index must be >= 1 in {tok!r}")
        if exp < 1:
            raise BraidParseError(f"exponent must be >= 1 in {tok!r}")
        letters.extend([idx] * exp)
    if strands is None:
        if not letters:
            raise BraidParseError("empty word needs an explicit strand count")
        strands = max(letters) + 1
    if strands < 2:
        raise BraidParseError(f"strand count must be >= 2, got {strands}")
    bad = [x for x in letters if x >= strands]
    if bad:
        raise BraidParseError(f"generator {bad[0]} needs more than {strands} strands")
    return BraidWord(strands, tuple(letters))


def syllables(w: BraidWord, cyclic: bool = True) -> SyllableWord:
    runs: list[list[int]] = []
    for x in w.letters:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    if cyclic and len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs[0][1] += runs.pop()[1]
    return SyllableWord(w.strands, tuple(map(tuple, runs)), cyclic)


def normalize_far_commutation(s: SyllableWord) -> SyllableWord:
    """
    Merge same-column syllables that are separated only by far-commuting
    syllables (column distance >= 2).

    In cyclic mode the scan wraps around the end of the word. The merged
    syllable keeps the position of the earlier one.
    """
    sy = [list(p) for p in s.syllables]
    changed = True
    while changed and len(sy) > 1:
        changed = False
        t = len(sy)
        for a in range(t):
            col = sy[a][0]
            reach = range(1, t) if s.cyclic else range(1, t - a)
            for step in reach:
                b = (a + step) % t
                if sy[b][0] == col:
                    sy[a][1] += sy[b][1]
                    del sy[b]
                    changed = True
                    break
                if abs(sy[b][0] - col) < 2:
                    break
            if changed:
                break
    return SyllableWord(s.strands, tuple(map(tuple, sy)), s.cyclic)


def _cyclic_syllable_count(letters: Sequence[int]) -> int:
    if not letters:
        return 0
    changes = sum(1 for k in range(len(letters)) if letters[k] != letters[k - 1])
    return max(changes, 1)


def _min_rotation(letters: tuple[int, ...]) -> tuple[int, ...]:
    if not letters:
        return letters
    return min(letters[k:] + letters[:k] for k in range(len(letters)))


def twist_number(w: BraidWord, exhaustive: bool = False, max_states: int = 500_000) -> int:
    """
    Number of twist regions of the closure.

    The default is the syllable count of the greedy cyclic far-commutation
    normal form. ``exhaustive=True`` instead searches every word reachable
    by cyclic rotation and far commutation of adjacent letters and returns
    the least cyclic syllable count seen; this is meant for short words and
    raises ``RuntimeError`` once more than ``max_states`` rotation classes
    have been visited.
    """
    if not exhaustive:
        return len(normalize_far_commutation(syllables(w, cyclic=True)))

    start = _min_rotation(w.letters)
    seen = {start}
    queue = deque([start])
    best = _cyclic_syllable_count(start)
    c = len(start)
    while queue:
        cur = queue.popleft()
        best = min(best, _cyclic_syllable_count(cur))
        if best <= 1:
            break
        for k in range(c if c > 2 else 0):
            x, y = cur[k], cur[(k + 1) % c]
            if abs(x - y) < 2:
                continue
            nxt = list(cur)
            nxt[k], nxt[(k + 1) % c] = y, x
            nxt = _min_rotation(tuple(nxt))
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_states:
                    raise RuntimeError(f"twist-number search exceeded {max_states} states")
                queue.append(nxt)
    return best


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[p - 1]`` is the image of p."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for p in range(1, len(self.images) + 1):
            if p in seen:
                continue
            cyc = []
            q = p
            while q not in seen:
                seen.add(q)
                cyc.append(q)
                q = self.images[q - 1]
            out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


def permutation(w: BraidWord) -> Permutation:
    # where[s] is the current position of the strand that started at position s + 1
    where = list(range(1, w.strands + 1))
    for i in w.letters:
        for s, p in enumerate(where):
            if p == i:
                where[s] = i + 1
            elif p == i + 1:
                where[s] = i
    return Permutation(tuple(where))


def components(w: BraidWord) -> int:
    """Number of components of the closure."""
    return permutation(w).cycle_count()


def _as_normal_form(s: SyllableWord | BraidWord) -> SyllableWord:
    if isinstance(s, BraidWord):
        s = syllables(s, cyclic=True)
    elif not s.cyclic:
        s = syllables(s.expand(), cyclic=True)
    return normalize_far_commutation(s)


def is_sufficiently_complicated(s: SyllableWord | BraidWord) -> bool:
    """Every twist region of the cyclic normal form has exponent >= 3."""
    s = _as_normal_form(s)
    return len(s) > 0 and all(k >= 3 for k in s.exponents)


def hyperbolicity_criterion(s: SyllableWord | BraidWord) -> bool:
    """
    True iff every column 1..n-1 carries at least two twist regions, some
    two of which are not cyclically adjacent.
    """
    s = _as_normal_form(s)
    t = len(s)
    if t == 0:
        return False
    for col in range(1, s.strands):
        pos = [k for k, c in enumerate(s.columns) if c == col]
        if len(pos) < 2:
            return False
        if not any((b - a) % t not in (1, t - 1) for a in pos for b in pos if a < b):
            return False
    return True
