"""
Combinatorial certificate for the lower bound of the twist number by the
signature defect.

Dots mark neighbouring twist regions in adjacent columns; strings are
split into three classes by index mod 3 and the best class is searched for
disjoint alternating runs sigma_i^a sigma_{i+1}^b sigma_i^c sigma_{i+1}^d
whose central string i+1 belongs to the class. Each run spans a subsurface
with signature defect two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braid import (
    BraidWord,
    SyllableWord,
    hyperbolicity_criterion,
    is_sufficiently_complicated,
    normalize_far_commutation,
    syllables,
)
from .bounds import signature_defect

__all__ = [
    "Dot",
    "StringClass",
    "Occurrence",
    "SubwordCertificate",
    "CertificateCheck",
    "PreconditionError",
    "place_dots",
    "string_classes",
    "best_class",
    "extract_subwords",
    "certificate_check",
    "three_braid_bound",
]


class PreconditionError(ValueError):
    pass


def _normal_form(s: SyllableWord | BraidWord) -> SyllableWord:
    if isinstance(s, BraidWord):
        s = syllables(s, cyclic=True)
    return normalize_far_commutation(s)


@dataclass(frozen=True)
class Dot:
    between: tuple[int, int]
    string: int


@dataclass(frozen=True)
class StringClass:
    j: int
    strings: tuple[int, ...]
    dots: int


@dataclass(frozen=True)
class Occurrence:
    """
    One alternating run. ``groups`` holds, for each of the four factors,
    the syllable positions that make it up (a factor can absorb several
    syllables once the other columns are ignored).
    """

    central: int
    columns: tuple[int, int, int, int]
    groups: tuple[tuple[int, ...], ...]
    exponents: tuple[int, int, int, int]

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(p for g in self.groups for p in g)


@dataclass(frozen=True)
class SubwordCertificate:
    j: int
    occurrences: tuple[Occurrence, ...]

    @property
    def count(self) -> int:
        return len(self.occurrences)

    def is_disjoint(self) -> bool:
        seen: set[int] = set()
        for occ in self.occurrences:
            ps = set(occ.positions)
            if ps & seen:
                return False
            seen |= ps
        return True


def place_dots(s: SyllableWord | BraidWord, along_strings: bool = False) -> list[Dot]:
    """
    One dot per cyclically adjacent pair of twist regions in neighbouring
    columns, on their shared string.

    With ``along_strings=True`` adjacency is read along each string m
    instead: the regions touching m (columns m-1 and m) are listed in
    cyclic order and a dot goes between consecutive ones whose columns
    differ.
    """
    s = _normal_form(s)
    cols = s.columns
    t = len(cols)
    dots: list[Dot] = []
    if t < 2:
        return dots
    if not along_strings:
        for k in range(t):
            a, b = cols[k], cols[(k + 1) % t]
            if abs(a - b) == 1:
                dots.append(Dot((k, (k + 1) % t), max(a, b)))
        return dots
    for m in range(2, s.strands):
        touching = [k for k in range(t) if cols[k] in (m - 1, m)]
        for a, b in zip(touching, touching[1:] + touching[:1]):
            if len(touching) > 1 and cols[a] != cols[b]:
                dots.append(Dot((a, b), m))
    return dots


def string_classes(dots: list[Dot], strands: int) -> list[StringClass]:
    out = []
    for j in range(3):
        strings = tuple(m for m in range(1, strands + 1) if m % 3 == j)
        out.append(StringClass(j, strings, sum(1 for d in dots if d.string % 3 == j)))
    return out


def best_class(dots: list[Dot], strands: int) -> StringClass:
    """Class carrying the most dots, smallest j on ties."""
    classes = string_classes(dots, strands)
    return max(classes, key=lambda c: (c.dots, -c.j))


def _runs_for_string(s: SyllableWord, m: int, strict: bool) -> list[Occurrence]:
    i = m - 1
    if i < 1 or i + 1 > s.strands - 1:
        return []
    t = len(s)
    # cyclic stream of [column, positions, exponent] groups and None for blockers
    stream: list = []
    for p, (col, k) in enumerate(s.syllables):
        if col in (i, i + 1):
            stream.append([col, [p], k])
        elif strict and col in (i - 1, i + 2):
            stream.append(None)
    if not any(stream):
        return []

    def merged(items):
        out = []
        for it in items:
            if out and out[-1][0] == it[0]:
                out[-1][1] = out[-1][1] + it[1]
                out[-1][2] += it[2]
            else:
                out.append([it[0], list(it[1]), it[2]])
        return out

    segments = []
    if None in stream:
        # linear segments between blockers, read cyclically from just after one
        cut = stream.index(None)
        rotated = stream[cut + 1:] + stream[:cut + 1]
        seg: list = []
        for it in rotated:
            if it is None:
                if seg:
                    segments.append(merged(seg))
                seg = []
            else:
                seg.append(it)
        if seg:
            segments.append(merged(seg))
    else:
        groups = merged(stream)
        if len(groups) > 1 and groups[0][0] == groups[-1][0]:
            last = groups.pop()
            groups[0] = [last[0], last[1] + groups[0][1], last[2] + groups[0][2]]
        if len(groups) >= 4:
            # start after the largest gap between consecutive groups, lowest position on ties
            def gap(g):
                prev = groups[g - 1][1][-1]
                return (groups[g][1][0] - prev) % t

            start = max(range(len(groups)), key=lambda g: (gap(g), -groups[g][1][0]))
            groups = groups[start:] + groups[:start]
        segments.append(groups)

    occs = []
    for seg in segments:
        for r in range(len(seg) // 4):
            block = seg[4 * r: 4 * r + 4]
            occs.append(Occurrence(
                central=m,
                columns=tuple(g[0] for g in block),
                groups=tuple(tuple(g[1]) for g in block),
                exponents=tuple(g[2] for g in block),
            ))
    return occs


def extract_subwords(s: SyllableWord | BraidWord, cls: StringClass, strict: bool = False) -> SubwordCertificate:
    """
    Disjoint alternating runs with central string in ``cls``.

    For each central string m = i+1 the cyclic syllable sequence is read on
    columns {i, i+1} only and consecutive runs of four alternating factors
    are taken greedily. Columns other than i, i+1 are ignored, since the
    Seifert form on the column-i and column-(i+1) bricks only depends on the
    relative order of those crossings. With ``strict=True`` syllables in
    columns i-1 and i+2 instead break runs; this finds fewer runs and on
    some 4-braids none at all.
    """
    s = _normal_form(s)
    occs: list[Occurrence] = []
    for m in cls.strings:
        occs.extend(_runs_for_string(s, m, strict))
    return SubwordCertificate(cls.j, tuple(occs))


@dataclass(frozen=True)
class CertificateCheck:
    count: int
    twist: int
    delta_sigma: int
    dots: int
    applicable: bool

    @property
    def ok_lower(self) -> bool:
        return 21 * self.count >= self.twist

    @property
    def ok_defect(self) -> bool:
        return 2 * self.count <= self.delta_sigma

    @property
    def ok_dots(self) -> bool:
        return self.dots >= self.twist

    def __iter__(self):
        return iter((self.count, self.ok_lower, self.ok_defect))


def certificate_check(w: BraidWord, strict: bool = False) -> CertificateCheck:
    """
    Certificate count with the two inequalities 21 * count >= t and
    2 * count <= defect. ``applicable`` is False for words outside the
    hypotheses (not sufficiently complicated or failing the hyperbolicity
    criterion); their inequalities are reported but not meaningful.
    """
    s = _normal_form(w)
    dots = place_dots(s)
    cert = extract_subwords(s, best_class(dots, s.strands), strict=strict)
    return CertificateCheck(
        count=cert.count,
        twist=len(s),
        delta_sigma=signature_defect(w),
        dots=len(dots),
        applicable=is_sufficiently_complicated(s) and hyperbolicity_criterion(s),
    )


def three_braid_bound(s: SyllableWord | BraidWord) -> bool:
    """t >= 4 and at least t/7 consecutive alternating runs, for 3-braids."""
    s = _normal_form(s)
    if s.strands != 3:
        raise PreconditionError("three_braid_bound needs a 3-braid")
    if not (hyperbolicity_criterion(s) and is_sufficiently_complicated(s)):
        raise PreconditionError(f"{s} is not a sufficiently complicated braid with hyperbolic closure")
    t = len(s)
    count = len(_runs_for_string(s, 2, strict=True))
    return t >= 4 and count >= Fraction(t, 7)
