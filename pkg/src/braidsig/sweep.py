"""
Enumeration of braid families and verification sweeps.

Families are generated as syllable sequences: a cyclic column pattern with
no two neighbouring columns equal, times an exponent per syllable.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .bounds import PRINTED, Constants
from .braid import BraidWord, SyllableWord, hyperbolicity_criterion, is_sufficiently_complicated, normalize_far_commutation
from .report import InvariantReport, invariant_report

__all__ = [
    "CSV_COLUMNS",
    "FamilyTooLargeError",
    "EnumerationSpec",
    "enumerate_words",
    "random_words",
    "SweepReport",
    "verify_sweep",
    "emit",
    "csv_text",
    "json_text",
]

CSV_COLUMNS = (
    "word", "strands", "letters", "components", "b1", "sigma", "delta_sigma", "twist",
    "dots", "subword_count", "thm3_ok", "cut_ok", "vol1_lo", "vol1_hi", "vol2_lo", "vol2_hi",
)


class FamilyTooLargeError(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationSpec:
    strands: tuple[int, int] = (3, 3)
    syllable_counts: tuple[int, int] = (1, 4)
    exponents: tuple[int, ...] = (3,)
    cyclic_dedup: bool = True
    minimal_only: bool = True
    require_sufficiently_complicated: bool = False
    require_hyperbolicity: bool = False
    limit: Optional[int] = None
    max_family: int = 5_000_000

    def __post_init__(self):
        lo, hi = self.strands
        if not 2 <= lo <= hi:
            raise ValueError(f"bad strand range {self.strands}")
        lo, hi = self.syllable_counts
        if not 0 <= lo <= hi:
            raise ValueError(f"bad syllable range {self.syllable_counts}")
        if not self.exponents or min(self.exponents) < 1:
            raise ValueError(f"exponents must be >= 1, got {self.exponents}")

    def raw_size(self) -> int:
        """Number of (pattern, exponent) pairs before any filtering."""
        total = 0
        e = len(set(self.exponents))
        for n in range(self.strands[0], self.strands[1] + 1):
            k = n - 1
            for t in range(self.syllable_counts[0], self.syllable_counts[1] + 1):
                # proper colourings of a t-cycle with k colours
                cyc = 1 if t == 0 else k if t == 1 else (k - 1) ** t + (-1) ** t * (k - 1)
                total += cyc * e ** t
        return total

    def accepts(self, s: SyllableWord) -> bool:
        if self.require_sufficiently_complicated and not is_sufficiently_complicated(s):
            return False
        if self.require_hyperbolicity and not hyperbolicity_criterion(s):
            return False
        return True


def _patterns(columns: int, t: int) -> Iterator[tuple[int, ...]]:
    if t == 0:
        yield ()
        return
    for pat in itertools.product(range(1, columns + 1), repeat=t):
        if t == 1 or all(pat[k] != pat[k - 1] for k in range(t)):
            yield pat


def _is_min_rotation(seq: tuple) -> bool:
    return all(seq <= seq[k:] + seq[:k] for k in range(1, len(seq)))


def enumerate_words(spec: EnumerationSpec) -> Iterator[SyllableWord]:
    """
    All syllable words of the family in a fixed order: by strands, then
    syllable count, then column pattern and exponents lexicographically.
    """
    if spec.raw_size() > spec.max_family:
        raise FamilyTooLargeError(f"family has {spec.raw_size()} raw members, cap is {spec.max_family}")
    exps = sorted(set(spec.exponents))
    emitted = 0
    for n in range(spec.strands[0], spec.strands[1] + 1):
        for t in range(spec.syllable_counts[0], spec.syllable_counts[1] + 1):
            if t == 0:
                continue
            for pat in _patterns(n - 1, t):
                for ex in itertools.product(exps, repeat=t):
                    seq = tuple(zip(pat, ex))
                    if spec.cyclic_dedup and not _is_min_rotation(seq):
                        continue
                    s = SyllableWord(n, seq, cyclic=True)
                    if spec.minimal_only and len(normalize_far_commutation(s)) != t:
                        continue
                    if not spec.accepts(s):
                        continue
                    yield s
                    emitted += 1
                    if spec.limit is not None and emitted >= spec.limit:
                        return


def random_words(spec: EnumerationSpec, count: int, seed: int) -> list[SyllableWord]:
    """Uniform column pattern and exponents; filters of ``spec`` apply, duplicates allowed."""
    rng = random.Random(seed)
    exps = sorted(set(spec.exponents))
    out: list[SyllableWord] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count + 1000:
            raise RuntimeError("random family filters reject almost every word")
        n = rng.randint(*spec.strands)
        t = rng.randint(max(spec.syllable_counts[0], 1), max(spec.syllable_counts[1], 1))
        pat = [rng.randint(1, n - 1) for _ in range(t)]
        if t > 1 and any(pat[k] == pat[k - 1] for k in range(t)):
            continue
        s = SyllableWord(n, tuple((c, rng.choice(exps)) for c in pat))
        if spec.minimal_only and len(normalize_far_commutation(s)) != t:
            continue
        if spec.accepts(s):
            out.append(s)
    return out


@dataclass
class SweepReport:
    rows: list[InvariantReport]
    failures: dict[str, list[str]] = field(default_factory=dict)
    diagnostics: dict[str, list[str]] = field(default_factory=dict)
    min_ratio: Optional[Fraction] = None
    max_ratio: Optional[Fraction] = None
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def summary(self) -> str:
        checked = sum(1 for r in self.rows if r.in_scope)
        lines = [f"{len(self.rows)} words, {checked} satisfy the hypotheses"]
        if self.min_ratio is not None:
            lines.append(f"t/defect in [{self.min_ratio}, {self.max_ratio}] (allowed [1/2, 21/2])")
        for name, words in self.failures.items():
            if words:
                lines.append(f"FAIL {name}: {len(words)} word(s), e.g. {words[0]}")
        for name, words in self.diagnostics.items():
            if words:
                lines.append(f"note {name}: {len(words)} word(s), e.g. {words[0]}")
        lines.append("all assertions hold" if self.ok else "assertion failures")
        return "\n".join(lines)


def _report(args) -> InvariantReport:
    strands, letters, exhaustive = args
    return invariant_report(BraidWord(strands, letters), exhaustive_twist=exhaustive)


def _sort_key(r: InvariantReport):
    return (r.strands, r.twist, r.letters, r.word)


def verify_sweep(
    words: Sequence[SyllableWord | BraidWord],
    jobs: int = 1,
    exhaustive_twist: bool = False,
    constants: Constants = PRINTED,
) -> SweepReport:
    """
    Reports for every word plus the assertions on words satisfying the
    hypotheses (sufficiently complicated, hyperbolicity criterion). Words
    outside the hypotheses are reported and only checked for
    -b1 <= sigma <= b1.
    """
    start = time.perf_counter()
    items = []
    for s in words:
        w = s.expand() if isinstance(s, SyllableWord) else s
        items.append((w.strands, w.letters, exhaustive_twist))
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_report, items, chunksize=max(1, len(items) // (8 * jobs))))
    else:
        rows = [_report(it) for it in items]
    rows.sort(key=_sort_key)

    failures: dict[str, list[str]] = {k: [] for k in (
        "signature_range", "thm3", "cut_bound", "weak_cut_bound", "cut_boundary_defect",
        "certificate_lower", "certificate_defect", "three_braid", "bounds_consistency", "hyperbolic_defect_zero",
    )}
    diagnostics: dict[str, list[str]] = {k: [] for k in ("dots_below_twist", "three_braid_better_estimate")}
    ratios = []
    v3, v8 = constants.v3, constants.v8
    for r in rows:
        if not -r.b1 <= r.sigma <= r.b1:
            failures["signature_range"].append(r.word)
        if not r.in_scope:
            continue
        cb = r.cut_bound
        cert = r.certificate
        checks = {
            "thm3": r.thm3_ok,
            "cut_bound": cb.ok,
            "weak_cut_bound": cb.weak_ok,
            "cut_boundary_defect": cb.boundary_ok,
            "certificate_lower": cert.ok_lower,
            "certificate_defect": cert.ok_defect,
            "three_braid": r.three_braid_ok is not False,
            "hyperbolic_defect_zero": r.flags["consistent"],
            "bounds_consistency": (v8 * r.delta_sigma / 3 <= 2 * v8 * r.twist / 3
                                   and 10 * v3 * (r.twist - 1) < 105 * v3 * r.delta_sigma),
        }
        for name, ok in checks.items():
            if not ok:
                failures[name].append(r.word)
        if not cert.ok_dots:
            diagnostics["dots_below_twist"].append(r.word)
        if r.strands == 3 and cert.count < Fraction(r.twist - 3, 4):
            diagnostics["three_braid_better_estimate"].append(r.word)
        if r.twist_ratio is not None:
            ratios.append(r.twist_ratio)
    return SweepReport(
        rows=rows,
        failures=failures,
        diagnostics=diagnostics,
        min_ratio=min(ratios) if ratios else None,
        max_ratio=max(ratios) if ratios else None,
        wall_time=time.perf_counter() - start,
    )


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def csv_row(r: InvariantReport) -> dict:
    v1 = r.thm1.rounded() if r.thm1 else (None, None)
    v2 = r.thm2.rounded() if r.thm2 else (None, None)
    return {
        "word": r.word,
        "strands": r.strands,
        "letters": r.letters,
        "components": r.components,
        "b1": r.b1,
        "sigma": r.sigma,
        "delta_sigma": r.delta_sigma,
        "twist": r.twist,
        "dots": r.certificate.dots,
        "subword_count": r.certificate.count,
        "thm3_ok": r.thm3_ok,
        "cut_ok": r.cut_ok,
        "vol1_lo": v1[0],
        "vol1_hi": v1[1],
        "vol2_lo": v2[0],
        "vol2_hi": v2[1],
    }


def csv_text(rows: Sequence[InvariantReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        d = csv_row(r)
        writer.writerow([_fmt(d[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def json_text(rows: Sequence[InvariantReport]) -> str:
    out = []
    for r in rows:
        d = csv_row(r)
        out.append({c: (float(d[c]) if c.startswith("vol") and d[c] is not None else d[c]) for c in CSV_COLUMNS})
    return json.dumps(out, indent=2) + "\n"


def emit(report: SweepReport | Sequence[InvariantReport], fmt: str = "csv", path: Optional[str] = None) -> str:
    rows = report.rows if isinstance(report, SweepReport) else list(report)
    if fmt == "csv":
        text = csv_text(rows)
    elif fmt == "json":
        text = json_text(rows)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text
