"""
Signature defect, twist-number inequalities and hyperbolic volume bounds.

Inequalities between the signature defect and the twist number are decided
exactly with :class:`fractions.Fraction`; volume intervals are floats and
are only rounded for display.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction

from .braid import BraidWord, SyllableWord, normalize_far_commutation, syllables
from .inertia import inertia
from .seifert import bricks, link_inertia, seifert_matrix, surface_data

__all__ = [
    "Constants",
    "VOLUMES",
    "PRINTED",
    "BoundsError",
    "Interval",
    "signature_defect",
    "thm1_bounds",
    "thm2_bounds",
    "thm3_check",
    "CutDecomposition",
    "cut_decomposition",
    "CutBound",
    "cut_bound_check",
    "round4",
]


@dataclass(frozen=True)
class Constants:
    """Volumes of the regular ideal tetrahedron (v3) and octahedron (v8)."""

    v3: float
    v8: float


# v3 = 3 * Lobachevsky(pi/3), v8 = 4 * Catalan's constant
VOLUMES = Constants(v3=1.0149416064096536, v8=3.6638623767088760)
PRINTED = Constants(v3=1.0149, v8=3.6638)


class BoundsError(ValueError):
    """A volume bound was requested outside its hypotheses."""


def round4(x: float) -> Decimal:
    return Decimal(repr(x)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN)


@dataclass(frozen=True)
class Interval:
    """Half-open interval [lo, hi)."""

    lo: float
    hi: float

    def __contains__(self, x: float) -> bool:
        return self.lo <= x < self.hi

    @property
    def empty(self) -> bool:
        return not self.lo < self.hi

    def rounded(self) -> tuple[Decimal, Decimal]:
        return round4(self.lo), round4(self.hi)

    def as_dict(self) -> dict:
        lo, hi = self.rounded()
        return {"lo": float(lo), "hi": float(hi)}


def signature_defect(w: BraidWord) -> int:
    """b1 - sigma of the closure of ``w``."""
    return surface_data(w).betti - link_inertia(w).signature


def thm1_bounds(delta_sigma: int, k: Constants = VOLUMES) -> Interval:
    """Volume interval [v8/3 * defect, 105 v3 * defect) for hyperbolic closures."""
    if delta_sigma < 1:
        raise BoundsError(f"signature defect {delta_sigma} is incompatible with a hyperbolic closure")
    return Interval(k.v8 * delta_sigma / 3, 105 * k.v3 * delta_sigma)


def thm2_bounds(t: int, k: Constants = VOLUMES) -> Interval:
    """Volume interval [2/3 v8 t, 10 v3 (t - 1)) in terms of the twist number."""
    if t < 2:
        raise BoundsError(f"twist number {t} gives an empty interval (closure not hyperbolic)")
    return Interval(2 * k.v8 * t / 3, 10 * k.v3 * (t - 1))


def thm3_check(delta_sigma: int, t: int) -> bool:
    return Fraction(delta_sigma, 2) <= t <= Fraction(21, 2) * delta_sigma


def _normal_form(s: SyllableWord | BraidWord) -> SyllableWord:
    if isinstance(s, BraidWord):
        s = syllables(s, cyclic=True)
    return normalize_far_commutation(s)


@dataclass(frozen=True)
class CutDecomposition:
    """
    Cutting the fibre surface just left of every twist region leaves one
    T(2, k) band surface per region; ``regions`` lists their exponents by
    column.
    """

    regions: dict[int, tuple[int, ...]]
    betti_sub: int
    betti_full: int
    surface_components: int
    boundary_defect: int = field(default=0)

    @property
    def delta_betti(self) -> int:
        return self.betti_full - self.betti_sub

    @property
    def twist(self) -> int:
        return sum(len(v) for v in self.regions.values())


def _region_brick_indices(w: BraidWord, sylls) -> list[int]:
    """Indices (in brick order) of bricks lying inside a single syllable."""
    region_of = []
    for r, (_, k) in enumerate(sylls):
        region_of.extend([r] * k)
    return [n for n, b in enumerate(bricks(w)) if region_of[b.lower] == region_of[b.upper]]


def cut_decomposition(s: SyllableWord | BraidWord) -> CutDecomposition:
    s = _normal_form(s)
    regions: dict[int, list[int]] = {}
    for col, k in s.syllables:
        regions.setdefault(col, []).append(k)
    w = s.expand()
    sd = surface_data(w)
    betti_sub = sum(k - 1 for k in s.exponents)

    # Sigma's Seifert form is the restriction to the intra-region bricks; the
    # expanded normal form keeps every region contiguous in the linear word.
    idx = _region_brick_indices(w, s.syllables)
    sub = seifert_matrix(w).restrict(idx)
    defect = len(idx) - inertia(sub.reported_form()).signature
    assert len(idx) == betti_sub
    return CutDecomposition(
        regions={c: tuple(v) for c, v in sorted(regions.items())},
        betti_sub=betti_sub,
        betti_full=sd.betti,
        surface_components=sd.surface_components,
        boundary_defect=defect,
    )


@dataclass(frozen=True)
class CutBound:
    delta_sigma: int
    delta_betti: int
    twist: int
    boundary_defect: int

    @property
    def ok(self) -> bool:
        """Defect of the closure is at most twice the Betti number lost by cutting."""
        return self.delta_sigma <= 2 * self.delta_betti

    @property
    def boundary_ok(self) -> bool:
        """The cut surface bounds torus links, whose defect vanishes."""
        return self.boundary_defect == 0

    @property
    def weak_ok(self) -> bool:
        return self.delta_sigma <= 2 * self.twist

    def __bool__(self) -> bool:
        return self.ok and self.weak_ok and self.boundary_ok


def cut_bound_check(w: BraidWord) -> CutBound:
    cut = cut_decomposition(w)
    return CutBound(
        delta_sigma=signature_defect(w),
        delta_betti=cut.delta_betti,
        twist=cut.twist,
        boundary_defect=cut.boundary_defect,
    )

