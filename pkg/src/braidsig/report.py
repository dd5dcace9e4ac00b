"""All invariants of one braid word gathered into a single record."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import (
    VOLUMES,
    BoundsError,
    Constants,
    CutBound,
    CutDecomposition,
    Interval,
    cut_decomposition,
    thm1_bounds,
    thm2_bounds,
    thm3_check,
)
from .braid import (
    BraidWord,
    components,
    hyperbolicity_criterion,
    is_sufficiently_complicated,
    normalize_far_commutation,
    syllables,
    twist_number,
)
from .certificates import CertificateCheck, certificate_check, three_braid_bound
from .seifert import link_inertia, surface_data

__all__ = ["InvariantReport", "invariant_report"]


@dataclass(frozen=True)
class InvariantReport:
    word: str
    strands: int
    letters: int
    components: int
    b1: int
    sigma: int
    nullity: int
    twist: int
    flags: dict
    thm1: Optional[Interval]
    thm2: Optional[Interval]
    cut: CutDecomposition
    certificate: CertificateCheck
    three_braid_ok: Optional[bool]

    @property
    def delta_sigma(self) -> int:
        return self.b1 - self.sigma

    @property
    def genus(self) -> Optional[int]:
        return self.b1 // 2 if self.components == 1 else None

    @property
    def thm3_ok(self) -> bool:
        return thm3_check(self.delta_sigma, self.twist)

    @property
    def cut_bound(self) -> CutBound:
        return CutBound(self.delta_sigma, self.cut.delta_betti, self.twist, self.cut.boundary_defect)

    @property
    def cut_ok(self) -> bool:
        return bool(self.cut_bound)

    @property
    def in_scope(self) -> bool:
        """Sufficiently complicated with the hyperbolicity criterion: the hypotheses of the bounds."""
        return self.flags["sufficiently_complicated"] and self.flags["hyperbolicity_criterion"]

    @property
    def twist_ratio(self) -> Optional[Fraction]:
        return Fraction(self.twist, self.delta_sigma) if self.delta_sigma > 0 else None

    def as_dict(self) -> dict:
        return {
            "word": self.word,
            "strands": self.strands,
            "letters": self.letters,
            "components": self.components,
            "b1": self.b1,
            "sigma": self.sigma,
            "delta_sigma": self.delta_sigma,
            "genus": self.genus,
            "twist": self.twist,
            "flags": dict(self.flags),
            "thm1": self.thm1.as_dict() if self.thm1 else None,
            "thm2": self.thm2.as_dict() if self.thm2 else None,
            "thm3_ok": self.thm3_ok,
            "cut": {
                "betti_sub": self.cut.betti_sub,
                "betti_full": self.cut.betti_full,
                "delta_betti": self.cut.delta_betti,
                "ok": self.cut_ok,
            },
        }


def invariant_report(w: BraidWord, exhaustive_twist: bool = False, constants: Constants = VOLUMES) -> InvariantReport:
    s = normalize_far_commutation(syllables(w, cyclic=True))
    sd = surface_data(w)
    inert = link_inertia(w)
    t = twist_number(w, exhaustive=exhaustive_twist)
    suff = is_sufficiently_complicated(s)
    hyp = hyperbolicity_criterion(s)
    delta = sd.betti - inert.signature

    consistent = True
    thm1 = thm2 = None
    if hyp:
        try:
            thm1 = thm1_bounds(delta, constants)
        except BoundsError:
            consistent = False
        try:
            thm2 = thm2_bounds(t, constants)
        except BoundsError:
            consistent = False

    three = None
    if w.strands == 3 and suff and hyp:
        three = three_braid_bound(s)

    flags = {
        "positive": True,
        "sufficiently_complicated": suff,
        "hyperbolicity_criterion": hyp,
        "split": bool(w.unused_columns()) or len(w) == 0,
        "consistent": consistent,
    }
    return InvariantReport(
        word=str(w),
        strands=w.strands,
        letters=len(w),
        components=components(w),
        b1=sd.betti,
        sigma=inert.signature,
        nullity=inert.zero,
        twist=t,
        flags=flags,
        thm1=thm1,
        thm2=thm2,
        cut=cut_decomposition(s),
        certificate=certificate_check(w),
        three_braid_ok=three,
    )
