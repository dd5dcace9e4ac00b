"""
Fibre surface of a closed positive braid and its Seifert form.

Seifert's algorithm on the closed braid gives n stacked disks, one per
strand position, joined by one half-twisted band per letter. A brick is
the loop that runs up through one column-i band and back down through the
next column-i band; bricks form a basis of H1 of the surface.

Sign table
----------
Entries are linking numbers V[a][b] = lk(a, b+) with b+ pushed off along
the positive normal, in the usual convention in which positive braids have
negative signature:

=====================================================  =====
pair of bricks                                          V[a][b]
=====================================================  =====
a == b                                                  -1
same column, b ends where a starts (b.upper == a.lower)  +1
b one column below a, a.lower < b.lower < a.upper < b.upper  +1
b one column below a, b.lower < a.lower < b.upper < a.upper  -1
anything else                                           0
=====================================================  =====

The table was read off an explicit polygonal model of the surface in R^3
(``tests/oracles.py``) and is re-checked against it by the test-suite.
Reported link signatures use the opposite orientation, so that positive
braid closures have non-negative signature: sigma = -signature(V + V^T).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord
from .inertia import SignatureTriple, inertia

__all__ = [
    "REPORTED_ORIENTATION",
    "Brick",
    "SurfaceData",
    "SeifertMatrix",
    "DisconnectedSurfaceError",
    "surface_data",
    "bricks",
    "brick_entry",
    "seifert_matrix",
    "link_inertia",
    "link_signature",
]

# sign applied to V + V^T before reporting a signature
REPORTED_ORIENTATION = -1


class DisconnectedSurfaceError(ValueError):
    """The fibre surface is disconnected and blockwise mode was not requested."""


@dataclass(frozen=True, order=True)
class Brick:
    column: int
    lower: int
    upper: int

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(f"brick needs lower < upper, got {self.lower}, {self.upper}")

    def interleaves(self, other: "Brick") -> bool:
        a, b = self, other
        return a.lower < b.lower < a.upper < b.upper or b.lower < a.lower < b.upper < a.upper

    def as_dict(self) -> dict:
        return {"column": self.column, "lower": self.lower, "upper": self.upper}


@dataclass(frozen=True)
class SurfaceData:
    betti: int
    surface_components: int
    euler: int


def _column_components(strands: int, used: set[int]) -> int:
    # disks 1..n with an edge {i, i+1} per used column: a disjoint union of paths
    return strands - len(used)


def surface_data(w: BraidWord) -> SurfaceData:
    s = _column_components(w.strands, w.used_columns())
    chi = w.strands - len(w)
    return SurfaceData(betti=s - chi, surface_components=s, euler=chi)


def bricks(w: BraidWord) -> list[Brick]:
    """Consecutive same-column crossing pairs, ordered by column then position."""
    out = []
    for col in sorted(w.used_columns()):
        pos = [k for k, x in enumerate(w.letters) if x == col]
        out.extend(Brick(col, p, q) for p, q in zip(pos, pos[1:]))
    return out


def brick_entry(a: Brick, b: Brick) -> int:
    """Linking number lk(a, b+) from the sign table in the module docstring."""
    if a == b:
        return -1
    if a.column == b.column:
        return 1 if b.upper == a.lower else 0
    if a.column == b.column + 1:
        if a.lower < b.lower < a.upper < b.upper:
            return 1
        if b.lower < a.lower < b.upper < a.upper:
            return -1
    return 0


@dataclass(frozen=True)
class SeifertMatrix:
    bricks: tuple[Brick, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.bricks)

    def symmetrized(self) -> list[list[int]]:
        V = self.entries
        return [[V[i][j] + V[j][i] for j in range(self.size)] for i in range(self.size)]

    def reported_form(self) -> list[list[int]]:
        """V + V^T in the orientation used for reported signatures."""
        return [[REPORTED_ORIENTATION * x for x in row] for row in self.symmetrized()]

    def restrict(self, indices) -> "SeifertMatrix":
        idx = list(indices)
        return SeifertMatrix(tuple(self.bricks[i] for i in idx),
                             tuple(tuple(self.entries[i][j] for j in idx) for i in idx))

    def as_dict(self) -> dict:
        return {
            "size": self.size,
            "bricks": [b.as_dict() for b in self.bricks],
            "entries": [list(r) for r in self.entries],
        }


def seifert_matrix(w: BraidWord, blockwise: bool = True) -> SeifertMatrix:
    """
    Seifert matrix over the brick basis.

    For a split closure (some column unused) the surface is disconnected;
    the matrix is then block diagonal over the pieces, and this is only
    allowed with ``blockwise=True``.
    """
    if not blockwise and w.unused_columns() and len(w) > 0:
        raise DisconnectedSurfaceError(f"columns {w.unused_columns()} unused; surface is disconnected")
    bs = tuple(bricks(w))
    entries = tuple(tuple(brick_entry(a, b) for b in bs) for a in bs)
    return SeifertMatrix(bs, entries)


@lru_cache(maxsize=65536)
def _link_inertia(strands: int, letters: tuple[int, ...]) -> SignatureTriple:
    V = seifert_matrix(BraidWord(strands, letters))
    return inertia(V.reported_form())


def link_inertia(w: BraidWord) -> SignatureTriple:
    """Inertia of the symmetrised Seifert form, reported orientation."""
    return _link_inertia(w.strands, w.letters)


def link_signature(w: BraidWord) -> int:
    return link_inertia(w).signature
