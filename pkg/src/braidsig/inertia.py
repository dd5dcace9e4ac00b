"""
Exact inertia of symmetric integer matrices.

The form is diagonalised by congruence. Every elimination step is done on
integers: the trailing block is replaced by a positive multiple of its
Schur complement and then divided by the gcd of its entries, so no
fractions are ever formed and entries stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

__all__ = ["SignatureTriple", "NotSymmetricError", "as_symmetric", "inertia", "signature", "direct_sum"]


class NotSymmetricError(ValueError):
    pass


@dataclass(frozen=True)
class SignatureTriple:
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def size(self) -> int:
        return self.positive + self.negative + self.zero

    @property
    def rank(self) -> int:
        return self.positive + self.negative

    def __add__(self, other: "SignatureTriple") -> "SignatureTriple":
        return SignatureTriple(self.positive + other.positive,
                               self.negative + other.negative,
                               self.zero + other.zero)

    def __neg__(self) -> "SignatureTriple":
        return SignatureTriple(self.negative, self.positive, self.zero)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)


def as_symmetric(m: Sequence[Sequence[int]]) -> list[list[int]]:
    """Copy ``m`` into a list of int rows, checking squareness and symmetry."""
    rows = [[int(x) for x in row] for row in m]
    d = len(rows)
    for row in rows:
        if len(row) != d:
            raise NotSymmetricError("matrix is not square")
    for i in range(d):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetricError(f"entries ({i},{j}) and ({j},{i}) differ")
    return rows


def _normalize(block: list[list[int]]) -> list[list[int]]:
    g = 0
    for row in block:
        for x in row:
            g = gcd(g, x)
            if g == 1:
                return block
    if g > 1:
        block = [[x // g for x in row] for row in block]
    return block


def inertia(m: Sequence[Sequence[int]]) -> SignatureTriple:
    """
    (positive, negative, zero) inertia of a symmetric integer matrix.

    Pivots on the diagonal entry of largest absolute value (lowest index on
    ties). When the diagonal vanishes, the off-diagonal entry b of largest
    absolute value spans a hyperbolic plane [[0, b], [b, 0]], which
    contributes one positive and one negative direction.
    """
    A = as_symmetric(m)
    pos = neg = zero = 0
    while A:
        keep = [i for i, row in enumerate(A) if any(row)]
        zero += len(A) - len(keep)
        A = [[A[i][j] for j in keep] for i in keep]
        d = len(A)
        if d == 0:
            break
        k = max(range(d), key=lambda i: (abs(A[i][i]), -i))
        piv = A[k][k]
        if piv != 0:
            if piv > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(d) if i != k]
            B = [[piv * A[i][j] - A[i][k] * A[k][j] for j in rest] for i in rest]
            if piv < 0:
                B = [[-x for x in row] for row in B]
        else:
            best = None
            for i in range(d):
                for j in range(i + 1, d):
                    if A[i][j] and (best is None or abs(A[i][j]) > abs(A[best[0]][best[1]])):
                        best = (i, j)
            k, l = best
            b = A[k][l]
            pos += 1
            neg += 1
            rest = [i for i in range(d) if i not in (k, l)]
            B = [[b * A[i][j] - (A[i][k] * A[j][l] + A[i][l] * A[j][k]) for j in rest] for i in rest]
            if b < 0:
                B = [[-x for x in row] for row in B]
        A = _normalize(B)
    return SignatureTriple(pos, neg, zero)


def signature(m: Sequence[Sequence[int]]) -> int:
    return inertia(m).signature


def direct_sum(*blocks: Sequence[Sequence[int]]) -> list[list[int]]:
    d = sum(len(b) for b in blocks)
    out = [[0] * d for _ in range(d)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = int(x)
        off += len(b)
    return out
