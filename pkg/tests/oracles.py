"""
Independent reference computations used by the test-suite.

None of these share code with the library paths they check:

* ``geometric_seifert_matrix`` builds the fibre surface of a closed positive
  braid as explicit polygons in R^3 and computes linking numbers of brick
  loops with their pushoffs by counting crossings in a generic projection.
* ``charpoly_inertia`` counts eigenvalue signs of a symmetric integer matrix
  from its exact characteristic polynomial (Descartes' rule is exact when
  every root is real).
* ``torus_link_signature`` is the lattice-point count for the signature of
  the torus link T(p, q), positive convention.
* ``burau_determinant`` evaluates |det(I - reduced Burau)| at t = -1, which
  for an odd number of strands is the determinant of the closure.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
import sympy

# --------------------------------------------------------------------------
# linking numbers of closed polygons


def _rotation(seed=7):
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q @ np.diag(np.sign(np.diag(r)))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


_ROT = _rotation()


def linking_number(a, b, rot=_ROT):
    """Linking number of two disjoint closed polygons (lists of 3D points)."""
    A = np.asarray(a, float) @ rot.T
    B = np.asarray(b, float) @ rot.T
    A1, A2 = A, np.roll(A, -1, axis=0)
    B1, B2 = B, np.roll(B, -1, axis=0)
    total = 0
    for p, p2 in zip(A1, A2):
        u = p2 - p
        for q, q2 in zip(B1, B2):
            v = q2 - q
            den = u[0] * v[1] - u[1] * v[0]
            if abs(den) < 1e-12:
                continue
            w = q - p
            s = (w[0] * v[1] - w[1] * v[0]) / den
            t = (w[0] * u[1] - w[1] * u[0]) / den
            if not (0.0 <= s < 1.0 and 0.0 <= t < 1.0):
                continue
            za = p[2] + s * u[2]
            zb = q[2] + t * v[2]
            over, under = (u, v) if za > zb else (v, u)
            cr = over[0] * under[1] - over[1] * under[0]
            total += 1 if cr > 0 else -1
    assert total % 2 == 0, "non-generic projection"
    return total // 2


def gauss_linking_integral(a, b, samples=400):
    """Numerical Gauss integral; slow, used only to pin the crossing sign."""

    def densify(poly):
        poly = np.asarray(poly, float)
        out = []
        for p, q in zip(poly, np.roll(poly, -1, axis=0)):
            for s in np.linspace(0, 1, samples, endpoint=False):
                out.append(p + s * (q - p))
        return np.array(out)

    A, B = densify(a), densify(b)
    dA = np.roll(A, -1, axis=0) - A
    dB = np.roll(B, -1, axis=0) - B
    mA = A + dA / 2
    mB = B + dB / 2
    r = mA[:, None, :] - mB[None, :, :]
    cross = np.cross(dA[:, None, :], dB[None, :, :])
    val = np.sum(np.einsum("ijk,ijk->ij", r, cross) / np.linalg.norm(r, axis=2) ** 3)
    return val / (4 * math.pi)


# --------------------------------------------------------------------------
# fibre surface of a closed positive braid, drawn in R^3
#
# Strand level j carries the disk {z = j, -j <= y <= 0}, normal +z.  The
# crossing at letter position p (column i) is a band at x = 2(p+1) leaving
# the edge y = -i of disk i outwards, rising at y = -(i+1) - H and returning
# onto the edge y = -(i+1) of disk i+1, with one half twist on the rising
# part.  TWIST = +1/-1 selects the handedness.

H = 0.5
EPS = 0.25
DELTA = 0.05
TWIST_STEPS = 8


def _band(x0, i, twist):
    """Core points and unit normals of the band, from disk i up to disk i+1."""
    pts, nrm = [], []
    y_out = -(i + 1) - H
    pts.append((x0, -i, i)); nrm.append((0, 0, 1))
    # corner between horizontal and vertical part
    pts.append((x0, y_out, i)); nrm.append((0, 1 / math.sqrt(2), 1 / math.sqrt(2)))
    for k in range(1, TWIST_STEPS):
        phi = math.pi * k / TWIST_STEPS
        z = i + k / TWIST_STEPS
        # width W = cos(phi) x + twist sin(phi) y; normal = z cross W
        pts.append((x0, y_out, z))
        nrm.append((-twist * math.sin(phi), math.cos(phi), 0))
    pts.append((x0, y_out, i + 1)); nrm.append((0, -1 / math.sqrt(2), 1 / math.sqrt(2)))
    pts.append((x0, -(i + 1), i + 1)); nrm.append((0, 0, 1))
    return pts, nrm


def _brick_loop(i, p, q, twist):
    """Loop for the brick between crossings p < q of column i, with normals."""
    xp, xq = 2.0 * (p + 1), 2.0 * (q + 1)
    up = (0, 0, 1)
    pts, nrm = [], []
    # along disk i from band p to band q
    pts += [(xp, -i + EPS, i), (xq, -i + EPS, i)]
    nrm += [up, up]
    bq, nq = _band(xq, i, twist)
    pts += bq; nrm += nq
    pts += [(xq, -(i + 1) + EPS, i + 1), (xp, -(i + 1) + EPS, i + 1)]
    nrm += [up, up]
    bp, np_ = _band(xp, i, twist)
    pts += bp[::-1]; nrm += np_[::-1]
    return np.array(pts, float), np.array(nrm, float)


def brick_list(letters):
    out = []
    for col in sorted(set(letters)):
        pos = [k for k, x in enumerate(letters) if x == col]
        out += [(col, a, b) for a, b in zip(pos, pos[1:])]
    return out


def geometric_seifert_matrix(letters, twist=1):
    """V[a][b] = lk(loop_a, pushoff of loop_b) over the brick basis."""
    bricks = brick_list(letters)
    loops = [_brick_loop(i, p, q, twist) for i, p, q in bricks]
    d = len(bricks)
    V = [[0] * d for _ in range(d)]
    for a in range(d):
        for b in range(d):
            pts_b, n_b = loops[b]
            V[a][b] = linking_number(loops[a][0], pts_b + DELTA * n_b)
    return bricks, V


# --------------------------------------------------------------------------
# signatures


def charpoly_inertia(M):
    """(positive, negative, zero) eigenvalue counts via Descartes' rule."""
    d = len(M)
    if d == 0:
        return (0, 0, 0)
    x = sympy.Symbol("x")
    coeffs = [int(c) for c in sympy.Matrix(M).charpoly(x).all_coeffs()]
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1

    def changes(cs):
        cs = [c for c in cs if c != 0]
        return sum(1 for u, v in zip(cs, cs[1:]) if (u > 0) != (v > 0))

    n = len(coeffs) - 1
    pos = changes(coeffs)
    neg = changes([c * (-1) ** (n - k) for k, c in enumerate(coeffs)])
    return (pos, neg, zero)


def numpy_inertia(M, gap=1e-7):
    """Eigenvalue sign counts in floating point, with a separation check."""
    if len(M) == 0:
        return (0, 0, 0)
    ev = np.linalg.eigvalsh(np.asarray(M, float))
    tiny = np.abs(ev) < gap
    assert not np.any((np.abs(ev) >= gap) & (np.abs(ev) < 1e-4)), "eigenvalue too close to zero"
    return (int(np.sum((ev > 0) & ~tiny)), int(np.sum((ev < 0) & ~tiny)), int(np.sum(tiny)))


def torus_link_signature(p, q):
    """
    Signature of the positive torus link T(p, q), positive convention:
    lattice points i/p + j/q strictly inside (1/2, 3/2) count +1, strictly
    outside count -1, the boundary counts 0.
    """
    sig = 0
    for i in range(1, p):
        for j in range(1, q):
            s = Fraction(i, p) + Fraction(j, q)
            if Fraction(1, 2) < s < Fraction(3, 2):
                sig += 1
            elif s < Fraction(1, 2) or s > Fraction(3, 2):
                sig -= 1
    return sig


# --------------------------------------------------------------------------
# Seifert surface Betti number by brute force on a cell complex


def brute_force_betti(strands, letters):
    """b1 = 1 - chi + (#components - 1) summed: disks are 0-cells, bands 1-cells."""
    parent = list(range(strands + 1))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for i in letters:
        parent[find(i)] = find(i + 1)
    comps = len({find(u) for u in range(1, strands + 1)})
    return len(letters) - strands + comps, comps


# --------------------------------------------------------------------------
# link determinant from the reduced Burau representation


def _burau_generator(n, i):
    """Reduced Burau matrix of sigma_i in B_n at t = -1, size n - 1."""
    t = -1
    m = np.eye(n - 1, dtype=object)
    k = i - 1
    if i > 1:
        m[k, k - 1] = t
    m[k, k] = -t
    if i < n - 1:
        m[k, k + 1] = 1
    return m


def burau_determinant(strands, letters):
    """
    |det(I - psi(beta))| at t = -1.  Equals |Delta(-1)| of the closure when
    ``strands`` is odd, since (1 - t) / (1 - t^n) = 1 there.
    """
    assert strands % 2 == 1
    n = strands
    m = np.eye(n - 1, dtype=object)
    for i in letters:
        m = m @ _burau_generator(n, i)
    return abs(int(sympy.Matrix(np.eye(n - 1, dtype=object) - m).det()))
