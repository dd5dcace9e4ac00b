"""
The Seifert form over the brick basis
=====================================

Seifert's algorithm on a closed positive braid gives one disk per strand
and one band per letter. Consecutive crossings in the same column bound a
brick, and the bricks are a basis of the first homology.
"""

from braidsig import parse_braid
from braidsig.inertia import inertia
from braidsig.seifert import bricks, seifert_matrix, surface_data

w = parse_braid("1^3 2^2 1^2")
sd = surface_data(w)
print(f"{len(w)} bands, {w.strands} disks, b1 = {sd.betti}")

for b in bricks(w):
    print("brick", b)

V = seifert_matrix(w)
for row in V.entries:
    print(" ".join(f"{x:2d}" for x in row))

# positive braids have positive signature in the reported orientation
print("inertia of the reported form:", inertia(V.reported_form()).as_tuple())

# a case where V + V^T is degenerate: the nullity lowers the signature by one
deg = parse_braid("1^2 2^2 1^2 2^2")
p, q, z = inertia(seifert_matrix(deg).reported_form()).as_tuple()
print(f"{deg}: b1 = {surface_data(deg).betti}, inertia ({p}, {q}, {z})")

# a split closure gives a block diagonal matrix over the pieces
split = parse_braid("1^3 3^2", strands=4)
print(split, "surface components:", surface_data(split).surface_components)
