"""
Invariants of a closed positive braid
=====================================

Parse a word, look at its twist regions and read off the signature defect.
"""

from braidsig import invariant_report, parse_braid
from braidsig.braid import components, normalize_far_commutation, syllables, twist_number

# words are written as syllables, "i^k" meaning the k-th power of sigma_i
w = parse_braid("1^3 2^3 1^3 2^3")
print(w, "on", w.strands, "strands,", len(w), "letters")

# twist regions are read cyclically, so a syllable at the end merges with
# one of the same column at the start
s = normalize_far_commutation(syllables(parse_braid("2 1^3 2^3 1^3 2^2")))
print("normal form:", s, "  twist number:", len(s))

# far commutation can bring two regions of one column together
w4 = parse_braid("1^3 3^3 1^3", strands=4)
print(w4, "has twist number", twist_number(w4))

print("components of the closure:", components(w))

# the report collects everything at once
rep = invariant_report(w)
print(f"b1 = {rep.b1}, sigma = {rep.sigma}, defect = {rep.delta_sigma}, genus = {rep.genus}")
print("flags:", rep.flags)
