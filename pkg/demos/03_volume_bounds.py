"""
Volume intervals from the defect and the twist number
=====================================================

For a hyperbolic closure the signature defect and the twist number each
give an interval for the volume. Both are cheap once the defect is known.
"""

from braidsig import parse_braid
from braidsig.bounds import PRINTED, VOLUMES, cut_decomposition, thm1_bounds, thm2_bounds, thm3_check
from braidsig.report import invariant_report

rep = invariant_report(parse_braid("1^3 2^4 1^3 2^3 1^5 2^3"))
print(f"defect {rep.delta_sigma}, twist number {rep.twist}")

for name, k in (("extended", VOLUMES), ("printed", PRINTED)):
    lo, hi = thm1_bounds(rep.delta_sigma, k).rounded()
    lo2, hi2 = thm2_bounds(rep.twist, k).rounded()
    print(f"{name:9s} from defect [{lo}, {hi})   from twist [{lo2}, {hi2})")

# the two invariants control each other: defect / 2 <= t <= 21/2 defect
print("inequality holds:", thm3_check(rep.delta_sigma, rep.twist))

# cutting the surface left of every twist region leaves torus-link pieces
cut = cut_decomposition(parse_braid("1^3 2^4 1^3 2^3 1^5 2^3"))
print("regions:", cut.regions)
print(f"b1 drops from {cut.betti_full} to {cut.betti_sub}; defect <= {2 * cut.delta_betti}")
