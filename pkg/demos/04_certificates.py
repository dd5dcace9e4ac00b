"""
Dots, string classes and alternating runs
=========================================

The lower bound on the defect is witnessed by disjoint runs
sigma_i^a sigma_{i+1}^b sigma_i^c sigma_{i+1}^d, each worth two.
"""

from braidsig import parse_braid
from braidsig.braid import normalize_far_commutation, syllables
from braidsig.certificates import best_class, certificate_check, extract_subwords, place_dots, string_classes

w = parse_braid("1^3 2^3 1^3 3^3 2^3 3^3 1^4 2^3", strands=4)
s = normalize_far_commutation(syllables(w))
print("normal form:", s)

dots = place_dots(s)
for d in dots:
    print(f"dot between regions {d.between} on string {d.string}")

for c in string_classes(dots, s.strands):
    print(f"class {c.j}: strings {c.strings}, {c.dots} dots")

cls = best_class(dots, s.strands)
cert = extract_subwords(s, cls)
for occ in cert.occurrences:
    print("run on string", occ.central, "columns", occ.columns, "syllables", occ.groups)

# letting columns i-1 and i+2 break runs finds fewer of them
print("strict count:", extract_subwords(s, cls, strict=True).count)

c = certificate_check(w)
print(f"count {c.count}: 21*count >= t is {c.ok_lower}, 2*count <= defect is {c.ok_defect}")
