"""
A verification sweep
====================

Enumerate every sufficiently complicated word with hyperbolic closure in a
small family, compute all invariants and check the inequalities on each.
"""

from braidsig.sweep import EnumerationSpec, emit, enumerate_words, verify_sweep

spec = EnumerationSpec(
    strands=(3, 4),
    syllable_counts=(4, 6),
    exponents=(3, 4),
    require_sufficiently_complicated=True,
    require_hyperbolicity=True,
)
family = list(enumerate_words(spec))
print(len(family), "words, e.g.", family[0], "and", family[-1])

rep = verify_sweep(family, jobs=2)
print(rep.summary())
print(f"{rep.wall_time:.2f} s")

# the same rows as CSV; the first few lines
print("\n".join(emit(rep, "csv").splitlines()[:4]))
