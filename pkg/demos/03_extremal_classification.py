"""Classifying bound-equality sets against the proven extremal families.

For h = 2, h = 3 and h = k the minimum-cardinality sets are completely
characterized: dilated odd progressions, dilated intervals, and a handful
of small-k exceptional families.  The classifier tests both directions --
equality of the cardinality and structural membership -- and its matches
regenerate the original set byte-for-byte.
"""
from sumsets import classify_extremal, dilate, make_set, regenerate

cases = [
    (make_set([3, 9, 15, 21]), 2),    # dilated odd progression
    (make_set([2, 5, 7]), 3),         # sum-closed triple at h = k
    (make_set([1, 2, 4]), 2),         # not extremal
    (make_set([0, 2, 4, 8]), 3),      # the zero-family special quadruple
    (make_set([0, 3, 5, 8]), 4),      # sum-closed zero quadruple at h = k
    (make_set([1, 2, 3, 4, 5, 6, 7]), 4),   # fold not covered by a theorem
]

for a, h in cases:
    cls = classify_extremal(a, h)
    print(f"A = {{{a}}}, h = {h}")
    if not cls.covered:
        print(f"  not covered by a proven inverse theorem "
          f"(cardinality {cls.cardinality}); route to the conjecture scanner\n")
        continue
    print(f"  theorem {cls.theorem}: cardinality {cls.cardinality}, "
          f"bound {cls.bound}, equality={cls.equality}")
    if cls.family:
        print(f"  matched family {cls.family} with params {cls.params}")
        assert regenerate(cls) == a
        print("  regeneration check passed")
    print(f"  consistent={cls.consistent}\n")

# classification is dilation-invariant: scaling the set scales the match
base = classify_extremal(make_set([1, 3, 5, 7]), 3)
scaled = classify_extremal(dilate(make_set([1, 3, 5, 7]), 6), 3)
print(f"dilation invariance: d=1 match {base.params} vs d=6 match {scaled.params}")
