"""Exhaustive conjecture scans, including a genuine negative finding.

The direct conjectures (C2_1, C3_1) posit lower bounds for interior folds
3 <= h <= k-1; the inverse conjectures (C2_2, C3_2) posit that equality
forces a dilated odd progression (positive sets) or a dilated interval
(zero-containing sets).  Scans check both on every pass, re-verifying any
would-be counterexample with the independent naive engine.

On the zero-containing space k = 5, max element 13, the scan below finds
that {0,1,2,4,6} attains the conjectured minimum 2hk - h(h+1) + 1 = 21 at
h = 4 without being a dilated interval: a double-verified counterexample
to the inverse conjecture C3_2 (the direct bound C3_1 survives).
"""
from sumsets import ScanConfig, SetFamily, parse_mode, scan

print("Positive family, conjecture C2_1 (+ inverse census):")
for k in (4, 5, 6):
    report = scan(
        ScanConfig(k, 14, SetFamily.POSITIVE, parse_mode("conj:C2_1"), jobs=4)
    )
    eq = ", ".join(f"{r['set']} (h={r['h']})" for r in report.equalities)
    print(f"  k={k}: {report.sets_scanned} sets, "
          f"{len(report.conjecture_counterexamples)} bound counterexamples, "
          f"{len(report.classification_failures)} census mismatches")
    print(f"       equality sets: {eq}")

print("\nZero-containing family, conjecture C3_1 (+ inverse census):")
for k in (5, 6):
    report = scan(
        ScanConfig(k, 13, SetFamily.CONTAINS_ZERO, parse_mode("conj:C3_1"), jobs=4)
    )
    print(f"  k={k}: {report.sets_scanned} sets, "
          f"{len(report.conjecture_counterexamples)} bound counterexamples, "
          f"{len(report.classification_failures)} census mismatches")
    for rec in report.classification_failures:
        print(f"       INVERSE COUNTEREXAMPLE: {rec['set']} at h={rec['h']} "
              f"reaches the conjectured minimum {rec['bound']} "
              f"(layered {rec['cardinality']}, naive {rec['naive_cardinality']}) "
              f"yet is not of the form {rec['expected_family']}")

print("\nScan reports are deterministic across parallelism levels and ship "
      "as JSON/CSV; see `sumsets scan --help`.")
