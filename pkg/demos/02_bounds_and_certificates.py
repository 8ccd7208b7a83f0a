"""Lower bounds on |h-fold restricted-signed sumsets| and the certificate
chains that prove them.

Every bound in the registry is graded against computed cardinalities; the
witness families then exhibit explicit sumset members whose strict ordering
forces the bound, so each bound is independently machine-checkable.
"""
from sumsets import (
    FORMULAS,
    audit,
    combined_census,
    gen_family,
    gen_superincreasing,
    make_set,
    s_family,
    sumset_layered,
    superincreasing_census,
    t_family,
    verify_family,
)

print("Registered bound formulas:")
for formula in FORMULAS.values():
    backing = "theorem" if formula.theorem_backed else "conjecture"
    print(f"  {formula.id:>13} ({backing:>10}, {formula.family.value}): "
          f"{formula.description}")

print("\nAudit sweep over the odd progressions d*{1,3,...,2k-1} at h = 2:")
for k in range(2, 8):
    a = gen_family("OddAP", k=k, d=3)
    report = audit(a, 2)
    graded = ", ".join(f"{e.id}={e.value} {e.status.value}" for e in report.bounds)
    print(f"  k={k}: |2-fold| = {report.cardinality:3d}   {graded}")

a = make_set([1, 2, 4, 8])
h = 2
print(f"\nCertificate chains for A = {{{a}}}, h = {h}:")
membership = sumset_layered(a, h).values
for family in (s_family(a, h), t_family(a, h)):
    check = verify_family(family, membership)
    chain = " ".join(
        f"{e.label}={e.value}" + (f" {e.relation_to_next}" if e.relation_to_next else "")
        for e in family.elements
    )
    print(f"  {family.name}-chain: {chain}")
    print(f"  distinct {check.distinct} (expected {check.expected_distinct}), "
          f"chain_ok={check.chain_ok}, all members present="
          f"{not check.missing_members}")

count, expected = combined_census(a, h)
print(f"  combined census: {count} distinct values, certified minimum {expected}")

print("\nSuperincreasing sets carry extra certificates once h >= 5:")
for k in (6, 7):
    a = gen_superincreasing(k)          # 1, 2, 4, 8, ... doubling
    count, claimed = superincreasing_census(a, 5)
    card = sumset_layered(a, 5).cardinality
    print(f"  {{{a}}}: certified {claimed}, chains give {count}, "
          f"actual |5-fold| = {card}")
