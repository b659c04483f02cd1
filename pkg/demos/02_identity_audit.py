"""
Auditing the family identities mechanically
===========================================

Every quoted identity is polynomial in x at fixed degree, so evaluating both
sides exactly at enough rational points settles it completely.  Two commonly
quoted variant forms fail, and so does a corollary-style rescaling claim;
the audit emits concrete counterexamples for each.
"""

from unibern import audit_identities

report = audit_identities(n_max=10)

for finding in report.findings:
    line = f"{finding.identity:24s} {finding.status}"
    if finding.counterexample is not None:
        ce = finding.counterexample
        line += (
            f"   counterexample: n={ce.n}, b={ce.b}, s={ce.s}, k={ce.k}, "
            f"x={ce.x}: {ce.lhs} != {ce.rhs}"
        )
    print(line)

# the JSON document is what `unibern audit --nmax 10` prints
print()
print("JSON:", report.to_json()[:120], "...")
