"""
Real roots and log-concavity
============================

Sturm chains over the rationals certify that every genus polynomial here has
only real, non-positive roots.  Log-concavity of the coefficients follows.
"""

from genusdist import certify_real_rooted_nonpositive, gamma_constellation, is_log_concave, partitions_of

for m in (3, 4):
    n = 7
    failures = 0
    for lam in partitions_of(n):
        gp = gamma_constellation(m, n, lam)
        cert = certify_real_rooted_nonpositive(gp)
        failures += not (cert and is_log_concave(gp))
    print(f"m={m} n={n}: {len(partitions_of(n))} partitions, {failures} failures")

gp = gamma_constellation(4, 6, [3, 2, 1])
print(gp)
print(certify_real_rooted_nonpositive(gp))

# not every polynomial passes
print(certify_real_rooted_nonpositive((1, 1, 1)))
