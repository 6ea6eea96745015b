"""
Formula against brute force
===========================

Every number the character formulas produce can be recounted by listing
permutation tuples or rotation systems one at a time.
"""

from genusdist import bipartite_digraph, gamma_constellation, gamma_digraph, partitions_of
from genusdist.digraphs import total_embeddings
from genusdist.oracle import enumerate_embeddings, enumerate_factorizations

# factorizations phi s_0 s_1 s_2 = id with s_0 an n-cycle
n = 4
for lam in partitions_of(n):
    hist = enumerate_factorizations(3, n, lam)
    formula = gamma_constellation(3, n, lam)
    print(f"m=3 lambda={lam}: oracle {hist.to_coeffs()}  formula {formula.coeffs}  "
          f"{'ok' if hist.matches(formula) else 'MISMATCH'}")

# face-oriented embeddings: in- and out-edges alternate around each vertex
for lam in partitions_of(n):
    D = bipartite_digraph(lam)
    hist = enumerate_embeddings(D)
    print(f"D_{{{n},{lam}}}: {hist.to_coeffs()}  formula {gamma_digraph(n, lam).coeffs}  "
          f"embeddings {hist.total()} = {total_embeddings(D)}")
