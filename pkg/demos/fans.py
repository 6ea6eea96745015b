"""
Eulerian fans
=============

A fan has a handle vertex whose removal leaves a directed forest.  Its genus
polynomial is a rescaled D_{n,lambda}, where lambda records how many edges
into the handle come from each tree.
"""

from genusdist import EulerianDigraph, fan_gamma
from genusdist.oracle import enumerate_embeddings

# handle 0; trees 1->2->3->4 and 5
D = EulerianDigraph(6, [(1, 2), (2, 3), (3, 4), (1, 0), (2, 0), (3, 0), (4, 0), (4, 0),
                        (0, 1), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (5, 0)])
g = fan_gamma(D, 0)
print("lambda =", list(g.lam), " scale =", g.extra["scale"])
print(g)

# the oracle walks all 1382400 rotation systems; takes a while
hist = enumerate_embeddings(D)
print("oracle agrees:", hist.matches(g))
