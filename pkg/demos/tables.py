"""
Bouquet and dipole tables
=========================

Genus polynomials of the directed bouquet B_n (one vertex, n loops) and of
the directed dipole (two vertices, n edges each way).
"""

from genusdist import bouquet_gamma, dipole_gamma, gamma_constellation

print("directed bouquets")
for n in range(1, 9):
    print(f"  {n}  {bouquet_gamma(n)}")

print("directed dipoles")
for n in range(1, 7):
    print(f"  {n}  {dipole_gamma(n)}")

# the digraph counts are a rescaling of one-face 3-constellation counts
g = gamma_constellation(3, 3, [3])
print("3-constellations, n=3, lambda=[3]:", g, " total", g.total())
