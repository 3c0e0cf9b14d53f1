"""All possible orbit dimensions, witnessed and brute-forced.

Over F_q the irreducible representation dimensions of the unipotent group
are exactly q^l for 0 <= l <= mu.  For each exponent l a small orthogonal
set witnesses an orbit of dimension 2l; at tiny rank we also partition the
entire dual space into orbits by breadth-first search and read the same
spectrum off the orbit sizes.
"""

import coadjoint as ca

for fam, n in [("B", 7), ("C", 5), ("D", 5), ("D", 4)]:
    mu = ca.mu_max(fam, n)
    print(f"{fam}{n}: mu = {mu}")
    for l in range(mu + 1):
        D = ca.spectrum_witness(fam, n, l)
        assert ca.predicted_dim(D) == 2 * l
        print(f"  l={l:2d}  dim={2 * l:2d}  witness [{D}]")
    print()

print("census of every functional of C2 over F_5:")
census = ca.full_orbit_census("C", 2, 5)
for d, k in census.orbit_counts.items():
    print(f"  {k:4d} orbits of dimension {d} (size {census.q ** d} each)")
print(f"  total {census.total_size} = 5^{len(ca.build_system('C', 2).positives)}")

print("\ncensus of D3 over F_7:")
census = ca.full_orbit_census("D", 3, 7)
for d, k in census.orbit_counts.items():
    print(f"  {k:4d} orbits of dimension {d}")
print(f"  dimensions found: {sorted(census.dimensions)}; mu(D3) = {ca.mu_max('D', 3)}")

# One orbit in full: the closure really is a power of q.
b2 = ca.build_system("B", 2)
D = ca.orthogonal_set(b2, [ca.rsum(1, 2)])
orbit = ca.orbit_bfs(D, ca.ones_xi(D), 5)
print(f"\norbit of the canonical form of [{D}] in B2 over F_5: "
      f"{orbit.size} points = 5^{orbit.dimension}")
