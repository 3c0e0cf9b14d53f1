"""Building a polarization: discarded blocks, correction vectors, certification.

Column by column, each root of the orthogonal set sheds the off-column halves
of its singular pairs into a block (skipping anything an earlier block
already claimed).  The kept roots, plus a two-term correction vector for
certain (diff, sum) column pairs, span a subalgebra on which the canonical
form vanishes after bracketing, of exactly half-complementary dimension.
"""

import coadjoint as ca

rs = ca.build_system("D", 7)
D = ca.orthogonal_set(rs, ca.parse_root_set(rs, "e1-e5,e1+e5,e2-e6,e2+e6,e3+e4"))
xi = {a: k + 2 for k, a in enumerate(D.roots)}  # distinct, to see them in p0

blocks = ca.build_blocks(D)
for j, roots in blocks.items:
    print(f"block of column {j}: {ca.format_root_set(roots)}")
print(f"discarded total: {len(blocks.discarded)} of {len(rs.positives)} roots")

print("\ncorrection vectors (coefficients come from the scalars):")
for vec in ca.build_p0(D, xi):
    terms = " + ".join(f"{v}*[{a}]" for a, v in vec.items())
    print("  ", terms)

pol = ca.polarization(D, xi)
print(f"\ndim = {len(pol.main)} kept + {len(pol.correction)} corrections = {pol.dim}")

for p in (17, 101):
    cert = ca.certify_polarization(D, xi, p)
    print(f"mod {p:3d}: subalgebra={cert.subalgebra_ok} isotropic={cert.isotropic_ok} "
          f"maximal={cert.maximal_ok} (codim {len(rs.positives) - cert.dim} "
          f"= rank/2 = {cert.oracle_rank // 2})")
