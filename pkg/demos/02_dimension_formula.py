"""The dimension formula l(sigma) - s(sigma) - 2*theta against the rank oracle.

The involution sigma attached to an orthogonal set is the product of its
(commuting) reflections.  Counting the positive roots it sends negative, the
set size, and the four-part defect statistic gives the orbit dimension; the
exact rank of the skew form f([.,.]) over two prime fields is the referee.
"""

import coadjoint as ca
from coadjoint.weyl import inversion_length, involution_of

rs = ca.build_system("B", 7)
D = ca.orthogonal_set(rs, ca.parse_root_set(rs, "e1-e6,e1+e6,e2,e3-e7,e3+e7,e4+e5"))

sigma = involution_of(D)
print("set      :", str(D))
print("sigma    :", sigma)

inverted, l = inversion_length(rs, sigma)
d = ca.defect(D)
print(f"l(sigma) = {l}   s(sigma) = {len(D.roots)}")
print(f"defect   : d1={d.d1} d2={d.d2} d3={d.d3} d4={d.d4} -> theta={d.theta}")
print(f"predicted: {l} - {len(D.roots)} - 2*{d.theta} = {ca.predicted_dim(D)}")

for p in (17, 101):
    rank = ca.skew_rank_dim(D, ca.ones_xi(D), p)
    print(f"skew-form rank mod {p:3d}: {rank}")

# The agreement is not an accident of this example; sweep a whole rank.
print("\nsweeping every normalized orthogonal subset of C4 ...")
c4 = ca.build_system("C", 4)
mismatches = 0
for D in ca.enumerate_normalized(c4):
    predicted = ca.predicted_dim(D)
    for p in (11, 101):
        if ca.skew_rank_dim(D, ca.ones_xi(D), p) != predicted:
            mismatches += 1
total = sum(1 for _ in ca.enumerate_normalized(c4))
print(f"{total} subsets, {mismatches} mismatches")
