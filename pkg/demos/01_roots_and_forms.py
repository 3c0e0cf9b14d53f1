"""Tour of the root-system model: positive roots, rows/columns, singular pairs.

Positive roots of B_n, C_n, D_n live on a grid: every root occupies one cell
(row, col) of an m x m matrix, and the whole package is bookkeeping on that
grid.  An orthogonal set of roots plus nonzero scalars defines the canonical
functional whose orbit we study.
"""

import coadjoint as ca

rs = ca.build_system("B", 3)
print(f"{rs}: {len(rs.positives)} positive roots, matrices are {rs.m} x {rs.m}")
for a in rs.positives:
    print(f"  {str(a):8s} row={a.row:2d} col={a.col}")

# Rows and columns slice the grid.
print("\ncolumn 1:", ca.format_root_set(rs.col_set(1)))
print("row 0   :", ca.format_root_set(rs.row_set(0)))

# Singular pairs of a root are the ways of writing it as a sum of two
# positive roots; the split keeps the same-column halves on one side.
beta = ca.rsum(1, 2)
print(f"\nsingular pairs of {beta}:")
for pair in rs.singular_pairs(beta):
    a, g = tuple(pair)
    print(f"  {a} + {g}")
plus, minus = rs.singular_split(beta)
print("column side :", ca.format_root_set(rs.sort(plus)))
print("other side  :", ca.format_root_set(rs.sort(minus)))

# An orthogonal set with scalars gives a functional on the algebra.
D = ca.orthogonal_set(rs, ca.parse_root_set(rs, "e1+e2,e3"))
xi = {a: k + 1 for k, a in enumerate(D.roots)}
f = ca.canonical_form(D, xi, p=7)
print(f"\ncanonical form of [{D}] mod 7:", {str(a): v for a, v in f.items()})

# Redundant roots are dropped without moving the orbit: two zero-row roots
# collapse to the one with the smaller index.
D0 = ca.orthogonal_set(rs, [ca.short(1), ca.short(3)])
D1, _ = ca.normalize(D0, ca.ones_xi(D0))
print(f"normalize [{D0}] -> [{D1}]")
