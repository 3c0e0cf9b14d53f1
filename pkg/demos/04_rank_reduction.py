"""Rank reduction: cut the first column, relabel, compare both sides.

Stripping column 1 (and, depending on what the set keeps there, a partner
column and two rows) leaves a smaller classical system.  Dimensions, lengths
and defects of the original and the reduced set are tied by exact integer
identities; this is the induction that drives the dimension formula.
"""

import coadjoint as ca
from coadjoint.reduction import recursion_report, reduce_set

rs = ca.build_system("B", 7)
D = ca.orthogonal_set(rs, ca.parse_root_set(rs, "e1-e6,e1+e6,e2,e3-e7,e3+e7,e4+e5"))
xi = ca.ones_xi(D)

red = reduce_set(D, xi)
print(f"case {red.case!r}: {rs} -> {red.derived}")
print(f"removed {len(red.removed)} roots; r = {red.r}")
print(f"reduced set: [{red.D_prime}]")

report = recursion_report(D, xi)
for ident in report.identities:
    print(f"  {ident.name:32s} {ident.lhs:4d} = {ident.rhs:<4d} {'ok' if ident.ok else 'FAIL'}")
print("all identities hold:", report.ok)

# Iterate to the bottom: every step lands on a valid smaller system.
print("\nfull reduction chain:")
cur, cur_xi = D, xi
while cur.system.n > 0:
    step = reduce_set(cur, cur_xi)
    print(f"  {cur.system} [{cur}]  --{step.case}-->  {step.derived}")
    cur, cur_xi = step.D_prime, step.xi_prime
print(f"  bottom: {cur.system} with {len(cur.system.positives)} roots")
