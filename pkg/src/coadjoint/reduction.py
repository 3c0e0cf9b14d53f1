"""Rank reduction: strip the first column and re-index what survives.

The shape of the cut depends on how the orthogonal set meets column 1: a
short root removes the column and the zero row (family B drops to a D
system), a difference/sum root (or the pair) removes its column, the partner
column and both partner rows, and otherwise only the column goes.  The
survivors relabel order-preservingly onto a smaller system, giving an
inner-product-preserving bijection pi.

Every identity tying the full system to the reduced one is evaluated on both
sides by :func:`recursion_report`; equality across all normalized sets at
small rank is the regression surface for the dimension formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orthoset import (
    OrthoSet,
    build_blocks,
    build_p0,
    polarization,
    require_normalized,
)
from .rootsys import DIFF, LONG, SHORT, SUM, Root, RootSystem, build_system
from .weyl import defect, inversion_length, involution_of


@dataclass(frozen=True)
class ReductionData:
    case: str                       # short | single_diff | single_sum | pair | column_only
    partner_col: int | None         # j for the diff/sum cases
    tilde: tuple[Root, ...]         # surviving positive roots, canonical order
    removed: tuple[Root, ...]
    derived: RootSystem
    pi: dict[Root, Root]
    r: int
    D_prime: OrthoSet
    xi_prime: dict[Root, int]


def reduce_set(D: OrthoSet, xi: dict[Root, int]) -> ReductionData:
    require_normalized(D)
    rs = D.system
    if rs.n == 0:
        raise ValueError("cannot reduce a rank-zero system")
    n = rs.n
    dc1 = D.in_col(1)
    kinds = sorted(a.kind for a in dc1)

    if rs.family == "B" and kinds == [SHORT]:
        case, j = "short", None
        removed = set(rs.col_set(1)) | set(rs.row_set(0))
        derived = build_system("D", n - 1)
        survivors = list(range(2, n + 1))
    elif dc1 and all(a.kind in (DIFF, SUM) for a in dc1):
        j = dc1[0].j
        if len(dc1) == 2:
            case = "pair"
        else:
            case = "single_diff" if dc1[0].kind == DIFF else "single_sum"
        removed = (set(rs.col_set(1)) | set(rs.col_set(j))
                   | set(rs.row_set(j)) | set(rs.row_set(-j)))
        derived = build_system(rs.family, n - 2)
        survivors = [k for k in range(2, n + 1) if k != j]
    else:
        case, j = "column_only", None
        removed = set(rs.col_set(1))
        derived = build_system(rs.family, n - 1)
        survivors = list(range(2, n + 1))

    relabel = {old: new for new, old in enumerate(survivors, start=1)}
    tilde = tuple(a for a in rs.positives if a not in removed)
    pi = {a: _relabel_root(a, relabel) for a in tilde}
    if set(pi.values()) != set(derived.positives):
        raise RuntimeError(f"relabeling of {rs!r} does not cover {derived!r}")

    outside = [a for a in D.roots if a not in dc1 and a not in tilde]
    if outside:
        raise RuntimeError(f"roots {outside} fall outside both column 1 and the survivors")
    D_prime = OrthoSet(derived, derived.sort(pi[a] for a in D.roots if a in pi))
    xi_prime = {pi[a]: xi[a] for a in D.roots if a in pi}

    c1 = rs.col_set(1)
    if case in ("single_diff", "single_sum"):
        other = Root(SUM if case == "single_diff" else DIFF, 1, j)
        r = len(c1) + len(rs.singular_split(other)[1])
    elif case == "pair":
        occupied = {a.row for a in D.roots}
        r = len(c1) + sum(1 for l in range(2, j) if -l not in occupied)
    else:
        discarded = build_blocks(D).discarded
        r = sum(1 for a in c1 if a not in discarded)

    return ReductionData(case, j, tilde, rs.sort(removed),
                         derived, pi, r, D_prime, xi_prime)


def _relabel_root(a: Root, relabel: dict[int, int]) -> Root:
    if a.kind in (DIFF, SUM):
        return Root(a.kind, relabel[a.i], relabel[a.j])
    return Root(a.kind, relabel[a.i])


@dataclass(frozen=True)
class Identity:
    name: str
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class RecursionReport:
    data: ReductionData
    identities: tuple[Identity, ...]

    @property
    def ok(self) -> bool:
        return all(i.ok for i in self.identities)


def recursion_report(D: OrthoSet, xi: dict[Root, int]) -> RecursionReport:
    """Both sides of every reduction identity that applies to this set."""
    rs = D.system
    red = reduce_set(D, xi)
    derived, pi = red.derived, red.pi

    sigma = involution_of(D)
    inv_set, l = inversion_length(rs, sigma)
    s = len(D.roots)
    theta = defect(D).theta

    sigma_p = involution_of(red.D_prime)
    inv_set_p, l_p = inversion_length(derived, sigma_p)
    s_p = len(red.D_prime.roots)
    theta_p = defect(red.D_prime).theta

    dim_p = polarization(D, xi).dim
    dim_pp = polarization(red.D_prime, red.xi_prime).dim

    tilde_set = set(red.tilde)
    d_tilde = [a for a in D.roots if a in tilde_set]

    idents = [
        Identity("polarization_dim", dim_p, dim_pp + red.r),
        Identity("set_size", s, s_p + (len(D.roots) - len(d_tilde))),
        Identity("dimension_recursion",
                 l - s - 2 * theta,
                 (l_p - s_p - 2 * theta_p) + 2 * (len(red.removed) - red.r)),
        Identity("inversion_count_restriction",
                 sum(1 for a in inv_set if a in tilde_set), l_p),
        Identity("inversion_transport_defect",
                 len({pi[a] for a in inv_set if a in tilde_set} ^ set(inv_set_p)), 0),
    ]

    c1 = rs.col_set(1)
    j = red.partner_col
    if red.case in ("single_diff", "single_sum"):
        dropped = Root(DIFF if red.case == "single_diff" else SUM, 1, j)
        idents.append(Identity(f"length_drop_{red.case}",
                               l, l_p + len(rs.singular_roots(dropped)) + 1))
    elif red.case == "short":
        neg_rows = sum(1 for a in d_tilde if a.row < 0)
        idents.append(Identity("length_drop_short", l, l_p + len(c1) + 2 * neg_rows))
    elif red.case == "pair":
        nested = sum(1 for a in d_tilde
                     if a.kind == SUM and 1 < a.i < a.j < j)
        straddling = sum(1 for a in d_tilde
                         if a.kind == DIFF and Root(SUM, a.i, a.j) in D.roots
                         and 1 < a.i < j < a.j)
        inner_shorts = sum(1 for a in d_tilde if a.kind == SHORT and 1 < a.i < j)
        idents.append(Identity("length_drop_pair",
                               l, l_p + len(c1) + len(rs.col_set(j))
                               + 4 * nested + 2 * straddling + 2 * inner_shorts))
    elif rs.family == "C" and any(a.kind == LONG for a in D.in_col(1)):
        idents.append(Identity("length_drop_long", l, l_p + len(c1)))
    else:
        idents.append(Identity("length_drop_none", l, l_p))

    return RecursionReport(red, tuple(idents))
