"""Signed permutations: the involution of an orthogonal set and its statistics.

The Weyl group acts on indices 1..n with signs.  An orthogonal set D gives a
product of commuting reflections; its inversion count l, the size s = |D| and
the defect correction theta combine into the orbit dimension l - s - 2*theta.
The defect has four summands: two count interleavings among (diff, sum)
column pairs, two are anchored at the short root of D when one is present.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orthoset import OrthoSet, orthogonal_set, require_normalized
from .rootsys import DIFF, LONG, SHORT, SUM, Root, RootSystem, build_system

Images = tuple[int, ...]


def identity_perm(n: int) -> Images:
    return tuple(range(1, n + 1))


def _reflect_index(beta: Root, v: int) -> int:
    """Image of the signed index v under the reflection in beta."""
    a, sign = abs(v), 1 if v > 0 else -1
    if beta.kind == DIFF:
        if a == beta.i:
            return sign * beta.j
        if a == beta.j:
            return sign * beta.i
    elif beta.kind == SUM:
        if a == beta.i:
            return -sign * beta.j
        if a == beta.j:
            return -sign * beta.i
    elif a == beta.i:  # short or long
        return -v
    return v


def reflection(n: int, beta: Root) -> Images:
    return tuple(_reflect_index(beta, v) for v in identity_perm(n))


def involution_of(D: OrthoSet) -> Images:
    """Product of the (commuting) reflections in the roots of D."""
    images = list(identity_perm(D.system.n))
    for beta in D.roots:
        images = [_reflect_index(beta, v) for v in images]
    result = tuple(images)
    if compose(result, result) != identity_perm(D.system.n):
        raise RuntimeError(f"involution of {D} does not square to the identity")
    return result


def compose(w: Images, u: Images) -> Images:
    """w after u."""
    return tuple(apply_index(w, v) for v in u)


def apply_index(w: Images, v: int) -> int:
    return w[v - 1] if v > 0 else -w[-v - 1]


def image_is_negative(w: Images, a: Root) -> bool:
    """Whether w sends the positive root a to a negative root."""
    items = sorted((abs(apply_index(w, k)), (1 if apply_index(w, k) > 0 else -1) * c)
                   for k, c in a.coords().items())
    return items[0][1] < 0


def inversion_length(rs: RootSystem, w: Images) -> tuple[frozenset[Root], int]:
    """Positive roots sent negative by w, and their number."""
    inv = frozenset(a for a in rs.positives if image_is_negative(w, a))
    return inv, len(inv)


@dataclass(frozen=True)
class Defect:
    d1: int
    d2: int
    d3: int
    d4: int
    anchor: int | None  # index l with e_l in D, when present

    @property
    def theta(self) -> int:
        return self.d1 + self.d2 + self.d3 + self.d4


def defect(D: OrthoSet) -> Defect:
    """The four-part correction statistic of a normalized set.

    d1 counts sum roots strictly nested inside a (diff, sum) column pair;
    d2 counts interleaved (diff, sum) column pairs; d3 counts sum roots whose
    column lies beyond the short root's index; d4 counts (diff, sum) pairs
    straddling it.
    """
    require_normalized(D)
    sums = sorted((a.i, a.j) for a in D.roots if a.kind == SUM)
    pairs = sorted((a.i, a.j) for a in D.roots
                   if a.kind == DIFF and Root(SUM, a.i, a.j) in D.roots)
    shorts = [a.i for a in D.roots if a.kind == SHORT]
    d1 = sum(1 for (i, j) in pairs for (l, s) in sums if i < l < s < j)
    d2 = sum(1 for (i, j) in pairs for (l, s) in pairs if i < l < j < s)
    anchor = shorts[0] if shorts else None
    d3 = d4 = 0
    if anchor is not None:
        d3 = sum(1 for (i, j) in sums if i > anchor)
        d4 = sum(1 for (i, j) in pairs if i < anchor < j)
    return Defect(d1, d2, d3, d4, anchor)


def predicted_dim(D: OrthoSet) -> int:
    """Orbit dimension l - s - 2*theta; always even and within [0, 2*mu]."""
    require_normalized(D)
    rs = D.system
    _, l = inversion_length(rs, involution_of(D))
    value = l - len(D.roots) - 2 * defect(D).theta
    if value < 0 or value % 2:
        raise RuntimeError(f"dimension formula gave {value} for {D}")
    if value > 2 * mu_max(rs.family, rs.n):
        raise RuntimeError(f"dimension {value} for {D} exceeds the family maximum")
    return value


def mu_max(family: str, n: int) -> int:
    """Half the maximal orbit dimension.

    For D_n the even case is n(n-2)/2: the column sums s_1 + ... + s_t below
    hit exactly that value, and exhaustive sweeps at small rank confirm no
    orbit exceeds it (n(n-1)/2 would already fail for the abelian D_2).
    """
    if family in ("B", "C"):
        return n * (n - 1) // 2
    if n % 2 == 0:
        return n * (n - 2) // 2
    return (n - 1) ** 2 // 2


def column_pair_sizes(family: str, n: int) -> list[int]:
    """|S+| of the sum roots e_1+e_2, e_3+e_4, ...; their total is mu."""
    rs = build_system(family, n)
    t = n // 2 if family in ("B", "C") else (n - 1) // 2
    sizes = []
    for j in range(1, t + 1):
        plus, _ = rs.singular_split(Root(SUM, 2 * j - 1, 2 * j))
        sizes.append(len(plus))
    return sizes


def spectrum_witness(family: str, n: int, l: int) -> OrthoSet:
    """An orthogonal set with orbit dimension exactly 2l and zero defect.

    Takes the leading column pairs e_1+e_2, ..., e_{2i-1}+e_{2i} while their
    |S+| total stays below l, then walks the next odd column for the first
    root making up the difference.  Postconditions are asserted.
    """
    rs = build_system(family, n)
    mu = mu_max(rs.family, n)
    if not 0 <= l <= mu:
        raise ValueError(f"exponent {l} outside [0, {mu}] for {rs!r}")
    if not rs.positives:
        return orthogonal_set(rs, [])
    sizes = column_pair_sizes(rs.family, n)
    i, total = 0, 0
    while i < len(sizes) and total + sizes[i] < l:
        total += sizes[i]
        i += 1
    need = l - total
    col = 2 * i + 1
    chosen = None
    for a in rs.col_set(col):
        # the long root sits last in the column walk; it is only ever reached
        # when the column holds nothing else (C_1 after reductions)
        if len(rs.singular_split(a)[0]) == need:
            chosen = a
            break
    if chosen is None:
        raise RuntimeError(f"no root of column {col} in {rs!r} has column share {need}")
    D = orthogonal_set(rs, [Root(SUM, 2 * k - 1, 2 * k) for k in range(1, i + 1)] + [chosen])
    if defect(D).theta != 0 or predicted_dim(D) != 2 * l:
        raise RuntimeError(f"witness {D} failed verification for exponent {l}")
    return D
