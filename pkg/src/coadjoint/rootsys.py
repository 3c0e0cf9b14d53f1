"""Positive roots of the classical families B_n, C_n, D_n.

Roots are structured values (difference, sum, short, long) rather than raw
coordinate vectors: the row/column bookkeeping that drives everything else in
the package is a case analysis on the kind.  Coordinates exist only for inner
products and for the signed-permutation action.

Each positive root occupies one cell of an m x m matrix (see :mod:`.lie`);
``row`` and ``col`` name that cell.  A system fixes a deterministic total
order on its positive roots: ascending column, and inside column ``i`` the
row runs ``i+1, ..., n, 0, -n, ..., -(i+1), -i`` (0 only occurs for B, the
final ``-i`` only for C).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

FAMILIES = ("B", "C", "D")

DIFF = "diff"    # e_i - e_j, i < j
SUM = "sum"      # e_i + e_j, i < j
SHORT = "short"  # e_i       (family B)
LONG = "long"    # 2 e_i     (family C)


@dataclass(frozen=True)
class Root:
    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind in (DIFF, SUM):
            if not 1 <= self.i < self.j:
                raise ValueError(f"need 1 <= i < j for a {self.kind} root, got ({self.i}, {self.j})")
        elif self.kind in (SHORT, LONG):
            if self.i < 1 or self.j != 0:
                raise ValueError(f"bad indices for a {self.kind} root: ({self.i}, {self.j})")
        else:
            raise ValueError(f"unknown root kind: {self.kind!r}")

    @property
    def row(self) -> int:
        if self.kind == DIFF:
            return self.j
        if self.kind == SUM:
            return -self.j
        if self.kind == SHORT:
            return 0
        return -self.i

    @property
    def col(self) -> int:
        return self.i

    def coords(self) -> dict[int, int]:
        """Sparse coefficients on the standard basis e_1, ..., e_n."""
        if self.kind == DIFF:
            return {self.i: 1, self.j: -1}
        if self.kind == SUM:
            return {self.i: 1, self.j: 1}
        if self.kind == SHORT:
            return {self.i: 1}
        return {self.i: 2}

    def indices(self) -> tuple[int, ...]:
        return (self.i, self.j) if self.kind in (DIFF, SUM) else (self.i,)

    def __str__(self) -> str:
        if self.kind == DIFF:
            return f"e{self.i}-e{self.j}"
        if self.kind == SUM:
            return f"e{self.i}+e{self.j}"
        if self.kind == SHORT:
            return f"e{self.i}"
        return f"2e{self.i}"


def diff(i: int, j: int) -> Root:
    return Root(DIFF, i, j)


def rsum(i: int, j: int) -> Root:
    return Root(SUM, i, j)


def short(i: int) -> Root:
    return Root(SHORT, i)


def long(i: int) -> Root:
    return Root(LONG, i)


def inner_product(a: Root, b: Root) -> int:
    """Euclidean inner product via e-coordinates; always an integer."""
    ca, cb = a.coords(), b.coords()
    return sum(v * cb.get(k, 0) for k, v in ca.items())


def root_sum(a: Root, b: Root) -> Root | None:
    """The root a + b, or None when the coordinate sum is not a root shape."""
    c = dict(a.coords())
    for k, v in b.coords().items():
        c[k] = c.get(k, 0) + v
    items = sorted((k, v) for k, v in c.items() if v)
    if len(items) == 1:
        (i, v), = items
        if v == 1:
            return Root(SHORT, i)
        if v == 2:
            return Root(LONG, i)
    elif len(items) == 2:
        (i, vi), (j, vj) = items
        if vi == 1 and vj == 1:
            return Root(SUM, i, j)
        if vi == 1 and vj == -1:
            return Root(DIFF, i, j)
    return None


def row_col(a: Root) -> tuple[int, int]:
    return (a.row, a.col)


class RootSystem:
    """Positive roots of one classical family at a fixed rank.

    Degenerate ranks (B_0, C_0, D_0, D_1) are admitted with empty positive
    sets so that rank reduction never falls off the lattice.  Instances are
    immutable after construction and shared via :func:`build_system`.
    """

    def __init__(self, family: str, n: int):
        self.family = family
        self.n = n
        self.m = 2 * n + 1 if family == "B" else 2 * n
        roots: list[Root] = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                roots.append(Root(DIFF, i, j))
            if family == "B":
                roots.append(Root(SHORT, i))
            for j in range(n, i, -1):
                roots.append(Root(SUM, i, j))
            if family == "C":
                roots.append(Root(LONG, i))
        self.positives: tuple[Root, ...] = tuple(roots)
        self._pos = {a: k for k, a in enumerate(roots)}
        self._rows: dict[int, tuple[Root, ...]] = {}
        self._cols: dict[int, tuple[Root, ...]] = {}
        for i in range(-n, n + 1):
            self._rows[i] = tuple(a for a in roots if a.row == i)
        for j in range(1, n + 1):
            self._cols[j] = tuple(a for a in roots if a.col == j)
        self._singular: dict[Root, tuple[frozenset[Root], ...]] = {}

    def __contains__(self, a: Root) -> bool:
        return a in self._pos

    def __len__(self) -> int:
        return len(self.positives)

    def __repr__(self) -> str:
        return f"RootSystem({self.family}{self.n})"

    def __reduce__(self):
        return (build_system, (self.family, self.n))

    def index(self, a: Root) -> int:
        """Ordinal of a positive root in the canonical order."""
        try:
            return self._pos[a]
        except KeyError:
            raise ValueError(f"{a} is not a positive root of {self!r}") from None

    def sort(self, roots: Iterable[Root]) -> tuple[Root, ...]:
        return tuple(sorted(roots, key=self.index))

    def row_set(self, i: int) -> tuple[Root, ...]:
        if not -self.n <= i <= self.n:
            raise ValueError(f"row index {i} outside [-{self.n}, {self.n}]")
        return self._rows.get(i, ())

    def col_set(self, j: int) -> tuple[Root, ...]:
        if not 1 <= j <= self.n:
            raise ValueError(f"column index {j} outside [1, {self.n}]")
        return self._cols[j]

    def line_sets(self, i: int, j: int) -> tuple[tuple[Root, ...], tuple[Root, ...]]:
        return self.row_set(i), self.col_set(j)

    def singular_pairs(self, beta: Root) -> tuple[frozenset[Root], ...]:
        """All unordered pairs {a, g} of positive roots with a + g = beta."""
        if beta not in self._pos:
            raise ValueError(f"{beta} is not a positive root of {self!r}")
        cached = self._singular.get(beta)
        if cached is not None:
            return cached
        pairs = []
        for a in self.positives:
            g = root_diff(beta, a)
            if g is not None and g in self._pos and self._pos[a] < self._pos[g]:
                pairs.append(frozenset((a, g)))
        result = tuple(pairs)
        self._singular[beta] = result
        return result

    def singular_roots(self, beta: Root) -> frozenset[Root]:
        return frozenset(a for pair in self.singular_pairs(beta) for a in pair)

    def singular_split(self, beta: Root) -> tuple[frozenset[Root], frozenset[Root]]:
        """Split the singular roots of beta into the column part and the rest.

        The column part S+ is the intersection with the column of beta,
        except for a long root 2e_i where it is the sum roots e_i + e_l
        (both members of each pair would lie in column i otherwise).
        """
        s_all = self.singular_roots(beta)
        if self.family == "C" and beta.kind == LONG:
            plus = frozenset(a for a in s_all if a.kind == SUM and a.i == beta.i)
        else:
            plus = frozenset(a for a in s_all if a.col == beta.col)
        return plus, s_all - plus


@lru_cache(maxsize=None)
def build_system(family: str, n: int) -> RootSystem:
    """Shared, validated construction of a root system."""
    if not isinstance(family, str) or family.upper() not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"rank must be a nonnegative integer, got {n!r}")
    return RootSystem(family.upper(), n)


def root_diff(a: Root, b: Root) -> Root | None:
    """The root a - b, or None."""
    c = dict(a.coords())
    for k, v in b.coords().items():
        c[k] = c.get(k, 0) - v
    items = sorted((k, v) for k, v in c.items() if v)
    if len(items) == 1:
        (i, v), = items
        if v == 1:
            return Root(SHORT, i)
        if v == 2:
            return Root(LONG, i)
    elif len(items) == 2:
        (i, vi), (j, vj) = items
        if vi == 1 and vj == 1:
            return Root(SUM, i, j)
        if vi == 1 and vj == -1:
            return Root(DIFF, i, j)
    return None


# ---------------------------------------------------------------------------
# Text grammar, shared with the CLI: e<i>, 2e<i>, e<i>+e<j>, e<i>-e<j>;
# a set literal is a comma-separated list; a scalar literal is root=value.

_ROOT_RE = re.compile(r"^(?:(2)e(\d+)|e(\d+)(?:([+-])e(\d+))?)$")


def parse_root(rs: RootSystem, text: str) -> Root:
    t = text.strip().replace(" ", "")
    m = _ROOT_RE.match(t)
    if not m:
        raise ValueError(f"cannot parse root {text!r}")
    if m.group(1):
        a = Root(LONG, int(m.group(2)))
    elif m.group(4) is None:
        a = Root(SHORT, int(m.group(3)))
    else:
        i, j = int(m.group(3)), int(m.group(5))
        if not i < j:
            raise ValueError(f"need i < j in {text!r}")
        a = Root(SUM if m.group(4) == "+" else DIFF, i, j)
    if a not in rs:
        raise ValueError(f"{a} is not a positive root of {rs!r}")
    return a


def parse_root_set(rs: RootSystem, text: str) -> tuple[Root, ...]:
    tokens = [t for t in (s.strip() for s in text.split(",")) if t]
    roots = [parse_root(rs, t) for t in tokens]
    if len(set(roots)) != len(roots):
        seen = set()
        for a in roots:
            if a in seen:
                raise ValueError(f"duplicate root {a} in set literal {text!r}")
            seen.add(a)
    return tuple(roots)


def format_root_set(roots: Iterable[Root]) -> str:
    return ",".join(str(a) for a in roots)


def parse_xi(rs: RootSystem, text: str) -> dict[Root, int]:
    out: dict[Root, int] = {}
    for tok in (s.strip() for s in text.split(",")):
        if not tok:
            continue
        if "=" not in tok:
            raise ValueError(f"scalar entry {tok!r} is not of the form root=value")
        root_part, _, val_part = tok.partition("=")
        a = parse_root(rs, root_part)
        try:
            v = int(val_part)
        except ValueError:
            raise ValueError(f"scalar value {val_part!r} is not an integer") from None
        if v == 0:
            raise ValueError(f"scalar for {a} must be nonzero")
        if a in out:
            raise ValueError(f"duplicate scalar for {a}")
        out[a] = v
    return out


def format_xi(rs: RootSystem, xi: dict[Root, int]) -> str:
    return ",".join(f"{a}={xi[a]}" for a in sorted(xi, key=rs.index))
