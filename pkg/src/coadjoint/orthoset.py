"""Orthogonal subsets of positive roots and the polarization they induce.

An orthogonal subset D together with nonzero scalars xi defines the canonical
functional f = sum xi_b e*_b.  The discarded set M is assembled column by
column from the "off-column" halves of singular pairs; its complement P plus
a handful of two-term correction vectors spans a subalgebra that is a maximal
f-isotropic subspace (certified externally, see :mod:`.oracle`).

Normalization drops redundancies that do not move the orbit: of two short
roots the one with the larger index goes (together with its scalar), and in
family C a difference root is dropped whenever its sum partner is present.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .rootsys import (
    DIFF,
    LONG,
    SHORT,
    SUM,
    Root,
    RootSystem,
    format_root_set,
    inner_product,
)


@dataclass(frozen=True)
class OrthoSet:
    """A set of pairwise orthogonal positive roots, in canonical order."""

    system: RootSystem
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, a: Root) -> bool:
        return a in self.roots

    def __str__(self) -> str:
        return format_root_set(self.roots)

    def columns(self) -> list[int]:
        """Distinct column numbers meeting the set, ascending."""
        return sorted({a.col for a in self.roots})

    def in_row(self, i: int) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if a.row == i)

    def in_col(self, j: int) -> tuple[Root, ...]:
        return tuple(a for a in self.roots if a.col == j)


def orthogonal_set(rs: RootSystem, roots: Iterable[Root]) -> OrthoSet:
    """Validate and build an OrthoSet; reports the first offending pair."""
    rts = list(roots)
    seen = set()
    for a in rts:
        if a not in rs:
            raise ValueError(f"{a} is not a positive root of {rs!r}")
        if a in seen:
            raise ValueError(f"duplicate root {a}")
        seen.add(a)
    for k, a in enumerate(rts):
        for b in rts[k + 1:]:
            ip = inner_product(a, b)
            if ip != 0:
                raise ValueError(f"roots {a} and {b} are not orthogonal (product {ip})")
    return OrthoSet(rs, rs.sort(rts))


def is_normalized(D: OrthoSet) -> bool:
    shorts = [a for a in D.roots if a.kind == SHORT]
    if len(shorts) > 1:
        return False
    if D.system.family == "C":
        pairs = {(a.i, a.j) for a in D.roots if a.kind == DIFF}
        if any(a.kind == SUM and (a.i, a.j) in pairs for a in D.roots):
            return False
    return True


def require_normalized(D: OrthoSet) -> None:
    if not is_normalized(D):
        raise ValueError(f"orthogonal set {D} is not normalized")


def normalize(D: OrthoSet, xi: dict[Root, int]) -> tuple[OrthoSet, dict[Root, int]]:
    """Drop redundant roots (and their scalars) without moving the orbit."""
    rs = D.system
    keep = list(D.roots)
    xi2 = dict(xi)
    shorts = sorted((a for a in keep if a.kind == SHORT), key=lambda a: a.i)
    for a in shorts[1:]:
        keep.remove(a)
        xi2.pop(a, None)
    if rs.family == "C":
        sums = {(a.i, a.j) for a in keep if a.kind == SUM}
        for a in [a for a in keep if a.kind == DIFF and (a.i, a.j) in sums]:
            keep.remove(a)
            xi2.pop(a, None)
    return OrthoSet(rs, rs.sort(keep)), xi2


def enumerate_orthogonal(rs: RootSystem, normalized_only: bool = True) -> Iterator[OrthoSet]:
    """All orthogonal subsets, depth first over the canonical root order.

    With normalized_only the stream is exactly the normalized subsets; either
    way subsets appear in lexicographic order of their ordinal tuples, the
    empty set first.
    """
    roots = rs.positives
    n_roots = len(roots)
    fam = rs.family

    def walk(chosen: list[Root], start: int, have_short: bool) -> Iterator[OrthoSet]:
        yield OrthoSet(rs, tuple(chosen))
        for k in range(start, n_roots):
            cand = roots[k]
            if normalized_only:
                if fam == "B" and cand.kind == SHORT and have_short:
                    continue
                if fam == "C" and cand.kind == SUM and Root(DIFF, cand.i, cand.j) in chosen:
                    continue
            if any(inner_product(cand, b) != 0 for b in chosen):
                continue
            chosen.append(cand)
            yield from walk(chosen, k + 1, have_short or cand.kind == SHORT)
            chosen.pop()

    yield from walk([], 0, False)


def enumerate_normalized(rs: RootSystem) -> Iterator[OrthoSet]:
    return enumerate_orthogonal(rs, normalized_only=True)


# ---------------------------------------------------------------------------
# Scalars

def ones_xi(D: OrthoSet) -> dict[Root, int]:
    return {a: 1 for a in D.roots}


def seeded_xi(D: OrthoSet, seed, bound: int) -> dict[Root, int]:
    """Deterministic nonzero scalars, uniform on 1..bound-1.

    Seeds may be strings; values below every working prime stay nonzero after
    reduction, so one draw serves all primes of a two-prime certificate.
    """
    if bound < 2:
        raise ValueError("need bound >= 2 to sample nonzero scalars")
    rng = random.Random(str(seed))
    return {a: rng.randrange(1, bound) for a in D.roots}


def canonical_form(D: OrthoSet, xi: dict[Root, int], p: int) -> dict[Root, int]:
    """The functional with coefficient xi_b at each b in D, reduced mod p."""
    if set(xi) != set(D.roots):
        raise ValueError("scalar assignment domain does not match the set")
    out = {}
    for a in D.roots:
        v = xi[a] % p
        if v == 0:
            raise ValueError(f"scalar for {a} vanishes mod {p}")
        out[a] = v
    return out


# ---------------------------------------------------------------------------
# Blocks and the polarization basis

@dataclass(frozen=True)
class Blocks:
    items: tuple[tuple[int, tuple[Root, ...]], ...]  # (column, roots of its block)
    discarded: frozenset[Root]                       # union of the blocks

    def block_of(self, col: int) -> tuple[Root, ...]:
        for j, roots in self.items:
            if j == col:
                return roots
        return ()


def build_blocks(D: OrthoSet) -> Blocks:
    """Column blocks of discarded roots.

    Walking the columns meeting D in increasing order, each block collects the
    off-column singular halves of the column's roots, skipping any root that
    itself, or whose complementary half, already sits in an earlier block.
    """
    require_normalized(D)
    rs = D.system
    items: list[tuple[int, tuple[Root, ...]]] = []
    earlier: set[Root] = set()
    for j in D.columns():
        block: set[Root] = set()
        for beta in D.in_col(j):
            _, minus = rs.singular_split(beta)
            for g in minus:
                comp = _pair_complement(rs, beta, g)
                if g in earlier or comp in earlier:
                    continue
                block.add(g)
        items.append((j, rs.sort(block)))
        earlier |= block
    return Blocks(tuple(items), frozenset(earlier))


def _pair_complement(rs: RootSystem, beta: Root, g: Root) -> Root:
    from .rootsys import root_diff

    comp = root_diff(beta, g)
    if comp is None or comp not in rs:
        raise RuntimeError(f"{g} is not half of a singular pair of {beta}")
    return comp


def build_p0(D: OrthoSet, xi: dict[Root, int]) -> list[dict[Root, int]]:
    """Two-term correction vectors for columns holding a (diff, sum) pair.

    For a pair e_i -+ e_j in D and i < l < j the vector
    xi[e_i+e_j] * e_{e_l-e_j} - xi[e_i-e_j] * e_{e_l+e_j} is included when
    both supports lie in the block of column i and no root of D sits in row
    -l.  Empty for family C, whose normalized sets never keep such pairs.
    """
    require_normalized(D)
    rs = D.system
    blocks = build_blocks(D)
    occupied_rows = {a.row for a in D.roots}
    out: list[dict[Root, int]] = []
    for dm in D.roots:
        if dm.kind != DIFF:
            continue
        dp = Root(SUM, dm.i, dm.j)
        if dp not in D.roots:
            continue
        i, j = dm.i, dm.j
        block = set(blocks.block_of(i))
        for l in range(i + 1, j):
            gm, gp = Root(DIFF, l, j), Root(SUM, l, j)
            if gm not in block or gp not in block:
                continue
            if -l in occupied_rows:
                continue
            out.append({gm: xi[dp], gp: -xi[dm]})
    return out


@dataclass(frozen=True)
class PolarizationBasis:
    main: tuple[Root, ...]            # kept roots, canonical order
    correction: tuple[dict[Root, int], ...]
    blocks: Blocks
    dim: int

    def rows(self, rs: RootSystem, p: int) -> np.ndarray:
        """Dense basis matrix over F_p, one row per basis vector."""
        N = len(rs.positives)
        M = np.zeros((self.dim, N), dtype=np.int64)
        for k, a in enumerate(self.main):
            M[k, rs.index(a)] = 1
        for k, vec in enumerate(self.correction):
            for a, v in vec.items():
                M[len(self.main) + k, rs.index(a)] = v % p
        return M


def polarization(D: OrthoSet, xi: dict[Root, int]) -> PolarizationBasis:
    """Basis of the candidate polarization: kept roots plus corrections.

    Supports of the correction vectors sit inside the discarded set and are
    pairwise disjoint, so the dimension is just the basis size; the rank
    assertion lives in the certification path.
    """
    require_normalized(D)
    rs = D.system
    blocks = build_blocks(D)
    main = tuple(a for a in rs.positives if a not in blocks.discarded)
    corr = tuple(build_p0(D, xi))
    return PolarizationBasis(main, corr, blocks, len(main) + len(corr))
