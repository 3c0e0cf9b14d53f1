"""Matrix model of the nilpotent algebra over a prime field.

Rows and columns of the m x m matrices are labelled 1, ..., n, 0, -n, ..., -1
(the 0 is dropped when m is even).  Every root vector is strictly lower
triangular in that order, so exponentials are polynomial and exact.

Structure constants are never tabulated by hand: they are read off integer
matrix commutators once per system and cached.  For family C the sum-root
vector is e_{-j,i} + e_{-i,j}; with the minus sign used for B and D the span
would not close under the bracket (the commutator of a difference root with a
long root would land outside it), which the table construction asserts.

Field elements are plain integer residues; ranks over F_p are computed by
exact Gaussian elimination, and every rank-based certificate in this package
is meant to be evaluated at two distinct primes (entries are defined over the
prime field, so agreement certifies the rank over the algebraic closure).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .rootsys import DIFF, LONG, SHORT, SUM, Root, RootSystem, build_system, root_sum


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def smallest_prime_geq(k: int) -> int:
    k = max(k, 2)
    while not is_prime(k):
        k += 1
    return k


def default_prime(rs: RootSystem) -> int:
    return smallest_prime_geq(rs.m)


@lru_cache(maxsize=None)
def _axis_positions(family: str, n: int) -> dict[int, int]:
    rs = build_system(family, n)
    labels = list(range(1, n + 1)) + ([0] if rs.m % 2 else []) + list(range(-n, 0))
    return {lab: k for k, lab in enumerate(labels)}


def root_matrix(rs: RootSystem, a: Root, p: int | None = None) -> np.ndarray:
    """The m x m matrix of a root vector; entries in {-1, 0, 1} over Z."""
    if a not in rs:
        raise ValueError(f"{a} is not a positive root of {rs!r}")
    if p is not None and p < rs.m:
        raise ValueError(f"prime {p} is smaller than the matrix size {rs.m}")
    pos = _axis_positions(rs.family, rs.n)
    M = np.zeros((rs.m, rs.m), dtype=np.int64)
    i, j = a.i, a.j
    if a.kind == DIFF:
        M[pos[j], pos[i]] = 1
        M[pos[-i], pos[-j]] = -1
    elif a.kind == SUM:
        M[pos[-j], pos[i]] = 1
        M[pos[-i], pos[j]] = 1 if rs.family == "C" else -1
    elif a.kind == SHORT:
        M[pos[0], pos[i]] = 1
        M[pos[-i], pos[0]] = -1
    else:
        M[pos[-i], pos[i]] = 1
    return M % p if p is not None else M


@lru_cache(maxsize=None)
def _bracket_table(family: str, n: int) -> dict[tuple[Root, Root], tuple[int, Root]]:
    """Nonzero [e_a, e_b] = c e_{a+b} for ordered pairs of positive roots.

    Built from integer commutators.  Raises if a commutator is not a scalar
    multiple of a single root vector or disagrees with root addition.
    """
    rs = build_system(family, n)
    pos = _axis_positions(family, n)
    mats = {a: root_matrix(rs, a) for a in rs.positives}
    table: dict[tuple[Root, Root], tuple[int, Root]] = {}
    for a in rs.positives:
        for b in rs.positives:
            comm = mats[a] @ mats[b] - mats[b] @ mats[a]
            s = root_sum(a, b)
            if s is not None and s not in rs:
                s = None
            if not comm.any():
                if s is not None:
                    raise RuntimeError(f"[{a}, {b}] vanished but {s} is a positive root")
                continue
            if s is None:
                raise RuntimeError(f"[{a}, {b}] is nonzero but the sum is not a positive root")
            c = int(comm[pos[s.row], pos[s.col]])
            if c not in (-2, -1, 1, 2) or (comm != c * mats[s]).any():
                raise RuntimeError(f"[{a}, {b}] is not a multiple of the root vector of {s}")
            table[(a, b)] = (c, s)
    return table


def bracket_table(rs: RootSystem) -> dict[tuple[Root, Root], tuple[int, Root]]:
    return _bracket_table(rs.family, rs.n)


def bracket_constant(rs: RootSystem, a: Root, b: Root) -> int:
    """c with [e_a, e_b] = c e_{a+b}; zero when the sum is not a root."""
    if a not in rs or b not in rs:
        raise ValueError(f"{a} or {b} is not a positive root of {rs!r}")
    entry = bracket_table(rs).get((a, b))
    return entry[0] if entry else 0


def bracket(rs: RootSystem, x: dict[Root, int], y: dict[Root, int], p: int) -> dict[Root, int]:
    """Bilinear extension of the bracket to sparse elements, mod p."""
    table = bracket_table(rs)
    out: dict[Root, int] = {}
    for a, xa in x.items():
        for b, yb in y.items():
            entry = table.get((a, b))
            if entry is None:
                continue
            c, s = entry
            out[s] = (out.get(s, 0) + xa * yb * c) % p
    return {a: v for a, v in out.items() if v}


def assemble(rs: RootSystem, x: dict[Root, int], p: int | None = None) -> np.ndarray:
    M = np.zeros((rs.m, rs.m), dtype=np.int64)
    for a, v in x.items():
        M += v * root_matrix(rs, a)
    return M % p if p is not None else M


def expand(rs: RootSystem, M: np.ndarray, p: int) -> dict[Root, int]:
    """Coefficients of M on the root-vector basis; M must lie in the span."""
    pos = _axis_positions(rs.family, rs.n)
    coeffs = {}
    for a in rs.positives:
        v = int(M[pos[a.row], pos[a.col]]) % p
        if v:
            coeffs[a] = v
    if ((assemble(rs, coeffs) - M) % p).any():
        raise RuntimeError("matrix does not lie in the span of the root vectors")
    return coeffs


def exp_unipotent(rs: RootSystem, x: dict[Root, int], p: int) -> np.ndarray:
    """exp of an algebra element: sum of X^k / k!, exact because X^m = 0."""
    if p < rs.m:
        raise ValueError(f"prime {p} is smaller than the matrix size {rs.m}; factorials degenerate")
    X = assemble(rs, x, p)
    acc = np.eye(rs.m, dtype=np.int64)
    term = np.eye(rs.m, dtype=np.int64)
    for k in range(1, rs.m):
        term = (term @ X * pow(k, -1, p)) % p  # X^k / k!
        if not term.any():
            break
        acc = (acc + term) % p
    return acc % p


def field_rank(M: np.ndarray, p: int) -> int:
    """Exact rank of an integer matrix over F_p."""
    A = (np.array(M, dtype=np.int64) % p).copy()
    if A.ndim != 2:
        raise ValueError("need a 2d array")
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        piv = None
        for k in range(r, rows):
            if A[k, c]:
                piv = k
                break
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        nz = np.nonzero(A[r + 1:, c])[0]
        if nz.size:
            A[r + 1 + nz] = (A[r + 1 + nz] - np.outer(A[r + 1 + nz, c], A[r])) % p
        r += 1
        if r == rows:
            break
    return r


def rref_mod(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and its pivot columns."""
    A = (np.array(M, dtype=np.int64) % p).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = None
        for k in range(r, rows):
            if A[k, c]:
                piv = k
                break
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A[:r], pivots


def reduce_against(Z: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Residues of the rows of Z modulo the row space given by an RREF."""
    Z = (np.array(Z, dtype=np.int64) % p).copy()
    for k, c in enumerate(pivots):
        nz = np.nonzero(Z[:, c])[0]
        if nz.size:
            Z[nz] = (Z[nz] - np.outer(Z[nz, c], R[k])) % p
    return Z


def matrix_inverse_mod(M: np.ndarray, p: int) -> np.ndarray:
    A = (np.array(M, dtype=np.int64) % p).copy()
    k = A.shape[0]
    aug = np.concatenate([A, np.eye(k, dtype=np.int64)], axis=1)
    R, pivots = rref_mod(aug, p)
    if pivots[:k] != list(range(k)):
        raise ValueError("matrix is singular mod p")
    return R[:, k:]
