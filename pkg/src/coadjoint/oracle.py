"""Independent ground truth for orbit dimensions and polarizations.

Three oracles, none of which looks at the combinatorial dimension formula:

* the rank of the skew form f([., .]) on the root-vector basis, which equals
  the orbit dimension over the algebraic closure (evaluated at two primes,
  since the entries live in the prime field);
* a literal breadth-first closure of the canonical functional under the
  coadjoint action of the root subgroups over a tiny finite field;
* membership/isotropy/codimension certification of the polarization basis.

The coadjoint action convention is (x.l)(y) = l(Ad(x^-1) y), matched against
the sign a difference-root subgroup produces on a short-root functional.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .lie import (
    bracket,
    bracket_constant,
    exp_unipotent,
    expand,
    field_rank,
    is_prime,
    matrix_inverse_mod,
    reduce_against,
    root_matrix,
    rref_mod,
)
from .orthoset import OrthoSet, canonical_form, polarization
from .rootsys import Root, RootSystem

ORBIT_RANK_BUDGET = 3
CENSUS_STATE_BUDGET = 2_000_000


def skew_form(D: OrthoSet, xi: dict[Root, int], p: int) -> np.ndarray:
    """Matrix of f([e_a, e_b]) on the canonical basis, mod p."""
    rs = D.system
    f = canonical_form(D, xi, p)
    N = len(rs.positives)
    B = np.zeros((N, N), dtype=np.int64)
    for beta, coeff in f.items():
        for pair in rs.singular_pairs(beta):
            a, g = tuple(pair)
            c = bracket_constant(rs, a, g)
            B[rs.index(a), rs.index(g)] = c * coeff % p
            B[rs.index(g), rs.index(a)] = -c * coeff % p
    return B


def skew_rank_dim(D: OrthoSet, xi: dict[Root, int], p: int) -> int:
    """Orbit dimension as the exact rank of the skew form; always even."""
    if p < D.system.m:
        raise ValueError(f"prime {p} is smaller than the matrix size {D.system.m}")
    rank = field_rank(skew_form(D, xi, p), p)
    if rank % 2:
        raise RuntimeError(f"skew form of {D} has odd rank {rank} mod {p}")
    return rank


def coadjoint_act(rs: RootSystem, p: int, g: np.ndarray,
                  lam: dict[Root, int]) -> dict[Root, int]:
    """(g.lam)(e_a) = lam(g^-1 e_a g), re-expanded on the root basis."""
    g_inv = matrix_inverse_mod(g, p)
    out: dict[Root, int] = {}
    for a in rs.positives:
        conj = (g_inv @ root_matrix(rs, a) @ g) % p
        coeffs = expand(rs, conj, p)
        v = sum(lam.get(b, 0) * c for b, c in coeffs.items()) % p
        if v:
            out[a] = v
    return out


def _action_matrix(rs: RootSystem, q: int, alpha: Root, t: int) -> np.ndarray:
    """Matrix A with (new lam) = lam @ A for the generator exp(t e_alpha)."""
    g = exp_unipotent(rs, {alpha: t}, q)
    g_inv = exp_unipotent(rs, {alpha: (-t) % q}, q)
    N = len(rs.positives)
    A = np.zeros((N, N), dtype=np.int64)
    for a in rs.positives:
        conj = (g_inv @ root_matrix(rs, a) @ g) % q
        for b, c in expand(rs, conj, q).items():
            A[rs.index(b), rs.index(a)] = c
    return A


def _generators(rs: RootSystem, q: int) -> list[np.ndarray]:
    return [_action_matrix(rs, q, a, t) for a in rs.positives for t in range(1, q)]


@dataclass(frozen=True)
class OrbitSample:
    states: frozenset[tuple[int, ...]]
    generators: tuple[tuple[Root, int], ...]  # (root, subgroup parameter)
    q: int

    @property
    def size(self) -> int:
        return len(self.states)

    @property
    def dimension(self) -> int:
        d = 0
        size = self.size
        while size > 1:
            if size % self.q:
                raise RuntimeError(f"orbit size {self.size} is not a power of {self.q}")
            size //= self.q
            d += 1
        return d


def orbit_bfs(D: OrthoSet, xi: dict[Root, int], q: int) -> OrbitSample:
    """Closure of the canonical functional under all root subgroups."""
    rs = D.system
    if rs.n > ORBIT_RANK_BUDGET:
        raise ValueError(f"orbit enumeration is budgeted to rank {ORBIT_RANK_BUDGET}")
    if not is_prime(q) or q < rs.m:
        raise ValueError(f"need a prime >= {rs.m}, got {q}")
    N = len(rs.positives)
    f = canonical_form(D, xi, q)
    start = np.zeros(N, dtype=np.int64)
    for a, v in f.items():
        start[rs.index(a)] = v
    labels = tuple((a, t) for a in rs.positives for t in range(1, q))
    gens = _generators(rs, q)
    powers = q ** np.arange(N, dtype=np.int64) if N else np.zeros(0, dtype=np.int64)
    seen = {int(start @ powers)}
    states = [start]
    frontier = start.reshape(1, N)
    while frontier.size:
        batches = [(frontier @ A) % q for A in gens]
        fresh = []
        for batch in batches:
            for row, enc in zip(batch, batch @ powers):
                enc = int(enc)
                if enc not in seen:
                    seen.add(enc)
                    fresh.append(row)
        if not fresh:
            break
        frontier = np.array(fresh, dtype=np.int64)
        states.extend(fresh)
    return OrbitSample(frozenset(tuple(int(v) for v in row) for row in states), labels, q)


@dataclass(frozen=True)
class CensusResult:
    q: int
    n_functionals: int
    orbit_counts: dict[int, int]  # orbit dimension -> number of orbits

    @property
    def dimensions(self) -> set[int]:
        return set(self.orbit_counts)

    @property
    def total_size(self) -> int:
        return sum(self.q ** d * k for d, k in self.orbit_counts.items())


def full_orbit_census(family: str, n: int, q: int) -> CensusResult:
    """Partition the whole dual space over F_q into coadjoint orbits."""
    from .rootsys import build_system

    if (family in ("B", "C") and n > 2) or (family == "D" and n > 3):
        raise ValueError(f"census of {family}{n} exceeds the budget (B/C to rank 2, D to rank 3)")
    rs = build_system(family, n)
    if not is_prime(q) or q < rs.m:
        raise ValueError(f"need a prime >= {rs.m}, got {q}")
    N = len(rs.positives)
    total = q ** N
    if total > CENSUS_STATE_BUDGET:
        raise ValueError(f"census needs {total} functionals, over the budget {CENSUS_STATE_BUDGET}")
    gens = _generators(rs, q)
    powers = q ** np.arange(N, dtype=np.int64) if N else np.zeros(0, dtype=np.int64)
    visited = np.zeros(total, dtype=bool)
    counts: Counter[int] = Counter()
    for seed in range(total):
        if visited[seed]:
            continue
        visited[seed] = True
        frontier = np.array([(seed // powers) % q]) if N else np.zeros((1, 0), dtype=np.int64)
        size = 1
        while frontier.size:
            encs = []
            for A in gens:
                encs.append(((frontier @ A) % q) @ powers)
            if not encs:
                break
            fresh = np.unique(np.concatenate(encs))
            fresh = fresh[~visited[fresh]]
            if fresh.size == 0:
                break
            visited[fresh] = True
            size += fresh.size
            frontier = (fresh[:, None] // powers[None, :]) % q
        d = 0
        while q ** d < size:
            d += 1
        if q ** d != size:
            raise RuntimeError(f"orbit size {size} is not a power of {q}")
        counts[d] += 1
    result = CensusResult(q, total, dict(sorted(counts.items())))
    if result.total_size != total:
        raise RuntimeError("census does not partition the dual space")
    return result


@dataclass(frozen=True)
class PolarizationCertificate:
    main_size: int
    correction_size: int
    dim: int
    oracle_rank: int
    subalgebra_ok: bool
    isotropic_ok: bool
    maximal_ok: bool

    @property
    def ok(self) -> bool:
        return self.subalgebra_ok and self.isotropic_ok and self.maximal_ok


def certify_polarization(D: OrthoSet, xi: dict[Root, int], p: int) -> PolarizationCertificate:
    """Check the three polarization properties against the rank oracle.

    Closure and isotropy are tested on all basis pairs; maximality via the
    codimension matching half the skew rank.
    """
    rs = D.system
    pol = polarization(D, xi)
    N = len(rs.positives)
    basis_rows = pol.rows(rs, p)
    if pol.dim and field_rank(basis_rows, p) != pol.dim:
        raise RuntimeError(f"polarization basis of {D} is linearly dependent mod {p}")
    R, pivots = rref_mod(basis_rows, p) if pol.dim else (np.zeros((0, N), dtype=np.int64), [])

    sparse = [{a: 1} for a in pol.main] + [dict(v) for v in pol.correction]
    products = []
    for k, u in enumerate(sparse):
        for v in sparse[k + 1:]:
            z = bracket(rs, u, v, p)
            if z:
                row = np.zeros(N, dtype=np.int64)
                for a, c in z.items():
                    row[rs.index(a)] = c
                products.append(row)
    if products:
        Z = np.array(products, dtype=np.int64)
        subalgebra_ok = not reduce_against(Z, R, pivots, p).any()
        fvec = np.zeros(N, dtype=np.int64)
        for a, v in canonical_form(D, xi, p).items():
            fvec[rs.index(a)] = v
        isotropic_ok = not ((Z @ fvec) % p).any()
    else:
        subalgebra_ok = isotropic_ok = True

    rank = skew_rank_dim(D, xi, p)
    maximal_ok = pol.dim == N - rank // 2
    return PolarizationCertificate(len(pol.main), len(pol.correction), pol.dim,
                                   rank, subalgebra_ok, isotropic_ok, maximal_ok)
