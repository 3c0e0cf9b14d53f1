"""Coadjoint orbits of maximal unipotent subgroups of the classical groups.

Orthogonal subsets of positive roots define canonical functionals; this
package builds their polarizations, predicts orbit dimensions from the
involution statistics l(sigma) - s(sigma) - 2*theta, and certifies every
prediction against exact prime-field linear algebra and brute-force orbit
enumeration over tiny finite fields.
"""

from .lie import (
    bracket,
    bracket_constant,
    default_prime,
    exp_unipotent,
    field_rank,
    root_matrix,
    smallest_prime_geq,
)
from .oracle import (
    CensusResult,
    OrbitSample,
    PolarizationCertificate,
    certify_polarization,
    coadjoint_act,
    full_orbit_census,
    orbit_bfs,
    skew_form,
    skew_rank_dim,
)
from .orthoset import (
    Blocks,
    OrthoSet,
    PolarizationBasis,
    build_blocks,
    build_p0,
    canonical_form,
    enumerate_normalized,
    enumerate_orthogonal,
    is_normalized,
    normalize,
    ones_xi,
    orthogonal_set,
    polarization,
    seeded_xi,
)
from .reduction import RecursionReport, ReductionData, recursion_report, reduce_set
from .rootsys import (
    Root,
    RootSystem,
    build_system,
    diff,
    format_root_set,
    format_xi,
    inner_product,
    long,
    parse_root,
    parse_root_set,
    parse_xi,
    root_sum,
    row_col,
    rsum,
    short,
)
from .weyl import (
    Defect,
    defect,
    inversion_length,
    involution_of,
    mu_max,
    predicted_dim,
    reflection,
    spectrum_witness,
)

__all__ = [name for name in dir() if not name.startswith("_")]
