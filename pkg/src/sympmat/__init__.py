"""Rank-2 symplectic Coxeter matroids with exact arithmetic.

Enumeration and orbit classification of the matroids, the diagonal-removing
projection and its liftings, constructive representability certificates, and
the dimension/stabilizer/homology bookkeeping of the associated torus
strata on the Grassmannian of isotropic lines.
"""

from .core import (
    AdmissibleOrder,
    SignedPermutation,
    admissible_pairs,
    apply_signed_perm,
    diagonal_pairs,
    enumerate_admissible_orders,
    gale_leq,
    hyperoctahedral_group,
    is_admissible_pair,
    is_admissible_set,
    is_star_equivariant,
    pair,
    pair_from_signed,
    pair_to_signed,
    star,
    symmetric_group,
)
from .errors import (
    EmptyBasesError,
    EmptyProjectionError,
    InvalidMoveError,
    NoLiftingError,
    NotAMatroidError,
    NotRepresentableError,
    RankDeficientError,
    SympmatError,
    TooLargeError,
)
from .matroid import (
    Lifting,
    Orbit,
    PartitionType,
    RepresentabilityReport,
    SymmetricMatroid,
    SymplecticMatroid,
    Trichotomy,
    bases_of,
    canonical_matroid,
    degree,
    degree_one_projections,
    enumerate_symmetric,
    enumerate_symplectic,
    erase_label,
    from_bases,
    is_representable,
    is_symplectic_matroid,
    liftings,
    merge_bags,
    orbits,
    partition_type,
    split_bag,
    symplectic_projection,
)
from .polytope import (
    LatticePolytope,
    affine_dim,
    hull_equal,
    point_in_hull,
    project_pi,
    symmetric_polytope,
    symplectic_polytope,
)
from .strata import (
    CellDims,
    Classification,
    SchubertCell,
    StabilizerReport,
    StratumReport,
    TInvariantType,
    TORUS_AMBIENT,
    TORUS_SYMPLECTIC,
    betti_numbers,
    cell_dims,
    classify,
    fixed_points,
    sp_schubert,
    stabilizer,
)
from .witness import (
    CertificateCheck,
    PluckerWitness,
    build_symplectic_witness,
    build_witness,
    grassmann_plucker_ok,
    matroid_of_witness,
    plucker_vector,
    symplectic_sum,
    verify_certificate,
    witness_from_dict,
    witness_to_dict,
)

__version__ = "0.1.0"
