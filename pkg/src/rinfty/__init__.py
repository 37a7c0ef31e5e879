"""Exact witnesses for infinite Reidemeister numbers in Sp_2l, O_2l(f_D), O_2l+1(f_B).

Builds the witness matrix families and their trace invariants over Z[T],
produces separation certificates that can be rechecked independently, and
brute-forces twisted conjugacy classes of small finite matrix groups as a
cross-check.
"""

from .errors import (
    CapExceeded,
    DimensionMismatch,
    ModulusMismatch,
    NonConstantRequired,
    NotAUnit,
    NotCharacteristic,
    NotInGroup,
    NotInvertible,
    RankTooSmall,
    RingMismatch,
    RinftyError,
    ShapeViolation,
)
from .groups import FormKind, FormTag, center_element_check, form_matrix, is_member
from .matrix import SquareMatrix, commutator, direct_sum, mat_inverse, mat_mul, mat_trace
from .rings import (
    NEG_INFINITY,
    ZZ,
    ZZ_T,
    LocalizedAtP,
    PolyInt,
    PrimeFieldElem,
    Ring,
    T,
    loc_arith,
    poly_degree,
    poly_eval,
    poly_mul,
)
from .witness import (
    AutomorphismSpec,
    SeparationCertificate,
    aux_shape_check_C,
    aux_shape_check_D,
    build_certificate,
    family_B,
    family_C,
    family_D,
    psi_BD,
    psi_C,
    select_points,
    twisted_product_collapse,
    verify_certificate,
)

__version__ = "0.1.0"
