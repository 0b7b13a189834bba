"""Exact enumeration of Aztec diamond tilings through Schroeder path families.

The package counts domino tilings of the Aztec diamond three independent ways
(closed form, Hankel determinants of Schroeder numbers, brute-force
enumeration) and implements the bijections that connect them.
"""

from .errors import (
    AztecError,
    DomainError,
    IllPosedProfileError,
    InconsistentProfileError,
    InsufficientTermsError,
    InvalidSpanError,
    SizeLimitError,
    TilingValidationError,
)
from .schroeder import (
    SchroederPath,
    Step,
    count_paths_between,
    enumerate_paths,
    large_schroeder,
    small_schroeder,
)
from .hankel import (
    HankelMatrix,
    build_hankel,
    closed_form,
    determinant,
    hankel_matrix,
    reconstruct_sequence,
)
from .lgv import (
    AnchorScheme,
    PathFamily,
    Permutation,
    SignedConfiguration,
    enumerate_family,
    is_nonintersecting,
    phi,
    phi_inverse,
    rho,
    rho_inverse,
    signed_count,
    tail_swap,
)
from .aztec import (
    Domino,
    Tiling,
    count_tilings,
    enumerate_tilings,
    paths_to_tiling,
    region_cells,
    tiling_to_paths,
)

__version__ = "0.1.0"
