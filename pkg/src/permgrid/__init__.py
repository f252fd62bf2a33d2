"""Permutation grids: descent statistics, grid paths, insertion bijections,
and exact two-sided Eulerian / involution descent tables."""

from .bijections import (
    TaggedElement,
    ThetaTrace,
    build_B_sets,
    build_D_sets,
    chi,
    eta,
    eta_inv,
    eta_prime,
    eta_prime_inv,
    psi_A,
    psi_I,
    psi_J,
    theta_A,
    theta_I,
    theta_J,
    xi,
    xi_inv,
)
from .errors import InvariantError
from .grid import (
    DTYPES,
    DType,
    GridPoint,
    Square,
    census_counts,
    delete,
    dtype,
    dtype_census,
    filled_squares,
    insert,
)
from .paths import Path, PathSet, dtype_via_paths, trace_paths
from .perm import (
    DescentProfile,
    Permutation,
    class_size,
    iter_fixed_point_free_involutions,
    iter_involutions,
    iter_kind,
    iter_permutations,
    iter_words,
)
from .series import TruncatedSeries
from .tables import (
    StatTable,
    eulerian_marginal,
    eulerian_number,
    gf_check,
    is_log_concave,
    is_unimodal,
    table,
    verify_recurrence,
)

__version__ = "0.1.0"

__all__ = [
    "DescentProfile",
    "DType",
    "DTYPES",
    "GridPoint",
    "InvariantError",
    "Path",
    "PathSet",
    "Permutation",
    "Square",
    "StatTable",
    "TaggedElement",
    "ThetaTrace",
    "TruncatedSeries",
    "build_B_sets",
    "build_D_sets",
    "census_counts",
    "chi",
    "class_size",
    "delete",
    "dtype",
    "dtype_census",
    "dtype_via_paths",
    "eta",
    "eta_inv",
    "eta_prime",
    "eta_prime_inv",
    "eulerian_marginal",
    "eulerian_number",
    "filled_squares",
    "gf_check",
    "insert",
    "is_log_concave",
    "is_unimodal",
    "iter_fixed_point_free_involutions",
    "iter_involutions",
    "iter_kind",
    "iter_permutations",
    "iter_words",
    "psi_A",
    "psi_I",
    "psi_J",
    "table",
    "theta_A",
    "theta_I",
    "theta_J",
    "trace_paths",
    "verify_recurrence",
    "xi",
    "xi_inv",
]
