"""mst spectra, Gromov-Hausdorff distances, Steiner trees and minimal fillings
of finite metric spaces."""

from ._core import (
    Error,
    FiniteMetricSpace,
    alpha,
    distortion,
    gh_exact,
    gh_scaled_pair,
    gh_to_simplex,
    hausdorff_distance,
    load_space,
    mf,
    mf_upper_bound_search,
    mst,
    mst_length,
    mst_length_via_gh,
    mst_spectrum,
    set_distance,
    simplex,
    smt,
    smt_via_gh,
    space_digest,
    spectrum_via_gh,
    spectrum_via_partitions,
    subspace,
    verify_space,
)

__all__ = [
    "Error",
    "FiniteMetricSpace",
    "alpha",
    "distortion",
    "gh_exact",
    "gh_scaled_pair",
    "gh_to_simplex",
    "hausdorff_distance",
    "load_space",
    "mf",
    "mf_upper_bound_search",
    "mst",
    "mst_length",
    "mst_length_via_gh",
    "mst_spectrum",
    "set_distance",
    "simplex",
    "smt",
    "smt_via_gh",
    "space_digest",
    "spectrum_via_gh",
    "spectrum_via_partitions",
    "subspace",
    "verify_space",
]

__version__ = "0.1.0"
