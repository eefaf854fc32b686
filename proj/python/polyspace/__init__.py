"""Exact invariants of the conjugation involution on planar equilateral polygon spaces."""

from ._polyspace import (
    PolyspaceError,
    __version__,
    alpha_series,
    binom,
    boundary_kernel_dim,
    classify_involution,
    cohomology_dim,
    gysin_check,
    inclusion_rank,
    invariant_table,
    involution_normal_form,
    r2_cup_rank,
    run_cli,
    series,
    series_names,
    smith_normal_form,
    tau_normal_form,
    verify,
    wang_divisor_counts,
)

__all__ = [
    "PolyspaceError",
    "__version__",
    "alpha_series",
    "binom",
    "boundary_kernel_dim",
    "classify_involution",
    "cohomology_dim",
    "gysin_check",
    "inclusion_rank",
    "invariant_table",
    "involution_normal_form",
    "r2_cup_rank",
    "run_cli",
    "series",
    "series_names",
    "smith_normal_form",
    "tau_normal_form",
    "verify",
    "wang_divisor_counts",
]
