"""Spectra, norms, traces, and Schatten norms of Bergman-space restriction
operators on model domains."""

from ._core import (  # noqa: F401
    BergmanError,
    Region,
    ball_bounds,
    bergman_kernel_diag,
    cayley,
    compare_case,
    contains,
    dilation_spectrum,
    gamma_strip,
    gamma_wedge,
    gram,
    horostrip_interval,
    isospectrality_check,
    lune_norm,
    moebius_apply,
    monomial_norm_sq,
    norm_estimate,
    offcenter_disc_spectrum,
    schatten_norm,
    slice_norm,
    spectrum,
    trace_by_formula,
)

__all__ = [
    "BergmanError",
    "Region",
    "ball_bounds",
    "bergman_kernel_diag",
    "cayley",
    "compare_case",
    "contains",
    "dilation_spectrum",
    "gamma_strip",
    "gamma_wedge",
    "gram",
    "horostrip_interval",
    "isospectrality_check",
    "lune_norm",
    "moebius_apply",
    "monomial_norm_sq",
    "norm_estimate",
    "offcenter_disc_spectrum",
    "schatten_norm",
    "slice_norm",
    "spectrum",
    "trace_by_formula",
]
