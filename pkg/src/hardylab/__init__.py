"""Numerical laboratory for dilation semigroups on truncated Hardy-space series.

The package computes, at explicit finite truncation, every quantity the
weighted dilation semigroup on square-summable Maclaurin coefficients
exposes to direct verification: the coefficient transforms and their
adjoints, kernel bases, explicit adjoint eigenvectors and their residuals,
the h_k special functions with a mutual-oracle generator pair, local
Dirichlet energies at the boundary point 1, and least-squares distances
from targets to finite spans (the Baez-Duarte style distance sequence and
cyclicity experiments).
"""

from .errors import (
    DegenerateBasis,
    HardyLabError,
    HypothesisViolated,
    IndexOutOfRange,
    NearZeroConstantTerm,
    OutsideSpectralBall,
    TruncationTooShort,
)
from .projection import (
    DistanceReport,
    SpanProblem,
    baez_duarte_sequence,
    cyclicity_scan,
    difference_span_orthogonality,
    distance_to_span,
    non_cyclicity_witness,
)
from .semigroup import (
    dilation,
    kernel_intersection_basis,
    kernel_vector,
    semiconjugacy_residual,
    weighted_dilation,
    weighted_dilation_adjoint,
)
from .series import (
    CoeffSeries,
    axpy,
    cauchy_product,
    cumsum,
    fit_degree,
    formal_log,
    from_coeffs,
    inner,
    monomial,
    norm,
    one,
    one_minus_shift,
    pad,
    shift_up,
    truncate,
    zero,
)
from .special import (
    dirichlet_energy_at_one,
    hk_closed_form,
    hk_oracle,
    hk_tail_norm_bound,
)
from .spectral import (
    DiskScanPoint,
    DiskScanReport,
    EigenPair,
    adjoint_eigenvector,
    eigenvector_norm_sq,
    level_for_degree,
    shift_decay,
    spectral_disk_scan,
)

__version__ = "0.1.0"

__all__ = [
    "CoeffSeries",
    "DegenerateBasis",
    "DiskScanPoint",
    "DiskScanReport",
    "DistanceReport",
    "EigenPair",
    "HardyLabError",
    "HypothesisViolated",
    "IndexOutOfRange",
    "NearZeroConstantTerm",
    "OutsideSpectralBall",
    "SpanProblem",
    "TruncationTooShort",
    "adjoint_eigenvector",
    "axpy",
    "baez_duarte_sequence",
    "cauchy_product",
    "cumsum",
    "cyclicity_scan",
    "difference_span_orthogonality",
    "dilation",
    "dirichlet_energy_at_one",
    "distance_to_span",
    "eigenvector_norm_sq",
    "fit_degree",
    "formal_log",
    "from_coeffs",
    "hk_closed_form",
    "hk_oracle",
    "hk_tail_norm_bound",
    "inner",
    "kernel_intersection_basis",
    "kernel_vector",
    "level_for_degree",
    "monomial",
    "non_cyclicity_witness",
    "norm",
    "one",
    "one_minus_shift",
    "pad",
    "semiconjugacy_residual",
    "shift_decay",
    "shift_up",
    "spectral_disk_scan",
    "truncate",
    "weighted_dilation",
    "weighted_dilation_adjoint",
    "zero",
]
