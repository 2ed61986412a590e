"""Least-squares distances from a target series to finite function spans.

This is the quantitative engine of the laboratory: distances from the
constant 1 to growing spans of the h_k family (the Nyman-Beurling /
Baez-Duarte style distance sequence in the disk model), orthogonality
measurements for spans of h_k differences, and cyclicity experiments for
the weighted dilation orbit of a given series.

Least squares is solved by Householder QR with column pivoting rather than
Gram normal equations: adjacent h_k are nearly dependent and normal
equations would square the condition number.  Every report carries the
optimal coefficients, an independently recomputed residual norm, and a
conditioning estimate so a genuine distance plateau can be told apart from
numerical rank collapse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from .errors import DegenerateBasis, HypothesisViolated, IndexOutOfRange
from .semigroup import weighted_dilation
from .series import CoeffSeries, axpy, fit_degree, from_coeffs, inner, norm, one
from .special import hk_closed_form

__all__ = [
    "SpanProblem",
    "DistanceReport",
    "distance_to_span",
    "baez_duarte_sequence",
    "difference_span_orthogonality",
    "cyclicity_scan",
    "non_cyclicity_witness",
]

RANK_TOLERANCE = 1e-10


@dataclass(frozen=True)
class SpanProblem:
    """A target series, a finite basis, and the common truncation degree.

    Target and basis are refitted to degree ``n_trunc`` on construction.
    Members shorter than ``n_trunc`` are zero-padded, which is exact only
    for polynomials; for h_k-type bases generate directly at ``n_trunc``
    and make sure the tail bound at that degree is negligible against the
    distances of interest.
    """

    target: CoeffSeries
    basis: list[CoeffSeries]
    n_trunc: int

    def __post_init__(self) -> None:
        if not self.basis:
            raise ValueError("basis must be nonempty")
        if self.n_trunc < 0:
            raise ValueError("n_trunc must be >= 0")
        object.__setattr__(self, "target", fit_degree(self.target, self.n_trunc))
        object.__setattr__(
            self, "basis", [fit_degree(b, self.n_trunc) for b in self.basis]
        )


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of one least-squares projection.

    ``distance`` is the residual norm from the QR path;
    ``residual_norm_check`` recomputes it from the coefficients by direct
    series arithmetic and must agree to 1e-10.  ``condition_estimate`` is
    the diagonal ratio of the pivoted R factor, a cheap lower bound on the
    basis matrix's true condition number.
    """

    distance: float
    coefficients: list[complex]
    residual: CoeffSeries = field(repr=False)
    residual_norm_check: float
    condition_estimate: float

    def to_json_dict(self, include_residual: bool = False) -> dict:
        d = {
            "distance": self.distance,
            "coefficients_re": [c.real for c in self.coefficients],
            "coefficients_im": [c.imag for c in self.coefficients],
            "residual_norm_check": self.residual_norm_check,
            "condition_estimate": self.condition_estimate,
        }
        if include_residual:
            from .series import to_json_dict as series_json

            d["residual"] = series_json(self.residual)
        return d


def distance_to_span(problem: SpanProblem) -> DistanceReport:
    """Distance from the target to the span of the basis at the fixed truncation.

    Solves min_c ||target - sum_i c_i basis_i|| over coefficients
    0..n_trunc via pivoted Householder QR.  Real inputs take a real
    arithmetic path (half the memory of the complex one).

    Raises:
        DegenerateBasis: when the pivoted R diagonal decays below
            RANK_TOLERANCE relative to its largest entry.
    """
    real_path = problem.target.is_real() and all(b.is_real() for b in problem.basis)
    if real_path:
        a = np.column_stack([b.coeffs.real for b in problem.basis])
        rhs = problem.target.coeffs.real
    else:
        a = np.column_stack([b.coeffs for b in problem.basis])
        rhs = problem.target.coeffs

    q, r, piv = scipy.linalg.qr(a, mode="economic", pivoting=True)
    diag = np.abs(np.diag(r))
    if diag[0] == 0.0 or diag[-1] < RANK_TOLERANCE * diag[0]:
        raise DegenerateBasis(
            f"basis is numerically rank deficient: pivoted diagonal ratio "
            f"{diag[-1] / diag[0] if diag[0] else 0.0:.3e} below {RANK_TOLERANCE:.0e}"
        )
    condition_estimate = float(diag[0] / diag[-1])

    qtb = q.conj().T @ rhs
    c_piv = scipy.linalg.solve_triangular(r, qtb)
    coeffs = np.empty_like(c_piv)
    coeffs[piv] = c_piv
    distance = float(np.linalg.norm(rhs - q @ qtb))

    residual = problem.target
    for c, b in zip(coeffs, problem.basis):
        residual = axpy(-complex(c), b, residual)
    return DistanceReport(
        distance=distance,
        coefficients=[complex(c) for c in coeffs],
        residual=residual,
        residual_norm_check=norm(residual),
        condition_estimate=condition_estimate,
    )


def baez_duarte_sequence(k_max: int, n_trunc: int) -> list[tuple[int, DistanceReport]]:
    """Distances d_K from the constant 1 to span{h_2, ..., h_K} for K = 2..k_max.

    The spans are nested, so the sequence is nonincreasing; each entry
    carries its full report so conditioning can be inspected alongside the
    distance.
    """
    if k_max < 2:
        raise IndexOutOfRange(f"k_max must be >= 2, got {k_max}")
    basis = [hk_closed_form(k, n_trunc) for k in range(2, k_max + 1)]
    target = one(n_trunc)
    out = []
    for k in range(2, k_max + 1):
        report = distance_to_span(SpanProblem(target, basis[: k - 1], n_trunc))
        out.append((k, report))
    return out


def difference_span_orthogonality(k_max: int) -> float:
    """max over 2 <= k < l <= k_max of |<h_k - h_l, 1 - z>|.

    Every difference h_k - h_l is orthogonal to 1 - z because the first
    two coefficients of each h_k differ by exactly 1 regardless of k; the
    returned maximum is zero up to rounding (<= 1e-12).
    """
    if k_max < 3:
        raise IndexOutOfRange(f"k_max must be >= 3, got {k_max}")
    one_minus_z = from_coeffs([1.0, -1.0])
    hs = {k: hk_closed_form(k, 1) for k in range(2, k_max + 1)}
    worst = 0.0
    for k in range(2, k_max + 1):
        for ell in range(k + 1, k_max + 1):
            diff = from_coeffs(hs[k].coeffs - hs[ell].coeffs)
            worst = max(worst, abs(inner(diff, one_minus_z)))
    return worst


def cyclicity_scan(
    f: CoeffSeries,
    n_max: int,
    targets: list[CoeffSeries],
    n_trunc: int,
) -> list[DistanceReport]:
    """Distances from each target to span of the dilation orbit of ``f``.

    The basis is the orbit [weighted_dilation(n, f) for n = 1..n_max],
    refitted to the common truncation degree.  Padding the orbit members
    is exact when f is a polynomial, the intended use.
    """
    if n_max < 2:
        raise IndexOutOfRange(f"n_max must be >= 2, got {n_max}")
    basis = [fit_degree(weighted_dilation(n, f), n_trunc) for n in range(1, n_max + 1)]
    return [
        distance_to_span(SpanProblem(t, basis, n_trunc)) for t in targets
    ]


def non_cyclicity_witness(f: CoeffSeries, n_max: int) -> float:
    """max over 1 <= n <= n_max of |<weighted_dilation(n, f), 1 - z>|.

    Requires the first two coefficients of f to coincide (checked to
    1e-14).  Under that hypothesis every orbit member is orthogonal to
    1 - z: for n >= 2 the first two output coefficients are both f_0, and
    for n = 1 the hypothesis itself applies.  The returned maximum is
    bounded by ~1e-13 times ||f||.
    """
    if n_max < 1:
        raise IndexOutOfRange(f"n_max must be >= 1, got {n_max}")
    if f.valid_degree < 1:
        raise HypothesisViolated("need at least coefficients 0 and 1")
    if abs(f.coeffs[0] - f.coeffs[1]) > 1e-14:
        raise HypothesisViolated(
            f"first two coefficients differ by {abs(f.coeffs[0] - f.coeffs[1]):.3e} > 1e-14"
        )
    one_minus_z = from_coeffs([1.0, -1.0])
    return max(
        abs(inner(weighted_dilation(n, f), one_minus_z)) for n in range(1, n_max + 1)
    )
