"""Truncated Maclaurin coefficient series and their exact-at-truncation arithmetic.

A :class:`CoeffSeries` stores the coefficients c_0 .. c_N of an analytic
function on the unit disk, together with the guarantee that every stored
coefficient is exact for the represented function.  N is the *valid degree*;
nothing past it may be read.  Every operation below documents the valid
degree of its output, which is the one piece of bookkeeping that keeps
truncation errors out of the downstream operator identities.

All scalars are complex double precision; real inputs are embedded.
Series values are immutable after construction and safe to share.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import NearZeroConstantTerm

__all__ = [
    "CoeffSeries",
    "zero",
    "one",
    "monomial",
    "from_coeffs",
    "truncate",
    "pad",
    "fit_degree",
    "inner",
    "norm",
    "axpy",
    "cauchy_product",
    "formal_log",
    "cumsum",
    "shift_up",
    "one_minus_shift",
    "to_json_dict",
    "from_json_dict",
    "dumps",
    "loads",
    "write_csv",
    "read_csv",
]


@dataclass(frozen=True)
class CoeffSeries:
    """Coefficient vector c_0 .. c_N with N = ``valid_degree``.

    Entry j is the coefficient of z^j.  All entries are finite complex
    doubles and the backing array is read-only.
    """

    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a nonempty 1-d array")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def valid_degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, j: int) -> complex:
        return complex(self.coeffs[j])

    def __repr__(self) -> str:
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        return f"CoeffSeries(valid_degree={self.valid_degree}, coeffs={head}...)"

    def is_real(self, tol: float = 0.0) -> bool:
        """True when every imaginary part is bounded by ``tol`` in modulus."""
        return bool(np.max(np.abs(self.coeffs.imag), initial=0.0) <= tol)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def from_coeffs(values) -> CoeffSeries:
    """Series with the given coefficients; valid degree is len(values) - 1."""
    return CoeffSeries(np.asarray(values, dtype=np.complex128))


def zero(valid_degree: int = 0) -> CoeffSeries:
    """The zero series, exact through ``valid_degree``."""
    return CoeffSeries(np.zeros(valid_degree + 1, dtype=np.complex128))


def one(valid_degree: int = 0) -> CoeffSeries:
    """The constant function 1, exact through ``valid_degree``."""
    c = np.zeros(valid_degree + 1, dtype=np.complex128)
    c[0] = 1.0
    return CoeffSeries(c)


def monomial(degree: int, coeff: complex = 1.0, valid_degree: int | None = None) -> CoeffSeries:
    """coeff * z^degree, exact through ``valid_degree`` (default: ``degree``)."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    n = degree if valid_degree is None else valid_degree
    if n < degree:
        raise ValueError("valid_degree must cover the monomial degree")
    c = np.zeros(n + 1, dtype=np.complex128)
    c[degree] = coeff
    return CoeffSeries(c)


def truncate(f: CoeffSeries, valid_degree: int) -> CoeffSeries:
    """Restrict ``f`` to degrees 0..valid_degree (must shrink or keep)."""
    if valid_degree > f.valid_degree:
        raise ValueError(
            f"cannot truncate to degree {valid_degree}: only {f.valid_degree} is valid"
        )
    return CoeffSeries(f.coeffs[: valid_degree + 1])


def pad(f: CoeffSeries, valid_degree: int) -> CoeffSeries:
    """Zero-extend ``f`` to ``valid_degree``.

    Only exact when the represented function is a polynomial of degree
    <= f.valid_degree; the caller asserts that by calling this.
    """
    if valid_degree < f.valid_degree:
        raise ValueError("pad target below current valid degree; use truncate")
    c = np.zeros(valid_degree + 1, dtype=np.complex128)
    c[: len(f.coeffs)] = f.coeffs
    return CoeffSeries(c)


def fit_degree(f: CoeffSeries, valid_degree: int) -> CoeffSeries:
    """Truncate or zero-pad to the requested degree (pad assumes polynomial)."""
    if valid_degree <= f.valid_degree:
        return truncate(f, valid_degree)
    return pad(f, valid_degree)


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------


def inner(f: CoeffSeries, g: CoeffSeries) -> complex:
    """Coefficient inner product sum_j f_j * conj(g_j) over the common window.

    The sum runs through min(f.valid_degree, g.valid_degree); the second
    argument is the conjugated one.
    """
    m = min(f.valid_degree, g.valid_degree) + 1
    return complex(np.vdot(g.coeffs[:m], f.coeffs[:m]))


def norm(f: CoeffSeries) -> float:
    """l2 norm of the coefficient vector; zero iff all coefficients are zero."""
    return float(np.linalg.norm(f.coeffs))


def axpy(a: complex, f: CoeffSeries, g: CoeffSeries) -> CoeffSeries:
    """a*f + g coefficientwise; valid degree is the minimum of the inputs."""
    m = min(f.valid_degree, g.valid_degree) + 1
    return CoeffSeries(a * f.coeffs[:m] + g.coeffs[:m])


def cauchy_product(f: CoeffSeries, g: CoeffSeries) -> CoeffSeries:
    """Coefficient convolution (fg)_j = sum_i f_i g_{j-i}.

    Valid degree is min of the inputs: coefficient j of the product needs
    both factors through degree j, so that window is truncation-safe.
    """
    m = min(f.valid_degree, g.valid_degree)
    return CoeffSeries(np.convolve(f.coeffs, g.coeffs)[: m + 1])


def formal_log(f: CoeffSeries, min_constant: float = 1e-300) -> CoeffSeries:
    """Formal logarithm g = log f with g determined by g'*f = f'.

    g_0 = log f_0 (principal branch) and for j >= 1

        g_j = f_j/f_0 - (1/j) * sum_{i=1}^{j-1} i * g_i * f_{j-i} / f_0.

    O(N^2), no composition-radius issues.  Valid degree preserved.

    Raises:
        NearZeroConstantTerm: if |f_0| <= min_constant.
    """
    f0 = complex(f.coeffs[0])
    if abs(f0) <= min_constant:
        raise NearZeroConstantTerm(
            f"formal_log needs |constant term| > {min_constant}, got {abs(f0)!r}"
        )
    n = f.valid_degree
    fn = f.coeffs / f0
    g = np.zeros(n + 1, dtype=np.complex128)
    g[0] = np.log(f0)
    idx = np.arange(n + 1)
    for j in range(1, n + 1):
        s = np.dot(idx[1:j] * g[1:j], fn[j - 1:0:-1]) if j >= 2 else 0.0
        g[j] = fn[j] - s / j
    return CoeffSeries(g)


def cumsum(f: CoeffSeries) -> CoeffSeries:
    """Multiplication by 1/(1-z): output coefficient j = sum_{i<=j} f_i."""
    return CoeffSeries(np.cumsum(f.coeffs))


def shift_up(f: CoeffSeries) -> CoeffSeries:
    """Multiplication by z (the unilateral shift); valid degree grows by one."""
    c = np.empty(len(f.coeffs) + 1, dtype=np.complex128)
    c[0] = 0.0
    c[1:] = f.coeffs
    return CoeffSeries(c)


def one_minus_shift(f: CoeffSeries) -> CoeffSeries:
    """Multiplication by (1-z); inverse of :func:`cumsum` on the shared window.

    Output coefficient j = f_j - f_{j-1}.  The difference at degree
    valid+1 would need the unknown coefficient f_{valid+1}, so the valid
    degree is preserved, not grown.
    """
    c = f.coeffs.copy()
    c[1:] -= f.coeffs[:-1]
    return CoeffSeries(c)


# ---------------------------------------------------------------------------
# serialization: JSON object {"valid_degree": N, "re": [...], "im": [...]}
# and CSV rows (index, re, im).  Floats carry 17 significant digits so the
# textual forms round-trip exactly in double precision.
# ---------------------------------------------------------------------------


def to_json_dict(f: CoeffSeries) -> dict:
    return {
        "valid_degree": f.valid_degree,
        "re": [float(x) for x in f.coeffs.real],
        "im": [float(x) for x in f.coeffs.imag],
    }


def from_json_dict(d: dict) -> CoeffSeries:
    n = int(d["valid_degree"])
    re = np.asarray(d["re"], dtype=np.float64)
    im = np.asarray(d["im"], dtype=np.float64)
    if len(re) != n + 1 or len(im) != n + 1:
        raise ValueError("coefficient arrays must have length valid_degree + 1")
    return CoeffSeries(re + 1j * im)


def dumps(f: CoeffSeries) -> str:
    return json.dumps(to_json_dict(f))


def loads(s: str) -> CoeffSeries:
    return from_json_dict(json.loads(s))


def write_csv(f: CoeffSeries, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["index", "re", "im"])
        for j, c in enumerate(f.coeffs):
            w.writerow([j, format(c.real, ".17g"), format(c.imag, ".17g")])


def read_csv(path) -> CoeffSeries:
    rows = []
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = next(r)
        if header[:1] != ["index"]:
            raise ValueError("expected header row starting with 'index'")
        for row in r:
            rows.append(float(row[1]) + 1j * float(row[2]))
    return CoeffSeries(np.asarray(rows, dtype=np.complex128))
