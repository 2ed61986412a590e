"""Seeded identity suites: every operator fact the laboratory relies on.

Each suite draws reproducible random inputs, measures the worst violation
of an identity, and reports it against the identity's tolerance.  The CLI
`verify` subcommand prints one line per check; the acceptance tests run
the same functions at their contract sample sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .projection import non_cyclicity_witness
from .semigroup import (
    kernel_intersection_basis,
    kernel_vector,
    semiconjugacy_residual,
    weighted_dilation,
    weighted_dilation_adjoint,
)
from .series import CoeffSeries, from_coeffs, inner, norm, one, pad, truncate
from .special import dirichlet_energy_at_one, hk_closed_form, hk_oracle
from .spectral import (
    adjoint_eigenvector,
    eigenvector_norm_sq,
    level_for_degree,
    shift_decay,
)

__all__ = [
    "CheckResult",
    "random_series",
    "adjoint_duality_gap",
    "suite_adjoint",
    "suite_isometry",
    "suite_semigroup",
    "suite_semiconjugacy",
    "suite_hk",
    "suite_kernel",
    "suite_dirichlet",
    "suite_spectral",
    "suite_cyclic",
    "SUITES",
    "run_suites",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_err: float
    tol: float
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.max_err <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  [{self.note}]" if self.note else ""
        return f"{status}  {self.name}: max_err={self.max_err:.3e} tol={self.tol:.1e}{extra}"


def random_series(rng: np.random.Generator, valid_degree: int, real: bool = False) -> CoeffSeries:
    """Standard-normal random coefficients, complex unless ``real``."""
    re = rng.standard_normal(valid_degree + 1)
    if real:
        return from_coeffs(re)
    return from_coeffs(re + 1j * rng.standard_normal(valid_degree + 1))


def adjoint_duality_gap(n: int, f: CoeffSeries, g: CoeffSeries) -> float:
    """|<Wf, g> - <f, W*g>| with both pairings on matched exact windows.

    The adjoint of g only reports complete blocks, so the left pairing is
    restricted to the degrees those blocks cover; without that matching a
    dangling partial block would show up as a spurious duality violation.
    """
    adj = weighted_dilation_adjoint(n, g)
    m2 = min(f.valid_degree, adj.valid_degree)
    lhs = inner(truncate(weighted_dilation(n, f), n * m2 + n - 1), g)
    rhs = inner(truncate(f, m2), adj)
    return abs(lhs - rhs)


def suite_adjoint(seed: int = 0, pairs: int = 200, n_trunc: int = 512,
                  indices: tuple[int, ...] = (2, 3, 5, 7)) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(pairs):
        f = random_series(rng, n_trunc)
        g = random_series(rng, n_trunc)
        scale = norm(f) * norm(g)
        for n in indices:
            worst = max(worst, adjoint_duality_gap(n, f, g) / scale)
    return [CheckResult("adjoint duality <Wf,g> = <f,W*g>", worst, 1e-10)]


def suite_isometry(seed: int = 0, count: int = 100, max_index: int = 10,
                   n_trunc: int = 256) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst_iso = 0.0
    worst_wsw = 0.0
    for _ in range(count):
        f = random_series(rng, n_trunc)
        nf = norm(f)
        for n in range(2, max_index + 1):
            wf = weighted_dilation(n, f)
            worst_iso = max(worst_iso, abs(norm(wf) - np.sqrt(n) * nf) / (np.sqrt(n) * nf))
            back = weighted_dilation_adjoint(n, wf)
            worst_wsw = max(
                worst_wsw, norm(from_coeffs(back.coeffs - n * f.coeffs)) / nf
            )
    return [
        CheckResult("isometry ||Wf|| = sqrt(n)||f||", worst_iso, 1e-12),
        CheckResult("adjoint inversion W*Wf = n f", worst_wsw, 1e-13),
    ]


def suite_semigroup(seed: int = 0, n_trunc: int = 128, gap_count: int = 100,
                    gap_trunc: int = 64) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for m, n in [(2, 2), (2, 5), (3, 2), (3, 5), (2, 3)]:
        f = random_series(rng, n_trunc)
        lhs = weighted_dilation(m, weighted_dilation(n, f))
        rhs = weighted_dilation(m * n, f)
        worst = max(worst, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
    results = [CheckResult("semigroup law W_m W_n = W_mn", worst, 1e-14)]

    # Cauchy-Schwarz gap: the index-2 dilation moves every nonzero vector off
    # its own line, so ||Wf||^2||f||^2 - |<Wf,f>|^2 stays strictly positive.
    min_gap = np.inf
    for _ in range(gap_count):
        f = random_series(rng, gap_trunc)
        wf = weighted_dilation(2, f)
        gap = norm(wf) ** 2 * norm(f) ** 2 - abs(inner(wf, f)) ** 2
        min_gap = min(min_gap, gap / norm(f) ** 4)
    results.append(
        CheckResult("no-eigenvector gap (index 2) stays positive", 1e-12 - min_gap, 0.0,
                    note=f"min normalized gap {min_gap:.3e}")
    )
    return results


def suite_semiconjugacy(seed: int = 0, count: int = 100, n_trunc: int = 200,
                        indices: tuple[int, ...] = (2, 3, 5)) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(count):
        f = random_series(rng, n_trunc)
        for n in indices:
            worst = max(worst, semiconjugacy_residual(n, f) / norm(f))
    return [CheckResult("semiconjugacy of plain and weighted dilations", worst, 1e-12)]


def suite_hk(seed: int = 0, n_trunc: int = 4096,
             ks: tuple[int, ...] = (2, 3, 5, 10, 30)) -> list[CheckResult]:
    worst_osc = 0.0
    worst_decay = 0.0
    worst_first = 0.0
    for k in ks:
        closed = hk_closed_form(k, n_trunc)
        oracle = hk_oracle(k, n_trunc)
        worst_osc = max(worst_osc, float(np.max(np.abs(closed.coeffs - oracle.coeffs))))
        j = np.arange(1, n_trunc + 1)
        worst_decay = max(
            worst_decay, float(np.max(np.abs(closed.coeffs[1:]) * (j + 1) / k))
        )
        worst_first = max(worst_first, abs(closed.coeffs[0] - closed.coeffs[1] + 1.0))
    results = [
        CheckResult("h_k closed form vs formal-log oracle", worst_osc, 1e-12),
        CheckResult("h_k decay |c_j| <= k/(j+1)", worst_decay, 1.0),
        CheckResult("h_k first difference c_0 - c_1 = -1", worst_first, 1e-14),
    ]

    worst_fun = 0.0
    for n in (2, 3):
        for k in (2, 3, 5):
            hk = hk_closed_form(k, 500)
            lhs = weighted_dilation(n, hk)
            rhs_deg = lhs.valid_degree
            rhs = from_coeffs(
                hk_closed_form(n * k, rhs_deg).coeffs - hk_closed_form(n, rhs_deg).coeffs
            )
            worst_fun = max(worst_fun, float(np.max(np.abs(lhs.coeffs - rhs.coeffs))))
    results.append(
        CheckResult("dilation identity W_n h_k = h_nk - h_n", worst_fun, 1e-12)
    )
    return results


def suite_kernel(seed: int = 0) -> list[CheckResult]:
    worst_kill = 0.0
    worst_orth = 0.0
    for n in (2, 3, 5):
        vecs = [kernel_vector(n, k) for k in range(6)]
        for v in vecs:
            img = weighted_dilation_adjoint(n, pad(v, n * 8))
            worst_kill = max(worst_kill, float(np.max(np.abs(img.coeffs))))
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                worst_orth = max(worst_orth, abs(inner(vecs[i], vecs[j])))
    results = [
        CheckResult("adjoint annihilates its kernel vectors", worst_kill, 0.0),
        CheckResult("kernel vectors pairwise orthogonal", worst_orth, 0.0),
    ]

    worst_basis = 0.0
    for j in range(1, 4):
        member = pad(kernel_intersection_basis(3)[j - 1], 16)
        for n in range(j + 1, 8):
            img = weighted_dilation_adjoint(n, member)
            worst_basis = max(worst_basis, float(np.max(np.abs(img.coeffs))))
    results.append(
        CheckResult("1 - z^j killed by every adjoint of index > j", worst_basis, 0.0)
    )

    witness = weighted_dilation_adjoint(2, pad(kernel_intersection_basis(2)[1], 3))
    escape_err = float(np.max(np.abs(witness.coeffs - np.array([1.0, -1.0]))))
    results.append(
        CheckResult("1 - z^2 escapes the index-2 adjoint kernel", escape_err, 0.0,
                    note="image is 1 - z")
    )
    return results


def suite_dirichlet(seed: int = 0, combos: int = 50, k_max: int = 20,
                    indices: tuple[int, ...] = (2, 3, 4)) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst_ratio = 0.0
    sharp_holds = True
    for n in indices:
        vecs = [kernel_vector(n, k) for k in range(k_max + 1)]
        top = max(len(v.coeffs) for v in vecs)
        for _ in range(combos):
            c = rng.standard_normal(k_max + 1) + 1j * rng.standard_normal(k_max + 1)
            acc = np.zeros(top, dtype=np.complex128)
            for ck, v in zip(c, vecs):
                acc[: len(v.coeffs)] += ck * v.coeffs
            f = from_coeffs(acc)
            energy = dirichlet_energy_at_one(f)
            worst_ratio = max(worst_ratio, energy / (2**n * n * norm(f) ** 2))
            if energy > n**2 * norm(f) ** 2:
                sharp_holds = False
    return [
        CheckResult(
            "kernel combinations have energy <= 2^n n ||f||^2",
            worst_ratio,
            1.0,
            note=f"sharper n^2 bound held: {sharp_holds}",
        ),
        CheckResult(
            "energy of 1 - z is exactly 1",
            abs(dirichlet_energy_at_one(from_coeffs([1.0, -1.0])) - 1.0),
            0.0,
        ),
        CheckResult("energy of the constant is 0", dirichlet_energy_at_one(one()), 0.0),
    ]


def suite_spectral(seed: int = 0, count: int = 100, indices: tuple[int, ...] = (2, 3),
                   min_degree_count: int = 4096) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst_resid = 0.0
    worst_norm = 0.0
    for n in indices:
        level = level_for_degree(n, min_degree_count)
        for _ in range(count):
            lam = (
                0.95
                * np.sqrt(n)
                * np.sqrt(rng.uniform())
                * np.exp(2j * np.pi * rng.uniform())
            )
            pair = adjoint_eigenvector(n, lam, level)
            worst_resid = max(worst_resid, pair.residual / norm(pair.vector))
            closed = eigenvector_norm_sq(n, lam, level)
            worst_norm = max(worst_norm, abs(norm(pair.vector) ** 2 - closed) / closed)
    results = [
        CheckResult("adjoint eigenvector residual", worst_resid, 1e-10),
        CheckResult("eigenvector norm matches closed form", worst_norm, 1e-12),
    ]

    decay = shift_decay(2, one(2**10 - 1), 10)
    expected = [2 ** (-m / 2) for m in range(1, 11)]
    results.append(
        CheckResult(
            "rescaled adjoint decay on the constant is 2^(-m/2)",
            float(np.max(np.abs(np.array(decay) - np.array(expected)))),
            1e-14,
        )
    )

    f = random_series(rng, 3**6 - 1)
    d = shift_decay(3, f, 5)
    monotone_err = float(np.max(np.diff([norm(f)] + d)))
    results.append(
        CheckResult("shift decay sequence is nonincreasing", monotone_err, 1e-12)
    )
    return results


def suite_cyclic(seed: int = 0, n_max: int = 100) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(10):
        c = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        c[1] = c[0]
        f = from_coeffs(c)
        worst = max(worst, non_cyclicity_witness(f, n_max) / norm(f))
    return [
        CheckResult("orbit of f with equal leading coefficients avoids 1 - z",
                    worst, 1e-13)
    ]


SUITES = {
    "adjoint": suite_adjoint,
    "isometry": suite_isometry,
    "semigroup": suite_semigroup,
    "semiconjugacy": suite_semiconjugacy,
    "hk": suite_hk,
    "kernel": suite_kernel,
    "dirichlet": suite_dirichlet,
    "spectral": suite_spectral,
    "cyclic": suite_cyclic,
}


def run_suites(names: list[str], seed: int = 0) -> list[CheckResult]:
    out: list[CheckResult] = []
    for name in names:
        out.extend(SUITES[name](seed=seed))
    return out
