"""Resolution-of-unity weights and their moment-problem verification.

The weight pair is

    Wt_q(x) = (1-q)/ln(q^{-1}) * 1/E_q[(1-q) x]        (moments = [n]_q!)
    W_q(x)  = pi^{-1} N_q(x) Wt_q(x)                   (resolution of unity)

with classical limits e^{-x} and 1/pi.  Moments int_0^inf x^n Wt_q(x) dx are
evaluated by panelled Gauss-Legendre quadrature with geometrically growing
panels; the integrand is formed as exp(n ln x + ln Wt_q - shift) so that
arbitrarily large moment orders stay in range.  Convergence of the Carleman
series sum ([n]_q!)^{-1/(2n)} is diagnosed with the logarithmic test; for
0 < q < 1 the series converges, so uniqueness of the weight is never claimed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainCapError
from .qspecial import (
    DEFAULT_CONTROL,
    Deformation,
    SeriesControl,
    log_jackson_e_pos,
    log_q_factorial,
)

__all__ = [
    "QuadratureConfig",
    "MomentReport",
    "CarlemanDiagnostic",
    "log_weight_tilde",
    "weight_tilde",
    "weight",
    "moment_integral",
    "carleman_diagnostic",
]

_LOG_HUGE = 690.0


@dataclass(frozen=True)
class QuadratureConfig:
    """Panel scheme for semi-infinite integrals.

    The first panel spans [0, initial_width]; each later panel doubles the
    width of its predecessor.  Integration stops once the latest panel
    contributes less than rel_tol of the running total while contributions are
    falling, and aborts with DomainCapError past max_domain.
    """

    panel_order: int = 64
    rel_tol: float = 1e-10
    max_domain: float = 1e6
    initial_width: float = 1.0

    def __post_init__(self) -> None:
        if self.panel_order < 8:
            raise ValueError(f"panel_order must be >= 8, got {self.panel_order}")
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not self.initial_width > 0.0:
            raise ValueError(f"initial_width must be positive, got {self.initial_width!r}")


@dataclass(frozen=True)
class MomentReport:
    """Analytic-vs-quadrature record for one moment order.

    numeric is exp-overflow-guarded (inf past the double range); rel_error is
    always formed in the log domain so it stays meaningful regardless.
    """

    n: int
    log_analytic: float
    numeric: float
    rel_error: float
    domain_used: float


@dataclass(frozen=True)
class CarlemanDiagnostic:
    """Logarithmic-test data for the series sum_n ([n]_q!)^{-1/(2n)}.

    log_ratio[n-1] = ln(a_n)/ln(n) (nan at n = 1).  threshold is the smallest
    n from which the ratio stays below -1 through n_max, i.e. the entry point
    of the convergence regime; None when the ratio never settles below -1
    (classical branch: the series diverges and the moment problem is
    determinate).
    """

    deformation: Deformation
    a_values: np.ndarray
    partial_sums: np.ndarray
    log_ratio: np.ndarray
    threshold: int | None


def log_weight_tilde(x, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL):
    """ln Wt_q(x), elementwise on arrays; -x on the classical branch."""
    if d.classical:
        arr = np.asarray(x, dtype=float)
        return float(-arr) if arr.ndim == 0 else -arr
    q = d.q
    prefactor = math.log((1.0 - q) / math.log(1.0 / q))
    return prefactor - log_jackson_e_pos(np.asarray(x, dtype=float) * (1.0 - q), d, ctrl)


def weight_tilde(x, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Moment-problem weight Wt_q(x); strictly positive and decreasing, e^{-x} classically."""
    return np.exp(log_weight_tilde(x, d, ctrl))


def weight(x, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL):
    """Resolution-of-unity weight W_q(x) = pi^{-1} N_q(x) Wt_q(x); 1/pi classically."""
    if d.classical:
        arr = np.asarray(x, dtype=float)
        out = np.full_like(arr, 1.0 / math.pi)
        return float(out) if arr.ndim == 0 else out
    q = d.q
    arr = np.asarray(x, dtype=float)
    log_norm = log_jackson_e_pos(arr * (1.0 - q) * q, d, ctrl)
    return np.exp(log_norm + log_weight_tilde(arr, d, ctrl) - math.log(math.pi))


@lru_cache(maxsize=8)
def _gauss_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def moment_integral(
    n: int,
    d: Deformation,
    qcfg: QuadratureConfig = QuadratureConfig(),
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> MomentReport:
    """Quadrature of int_0^inf x^n Wt_q(x) dx, reported against ln [n]_q!.

    The integrand is shifted by the analytic log value, so the accumulated
    total is directly the numeric/analytic ratio and rel_error = |total - 1|.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    log_analytic = log_q_factorial(n, d)
    nodes, gauss_w = _gauss_nodes(qcfg.panel_order)

    total = 0.0
    prev_contrib = math.inf
    lo = 0.0
    width = qcfg.initial_width
    while True:
        hi = lo + width
        x = 0.5 * width * nodes + 0.5 * (lo + hi)
        log_f = log_weight_tilde(x, d, ctrl) - log_analytic
        if n:
            log_f = log_f + n * np.log(x)
        contrib = 0.5 * width * float(gauss_w @ np.exp(log_f))
        total += contrib
        if contrib < qcfg.rel_tol * abs(total) and contrib < prev_contrib:
            break
        prev_contrib = contrib
        lo, width = hi, 2.0 * width
        if lo >= qcfg.max_domain:
            raise DomainCapError(
                f"moment n={n}, q={d.q}: domain cap {qcfg.max_domain:g} reached "
                f"with last panel still contributing {contrib:.3e} of total"
            )

    numeric = math.exp(log_analytic) * total if log_analytic < _LOG_HUGE else math.inf
    return MomentReport(
        n=n,
        log_analytic=log_analytic,
        numeric=numeric,
        rel_error=abs(total - 1.0),
        domain_used=hi,
    )


def carleman_diagnostic(d: Deformation, n_max: int = 200) -> CarlemanDiagnostic:
    """Evaluate a_n = ([n]_q!)^{-1/(2n)}, its partial sums, and ln(a_n)/ln(n).

    For 0 < q < 1 the ratio falls like -(n+1) ln(q^{-1})/(4 ln n), certifying
    convergence; classically it tends to -1/2 and the series diverges.
    """
    if n_max < 10:
        raise ValueError(f"n_max must be >= 10, got {n_max}")
    ns = np.arange(1, n_max + 1)
    log_fact = np.array([log_q_factorial(int(k), d) for k in ns])
    a_values = np.exp(-log_fact / (2.0 * ns))
    partial_sums = np.cumsum(a_values)
    log_ratio = np.full(n_max, math.nan)
    log_ratio[1:] = np.log(a_values[1:]) / np.log(ns[1:])

    threshold: int | None = None
    below = log_ratio < -1.0
    for i in range(n_max - 1, 0, -1):
        if not below[i]:
            break
        threshold = i + 1
    return CarlemanDiagnostic(
        deformation=d,
        a_values=a_values,
        partial_sums=partial_sums,
        log_ratio=log_ratio,
        threshold=threshold,
    )
