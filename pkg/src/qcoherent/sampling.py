"""Monte Carlo cross-check of the photon-number distribution.

Draws are generated by inverse-CDF lookup over the truncated distribution
p_q(n, x) using numpy's seeded PCG64 generator, so a fixed seed reproduces the
report bit-for-bit.  The empirical Mandel parameter comes with a delta-method
standard error from the first four sample moments, and the verdict compares
the gap to the analytic value against three standard errors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import TruncationInsufficientError
from .observables import mandel_q
from .qspecial import DEFAULT_CONTROL, Deformation, SeriesControl, q_number
from .states import normalization

__all__ = ["SampleReport", "photon_distribution", "sample_mandel"]

_RNG_NAME = "numpy-PCG64"
_TAIL_TOL = 1e-12
_MAX_SUPPORT = 4096


@dataclass(frozen=True)
class SampleReport:
    """Outcome of one sampling run; gap and three_sigma feed the verdict."""

    q: float
    x: float
    draws: int
    seed: int
    empirical_mean: float
    empirical_mandel: float
    analytic_mandel: float
    std_error: float
    rng_name: str = _RNG_NAME

    @property
    def gap(self) -> float:
        return abs(self.empirical_mandel - self.analytic_mandel)

    @property
    def three_sigma(self) -> float:
        return 3.0 * self.std_error

    @property
    def passed(self) -> bool:
        return self.gap <= self.three_sigma


def photon_distribution(
    x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL
) -> np.ndarray:
    """Probabilities p_q(n, x) for n = 0.. until the tail drops below 1e-12."""
    if x <= 0:
        raise ValueError(f"x must be positive, got {x!r}")
    norm = normalization(x, d, ctrl)
    probs = [1.0 / norm]
    term = 1.0 / norm
    while True:
        n = len(probs)
        if n > _MAX_SUPPORT:
            raise TruncationInsufficientError(
                f"photon distribution tail above {_TAIL_TOL:g} after {_MAX_SUPPORT} states"
            )
        tail = max(1.0 - math.fsum(probs), 0.0)
        if tail < _TAIL_TOL:
            break
        term *= x / (n if d.classical else q_number(n, d))
        probs.append(term)
    return np.asarray(probs)


def sample_mandel(
    q: float,
    x: float,
    draws: int,
    seed: int,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> SampleReport:
    """Draw photon numbers by inverse CDF and report the empirical Mandel parameter."""
    if draws < 1000:
        raise ValueError(f"draws must be >= 1000, got {draws}")
    d = Deformation(q)
    probs = photon_distribution(x, d, ctrl)
    cdf = np.cumsum(probs)
    cdf[-1] = max(cdf[-1], 1.0)

    rng = np.random.default_rng(seed)
    u = rng.random(draws)
    samples = np.searchsorted(cdf, u, side="right").astype(float)

    m1 = float(samples.mean())
    m2 = float((samples**2).mean())
    m3 = float((samples**3).mean())
    m4 = float((samples**4).mean())
    mandel_hat = m2 / m1 - m1 - 1.0

    # delta method on (m1, m2): grad = (-m2/m1^2 - 1, 1/m1)
    g1 = -m2 / m1**2 - 1.0
    g2 = 1.0 / m1
    cov11 = m2 - m1 * m1
    cov12 = m3 - m1 * m2
    cov22 = m4 - m2 * m2
    var_hat = g1 * g1 * cov11 + 2.0 * g1 * g2 * cov12 + g2 * g2 * cov22
    std_error = math.sqrt(max(var_hat, 0.0) / draws)

    return SampleReport(
        q=q,
        x=x,
        draws=draws,
        seed=seed,
        empirical_mean=m1,
        empirical_mandel=mandel_hat,
        analytic_mandel=mandel_q(x, d, ctrl),
        std_error=std_error,
    )
