"""Quantum-optics observables of the deformed coherent states.

Conventions: X = (a + a†)/sqrt(2), P = (a - a†)/(i sqrt(2)); squeezing means a
quadrature variance below the vacuum value 1/2; the Mandel parameter is
negative for sub-Poissonian counting statistics.  The squeezing-ratio and
signal-to-noise routines fix z = sqrt(x) real, the direction in which both are
extremal; quadrature_variances remains available for arbitrary complex z.

The deformed sector replaces a with b = a sqrt([N]_q/N).  On the coherent
state <[N]_q> = x exactly (eigenstate of b), so its quadrature variance is
(1/2)(<[N+1]_q> - x), the vacuum variance becomes 1/(2q), and no deformed
squeezing ever occurs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateDivisionError
from .qspecial import (
    DEFAULT_CONTROL,
    Deformation,
    SeriesControl,
    q_number,
    sum_series,
)
from .states import (
    StateLabel,
    _as_label,
    mean_photon_number,
    normalization,
    normalization_derivative,
    s_factor,
)

__all__ = [
    "ObservableSet",
    "RhoValue",
    "metric_factor",
    "mandel_q",
    "quadrature_variances",
    "squeezing_ratio",
    "snr",
    "rho_characteristic",
    "mean_q_number",
    "mean_inverse_q_power",
    "deformed_variance",
    "deformed_squeezing_ratio",
    "deformed_snr",
    "observable_set",
]


def metric_factor(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Phase-space metric factor N'/N + x[N''/N - (N'/N)^2]; 1 classically.

    Equals q at x = 0 and stays below 1 for 0 < q < 1, flattening the
    classical geometry.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return 1.0
    norm = normalization(x, d, ctrl)
    d1 = normalization_derivative(x, 1, d, ctrl) / norm
    d2 = normalization_derivative(x, 2, d, ctrl) / norm
    return d1 + x * (d2 - d1 * d1)


def mandel_q(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Mandel parameter x (N''/N' - N'/N); 0 classically and 0 at x = 0 by continuity."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical or x == 0.0:
        return 0.0
    norm = normalization(x, d, ctrl)
    d1 = normalization_derivative(x, 1, d, ctrl)
    d2 = normalization_derivative(x, 2, d, ctrl)
    return x * (d2 / d1 - d1 / norm)


def quadrature_variances(
    z, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL
) -> tuple[float, float]:
    """Variances ((ΔX)^2, (ΔP)^2); both 1/2 for the vacuum and classically.

    (ΔX)^2 = 2(Re z)^2 {S^{(2,0)} - [S^{(1,0)}]^2} + x [S^{(1,1)} - S^{(2,0)}] + 1/2,
    and (ΔP)^2 is its Re z <-> Im z twin.
    """
    label = _as_label(z)
    if d.classical:
        return 0.5, 0.5
    x = label.x
    s10 = s_factor((1, 0), x, d, ctrl)
    s20 = s_factor((2, 0), x, d, ctrl)
    s11 = s_factor((1, 1), x, d, ctrl)
    curvature = s20 - s10 * s10
    common = x * (s11 - s20) + 0.5
    var_x = 2.0 * label.z.real**2 * curvature + common
    var_p = 2.0 * label.z.imag**2 * curvature + common
    return var_x, var_p


def squeezing_ratio(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Ratio 2 (ΔX)^2 to the vacuum variance, at real z = sqrt(x).

    Real z maximizes the squeezing; the ratio sits below 1 for 0 < q < 1 with
    small-x slope 2q (sqrt(2q/(1+q)) - 1).
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return 1.0
    var_x, _ = quadrature_variances(StateLabel(complex(math.sqrt(x))), d, ctrl)
    return 2.0 * var_x


def snr(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> tuple[float, float, float]:
    """Signal-to-quantum-noise ratio <X>^2/(ΔX)^2 at real z = sqrt(x), with bounds.

    Returns (sigma, 4<N>, 4<N>(<N>+1)): sigma exceeds the coherent-state value
    4<N> and stays under the squeezed-state bound.  x = 0 returns (0, 0, 0) by
    the small-x limit.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if x == 0.0:
        return 0.0, 0.0, 0.0
    if d.classical:
        return 4.0 * x, 4.0 * x, 4.0 * x * (x + 1.0)
    var_x, _ = quadrature_variances(StateLabel(complex(math.sqrt(x))), d, ctrl)
    if var_x <= 0.0:
        raise DegenerateDivisionError(f"(ΔX)^2 = {var_x!r} is not positive at x={x}, q={d.q}")
    s10 = s_factor((1, 0), x, d, ctrl)
    sigma = 2.0 * x * s10 * s10 / var_x
    mean_n = mean_photon_number(x, d, ctrl)
    return sigma, 4.0 * mean_n, 4.0 * mean_n * (mean_n + 1.0)


@dataclass(frozen=True)
class RhoValue:
    """Characteristic functional value ([n+1]_q/[n]_q) / ((n+1)/n) at one n."""

    n: int
    value: float


def rho_characteristic(n: int, d: Deformation) -> RhoValue:
    """Deformed-photon characteristic ratio; 1 classically, > 1 for 0 < q < 1."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if d.classical:
        return RhoValue(n, 1.0)
    value = (q_number(n + 1, d) / q_number(n, d)) * (n / (n + 1.0))
    return RhoValue(n, value)


def mean_q_number(
    x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL, shift: int = 0
) -> float:
    """Expectation <[N + shift]_q> as the direct series N^{-1} sum [n+shift]_q x^n/[n]_q!.

    shift = 0 collapses to x exactly (eigenstate property); the series is still
    summed so the identity stays testable.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if shift < 0:
        raise ValueError(f"shift must be >= 0, got {shift}")
    if d.classical:
        return x + shift

    def terms():
        n = 0
        t = q_number(shift, d)
        if shift == 0:
            n, t = 1, x
        while True:
            yield t
            t *= (q_number(n + 1 + shift, d) / q_number(n + shift, d)) * x / q_number(n + 1, d)
            n += 1

    total = sum_series(terms(), ctrl, label=f"<[N+{shift}]>")
    return total / normalization(x, d, ctrl)


def mean_inverse_q_power(
    x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Expectation <q^{-N-1}> = N^{-1} sum q^{-n-1} x^n/[n]_q!; 1 classically.

    Satisfies <[N+1]_q> = <[N]_q> + <q^{-N-1}>, the state-level image of the
    commutator [b, b†] = q^{-N-1}.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return 1.0

    def terms():
        n = 0
        t = 1.0 / d.q
        while True:
            yield t
            t *= x / (d.q * q_number(n + 1, d))
            n += 1

    return sum_series(terms(), ctrl, label="<q^{-N-1}>") / normalization(x, d, ctrl)


def deformed_variance(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Variance of the deformed quadrature X_b, equal for P_b.

    (ΔX_b)^2 = (1/2)(<[N+1]_q> - x), which also equals half the commutator
    expectation |<[X_b, P_b]>|/2: the state saturates the deformed uncertainty
    relation.  The vacuum value is 1/(2q); classically 1/2.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return 0.5
    return 0.5 * (mean_q_number(x, d, ctrl, shift=1) - x)


def deformed_squeezing_ratio(
    x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Ratio 2q (ΔX_b)^2 to the deformed vacuum variance; 1 at x = 0, > 1 beyond."""
    if d.classical:
        return 1.0
    return 2.0 * d.q * deformed_variance(x, d, ctrl)


def deformed_snr(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Deformed signal-to-noise <X_b>^2/(ΔX_b)^2 at real z = sqrt(x).

    <X_b> = sqrt(2) Re z on the coherent state, so the ratio is 2x/(ΔX_b)^2;
    it never exceeds the undeformed 4<N>.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if x == 0.0:
        return 0.0
    if d.classical:
        return 4.0 * x
    var_b = deformed_variance(x, d, ctrl)
    if var_b <= 0.0:
        raise DegenerateDivisionError(f"(ΔX_b)^2 = {var_b!r} is not positive at x={x}, q={d.q}")
    return 2.0 * x / var_b


@dataclass(frozen=True)
class ObservableSet:
    """All observables of one state: photon statistics, quadratures, and the
    deformed sector, with the ratio/SNR entries evaluated at real z = sqrt(x)."""

    deformation: Deformation
    label: StateLabel
    mean_n: float
    metric: float
    mandel: float
    var_x: float
    var_p: float
    r_ratio: float
    snr: float
    snr_lower: float
    snr_upper: float
    var_xb: float
    r_b_ratio: float
    snr_b: float


def observable_set(z, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> ObservableSet:
    """Evaluate the full observable bundle at one (q, z)."""
    label = _as_label(z)
    x = label.x
    var_x, var_p = quadrature_variances(label, d, ctrl)
    sigma, lower, upper = snr(x, d, ctrl)
    return ObservableSet(
        deformation=d,
        label=label,
        mean_n=mean_photon_number(x, d, ctrl),
        metric=metric_factor(x, d, ctrl),
        mandel=mandel_q(x, d, ctrl),
        var_x=var_x,
        var_p=var_p,
        r_ratio=squeezing_ratio(x, d, ctrl),
        snr=sigma,
        snr_lower=lower,
        snr_upper=upper,
        var_xb=deformed_variance(x, d, ctrl),
        r_b_ratio=deformed_squeezing_ratio(x, d, ctrl),
        snr_b=deformed_snr(x, d, ctrl),
    )
