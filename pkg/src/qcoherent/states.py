"""Deformed coherent-state machinery.

A state with label z is the normalized superposition with Fock coefficients
c_n = N_q(|z|^2)^{-1/2} z^n / sqrt([n]_q!), where the normalization

    N_q(x) = sum_n x^n/[n]_q! = E_q[(1-q) q x],   x = |z|^2

is an entire function evaluated through the Jackson product.  The module
covers N_q and its derivatives, the overlap kernel, the photon-number
distribution, the S^{(p,r)} matrix-element series for monomials in the ladder
operators, truncated Fock vectors, and the deformed ladder actions
b|n> = sqrt([n]_q)|n-1>, b†|n> = sqrt([n+1]_q)|n+1>.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .errors import TruncationInsufficientError
from .qspecial import (
    DEFAULT_CONTROL,
    Deformation,
    SeriesControl,
    jackson_e,
    log_q_factorial,
    q_number,
    q_number_array,
    sum_series,
)

__all__ = [
    "StateLabel",
    "SFactorKey",
    "FockVector",
    "normalization",
    "normalization_derivative",
    "overlap",
    "photon_probability",
    "s_factor",
    "mean_photon_number",
    "fock_coefficients",
    "b_apply",
    "eigenstate_residual",
]


@dataclass(frozen=True)
class StateLabel:
    """Complex amplitude label; x caches |z|^2 and is never set independently."""

    z: complex
    x: float = field(init=False)

    def __post_init__(self) -> None:
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "x", abs(z) ** 2)


def _as_label(z) -> StateLabel:
    return z if isinstance(z, StateLabel) else StateLabel(complex(z))


class SFactorKey(NamedTuple):
    """Monomial exponents (p, r) of the normally ordered expectation."""

    p: int
    r: int


@dataclass(frozen=True)
class FockVector:
    """Truncated Fock-basis vector; coeffs[n] multiplies |n>.

    Immutable after construction.  tail_bound is the probability estimated to
    lie above the truncation when the vector represents a coherent state; it
    is None for vectors produced by operator application.
    """

    deformation: Deformation
    coeffs: np.ndarray
    tail_bound: float | None = None

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs, dtype=complex)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError("coeffs must be a 1-d sequence with trunc >= 1")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def trunc(self) -> int:
        return self.coeffs.size - 1

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))


def normalization(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """N_q(x) = E_q[(1-q) q x]; exp(x) classically.  >= 1 and increasing on x >= 0."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return math.exp(x)
    return jackson_e((1.0 - d.q) * d.q * x, d, ctrl).real


def normalization_derivative(
    x: float, order: int, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Derivative d^r N_q/dx^r via the term-wise differentiated series.

    Equals sum_{n>=r} n!/(n-r)! x^{n-r}/[n]_q!, positive for all x >= 0.
    """
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if order not in (1, 2):
        raise ValueError(f"order must be 1 or 2, got {order!r}")
    if d.classical:
        return math.exp(x)

    def terms():
        n = order
        t = math.exp(math.lgamma(order + 1) - log_q_factorial(order, d))
        while True:
            yield t
            t *= ((n + 1) / (n + 1 - order)) * x / q_number(n + 1, d)
            n += 1

    return sum_series(terms(), ctrl, label=f"N_q^({order})")


def overlap(z1, z2, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Overlap kernel <z1|z2> = [N_q(x1) N_q(x2)]^{-1/2} E_q[(1-q) q z2* z1].

    Satisfies overlap(z, z) = 1 up to the series tolerance and |overlap| <= 1.
    """
    l1, l2 = _as_label(z1), _as_label(z2)
    if d.classical:
        return cmath.exp(l2.z.conjugate() * l1.z - 0.5 * (l1.x + l2.x))
    kernel = jackson_e((1.0 - d.q) * d.q * l2.z.conjugate() * l1.z, d, ctrl)
    return kernel / math.sqrt(normalization(l1.x, d, ctrl) * normalization(l2.x, d, ctrl))


def photon_probability(
    n: int, x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL
) -> float:
    """Probability of n quanta, x^n / (N_q(x) [n]_q!); Poisson in the classical limit."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    if d.classical:
        return math.exp(n * math.log(x) - x - math.lgamma(n + 1))
    log_p = n * math.log(x) - math.log(normalization(x, d, ctrl)) - log_q_factorial(n, d)
    return math.exp(log_p)


def s_factor(key, x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Matrix-element series S^{(p,r)}_q(x) for <(a†)^p a^r> = (z*)^p z^r S^{(p,r)}.

    S^{(p,r)} = N_q^{-1} sum_n [(n+p)!(n+r)!/([n+p]_q![n+r]_q!)]^{1/2} x^n/n!,
    symmetric in (p, r), equal to 1 on the classical branch.  The square roots
    decay more slowly than the N_q terms, so termination requires a two-term
    lookahead on top of the usual rule.
    """
    p, r = SFactorKey(*key)
    if p < 0 or r < 0:
        raise ValueError(f"monomial exponents must be >= 0, got {(p, r)}")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return 1.0

    def terms():
        n = 0
        t = math.exp(
            0.5
            * (
                math.lgamma(p + 1)
                + math.lgamma(r + 1)
                - log_q_factorial(p, d)
                - log_q_factorial(r, d)
            )
        )
        while True:
            yield t
            t *= (
                math.sqrt(
                    (n + 1 + p) * (n + 1 + r) / (q_number(n + 1 + p, d) * q_number(n + 1 + r, d))
                )
                * x
                / (n + 1)
            )
            n += 1

    total = sum_series(terms(), ctrl, lookahead=2, label=f"S^({p},{r})")
    return total / normalization(x, d, ctrl)


def mean_photon_number(x: float, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """<N> = x N_q'(x)/N_q(x); reduces to x classically."""
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x!r}")
    if d.classical:
        return x
    if x == 0.0:
        return 0.0
    return x * normalization_derivative(x, 1, d, ctrl) / normalization(x, d, ctrl)


def fock_coefficients(
    z,
    d: Deformation,
    trunc: int = 60,
    *,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    tail_tol: float = 1e-12,
    auto_extend: bool = True,
    max_trunc: int = 1024,
) -> FockVector:
    """Truncated coefficient vector of the coherent state with label z.

    Magnitudes are assembled in the log domain and exponentiated once; phases
    are carried exactly as n * arg(z).  When auto_extend is set the truncation
    doubles until the tail probability drops below tail_tol; exceeding
    max_trunc raises TruncationInsufficientError.
    """
    label = _as_label(z)
    if trunc < 1:
        raise ValueError(f"trunc must be >= 1, got {trunc}")

    if label.x == 0.0:
        coeffs = np.zeros(trunc + 1, dtype=complex)
        coeffs[0] = 1.0
        return FockVector(d, coeffs, tail_bound=0.0)

    log_norm = (
        label.x if d.classical else math.log(normalization(label.x, d, ctrl))
    )
    log_abs_z = 0.5 * math.log(label.x)
    phase = cmath.phase(label.z)
    while True:
        n = np.arange(trunc + 1)
        log_fact = np.array([log_q_factorial(k, d) for k in range(trunc + 1)])
        log_mag = -0.5 * log_norm + n * log_abs_z - 0.5 * log_fact
        coeffs = np.exp(log_mag) * np.exp(1j * phase * n)
        tail = max(1.0 - float(np.sum(np.abs(coeffs) ** 2)), 0.0)
        if tail < tail_tol:
            return FockVector(d, coeffs, tail_bound=tail)
        if not auto_extend or trunc >= max_trunc:
            raise TruncationInsufficientError(
                f"tail probability {tail:.3e} >= {tail_tol:.1e} at trunc={trunc}"
            )
        trunc = min(2 * trunc, max_trunc)


def b_apply(v: FockVector, dagger: bool = False) -> FockVector:
    """Apply the deformed ladder operator to a truncated vector.

    (b v)_n = sqrt([n+1]_q) c_{n+1} and (b† v)_n = sqrt([n]_q) c_{n-1} with a
    zero bottom entry.  The top coefficient has no c_{trunc+1} partner, so one
    edge entry of the result is truncation loss, not physics.
    """
    roots = np.sqrt(q_number_array(v.trunc + 1, v.deformation))
    out = np.zeros_like(v.coeffs)
    if dagger:
        out[1:] = roots[1 : v.trunc + 1] * v.coeffs[:-1]
    else:
        out[:-1] = roots[1 : v.trunc + 1] * v.coeffs[1:]
    return FockVector(v.deformation, out)


def eigenstate_residual(
    z,
    d: Deformation,
    trunc: int = 60,
    ctrl: SeriesControl = DEFAULT_CONTROL,
) -> float:
    """Norm of (b - z)|z>_q on the truncated basis, excluding the top two rows.

    The coherent state is an exact eigenvector of b, so the residual measures
    floating-point noise only; the two edge rows are dropped because b† leaks
    probability out of any finite basis.
    """
    label = _as_label(z)
    v = fock_coefficients(label, d, trunc, ctrl=ctrl, auto_extend=False)
    diff = b_apply(v).coeffs - label.z * v.coeffs
    return float(np.linalg.norm(diff[: max(v.trunc - 1, 0)]))
