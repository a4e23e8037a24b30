"""q-deformed special functions.

The deformed integer used throughout is

    [n]_q = (1 - q^{-n})/(q - 1) = q^{-n} (1 - q^n)/(1 - q) = sum_{k=1..n} q^{-k}

which exceeds n for 0 < q < 1 (its maths-type cousin {n}_q = (1 - q^n)/(1 - q)
stays below n).  Factorials built from [n]_q grow like q^{-n(n+1)/2}, so every
factorial-like quantity here lives in the log domain.  The module also provides
the Jackson product exponential

    E_q(w) = prod_{k>=0} (1 + q^k w)

and a generic tolerance-controlled series summer used by the rest of the
package.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .errors import NonConvergenceError, ZeroFactorWarning

__all__ = [
    "Deformation",
    "SeriesControl",
    "DEFAULT_CONTROL",
    "LogFactorialTable",
    "q_number",
    "maths_q_number",
    "q_number_array",
    "log_q_factorial",
    "log_q_factorial_via_gamma",
    "q_factorial_ratio",
    "jackson_e",
    "jackson_e_tail_bound",
    "log_jackson_e_pos",
    "sum_series",
]

# exp() overflows just above 709; stay a bit below when deciding whether a
# quantity is representable as a double
_LOG_HUGE = 690.0


@dataclass(frozen=True)
class Deformation:
    """Validated deformation parameter.

    q must satisfy 0 < q <= 1.  q == 1 selects the classical branch: every
    operation in the package then returns its closed-form undeformed limit
    (n, n!, exp, e^{-x}, 1/pi) instead of evaluating a numerical q -> 1 limit.
    """

    q: float
    classical: bool = field(init=False)

    def __post_init__(self) -> None:
        q = float(self.q)
        if not math.isfinite(q) or not 0.0 < q <= 1.0:
            raise ValueError(f"deformation parameter must satisfy 0 < q <= 1, got {self.q!r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "classical", q == 1.0)


@dataclass(frozen=True)
class SeriesControl:
    """Convergence policy for infinite series and products.

    Summation stops once the current term is below rel_tol times the partial
    sum while term magnitudes are decreasing; reaching max_terms first raises
    NonConvergenceError.
    """

    rel_tol: float = 1e-14
    max_terms: int = 10_000

    def __post_init__(self) -> None:
        if not self.rel_tol > 0.0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms!r}")


DEFAULT_CONTROL = SeriesControl()


def q_number(n: int, d: Deformation) -> float:
    """Deformed integer [n]_q, equal to n on the classical branch.

    Uses the rewritten form q^{-n} (1 - q^n)/(1 - q); the textbook expression
    (1 - q^{-n})/(q - 1) cancels catastrophically once q^{-n} dominates.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 0.0
    if d.classical:
        return float(n)
    q = d.q
    return q ** (-n) * (1.0 - q**n) / (1.0 - q)


def maths_q_number(n: int, d: Deformation) -> float:
    """Maths-type companion {n}_q = (1 - q^n)/(1 - q), equal to n classically."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return 0.0
    if d.classical:
        return float(n)
    return (1.0 - d.q**n) / (1.0 - d.q)


def q_number_array(n_max: int, d: Deformation) -> np.ndarray:
    """Array [0, [1]_q, ..., [n_max]_q], built by cumulative summation of q^{-k}."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if d.classical:
        return np.arange(n_max + 1, dtype=float)
    out = np.empty(n_max + 1)
    out[0] = 0.0
    out[1:] = np.cumsum(d.q ** (-np.arange(1, n_max + 1, dtype=float)))
    return out


class LogFactorialTable:
    """Append-only memo of ln([n]_q!) for one deformation.

    entry(0) = 0 and entry(n) = entry(n-1) + ln([n]_q); increments are strictly
    increasing for q < 1.  Safe for concurrent reads once entries exist.
    """

    def __init__(self, d: Deformation):
        self.deformation = d
        self._values: list[float] = [0.0]
        if d.classical:
            self._direct_cap = 0
        else:
            # below this index [n]_q itself is a representable double, so the
            # increment can be taken as log(q_number(n)); beyond it, use the
            # algebraically equal split -n ln q + ln{n}_q which never overflows
            self._direct_cap = int(_LOG_HUGE / math.log(1.0 / d.q))

    def value(self, n: int) -> float:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        d = self.deformation
        values = self._values
        while len(values) <= n:
            k = len(values)
            if d.classical:
                inc = math.log(k)
            elif k <= self._direct_cap:
                inc = math.log(q_number(k, d))
            else:
                inc = -k * math.log(d.q) + math.log1p(-d.q**k) - math.log(1.0 - d.q)
            values.append(values[-1] + inc)
        return values[n]


_TABLES: dict[float, LogFactorialTable] = {}


def _table(d: Deformation) -> LogFactorialTable:
    tbl = _TABLES.get(d.q)
    if tbl is None:
        tbl = _TABLES[d.q] = LogFactorialTable(d)
    return tbl


def log_q_factorial(n: int, d: Deformation) -> float:
    """ln([n]_q!) = sum_{k=1..n} ln([k]_q), memoized; ln(n!) classically."""
    if d.classical:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return math.lgamma(n + 1)
    return _table(d).value(n)


def log_q_factorial_via_gamma(n: int, d: Deformation) -> float:
    """ln([n]_q!) through the q-gamma split n(n+1)/2 ln(1/q) + ln({n}_q!).

    Algebraically identical to log_q_factorial; kept as an independent
    accumulation route for consistency checks.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if d.classical:
        return math.lgamma(n + 1)
    q = d.q
    log_gamma_q = sum(math.log1p(-(q**k)) - math.log(1.0 - q) for k in range(1, n + 1))
    return -0.5 * n * (n + 1) * math.log(q) + log_gamma_q


def q_factorial_ratio(n: int, d: Deformation) -> float:
    """Enhancement ratio [n]_q!/n!; equals 1 at n = 0 and on the classical branch."""
    if d.classical:
        return 1.0
    return math.exp(log_q_factorial(n, d) - math.lgamma(n + 1))


def _product_length(abs_w: float, d: Deformation, ctrl: SeriesControl) -> int:
    """Smallest K with q^K |w| < rel_tol; NonConvergenceError past the term cap."""
    if abs_w < ctrl.rel_tol:
        return 0
    k = math.ceil(math.log(ctrl.rel_tol / abs_w) / math.log(d.q))
    k = max(k, 0)
    while d.q**k * abs_w >= ctrl.rel_tol:  # guard the rounding of the ceil
        k += 1
    if k > ctrl.max_terms:
        raise NonConvergenceError(
            f"E_q product needs {k} factors at q={d.q}, |w|={abs_w:.3g} "
            f"(cap {ctrl.max_terms}); increase max_terms or loosen rel_tol"
        )
    return k


def jackson_e(w: complex, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Jackson product exponential E_q(w) = prod_{k>=0} (1 + q^k w).

    The product is truncated at the first factor with |q^k w| < ctrl.rel_tol;
    the neglected tail is bounded by exp(q^K |w| / (1 - q)) - 1 (see
    jackson_e_tail_bound).  A factor that is exactly zero (possible for
    negative real w) emits ZeroFactorWarning and the product is reported as 0.

    The classical branch is intentionally rejected: E_q only recovers exp in
    the combination E_q[(1-q) z] -> e^z, so classical callers must use exp on
    their own, unscaled argument.
    """
    if d.classical:
        raise ValueError("E_q is undefined on the classical branch; use exp directly")
    w = complex(w)
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise ValueError(f"argument must be finite, got {w!r}")
    if w.imag == 0.0 and w.real >= 0.0:
        # all factors >= 1: evaluate as exp(sum log1p) to dodge overflow
        return complex(math.exp(log_jackson_e_pos(w.real, d, ctrl)))
    n_factors = _product_length(abs(w), d, ctrl)
    out = complex(1.0)
    qk = 1.0
    for _ in range(n_factors):
        factor = 1.0 + qk * w
        if factor == 0:
            warnings.warn(
                f"E_q factor exactly zero at q={d.q}, w={w!r}; returning 0",
                ZeroFactorWarning,
                stacklevel=2,
            )
            return complex(0.0)
        out *= factor
        qk *= d.q
    return out


def jackson_e_tail_bound(w: complex, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL) -> float:
    """Relative bound on the E_q factors dropped by the truncation rule."""
    if d.classical:
        return 0.0
    abs_w = abs(complex(w))
    n_factors = _product_length(abs_w, d, ctrl)
    return math.expm1(d.q**n_factors * abs_w / (1.0 - d.q))


def log_jackson_e_pos(w, d: Deformation, ctrl: SeriesControl = DEFAULT_CONTROL):
    """ln E_q(w) for real w >= 0, elementwise on arrays.

    Every factor is >= 1, so ln E_q = sum_k log1p(q^k w) is a sum of positive
    terms and never overflows even where E_q itself would.
    """
    if d.classical:
        raise ValueError("E_q is undefined on the classical branch; use exp directly")
    arr = np.asarray(w, dtype=float)
    if arr.size and float(arr.min()) < 0.0:
        raise ValueError("log_jackson_e_pos requires w >= 0")
    if arr.size == 0:
        return np.zeros_like(arr)
    n_factors = _product_length(float(arr.max()), d, ctrl)
    out = np.zeros_like(arr)
    # chunk the factor index so huge K (q near 1) stays memory-bounded
    for k0 in range(0, n_factors, 1024):
        qk = d.q ** np.arange(k0, min(k0 + 1024, n_factors), dtype=float)
        out += np.log1p(np.multiply.outer(qk, arr)).sum(axis=0)
    return float(out) if np.isscalar(w) or arr.ndim == 0 else out


def sum_series(
    terms: Iterable,
    ctrl: SeriesControl = DEFAULT_CONTROL,
    lookahead: int = 0,
    label: str = "series",
):
    """Sum terms until the control's termination rule fires.

    A term passes when its magnitude is below rel_tol * |partial sum| and not
    larger than the previous term; summation stops after 1 + lookahead
    consecutive passes.  Raises NonConvergenceError at max_terms.
    """
    iterator: Iterator = iter(terms)
    total = None
    prev_mag = math.inf
    consecutive = 0
    for count, term in enumerate(iterator):
        if count >= ctrl.max_terms:
            raise NonConvergenceError(f"{label}: no convergence within {ctrl.max_terms} terms")
        total = term if total is None else total + term
        mag = abs(term)
        if mag <= ctrl.rel_tol * abs(total) and mag <= prev_mag:
            consecutive += 1
            if consecutive > lookahead:
                return total
        else:
            consecutive = 0
        prev_mag = mag
    raise NonConvergenceError(f"{label}: term stream ended before convergence")
