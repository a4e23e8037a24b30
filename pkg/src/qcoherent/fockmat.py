"""Dense operator matrices on a truncated Fock basis.

These matrices are assembled directly from the ladder matrix elements
sqrt(n) and sqrt([n]_q), independently of the series formulas elsewhere in
the package, so expectation values computed here serve as a brute-force
cross-check of every analytic observable.  Edge rows of products are
corrupted by the truncation; callers exclude them.
"""

from __future__ import annotations

import numpy as np

from .qspecial import Deformation, q_number_array

__all__ = [
    "ladder",
    "deformed_ladder",
    "number_op",
    "quadrature_x",
    "quadrature_p",
    "deformed_x",
    "deformed_p",
    "expectation",
    "variance",
]


def ladder(dim: int) -> np.ndarray:
    """Boson annihilation matrix a with a[n-1, n] = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1.0, dim)), k=1)


def deformed_ladder(dim: int, d: Deformation) -> np.ndarray:
    """Deformed annihilation matrix b with b[n-1, n] = sqrt([n]_q)."""
    return np.diag(np.sqrt(q_number_array(dim - 1, d)[1:]), k=1)


def number_op(dim: int) -> np.ndarray:
    return np.diag(np.arange(float(dim)))


def quadrature_x(dim: int) -> np.ndarray:
    a = ladder(dim)
    return (a + a.T) / np.sqrt(2.0)


def quadrature_p(dim: int) -> np.ndarray:
    a = ladder(dim)
    return (a - a.T) / (1j * np.sqrt(2.0))


def deformed_x(dim: int, d: Deformation) -> np.ndarray:
    b = deformed_ladder(dim, d)
    return (b + b.T) / np.sqrt(2.0)


def deformed_p(dim: int, d: Deformation) -> np.ndarray:
    b = deformed_ladder(dim, d)
    return (b - b.T) / (1j * np.sqrt(2.0))


def expectation(op: np.ndarray, coeffs: np.ndarray) -> complex:
    """<psi|op|psi> for a coefficient vector on the truncated basis."""
    return complex(np.vdot(coeffs, op @ coeffs))


def variance(op: np.ndarray, coeffs: np.ndarray) -> float:
    """<op^2> - <op>^2; op must be Hermitian for this to be meaningful."""
    mean = expectation(op, coeffs)
    second = expectation(op @ op, coeffs)
    return float(second.real - mean.real**2)
