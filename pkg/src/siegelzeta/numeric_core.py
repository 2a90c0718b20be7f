"""Complex gamma function and adaptive panel quadrature.

Foundation layer: everything else in the library reduces its integrals to
:func:`adaptive_integrate` over a real parameter interval.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import PoleError

__all__ = [
    "QuadratureConfig",
    "QuadratureResult",
    "complex_gamma",
    "adaptive_integrate",
]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerance and refinement controls for all quadrature in the library."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    panel_order: int = 32
    max_refinements: int = 12
    truncation_sigma: float = 1.5

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.panel_order < 4:
            raise ValueError("panel_order must be >= 4")
        if self.max_refinements < 1:
            raise ValueError("max_refinements must be >= 1")
        if self.truncation_sigma < 1:
            raise ValueError("truncation_sigma must be >= 1")

    def tolerance_for(self, magnitude: float) -> float:
        return max(self.abs_tol, self.rel_tol * magnitude)


@dataclass
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    nodes_used: int
    refinements: int
    converged: bool


# Lanczos approximation, g = 7, 9 coefficients.  Gives ~1e-13 relative
# accuracy on Re z >= 1/2; the reflection formula covers the left half-plane.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)

_SQRT_TWO_PI = math.sqrt(2.0 * math.pi)


def complex_gamma(z: complex) -> complex:
    """Gamma(z) for complex z via Lanczos + reflection.

    Raises:
      PoleError: if z is within 1e-12 of a non-positive integer.
    """
    z = complex(z)
    if z.imag == 0.0:
        n = round(z.real)
        if n <= 0 and abs(z.real - n) <= 1e-12:
            raise PoleError(f"gamma pole at z = {z}")
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        s = cmath.sin(cmath.pi * z)
        if s == 0:
            raise PoleError(f"gamma pole at z = {z}")
        return cmath.pi / (s * complex_gamma(1.0 - z))
    zz = z - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (zz + i)
    t = zz + _LANCZOS_G + 0.5
    return _SQRT_TWO_PI * t ** (zz + 0.5) * cmath.exp(-t) * acc


@lru_cache(maxsize=16)
def _gauss_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    return x, w


def _panel_sum(
    f: Callable[[np.ndarray], np.ndarray],
    t_lo: float,
    t_hi: float,
    n_panels: int,
    order: int,
) -> complex:
    x, w = _gauss_nodes(order)
    edges = np.linspace(t_lo, t_hi, n_panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = np.asarray(f(nodes), dtype=complex).reshape(n_panels, order)
    return complex(np.sum(half * (vals @ w)))


def adaptive_integrate(
    f: Callable[[np.ndarray], np.ndarray],
    t_lo: float,
    t_hi: float,
    cfg: QuadratureConfig,
) -> QuadratureResult:
    """Integrate a vectorized complex integrand over [t_lo, t_hi].

    Fixed-order Gauss-Legendre panels; every refinement halves the panels.
    Converged when two consecutive refinements differ by less than the
    tolerance.  The error estimate is that last difference, not a bound.

    ``f`` must accept an ndarray of parameter values and return an ndarray
    of complex integrand values of the same shape.
    """
    if not t_lo < t_hi:
        raise ValueError("t_lo must be < t_hi")
    order = cfg.panel_order
    prev = _panel_sum(f, t_lo, t_hi, 1, order)
    nodes = order
    diff = math.inf
    for r in range(1, cfg.max_refinements + 1):
        n_panels = 2**r
        cur = _panel_sum(f, t_lo, t_hi, n_panels, order)
        nodes += n_panels * order
        diff = abs(cur - prev)
        # require at least two refinements so a lucky coarse match cannot
        # end the loop on an unresolved oscillatory integrand
        if r >= 2 and diff <= cfg.tolerance_for(abs(cur)):
            return QuadratureResult(cur, diff, nodes, r, True)
        prev = cur
    return QuadratureResult(prev, diff, nodes, cfg.max_refinements, False)
