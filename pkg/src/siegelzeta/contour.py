"""Slanted-line and ray contours, reduced to real-parameter quadrature.

A slanted path is a straight line of slope +1 or -1 crossing the real axis
between two anchor points; its parameterization is u(t) = c + t e^{i theta}
with theta = +-pi/4.  An ascending traversal runs t from -inf to +inf,
a descending traversal is the reversal (and flips the sign of the integral).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import SingularAtOrigin
from .numeric_core import QuadratureConfig, QuadratureResult, adaptive_integrate

__all__ = [
    "ASCENDING",
    "DESCENDING",
    "SLOPE_UP",
    "SLOPE_DOWN",
    "SlantedPath",
    "DecayProfile",
    "parameterize",
    "integrate_slanted",
    "integrate_ray",
]

ASCENDING = "ascending"
DESCENDING = "descending"
SLOPE_UP = math.pi / 4  # slope +1
SLOPE_DOWN = -math.pi / 4  # slope -1


@dataclass(frozen=True)
class SlantedPath:
    crossing: float
    slope_angle: float  # +pi/4 or -pi/4
    direction: str = ASCENDING
    anchors: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        if self.slope_angle not in (SLOPE_UP, SLOPE_DOWN):
            raise ValueError("slope_angle must be +pi/4 or -pi/4")
        if self.direction not in (ASCENDING, DESCENDING):
            raise ValueError("direction must be 'ascending' or 'descending'")
        a1, a2 = self.anchors
        if not (a1 < self.crossing < a2):
            raise ValueError("crossing must lie strictly between the anchors")


@dataclass(frozen=True)
class DecayProfile:
    """Decay envelope of an integrand along its parameter line.

    ``alpha`` is a Gaussian rate (|f| <= C e^{-alpha t^2} eventually);
    ``rate`` an optional linear rate for integrands whose convergence comes
    from an exponential factor instead.  ``log_excess`` adds slack for a
    known log-magnitude excess C, ``shift`` translates the truncation window
    for a displaced envelope peak, and ``t_cap`` hard-caps the half-length.
    """

    alpha: float | None = None
    rate: float | None = None
    log_excess: float = 0.0
    shift: float = 0.0
    t_cap: float | None = None

    def __post_init__(self):
        if (self.alpha is None or self.alpha <= 0) and (
            self.rate is None or self.rate <= 0
        ):
            raise ValueError("DecayProfile needs a positive alpha or rate")

    def truncation(self, cfg: QuadratureConfig) -> float:
        budget = math.log(1.0 / cfg.abs_tol) + self.log_excess
        t = 0.0
        if self.alpha is not None and self.alpha > 0:
            t = max(t, math.sqrt(budget / self.alpha))
        if self.rate is not None and self.rate > 0:
            t = max(t, budget / self.rate)
        t = cfg.truncation_sigma * t + self.shift
        if self.t_cap is not None:
            t = min(t, self.t_cap)
        return t


def parameterize(path: SlantedPath, t):
    """Point u(t) = crossing + t e^{i slope_angle} on the path.

    The traversal direction does not enter here; it only flips the sign
    convention applied by :func:`integrate_slanted`.
    """
    return path.crossing + np.asarray(t) * cmath.exp(1j * path.slope_angle)


def integrate_slanted(
    f: Callable[[np.ndarray], np.ndarray],
    path: SlantedPath,
    decay: DecayProfile,
    cfg: QuadratureConfig,
) -> QuadratureResult:
    """Integrate f(u) du along the slanted path.

    ``f`` receives an ndarray of complex path points.  The line is truncated
    at |t| <= T from the decay profile; the Gaussian (or exponential) tail
    beyond T is below abs_tol by construction.
    """
    phase = cmath.exp(1j * path.slope_angle)
    t_max = decay.truncation(cfg)

    def g(t: np.ndarray) -> np.ndarray:
        return f(path.crossing + t * phase)

    res = adaptive_integrate(g, -t_max, t_max, cfg)
    sign = 1.0 if path.direction == ASCENDING else -1.0
    res.value = sign * phase * res.value
    return res


def _origin_growth_exponent(f, direction: complex) -> float | None:
    r1, r2 = 1e-3, 1e-6
    v = np.asarray(f(np.array([r1, r2]) * direction), dtype=complex)
    m1, m2 = abs(v[0]), abs(v[1])
    if m1 == 0.0 or m2 == 0.0 or not (np.isfinite(m1) and np.isfinite(m2)):
        return None
    return math.log(m1 / m2) / math.log(r1 / r2)


def integrate_ray(
    f: Callable[[np.ndarray], np.ndarray],
    angle: float,
    cfg: QuadratureConfig,
    decay: DecayProfile,
) -> QuadratureResult:
    """Integrate f(z) dz from 0 to e^{i angle} * infinity.

    The origin-side piece uses the substitution r = v^2 to soften integrable
    endpoint behavior.  Raises SingularAtOrigin when sampling indicates |f|
    grows faster than r^{-0.99} toward the origin.
    """
    direction = cmath.exp(1j * angle)
    p = _origin_growth_exponent(f, direction)
    if p is not None and p <= -0.99:
        raise SingularAtOrigin(
            f"integrand grows like r^{p:.2f} at the origin of the ray"
        )
    r_max = decay.truncation(cfg)
    split = min(1.0, r_max)

    def g_origin(v: np.ndarray) -> np.ndarray:
        return 2.0 * v * f((v * v) * direction)

    res = adaptive_integrate(g_origin, 0.0, math.sqrt(split), cfg)
    if r_max > split:

        def g_tail(r: np.ndarray) -> np.ndarray:
            return f(r * direction)

        tail = adaptive_integrate(g_tail, split, r_max, cfg)
        res.value += tail.value
        res.abs_error_estimate += tail.abs_error_estimate
        res.nodes_used += tail.nodes_used
        res.refinements = max(res.refinements, tail.refinements)
        res.converged = res.converged and tail.converged
    res.value *= direction
    return res
