"""The Riemann-Siegel integral formula and the zeta function built on it.

    pi^{-s/2} Gamma(s/2) zeta(s) = F(s) + conj(F(1 - conj(s)))

with F given either by the classical slanted-contour integral or by the
equivalent representation whose kernel is the parabolic cylinder function
U(s - 1/2, sqrt(2 pi) e^{i pi/4} u).  An accelerated Dirichlet eta series
serves as an independent oracle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .contour import (
    ASCENDING,
    DESCENDING,
    SLOPE_DOWN,
    SLOPE_UP,
    DecayProfile,
    SlantedPath,
    integrate_slanted,
)
from .errors import DomainError, NoConvergence, PoleError
from .numeric_core import QuadratureConfig, complex_gamma
from .pcf import pcf_u_batch

__all__ = [
    "EvalReport",
    "METHOD_CLASSICAL",
    "METHOD_PCF",
    "f_upper_classical",
    "f_upper_pcf",
    "f_lower",
    "completed_zeta",
    "zeta",
    "eta_series_oracle",
]

METHOD_CLASSICAL = "classical"
METHOD_PCF = "pcf"
_SQRT_2PI = math.sqrt(2.0 * math.pi)
# |sqrt(2 pi) t| <= 50 keeps the e^{z^2/4} growth of U inside binary64
_PCF_T_CAP = 50.0 / _SQRT_2PI


@dataclass
class EvalReport:
    value: complex
    abs_error_estimate: float
    method: str
    nodes_used: int
    converged: bool = True

    def to_dict(self) -> dict:
        return {
            "re": self.value.real,
            "im": self.value.imag,
            "abs_err": self.abs_error_estimate,
            "nodes": self.nodes_used,
            "method": self.method,
            "converged": self.converged,
        }


def _check_domain(s: complex) -> None:
    if abs(s) > 60.0 or abs(s.imag) > 50.0:
        raise DomainError(f"s = {s} outside accuracy domain |s| <= 60, |Im s| <= 50")


def f_upper_classical(s: complex, cfg: QuadratureConfig) -> EvalReport:
    """F(s) = pi^{-s/2} Gamma(s/2) int_{0 downleft 1} e^{i pi u^2} u^{-s}
    / (e^{i pi u} - e^{-i pi u}) du on the slope-+1 line through 1/2."""
    s = complex(s)
    _check_domain(s)
    pref = cmath.exp(-s / 2.0 * math.log(math.pi)) * complex_gamma(s / 2.0)
    path = SlantedPath(0.5, SLOPE_UP, DESCENDING, (0.0, 1.0))

    def f(u: np.ndarray) -> np.ndarray:
        return (
            np.exp(1j * math.pi * u * u)
            * u ** (-s)
            / (np.exp(1j * math.pi * u) - np.exp(-1j * math.pi * u))
        )

    # |u^{-s}| contributes up to e^{3 pi |Im s| / 4} along the far tail
    decay = DecayProfile(alpha=math.pi, log_excess=0.75 * math.pi * abs(s.imag) + abs(s.real))
    res = integrate_slanted(f, path, decay, cfg)
    if not res.converged:
        raise NoConvergence("classical F integral did not converge", result=res)
    return EvalReport(pref * res.value, abs(pref) * res.abs_error_estimate,
                      METHOD_CLASSICAL, res.nodes_used)


def f_upper_pcf(s: complex, cfg: QuadratureConfig) -> EvalReport:
    """F(s) via the parabolic-cylinder kernel on the slope--1 line through 0:

        2^{s/2} Gamma(s/2) e^{-i pi (1-s)/4}
        int_{-1/2 downright 1/2} e^{-i pi u^2/2 + i pi u} / (2 i cos pi u)
            U(s - 1/2, sqrt(2 pi) e^{i pi/4} u) du.

    On this line the U argument is real and the Gaussian envelope cancels
    against U's growth; convergence comes from 1/cos(pi u), an exponential
    with rate pi/sqrt(2).
    """
    s = complex(s)
    _check_domain(s)
    a = s - 0.5
    pref = (
        cmath.exp(s / 2.0 * math.log(2.0))
        * complex_gamma(s / 2.0)
        * cmath.exp(-1j * math.pi * (1.0 - s) / 4.0)
    )
    path = SlantedPath(0.0, SLOPE_DOWN, ASCENDING, (-0.5, 0.5))
    inner_nodes = [0]
    rot = cmath.exp(1j * math.pi / 4.0)

    def f(u: np.ndarray) -> np.ndarray:
        uvals, nodes = pcf_u_batch(a, _SQRT_2PI * rot * u, cfg)
        inner_nodes[0] += nodes
        return (
            np.exp(-1j * math.pi * u * u / 2.0 + 1j * math.pi * u)
            / (2j * np.cos(math.pi * u))
            * uvals
        )

    decay = DecayProfile(rate=math.pi / math.sqrt(2.0), t_cap=_PCF_T_CAP)
    res = integrate_slanted(f, path, decay, cfg)
    if not res.converged:
        raise NoConvergence("pcf-form F integral did not converge", result=res)
    return EvalReport(pref * res.value, abs(pref) * res.abs_error_estimate,
                      METHOD_PCF, res.nodes_used + inner_nodes[0])


def _f_upper(s: complex, cfg: QuadratureConfig, method: str) -> EvalReport:
    if method == METHOD_CLASSICAL:
        return f_upper_classical(s, cfg)
    if method == METHOD_PCF:
        return f_upper_pcf(s, cfg)
    raise ValueError(f"unknown method {method!r}")


def f_lower(
    s: complex, cfg: QuadratureConfig, method: str = METHOD_CLASSICAL,
    route: str = "conjugate",
) -> EvalReport:
    """conj(F(1 - conj(s))), the second term of the integral formula.

    Default route evaluates F at the reflected point and conjugates.  The
    ``direct`` route evaluates the displayed reflected integral itself
    (slope--1 line through 1/2 for the classical form, slope-+1 line
    through 0 with U(1/2 - s, ...) for the pcf form) and exists for
    cross-checking the two displays against each other.
    """
    s = complex(s)
    _check_domain(s)
    if route == "conjugate":
        rep = _f_upper(1.0 - s.conjugate(), cfg, method)
        rep.value = rep.value.conjugate()
        return rep
    if route != "direct":
        raise ValueError(f"unknown route {route!r}")
    if method == METHOD_CLASSICAL:
        pref = cmath.exp(-(1.0 - s) / 2.0 * math.log(math.pi)) * complex_gamma(
            (1.0 - s) / 2.0
        )
        path = SlantedPath(0.5, SLOPE_DOWN, ASCENDING, (0.0, 1.0))

        def f(u: np.ndarray) -> np.ndarray:
            return (
                np.exp(-1j * math.pi * u * u)
                * u ** (s - 1.0)
                / (np.exp(1j * math.pi * u) - np.exp(-1j * math.pi * u))
            )

        decay = DecayProfile(
            alpha=math.pi, log_excess=0.75 * math.pi * abs(s.imag) + abs(s.real)
        )
        res = integrate_slanted(f, path, decay, cfg)
        if not res.converged:
            raise NoConvergence("direct conjugate integral did not converge", result=res)
        return EvalReport(pref * res.value, abs(pref) * res.abs_error_estimate,
                          METHOD_CLASSICAL, res.nodes_used)
    # direct pcf form of the conjugate term
    a = 0.5 - s
    pref = (
        cmath.exp((1.0 - s) / 2.0 * math.log(2.0))
        * complex_gamma((1.0 - s) / 2.0)
        * cmath.exp(1j * math.pi * s / 4.0)
    )
    path = SlantedPath(0.0, SLOPE_UP, DESCENDING, (-0.5, 0.5))
    inner_nodes = [0]
    rot = cmath.exp(-1j * math.pi / 4.0)

    def f(u: np.ndarray) -> np.ndarray:
        uvals, nodes = pcf_u_batch(a, _SQRT_2PI * rot * u, cfg)
        inner_nodes[0] += nodes
        return (
            np.exp(1j * math.pi * u * u / 2.0 - 1j * math.pi * u)
            / (2j * np.cos(math.pi * u))
            * uvals
        )

    decay = DecayProfile(rate=math.pi / math.sqrt(2.0), t_cap=_PCF_T_CAP)
    res = integrate_slanted(f, path, decay, cfg)
    if not res.converged:
        raise NoConvergence("direct pcf conjugate integral did not converge", result=res)
    return EvalReport(pref * res.value, abs(pref) * res.abs_error_estimate,
                      METHOD_PCF, res.nodes_used + inner_nodes[0])


def completed_zeta(
    s: complex, cfg: QuadratureConfig, method: str = METHOD_CLASSICAL
) -> EvalReport:
    """pi^{-s/2} Gamma(s/2) zeta(s) = F(s) + conj(F(1 - conj(s)))."""
    upper = _f_upper(s, cfg, method)
    lower = f_lower(s, cfg, method)
    return EvalReport(
        upper.value + lower.value,
        upper.abs_error_estimate + lower.abs_error_estimate,
        method,
        upper.nodes_used + lower.nodes_used,
    )


def zeta(
    s: complex, cfg: QuadratureConfig, method: str = METHOD_CLASSICAL
) -> EvalReport:
    """zeta(s), extracted from the completed function."""
    s = complex(s)
    _check_domain(s)
    if abs(s) < 0.05 or abs(s - 1.0) < 0.05:
        raise DomainError("s within exclusion radius 0.05 of the poles at 0 and 1")
    if s.imag == 0.0 and s.real <= 0.0:
        k = round(-s.real / 2.0)
        if abs(s.real + 2.0 * k) < 0.05:
            raise PoleError("s within exclusion radius of a Gamma(s/2) pole")
    rep = completed_zeta(s, cfg, method)
    chi = cmath.exp(-s / 2.0 * math.log(math.pi)) * complex_gamma(s / 2.0)
    rep.value = rep.value / chi
    rep.abs_error_estimate = rep.abs_error_estimate / abs(chi)
    return rep


def eta_series_oracle(s: complex, terms: int = 48) -> complex:
    """zeta(s) = (1 - 2^{1-s})^{-1} sum (-1)^{n+1} n^{-s}, accelerated.

    Chebyshev-weighted binomial averaging of the alternating series; the
    term count grows with |Im s| to keep ~1e-12 accuracy on Re(s) >= 1/4,
    |Im s| <= 50.  Independent of every contour in this library.
    """
    s = complex(s)
    if s.real <= 0:
        raise DomainError("eta series oracle requires Re(s) > 0")
    if terms < 32:
        raise ValueError("terms must be >= 32")
    factor = 1.0 - cmath.exp((1.0 - s) * math.log(2.0))
    if abs(factor) < 1e-6:
        raise DomainError("s too close to a zero of 1 - 2^{1-s}")
    n = max(terms, 40 + int(abs(s.imag)))
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    acc = 0.0 + 0.0j
    for k in range(n):
        c = b - c
        acc += c * cmath.exp(-s * math.log(k + 1.0))
        b *= 2.0 * (k + n) * (k - n) / ((2.0 * k + 1.0) * (k + 1.0))
    return (acc / d) / factor
