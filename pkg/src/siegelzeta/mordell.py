"""The special Mordell integral Phi(x, tau) and its transformation laws.

    Phi(x, tau) = int_{0 up 1} e^{i pi tau u^2 + 2 pi i x u} / (e^{2 pi i u} - 1) du

over a slope-+1 line crossing (0, 1), for Re(tau) > 0.  Three independent
routes are provided: direct quadrature, the exponential-sum closed form for
rational tau, and the integral transformation (which converts a slowly
convergent integral at small |tau| into a rapidly convergent one).
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
from .errors import DegenerateRationalPoint, DomainError, NoConvergence
from .numeric_core import QuadratureConfig, QuadratureResult

__all__ = [
    "MordellArgs",
    "RationalTau",
    "phi_quadrature",
    "phi_rational",
    "transform_rhs",
    "functional_equation_residual",
]


@dataclass(frozen=True)
class MordellArgs:
    x: complex
    tau: complex

    def __post_init__(self):
        if not complex(self.tau).real > 0:
            raise DomainError("Mordell integral requires Re(tau) > 0")


@dataclass(frozen=True)
class RationalTau:
    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m <= 64 and 1 <= self.n <= 64):
            raise ValueError("m, n must be integers in [1, 64]")


def _envelope(x: complex, tau: complex) -> DecayProfile:
    # Gaussian rate pi Re(tau) along the slope-+1 line; the linear exponent
    # term translates the peak by at most (|x| + |tau|) / Re(tau)
    re_tau = complex(tau).real
    return DecayProfile(
        alpha=math.pi * re_tau, shift=(abs(x) + abs(tau)) / re_tau
    )


def _clamped_crossing(sigma_star: float, rate: float) -> float:
    """Clamp a slanted-coordinate crossing away from the integer poles.

    ``rate`` is the Gaussian decay rate along the line; straying a distance
    d from the ideal (saddle) line costs a hump of exponent rate * d^2 / 2,
    so the clamping gap shrinks as the rate grows.
    """
    gap = min(0.45, max(0.02, math.sqrt(8.0 / rate)))
    k_near = round(sigma_star)
    off = sigma_star - k_near
    if abs(off) >= gap:
        return sigma_star
    if off == 0.0:
        return k_near + gap
    return k_near + math.copysign(gap, off)


def phi_quadrature(
    args: MordellArgs, cfg: QuadratureConfig, crossing: float | None = None
) -> QuadratureResult:
    """Phi(x, tau) by quadrature along a slope-+1 slanted path.

    With an explicit ``crossing`` in (0, 1) the integral runs along the
    canonical line through that point.  By default the line slides to the
    saddle of the exponent at u = -x/tau (where the integrand is a pure
    Gaussian along the line, avoiding cancellation at large |x|); integer
    poles passed on the way contribute their residues, and the two poles
    bracketing the crossing are subtracted analytically.
    """
    x, tau = complex(args.x), complex(args.tau)
    if crossing is not None:
        path = SlantedPath(crossing, SLOPE_UP, ASCENDING, (0.0, 1.0))

        def f(u: np.ndarray) -> np.ndarray:
            return np.exp(1j * math.pi * tau * u * u + 2j * math.pi * x * u) / (
                np.exp(2j * math.pi * u) - 1.0
            )

        return integrate_slanted(f, path, _envelope(x, tau), cfg)

    saddle = -x / tau
    sigma_star = saddle.real - saddle.imag  # slanted coordinate, slope +1
    sigma = _clamped_crossing(sigma_star, math.pi * tau.real)
    k_lo = math.floor(sigma)
    phase = cmath.exp(1j * math.pi / 4.0)

    def numerator(u):
        return np.exp(1j * math.pi * tau * u * u + 2j * math.pi * x * u)

    near = [(k, complex(numerator(k)) / (2j * math.pi)) for k in (k_lo, k_lo + 1)]

    def f_smooth(u: np.ndarray) -> np.ndarray:
        vals = numerator(u) / (np.exp(2j * math.pi * u) - 1.0)
        for k, resid in near:
            vals = vals - resid / (u - k)
        return vals

    decay = DecayProfile(
        alpha=math.pi * tau.real,
        shift=abs(tau * sigma + x) / tau.real + 0.5,
        log_excess=0.5 * math.pi * tau.real * (sigma - sigma_star) ** 2,
    )
    path = SlantedPath(sigma, SLOPE_UP, ASCENDING, (k_lo, k_lo + 1))
    res = integrate_slanted(f_smooth, path, decay, cfg)
    t_max = decay.truncation(cfg)
    u_lo = sigma - t_max * phase
    u_hi = sigma + t_max * phase
    for k, resid in near:
        res.value += resid * cmath.log((u_hi - k) / (u_lo - k))
    # residues of poles crossed while deforming from the canonical crossing
    if sigma > 1.0:
        crossed, orient = range(1, k_lo + 1), -1.0
    elif sigma < 0.0:
        crossed, orient = range(k_lo + 1, 1), 1.0
    else:
        crossed, orient = (), 0.0
    for k in crossed:
        res.value += orient * complex(numerator(k))
    return res


def _kahan_complex_sum(terms: np.ndarray) -> complex:
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for t in terms:
        y = t - comp
        s = total + y
        comp = (s - total) - y
        total = s
    return total


def phi_rational(x: complex, rt: RationalTau) -> complex:
    """Closed form of Phi(x, m/n) as a ratio of exponential sums.

    Raises DegenerateRationalPoint when the denominator e^{i pi n (2x+m)} - 1
    is below 1e-8 in magnitude (a removable singularity; use quadrature
    there instead).
    """
    x = complex(x)
    m, n = rt.m, rt.n
    den = cmath.exp(1j * math.pi * n * (2.0 * x + m)) - 1.0
    if abs(den) < 1e-8:
        raise DegenerateRationalPoint(
            f"denominator magnitude {abs(den):.2e} at x={x}, tau={m}/{n}"
        )
    k1 = np.arange(1, n + 1)
    sum1 = _kahan_complex_sum(
        np.exp(1j * math.pi * (m / n) * k1 * k1 + 2j * math.pi * x * k1)
    )
    k2 = np.arange(1, m + 1)
    sum2 = _kahan_complex_sum(
        np.exp(-1j * math.pi * (n / m) * k2 * k2 + 2j * math.pi * (n / m) * x * k2)
    )
    pref = math.sqrt(n / m) * cmath.exp(1j * math.pi * (0.25 - (n / m) * x * x))
    return (sum1 - pref * sum2) / den


def transform_rhs_result(args: MordellArgs, cfg: QuadratureConfig) -> QuadratureResult:
    """Right side of the integral transformation:

        e^{i pi (1/4 - x^2/tau)} / sqrt(tau)
            * int_{0 upleft 1} e^{-i pi u^2/tau + 2 pi i x u/tau} / (e^{-2 pi i u} - 1) du

    with the principal square root (Re sqrt(tau) > 0).  Equal to Phi(x, tau);
    converges at the rate pi Re(1/tau), fast precisely where the direct
    integral is slow.

    The line of integration is slid from the canonical crossing 1/2 to the
    saddle crossing (see :func:`_transform_crossing`); integer poles passed
    on the way contribute their residues -e^{-i pi nu k^2 + 2 pi i x nu k}.
    """
    x, tau = complex(args.x), complex(args.tau)
    nu = 1.0 / tau
    # the transformed exponent's saddle sits at u = x, slanted coordinate
    # Re x + Im x on the slope--1 line
    sigma = _clamped_crossing(x.real + x.imag, math.pi * nu.real)
    k_lo = math.floor(sigma)
    phase = cmath.exp(-1j * math.pi / 4.0)  # slope--1 direction

    def numerator(u):
        return np.exp(-1j * math.pi * nu * u * u + 2j * math.pi * x * nu * u)

    # the two poles bracketing the crossing are handled analytically:
    # subtracting residue / (u - k) leaves a smooth integrand, and the
    # subtracted pieces integrate to residue * log((u_hi - k)/(u_lo - k))
    near = [
        (k, complex(numerator(k)) / (-2j * math.pi)) for k in (k_lo, k_lo + 1)
    ]

    def f_smooth(u: np.ndarray) -> np.ndarray:
        vals = numerator(u) / (np.exp(-2j * math.pi * u) - 1.0)
        for k, resid in near:
            vals = vals - resid / (u - k)
        return vals

    sigma_star = x.real + x.imag
    decay = DecayProfile(
        alpha=math.pi * nu.real,
        shift=abs(nu * (x - sigma)) / nu.real + 0.25,
        log_excess=0.5 * math.pi * nu.real * (sigma - sigma_star) ** 2,
    )
    path = SlantedPath(sigma, SLOPE_DOWN, DESCENDING, (k_lo, k_lo + 1))
    res = integrate_slanted(f_smooth, path, decay, cfg)
    t_max = decay.truncation(cfg)
    u_lo = sigma - t_max * phase
    u_hi = sigma + t_max * phase
    for k, resid in near:
        # principal log difference is exact: the truncated segment never
        # subtends a full half-turn around either bracketing pole
        res.value += -resid * cmath.log((u_hi - k) / (u_lo - k))
    log_pref = 1j * math.pi * (0.25 - x * x * nu)
    pref = cmath.exp(log_pref) / cmath.sqrt(tau)
    res.value = pref * res.value
    # residues of the poles crossed while deforming from crossing 1/2
    if sigma > 1.0:
        crossed, orient = range(1, k_lo + 1), 1.0
    elif sigma < 0.0:
        crossed, orient = range(k_lo + 1, 1), -1.0
    else:
        crossed, orient = (), 0.0
    for k in crossed:
        res.value += orient * cmath.exp(
            log_pref - 1j * math.pi * nu * k * k + 2j * math.pi * x * nu * k
        ) / cmath.sqrt(tau)
    return res


def transform_rhs(args: MordellArgs, cfg: QuadratureConfig) -> complex:
    """Value of :func:`transform_rhs_result`; raises on non-convergence."""
    res = transform_rhs_result(args, cfg)
    if not res.converged:
        raise NoConvergence("transformed Mordell integral did not converge", result=res)
    return res.value


def functional_equation_residual(args: MordellArgs, cfg: QuadratureConfig) -> float:
    """Relative residual of the functional equation

        Phi(x, tau) = -e^{i pi (1/4 - x^2/tau)} / sqrt(tau)
                       * conj(Phi(-conj(x)/conj(tau), 1/conj(tau))),

    with both sides evaluated by independent quadratures.
    """
    x, tau = complex(args.x), complex(args.tau)
    lhs = phi_quadrature(args, cfg).value
    tau_bar = tau.conjugate()
    inner = phi_quadrature(
        MordellArgs(-x.conjugate() / tau_bar, 1.0 / tau_bar), cfg
    ).value
    rhs = (
        -cmath.exp(1j * math.pi * (0.25 - x * x / tau))
        / cmath.sqrt(tau)
        * inner.conjugate()
    )
    return abs(lhs - rhs) / (abs(lhs) + 1e-300)
