"""Identity-verification suites.

Every check evaluates one identity over its grid and reports the worst
relative residual together with the tolerance it is held to.  The CLI
``verify`` command and the test suite both run these.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DegenerateRationalPoint
from .mordell import (
    MordellArgs,
    RationalTau,
    functional_equation_residual,
    phi_quadrature,
    phi_rational,
    transform_rhs,
    transform_rhs_result,
)
from .numeric_core import QuadratureConfig, complex_gamma
from .pcf import (
    PcfArgs,
    pcf_ray_closed_form,
    pcf_ray_integral,
    pcf_recurrence_residual,
    pcf_u,
)
from .riemann_siegel import (
    METHOD_CLASSICAL,
    METHOD_PCF,
    completed_zeta,
    eta_series_oracle,
    f_lower,
    f_upper_classical,
    f_upper_pcf,
    zeta,
)

__all__ = ["CheckRow", "CHECKS", "run_checks"]


@dataclass
class CheckRow:
    name: str
    max_residual: float
    tolerance: float
    passed: bool


def _gamma_sample(seed: int, count: int = 100) -> np.ndarray:
    rng = np.random.RandomState(seed)
    pts = []
    while len(pts) < count:
        z = complex(rng.uniform(-10, 10), rng.uniform(-10, 10))
        if abs(z.real - round(z.real)) >= 0.1 or abs(z.imag) >= 0.1:
            pts.append(z)
    return np.array(pts)


def check_gamma_reflection(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for z in _gamma_sample(seed):
        lhs = complex_gamma(z) * complex_gamma(1.0 - z)
        rhs = math.pi / cmath.sin(math.pi * z)
        worst = max(worst, abs(lhs - rhs) / abs(rhs))
    return worst, 1e-10


def check_gamma_recurrence(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for z in _gamma_sample(seed):
        lhs = complex_gamma(z + 1.0)
        worst = max(worst, abs(lhs - z * complex_gamma(z)) / abs(lhs))
    return worst, 1e-10


def check_pcf_recurrence(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for a in (1.0, 1.5, 2.0, 2.5):
        for z in (-3.0, -1.0, 0.0, 1.0, 3.0, 2j, 1 + 1j):
            worst = max(worst, pcf_recurrence_residual(a, z, cfg))
    return worst, 1e-8


def _u_zero_closed_form(a: complex) -> complex:
    # int_0^inf e^{-w^2/2} w^{a-1/2} dw = 2^{(2a-3)/4} Gamma(a/2 + 1/4)
    return (
        2.0 ** ((2.0 * a - 3.0) / 4.0)
        * complex_gamma(a / 2.0 + 0.25)
        / complex_gamma(a + 0.5)
    )


def check_pcf_u_at_zero(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for a in (0.0, 0.5, 1.0, 2.0, 1 + 1j):
        ref = _u_zero_closed_form(a)
        worst = max(worst, abs(pcf_u(PcfArgs(a, 0.0), cfg) - ref) / abs(ref))
    return worst, 1e-10


def check_pcf_continuation(cfg: QuadratureConfig, seed: int):
    # direct evaluation vs the recurrence route, both available on (-1/2, 0)
    worst = 0.0
    for a in (-0.25, -0.4 + 0.3j, -0.1 + 1j):
        for z in (0.0, 1.0, -2.0, 1 + 1j):
            direct = pcf_u(PcfArgs(a, z), cfg)
            via = z * pcf_u(PcfArgs(a + 1.0, z), cfg) + (a + 1.5) * pcf_u(
                PcfArgs(a + 2.0, z), cfg
            )
            worst = max(worst, abs(direct - via) / (abs(direct) + 1e-300))
    return worst, 1e-8


def check_pcf_ray_identity(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for s in (1.0, 2.0, 3.0):
        for u in (0.5, 0.5 + 1j, 1.0):
            lhs = pcf_ray_integral(s, u, cfg)
            rhs = pcf_ray_closed_form(s, u, cfg)
            worst = max(worst, abs(lhs - rhs) / (abs(rhs) + 1e-300))
    return worst, 1e-8


def check_mordell_closed_form(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for m in (1, 2, 3, 5):
        for n in (1, 2, 3, 5):
            for x in (0.0, 0.3, 1j, 1 + 0.5j):
                try:
                    closed = phi_rational(x, RationalTau(m, n))
                except DegenerateRationalPoint:
                    continue
                quad = phi_quadrature(MordellArgs(x, m / n), cfg).value
                worst = max(worst, abs(closed - quad) / (1.0 + abs(quad)))
    return worst, 1e-9


_TRANSFORM_GRID = [
    (x, tau)
    for tau in (1.0, 2 + 1j, 0.5, 0.1 + 0.3j)
    for x in (0.0, 1 + 1j)
]


def check_mordell_transformation(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for x, tau in _TRANSFORM_GRID:
        args = MordellArgs(x, tau)
        direct = phi_quadrature(args, cfg).value
        trans = transform_rhs(args, cfg)
        worst = max(worst, abs(direct - trans) / (1.0 + abs(direct)))
    return worst, 1e-8


def check_mordell_functional_equation(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for x, tau in _TRANSFORM_GRID:
        worst = max(worst, functional_equation_residual(MordellArgs(x, tau), cfg))
    return worst, 1e-8


def check_mordell_path_independence(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for x, tau in ((0.0, 1.0), (1j, 2 + 1j)):
        args = MordellArgs(x, tau)
        vals = [phi_quadrature(args, cfg, crossing=c).value for c in (0.3, 0.5, 0.7)]
        ref = vals[1]
        for v in vals:
            worst = max(worst, abs(v - ref) / (abs(ref) + 1e-300))
    return worst, 1e-9


def check_mordell_entirety(cfg: QuadratureConfig, seed: int):
    # discrete maximum-modulus check on a small x-ring around each center
    worst = 0.0
    for x0, tau in ((0.25, 1.0), (0.5j, 2 + 1j)):
        center = abs(phi_quadrature(MordellArgs(x0, tau), cfg).value)
        ring = max(
            abs(
                phi_quadrature(
                    MordellArgs(x0 + 0.2 * cmath.exp(2j * math.pi * k / 8), tau), cfg
                ).value
            )
            for k in range(8)
        )
        worst = max(worst, max(0.0, center - ring) / (1.0 + center))
    return worst, 1e-9


def check_mordell_acceleration(cfg: QuadratureConfig, seed: int):
    # compare the two representations on their canonical paths, equal tolerance
    args = MordellArgs(0.0, 0.01)
    bench_cfg = QuadratureConfig(rel_tol=1e-9, abs_tol=cfg.abs_tol)
    direct = phi_quadrature(args, bench_cfg, crossing=0.5)
    trans = transform_rhs_result(args, bench_cfg)
    agree = abs(direct.value - trans.value) / (1.0 + abs(direct.value))
    # pass requires >= 5x fewer nodes AND value agreement
    if 5 * trans.nodes_used > direct.nodes_used:
        return math.inf, 1e-8
    return agree, 1e-8


_FORM_EQUIV_POINTS = (2.0, 3.0, 0.5, 0.5 + 3j, 0.5 + 10j, -0.3 + 2j)


def check_rs_form_equivalence(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for s in _FORM_EQUIV_POINTS:
        fc = f_upper_classical(s, cfg).value
        fp = f_upper_pcf(s, cfg).value
        worst = max(worst, abs(fp - fc) / (1.0 + abs(fc)))
    return worst, 1e-7


def check_rs_reflection_symmetry(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for s in (2.0, 0.3 + 2j, 0.5 + 5j, 1.5 + 1j, -0.5 + 3j):
        a = completed_zeta(s, cfg, METHOD_CLASSICAL).value
        b = completed_zeta(1.0 - complex(s).conjugate(), cfg, METHOD_CLASSICAL).value
        worst = max(worst, abs(b.conjugate() - a) / (abs(a) + 1e-300))
    return worst, 1e-8


def check_rs_critical_line_reality(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for t in (0.0, 1.0, 5.0, 14.134725, 20.0):
        v = completed_zeta(0.5 + 1j * t, cfg, METHOD_CLASSICAL).value
        worst = max(worst, abs(v.imag) / (1.0 + abs(v)))
    return worst, 1e-8


def check_rs_oracle_agreement(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for sr in np.linspace(0.25, 2.0, 5):
        for si in np.linspace(0.0, 30.0, 5):
            s = complex(sr, si)
            ref = eta_series_oracle(s)
            for method in (METHOD_CLASSICAL, METHOD_PCF):
                val = zeta(s, cfg, method).value
                worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))
    return worst, 1e-7


def check_rs_lower_routes(cfg: QuadratureConfig, seed: int):
    worst = 0.0
    for s in (2.0, 0.5 + 3j):
        for method in (METHOD_CLASSICAL, METHOD_PCF):
            a = f_lower(s, cfg, method, route="conjugate").value
            b = f_lower(s, cfg, method, route="direct").value
            worst = max(worst, abs(a - b) / (1.0 + abs(a)))
    return worst, 1e-8


def check_rs_first_zero(cfg: QuadratureConfig, seed: int):
    v = completed_zeta(0.5 + 14.134725j, cfg, METHOD_CLASSICAL).value
    return abs(v), 1e-4


CHECKS: dict[str, Callable[[QuadratureConfig, int], tuple[float, float]]] = {
    "core.gamma_reflection": check_gamma_reflection,
    "core.gamma_recurrence": check_gamma_recurrence,
    "pcf.recurrence": check_pcf_recurrence,
    "pcf.u_at_zero": check_pcf_u_at_zero,
    "pcf.continuation": check_pcf_continuation,
    "pcf.ray_identity": check_pcf_ray_identity,
    "mordell.closed_form": check_mordell_closed_form,
    "mordell.transformation": check_mordell_transformation,
    "mordell.functional_equation": check_mordell_functional_equation,
    "mordell.path_independence": check_mordell_path_independence,
    "mordell.entirety": check_mordell_entirety,
    "mordell.acceleration": check_mordell_acceleration,
    "riemann_siegel.form_equivalence": check_rs_form_equivalence,
    "riemann_siegel.reflection_symmetry": check_rs_reflection_symmetry,
    "riemann_siegel.critical_line_reality": check_rs_critical_line_reality,
    "riemann_siegel.oracle_agreement": check_rs_oracle_agreement,
    "riemann_siegel.lower_routes": check_rs_lower_routes,
    "riemann_siegel.first_zero": check_rs_first_zero,
}


def run_checks(
    cfg: QuadratureConfig | None = None,
    only: str | None = None,
    tol_override: float | None = None,
    seed: int = 0,
) -> list[CheckRow]:
    cfg = cfg or QuadratureConfig()
    rows = []
    for name, fn in CHECKS.items():
        if only is not None and only not in name:
            continue
        residual, tol = fn(cfg, seed)
        if tol_override is not None:
            tol = tol_override
        rows.append(CheckRow(name, float(residual), float(tol), bool(residual <= tol)))
    return rows
