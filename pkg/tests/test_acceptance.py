"""Acceptance gate: the eight headline criteria, one pass/fail line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.  Every criterion states its own tolerance and runtime
budget; all inputs are at desk scale (no long-running sweeps).
"""

from __future__ import annotations

import cmath
import math
import time

import numpy as np

from siegelzeta.errors import DegenerateRationalPoint
from siegelzeta.mordell import (
    MordellArgs,
    RationalTau,
    functional_equation_residual,
    phi_quadrature,
    phi_rational,
    transform_rhs,
    transform_rhs_result,
)
from siegelzeta.numeric_core import QuadratureConfig
from siegelzeta.riemann_siegel import (
    METHOD_CLASSICAL,
    METHOD_PCF,
    completed_zeta,
    eta_series_oracle,
    f_upper_classical,
    f_upper_pcf,
    zeta,
)

CFG = QuadratureConfig()


def _report(num: int, name: str, worst: float, tol: float, elapsed: float, budget: float):
    ok = worst <= tol and elapsed <= budget
    status = "PASS" if ok else "FAIL"
    print(
        f"[{status}] criterion {num}: {name} "
        f"(worst {worst:.3e} <= {tol:.1e}, {elapsed:.1f}s <= {budget:.0f}s)"
    )
    assert worst <= tol, f"criterion {num} ({name}): worst residual {worst:.3e} > {tol:.1e}"
    assert elapsed <= budget, f"criterion {num} ({name}): {elapsed:.1f}s > {budget:.0f}s"


def test_criterion_1_form_equivalence():
    t0 = time.time()
    worst = 0.0
    for s in (2.0, 3.0, 0.5, 0.5 + 3j, 0.5 + 10j, -0.3 + 2j):
        fc = f_upper_classical(s, CFG).value
        fp = f_upper_pcf(s, CFG).value
        worst = max(worst, abs(fp - fc) / (1.0 + abs(fc)))
    _report(1, "form equivalence", worst, 1e-7, time.time() - t0, 10.0)


def test_criterion_2_zeta_correctness():
    t0 = time.time()
    worst = 0.0
    for sr in np.linspace(0.25, 2.0, 5):
        for si in np.linspace(0.0, 30.0, 5):
            s = complex(sr, si)
            ref = eta_series_oracle(s)
            for method in (METHOD_CLASSICAL, METHOD_PCF):
                val = zeta(s, CFG, method).value
                worst = max(worst, abs(val - ref) / (1.0 + abs(ref)))
    # spot values against classical constants
    worst = max(worst, abs(zeta(2.0, CFG).value - math.pi**2 / 6.0))
    worst = max(worst, abs(zeta(0.5, CFG).value - (-1.4603545088095868)))
    _report(2, "zeta vs oracle, both methods", worst, 1e-7, time.time() - t0, 60.0)


def test_criterion_3_mordell_closed_form():
    t0 = time.time()
    worst = 0.0
    spot = phi_quadrature(MordellArgs(0.0, 1.0), CFG).value
    worst = max(worst, abs(spot - (1.0 - cmath.exp(1j * math.pi / 4.0)) / 2.0))
    for m in (1, 2, 3, 5):
        for n in (1, 2, 3, 5):
            for x in (0.0, 0.3, 1j, 1 + 0.5j):
                try:
                    closed = phi_rational(x, RationalTau(m, n))
                except DegenerateRationalPoint:
                    continue
                quad = phi_quadrature(MordellArgs(x, m / n), CFG).value
                worst = max(worst, abs(closed - quad) / (1.0 + abs(quad)))
    _report(3, "Mordell closed form vs quadrature", worst, 1e-9, time.time() - t0, 30.0)


def test_criterion_4_functional_and_transformation():
    t0 = time.time()
    worst = 0.0
    for tau in (1.0, 2 + 1j, 0.5, 0.1 + 0.3j):
        for x in (0.0, 1 + 1j):
            args = MordellArgs(x, tau)
            direct = phi_quadrature(args, CFG).value
            trans = transform_rhs(args, CFG)
            worst = max(worst, abs(direct - trans) / (1.0 + abs(direct)))
            worst = max(worst, functional_equation_residual(args, CFG))
    _report(
        4, "functional equation and transformation", worst, 1e-8, time.time() - t0, 20.0
    )


def test_criterion_5_parabolic_cylinder():
    from siegelzeta.numeric_core import complex_gamma
    from siegelzeta.pcf import (
        PcfArgs,
        pcf_ray_closed_form,
        pcf_ray_integral,
        pcf_recurrence_residual,
        pcf_u,
    )

    t0 = time.time()
    worst_rec = 0.0
    for a in (1.0, 1.5, 2.0, 2.5):
        for z in (-3.0, -1.0, 0.0, 1.0, 3.0, 2j, 1 + 1j):
            worst_rec = max(worst_rec, pcf_recurrence_residual(a, z, CFG))
    worst_zero = 0.0
    for a in (0.0, 0.5, 1.0, 2.0, 1 + 1j):
        ref = (
            2.0 ** ((2.0 * a - 3.0) / 4.0)
            * complex_gamma(a / 2.0 + 0.25)
            / complex_gamma(a + 0.5)
        )
        worst_zero = max(worst_zero, abs(pcf_u(PcfArgs(a, 0.0), CFG) - ref) / abs(ref))
    worst_ray = 0.0
    for s in (1.0, 2.0, 3.0):
        for u in (0.5, 0.5 + 1j, 1.0):
            lhs = pcf_ray_integral(s, u, CFG)
            rhs = pcf_ray_closed_form(s, u, CFG)
            worst_ray = max(worst_ray, abs(lhs - rhs) / (abs(rhs) + 1e-300))
    elapsed = time.time() - t0
    assert worst_zero <= 1e-10, f"U(a, 0) closed-form residual {worst_zero:.3e} > 1e-10"
    worst = max(worst_rec, worst_ray)
    _report(5, "parabolic cylinder identities", worst, 1e-8, elapsed, 20.0)


def test_criterion_6_symmetry_and_reality():
    t0 = time.time()
    worst = 0.0
    for s in (2.0, 0.3 + 2j, 0.5 + 5j, 1.5 + 1j, -0.5 + 3j):
        a = completed_zeta(s, CFG).value
        b = completed_zeta(1.0 - complex(s).conjugate(), CFG).value
        worst = max(worst, abs(b.conjugate() - a) / (abs(a) + 1e-300))
    for t in (0.0, 1.0, 5.0, 14.134725, 20.0):
        v = completed_zeta(0.5 + 1j * t, CFG).value
        worst = max(worst, abs(v.imag) / (1.0 + abs(v)))
    zero = abs(completed_zeta(0.5 + 14.134725141734693j, CFG).value)
    assert zero <= 1e-4, f"completed function at the first zero has magnitude {zero:.3e}"
    _report(6, "symmetry and critical-line reality", worst, 1e-8, time.time() - t0, 10.0)


def test_criterion_7_convergence_acceleration():
    t0 = time.time()
    cfg = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-14)
    args = MordellArgs(0.0, 0.01)
    direct = phi_quadrature(args, cfg, crossing=0.5)
    trans = transform_rhs_result(args, cfg)
    agree = abs(direct.value - trans.value) / (1.0 + abs(direct.value))
    node_ok = (
        direct.converged and trans.converged and 5 * trans.nodes_used <= direct.nodes_used
    )
    worst = agree if node_ok else math.inf
    _report(7, "transformed-route acceleration (>=5x fewer nodes)", worst, 1e-8,
            time.time() - t0, 10.0)


def test_criterion_8_path_independence():
    t0 = time.time()
    worst = 0.0
    for x, tau in ((0.0, 1.0), (1j, 2 + 1j)):
        args = MordellArgs(x, tau)
        vals = [phi_quadrature(args, CFG, crossing=c).value for c in (0.3, 0.5, 0.7)]
        for v in vals:
            worst = max(worst, abs(v - vals[1]) / (abs(vals[1]) + 1e-300))
    _report(8, "path independence of the Mordell integral", worst, 1e-9,
            time.time() - t0, 5.0)
