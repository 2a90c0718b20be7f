"""Parabolic cylinder function tests: oracles, recurrence, continuation."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from siegelzeta import _kernels
from siegelzeta._kernels import fallback
from siegelzeta.errors import DomainError, OrderOutOfRange
from siegelzeta.numeric_core import QuadratureConfig, complex_gamma
from siegelzeta.pcf import (
    PcfArgs,
    pcf_ray_closed_form,
    pcf_ray_integral,
    pcf_recurrence_residual,
    pcf_u,
    pcf_u_batch,
)

CFG = QuadratureConfig()

# frozen reference values from independent libraries
U_ORACLE = [
    # (a, z, U(a, z))
    (0.0, 1.0, 0.6530720266993618 + 0j),
    (1.5, 0.5, 0.5277789537244608 + 0j),
    (2.0, -1.0, 3.4007854735932415 + 0j),
    (0.25, 3.0, 0.043535197295006205 + 0j),
    (3.0, 2.0, 0.011119987097471388 + 0j),
    (1 + 1j, 0.5, 0.6772720885508479 - 0.34024231216848794j),
    (0.5, -2.0, 6.658709013033767 + 0j),
    # orders below the direct-integral range, reached by the recurrence
    (-1.2, 1.0, 0.8361575227188729 + 0j),
    (-2.7 + 0.5j, -1.5, 1.4456815797230684 - 0.835391947325066j),
    (0.3 + 2j, 1 + 1j, -1.4817026509018947 - 1.493797329081257j),
]


class TestOracleValues:
    @pytest.mark.parametrize("a,z,ref", U_ORACLE)
    def test_matches_oracle(self, a, z, ref):
        got = pcf_u(PcfArgs(a, z), CFG)
        assert abs(got - ref) / abs(ref) < 1e-10


class TestValueAtZero:
    @pytest.mark.parametrize("a", [0.0, 0.5, 1.0, 2.0, 1 + 1j])
    def test_gamma_closed_form(self, a):
        # U(a, 0) = 2^{(2a-3)/4} Gamma(a/2 + 1/4) / Gamma(a + 1/2)
        ref = (
            2.0 ** ((2.0 * a - 3.0) / 4.0)
            * complex_gamma(a / 2.0 + 0.25)
            / complex_gamma(a + 0.5)
        )
        got = pcf_u(PcfArgs(a, 0.0), CFG)
        assert abs(got - ref) / abs(ref) < 1e-10


class TestRecurrence:
    def test_grid(self):
        for a in (1.0, 1.5, 2.0, 2.5):
            for z in (-3.0, -1.0, 0.0, 1.0, 3.0, 2j, 1 + 1j):
                assert pcf_recurrence_residual(a, z, CFG) < 1e-8

    def test_random_points(self):
        rng = np.random.RandomState(23)
        for _ in range(20):
            a = complex(rng.uniform(0.6, 4.0), rng.uniform(-2.0, 2.0))
            z = complex(rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0))
            assert pcf_recurrence_residual(a, z, CFG) < 1e-8

    def test_rejects_low_order(self):
        with pytest.raises(DomainError):
            pcf_recurrence_residual(0.2, 1.0, CFG)


class TestContinuation:
    def test_consistent_with_recurrence(self):
        for a in (-0.25, -0.4 + 0.3j, -1.8, -3.9):
            for z in (0.0, 1.0, -2.0, 1 + 1j):
                direct = pcf_u(PcfArgs(a, z), CFG)
                via = z * pcf_u(PcfArgs(a + 1.0, z), CFG) + (a + 1.5) * pcf_u(
                    PcfArgs(a + 2.0, z), CFG
                )
                assert abs(direct - via) / (abs(direct) + 1e-300) < 1e-8

    def test_depth_limit(self):
        with pytest.raises(OrderOutOfRange):
            pcf_u(PcfArgs(-5.0, 1.0), CFG)


class TestBatch:
    def test_matches_pointwise(self):
        zs = np.array([0.0, 1.0, -2.5, 3 + 1j, -1 - 1j, 10.0])
        a = 0.75 + 2j
        vals, nodes = pcf_u_batch(a, zs, CFG)
        assert nodes > 0
        for z, v in zip(zs, vals):
            single = pcf_u(PcfArgs(a, complex(z)), CFG)
            assert abs(v - single) / (abs(single) + 1e-300) < 1e-9

    def test_large_imaginary_order(self):
        # the regime that matters for zeta on the critical line, within the
        # documented accuracy envelope |a| <= 10, |z| <= 12
        a = -0.25 + 9j
        zs = math.sqrt(2 * math.pi) * cmath.exp(1j * math.pi / 4) * np.linspace(
            -4.5, 4.5, 11
        )
        vals, _ = pcf_u_batch(a, zs, CFG)
        assert np.all(np.isfinite(vals))
        # recurrence residual as internal consistency check
        vm, _ = pcf_u_batch(a - 1.0, zs, CFG)
        vp, _ = pcf_u_batch(a + 1.0, zs, CFG)
        resid = zs * vals - vm + (a + 0.5) * vp
        rel = np.abs(resid) / (np.abs(vm) + 1e-300)
        assert float(np.max(rel)) < 1e-7


class TestRayIdentity:
    def test_grid(self):
        for s in (1.0, 2.0, 3.0):
            for u in (0.5, 0.5 + 1j, 1.0):
                lhs = pcf_ray_integral(s, u, CFG)
                rhs = pcf_ray_closed_form(s, u, CFG)
                assert abs(lhs - rhs) / (abs(rhs) + 1e-300) < 1e-8

    def test_rejects_nonpositive_power(self):
        with pytest.raises(DomainError):
            pcf_ray_integral(-1.0, 0.5, CFG)


class TestKernelBackends:
    def test_backend_name(self):
        assert _kernels.BACKEND in ("cython", "numpy")

    def test_backends_agree(self):
        rng = np.random.RandomState(5)
        n, m = 64, 257
        pref = rng.uniform(-4, 1, n) + 1j * rng.uniform(-3, 3, n)
        c1 = rng.uniform(-4, 4, n) + 1j * rng.uniform(-4, 4, n)
        c2 = np.exp(2j * rng.uniform(-0.6, 0.6, n))
        w = np.linspace(0.05, 9.0, m)
        lw = np.log(w)
        wt = rng.uniform(0.01, 0.1, m) + 0j
        am = 1.25 - 6.0j
        a = _kernels.weighted_exp_sum(pref, c1, c2, am, w, lw, wt.real.copy())
        b = fallback.weighted_exp_sum(pref, c1, c2, am, w, lw, wt.real.copy())
        assert float(np.max(np.abs(a - b) / (1.0 + np.abs(b)))) < 1e-12
