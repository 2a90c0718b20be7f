"""Mordell integral tests: quadrature, closed form, transformation laws."""

from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from siegelzeta.errors import DegenerateRationalPoint, DomainError
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

CFG = QuadratureConfig()

# hand-derived spot value: Phi(0, 1) = (1 - e^{i pi/4}) / 2
PHI_0_1 = (1.0 - cmath.exp(1j * math.pi / 4.0)) / 2.0


class TestArgs:
    def test_rejects_left_half_tau(self):
        with pytest.raises(DomainError):
            MordellArgs(0.0, -1.0)
        with pytest.raises(DomainError):
            MordellArgs(0.0, 2j)

    @pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (65, 1), (1, 65)])
    def test_rational_bounds(self, m, n):
        with pytest.raises(ValueError):
            RationalTau(m, n)


class TestQuadrature:
    def test_spot_value(self):
        res = phi_quadrature(MordellArgs(0.0, 1.0), CFG)
        assert res.converged
        assert abs(res.value - PHI_0_1) < 1e-12

    def test_path_independence(self):
        for x, tau in ((0.0, 1.0), (1j, 2 + 1j)):
            args = MordellArgs(x, tau)
            vals = [
                phi_quadrature(args, CFG, crossing=c).value for c in (0.3, 0.5, 0.7)
            ]
            auto = phi_quadrature(args, CFG).value
            for v in vals + [auto]:
                assert abs(v - vals[1]) / (abs(vals[1]) + 1e-300) < 1e-9

    def test_large_x_saddle_route(self):
        # far-displaced saddle exercises the residue bookkeeping
        for x in (-3.0, 2.6, 3.2 - 0.8j, -0.7 + 0.4j):
            quad = phi_quadrature(MordellArgs(x, 1.0), CFG).value
            closed = phi_rational(x, RationalTau(1, 1))
            assert abs(quad - closed) / (1.0 + abs(closed)) < 1e-12


class TestClosedForm:
    def test_grid_against_quadrature(self):
        for m in (1, 2, 3, 5):
            for n in (1, 2, 3, 5):
                for x in (0.0, 0.3, 1j, 1 + 0.5j):
                    try:
                        closed = phi_rational(x, RationalTau(m, n))
                    except DegenerateRationalPoint:
                        continue
                    quad = phi_quadrature(MordellArgs(x, m / n), CFG).value
                    assert abs(closed - quad) / (1.0 + abs(quad)) < 1e-9

    def test_degenerate_denominator_raises(self):
        # x = 0 with even m makes e^{i pi n (2x+m)} - 1 vanish identically
        with pytest.raises(DegenerateRationalPoint):
            phi_rational(0.0, RationalTau(2, 1))

    def test_degenerate_point_is_removable(self):
        # two-sided average just off the degenerate point matches quadrature
        eps = 1e-4
        quad = phi_quadrature(MordellArgs(0.0, 2.0), CFG).value
        avg = 0.5 * (
            phi_rational(eps, RationalTau(2, 1)) + phi_rational(-eps, RationalTau(2, 1))
        )
        assert abs(avg - quad) < 1e-6


class TestTransformation:
    GRID = [
        (x, tau)
        for tau in (1.0, 2 + 1j, 0.5, 0.1 + 0.3j)
        for x in (0.0, 1 + 1j)
    ]

    @pytest.mark.parametrize("x,tau", GRID)
    def test_equals_direct(self, x, tau):
        args = MordellArgs(x, tau)
        direct = phi_quadrature(args, CFG).value
        trans = transform_rhs(args, CFG)
        assert abs(direct - trans) / (1.0 + abs(direct)) < 1e-8

    @pytest.mark.parametrize("x,tau", GRID)
    def test_functional_equation(self, x, tau):
        assert functional_equation_residual(MordellArgs(x, tau), CFG) < 1e-8

    def test_random_points(self):
        rng = np.random.RandomState(31)
        for _ in range(20):
            x = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.0, 1.0))
            tau = complex(rng.uniform(0.2, 3.0), rng.uniform(-1.5, 1.5))
            args = MordellArgs(x, tau)
            direct = phi_quadrature(args, CFG).value
            trans = transform_rhs(args, CFG)
            assert abs(direct - trans) / (1.0 + abs(direct)) < 1e-8

    def test_acceleration_at_small_tau(self):
        cfg = QuadratureConfig(rel_tol=1e-9, abs_tol=1e-14)
        args = MordellArgs(0.0, 0.01)
        direct = phi_quadrature(args, cfg, crossing=0.5)
        trans = transform_rhs_result(args, cfg)
        assert direct.converged and trans.converged
        assert 5 * trans.nodes_used <= direct.nodes_used
        assert abs(direct.value - trans.value) / (1.0 + abs(direct.value)) < 1e-8


class TestEntirety:
    def test_no_interior_maximum(self):
        # Phi is entire in x: discrete maximum-modulus probe on a ring
        for x0, tau in ((0.25, 1.0), (0.5j, 2 + 1j)):
            center = abs(phi_quadrature(MordellArgs(x0, tau), CFG).value)
            ring = max(
                abs(
                    phi_quadrature(
                        MordellArgs(
                            x0 + 0.2 * cmath.exp(2j * math.pi * k / 8), tau
                        ),
                        CFG,
                    ).value
                )
                for k in range(8)
            )
            assert center <= ring + 1e-9 * (1.0 + center)
