"""Numerical oracle: integrators, conserved quantities, Lagrangian checks."""

import numpy as np
import pytest

from heisenmag.errors import DomainError
from heisenmag.heisenberg import LorentzForce
from heisenmag.oracle import (
    OracleConfig,
    StateVector,
    euler_lagrange_residual,
    integrate_general,
    integrate_reduced,
    lagrangian_value,
    metric_speed_sq,
)
from heisenmag.quartic import InitialData


class TestConfig:
    def test_rejects_bad_tolerances(self):
        with pytest.raises(DomainError):
            OracleConfig(rel_tol=0.0)
        with pytest.raises(DomainError):
            OracleConfig(abs_tol=-1e-9)


class TestGeneralIntegrator:
    def test_central_geodesic(self):
        # F = 0 with a purely central start moves along the centre
        cfg = OracleConfig(t_span=(0.0, 5.0))
        orc = integrate_general(
            LorentzForce(0, 0, 0), StateVector(0, 0, 0, 0, 0, 1.3), cfg, n_samples=51
        )
        for t, s in zip(orc.t, orc.states):
            assert abs(s[0]) < 1e-12 and abs(s[1]) < 1e-12
            assert abs(s[2] - 1.3 * t) < 1e-10

    def test_exact_force_against_closed_form(self):
        from heisenmag.trajectory import ExactTrajectory

        data = InitialData(0.6, -0.4, 0.8, 2.0)
        traj = ExactTrajectory(data)
        cfg = OracleConfig(rel_tol=1e-12, abs_tol=1e-14, t_span=(0.0, 10.0))
        orc = integrate_general(
            LorentzForce(0, 0, 2.0), StateVector(0, 0, 0, 0.6, -0.4, 0.8), cfg,
            n_samples=101,
        )
        for t, s in zip(orc.t, orc.states):
            p = traj.point(t)
            assert max(abs(p.x - s[0]), abs(p.y - s[1]), abs(p.z - s[2])) < 1e-8

    def test_metric_speed_constant(self):
        cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 15.0))
        orc = integrate_general(
            LorentzForce(0.7, 1.2, 0.9), StateVector(0, 0, 0, 0.5, -0.2, 0.4), cfg
        )
        speeds = [metric_speed_sq(StateVector.from_array(s)) for s in orc.states]
        assert max(abs(v - speeds[0]) for v in speeds) < 1e-9

    def test_constraint_monitored(self):
        cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 10.0))
        orc = integrate_general(
            LorentzForce(0.0, 1.0, 1.0), StateVector(0, 0, 0, 0.5, 0.3, -0.2), cfg
        )
        assert orc.constraint_drift < 1e-9

    def test_arbitrary_base_point(self):
        # same curve left-translated: integrate from p and from e, compare
        cfg = OracleConfig(rel_tol=1e-12, abs_tol=1e-14, t_span=(0.0, 6.0))
        force = LorentzForce(0.0, 1.0, 1.0)
        at_identity = integrate_general(
            force, StateVector(0, 0, 0, 0.5, 0.3, -0.2), cfg, n_samples=61
        )
        p = (0.4, -0.7, 0.25)
        # velocity of the translate at p: centre picks up the cross term
        zp = -0.2 + 0.5 * (p[0] * 0.3 - p[1] * 0.5)
        moved = integrate_general(
            force, StateVector(p[0], p[1], p[2], 0.5, 0.3, zp), cfg, n_samples=61
        )
        from heisenmag.heisenberg import HeisenbergPoint, group_product

        base = HeisenbergPoint(*p)
        for s_id, s_mv in zip(at_identity.states, moved.states):
            expected = group_product(base, HeisenbergPoint(s_id[0], s_id[1], s_id[2]))
            assert abs(expected.x - s_mv[0]) < 1e-9
            assert abs(expected.y - s_mv[1]) < 1e-9
            assert abs(expected.z - s_mv[2]) < 1e-9

    def test_reversibility(self):
        cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 10.0))
        force = LorentzForce(0.3, 0.8, 1.1)
        fwd = integrate_general(force, StateVector(0, 0, 0, 0.5, 0.3, -0.2), cfg)
        end = fwd.state(10.0)
        back_cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 10.0))
        # reverse time: flip velocities and the force sign stays (t -> -t)
        back = integrate_general(
            LorentzForce(-0.3, -0.8, -1.1),
            StateVector(end.x, end.y, end.z, -end.xp, -end.yp, -end.zp),
            back_cfg,
        )
        final = back.state(10.0)
        assert max(abs(final.x), abs(final.y), abs(final.z)) < 1e-8
        assert max(abs(final.xp + 0.5), abs(final.yp + 0.3), abs(final.zp - 0.2)) < 1e-8


class TestReducedIntegrator:
    def test_trivial_branch(self):
        data = InitialData(0.0, 0.0, 0.0, 1.0)
        red = integrate_reduced(data, OracleConfig(t_span=(0.0, 10.0)))
        assert np.max(np.abs(red.x)) < 1e-12
        assert red.first_integral_drift < 1e-12

    def test_drift_small(self):
        data = InitialData(1.0, 0.5, 0.2, 1.0)
        cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 20.0))
        red = integrate_reduced(data, cfg)
        assert red.first_integral_drift < 1e-9

    def test_matches_closed_form(self):
        from heisenmag.trajectory import make_solution

        data = InitialData(2.0, -1.25, 1.5, 0.5)  # repeated root, mu > 0
        sol = make_solution(data)
        cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 15.0))
        red = integrate_reduced(data, cfg)
        for t, x in zip(red.t, red.x):
            assert abs(sol.x(t) - x) < 1e-7


class TestLagrangian:
    def test_zero_state(self):
        assert lagrangian_value(LorentzForce(1, 1, 1), StateVector(0, 0, 0, 0, 0, 0)) == 0.0

    def test_exact_case_reduces_to_kinetic_plus_potential(self):
        # alpha = beta = 0 leaves the kinetic term and the central potential
        force = LorentzForce(0, 0, 1.5)
        s = StateVector(0.3, -0.2, 0.15, 0.4, -0.1, 0.2)
        body_z = s.zp + 0.5 * (s.xp * s.y - s.x * s.yp)
        kinetic = 0.5 * (s.xp ** 2 + s.yp ** 2 + body_z ** 2)
        potential = 0.5 * 1.5 * (s.y * s.xp - s.x * s.yp)
        assert abs(lagrangian_value(force, s) - (kinetic + potential)) < 1e-15

    def test_lagrangian_not_constant_but_energy_is(self):
        force = LorentzForce(0.0, 1.0, 1.0)
        cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 10.0))
        orc = integrate_general(force, StateVector(0, 0, 0, 0.5, 0.3, -0.2), cfg)
        lags = [lagrangian_value(force, StateVector.from_array(s)) for s in orc.states]
        speeds = [metric_speed_sq(StateVector.from_array(s)) for s in orc.states]
        assert max(lags) - min(lags) > 1e-3
        assert max(speeds) - min(speeds) < 1e-9


class TestEulerLagrange:
    def test_residual_vanishes_on_trajectories(self):
        for force, v0 in (
            (LorentzForce(0.0, 1.0, 1.0), (0.5, 0.3, -0.2)),
            (LorentzForce(0.7, 1.2, 0.9), (0.4, -0.3, 0.6)),
        ):
            cfg = OracleConfig(rel_tol=1e-11, abs_tol=1e-13, t_span=(0.0, 10.0))
            orc = integrate_general(force, StateVector(0, 0, 0, *v0), cfg, n_samples=10001)
            rx, ry, rz = euler_lagrange_residual(force, orc.t, orc.states)
            assert np.max(np.abs(rx)) < 1e-5
            assert np.max(np.abs(ry)) < 1e-5
            assert np.max(np.abs(rz)) < 1e-5

    def test_residual_large_off_shell(self):
        force = LorentzForce(0.0, 1.0, 1.0)
        ts = np.linspace(0.0, 10.0, 5001)
        ones = np.ones_like(ts)
        states = np.stack([ts, ts, 0 * ts, ones, ones, 0 * ts], axis=1)
        rx, ry, rz = euler_lagrange_residual(force, ts, states)
        assert max(np.max(np.abs(rx)), np.max(np.abs(ry)), np.max(np.abs(rz))) > 1e-2

    def test_z_residual_is_third_equation(self):
        # res_z = z'' + (x''y - xy'')/2 - (beta x' + alpha y') by construction;
        # evaluate both on a cubic test curve
        force = LorentzForce(0.4, 0.9, 0.0)
        ts = np.linspace(0.0, 2.0, 2001)
        x = 0.3 * ts ** 2
        y = ts
        z = 0.1 * ts ** 3
        states = np.stack(
            [x, y, z, 0.6 * ts, np.ones_like(ts), 0.3 * ts ** 2], axis=1
        )
        _, _, rz = euler_lagrange_residual(force, ts, states)
        inner = ts[2:-2]
        xpp = 0.6 * np.ones_like(inner)
        ypp = np.zeros_like(inner)
        zpp = 0.6 * inner
        expected = (
            zpp
            + 0.5 * (xpp * inner - 0.3 * inner ** 2 * ypp)
            - (0.9 * 0.6 * inner + 0.4 * 1.0)
        )
        np.testing.assert_allclose(rz, expected, atol=1e-6)

    def test_rejects_nonuniform_grid(self):
        force = LorentzForce(0, 1, 1)
        ts = np.array([0.0, 0.1, 0.25, 0.3, 0.4, 0.5])
        states = np.zeros((6, 6))
        with pytest.raises(DomainError):
            euler_lagrange_residual(force, ts, states)
