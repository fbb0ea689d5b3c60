"""Quartic profile construction, discriminant strata, branch tags."""

import math

import numpy as np
import pytest

from heisenmag.errors import DomainError
from heisenmag.quartic import (
    Branch,
    InitialData,
    Interval,
    build_profile,
    discriminant,
    locate_interval,
    monic_coefficients,
    mu_r_closed_forms,
)

CBRT2 = 2.0 ** (1.0 / 3.0)


class TestCoefficients:
    def test_neg_representative(self):
        # x0 = y0 = 0, z0 = -rho gives p0 = 2, q0 = 0, Delta = -496
        prof = build_profile(InitialData(0, 0, -1, 1))
        assert prof.p0 == 2.0
        assert prof.q0 == 0.0
        assert prof.delta == -496.0
        assert prof.branch is Branch.NEG

    def test_p_at_start_is_x0_squared(self):
        rng = np.random.default_rng(0)
        for _ in range(300):
            data = InitialData(*rng.uniform(-3, 3, 4))
            prof = build_profile(data)
            assert abs(prof.value(data.zr) - data.x0 ** 2) <= 1e-10 * max(
                1.0, data.x0 ** 2
            )

    def test_p_prime_at_start(self):
        rng = np.random.default_rng(1)
        h = 1e-6
        for _ in range(50):
            data = InitialData(*rng.uniform(-2, 2, 4))
            prof = build_profile(data)
            deriv = (prof.value(data.zr + h) - prof.value(data.zr - h)) / (2 * h)
            expected = 2.0 * (data.rho - (data.y0 + 1.0) * data.zr)
            assert abs(deriv - expected) < 1e-7


class TestTrivial:
    def test_flag(self):
        assert InitialData(0, 0, 0, 1).is_trivial  # (y0+1)(z0+rho) = rho
        assert not InitialData(0, -1, 0, 1).is_trivial
        assert not InitialData(0.5, 0, 0, 1).is_trivial

    def test_branch(self):
        assert build_profile(InitialData(0, 0, 0, 1)).branch is Branch.TRIVIAL


class TestZeroStratum:
    def test_cusp_representative(self):
        prof = build_profile(InitialData(0, 2, 2, 1))
        assert prof.p0 == -3.0 and prof.q0 == -3.0
        assert prof.delta == 0.0
        assert prof.branch is Branch.ZERO_CUSP
        assert prof.r_double == -1.0
        assert prof.mu == 0.0

    def test_mu_positive_representative(self):
        prof = build_profile(InitialData(0, -1.5 * CBRT2 - 1.0, -1.0, 1.0))
        assert prof.branch is Branch.ZERO_MU_POS
        assert abs(prof.r_double + CBRT2 ** 2) < 1e-12
        assert abs(prof.mu - 1.5 * CBRT2) < 1e-12

    def test_mu_negative_right(self):
        prof = build_profile(
            InitialData(0, 2 * (2 ** (2 / 3)) - 1, 2.5 * CBRT2 - 1, 1)
        )
        assert prof.branch is Branch.ZERO_MU_NEG_RIGHT
        assert prof.mu < 0

    def test_mu_negative_left(self):
        prof = build_profile(InitialData(0, 2, -4.75, 1))
        assert prof.branch is Branch.ZERO_MU_NEG_LEFT
        assert prof.r_double == -0.25
        assert prof.mu == -3.9375

    def test_closed_forms_match_root(self):
        # rational r formula against the numerically repeated root
        for data in (
            InitialData(0, 2, -4.75, 1),
            InitialData(0, 2 * (2 ** (2 / 3)) - 1, 2.5 * CBRT2 - 1, 1),
            InitialData(3, -3.25, -1.25, 2.25),
        ):
            prof = build_profile(data)
            forms = mu_r_closed_forms(prof)
            assert abs(forms["r_formula"] - prof.r_double) < 1e-8
            # the defining mu and variant a agree; variant b is their sixth
            assert forms["mismatch_a"] < 1e-9 * max(1.0, abs(prof.mu))
            assert abs(forms["mu_variant_b"] * 6.0 - forms["mu_variant_a"]) < 1e-9

    def test_closed_forms_reject_cusp(self):
        prof = build_profile(InitialData(0, 2, 2, 1))
        with pytest.raises(DomainError):
            mu_r_closed_forms(prof)


class TestPositiveStratum:
    def test_high_interval(self):
        # z0 + rho = 0 lands exactly on r3
        data = InitialData(0, -4, -1, 1)
        prof = build_profile(data)
        assert prof.branch is Branch.POS_HIGH
        assert locate_interval(prof, data.zr) is Interval.HIGH
        assert prof.k1 is not None and prof.k1 < 1.0

    def test_low_interval(self):
        data = InitialData(0, -2.75, -2, 1)
        prof = build_profile(data)
        assert prof.branch is Branch.POS_LOW
        assert locate_interval(prof, data.zr) is Interval.LOW
        reals = sorted(r.real for r in prof.roots)
        assert abs(reals[1] + 1.0) < 1e-9  # z0 + rho = -1 is r2

    def test_exactly_one_interval(self):
        rng = np.random.default_rng(9)
        found = 0
        while found < 50:
            roots = np.sort(rng.normal(0, 1.5, 4))
            roots -= roots.mean()
            if np.min(np.diff(roots)) < 0.05:
                continue
            e2 = sum(roots[i] * roots[j] for i in range(4) for j in range(i + 1, 4))
            e3 = sum(
                roots[i] * roots[j] * roots[k]
                for i in range(4)
                for j in range(i + 1, 4)
                for k in range(j + 1, 4)
            )
            p0, rho = e2 / 2.0, e3 / 8.0
            zr = rng.uniform(roots[0], roots[1]) if found % 2 else rng.uniform(roots[2], roots[3])
            y0 = 0.5 * (p0 + zr * zr) - 1.0
            q0 = float(np.prod(roots))
            val = -0.25 * (((zr * zr + 2 * p0) * zr - 8 * rho) * zr + q0)
            if val <= 1e-8:
                continue
            data = InitialData(math.sqrt(val), y0, zr - rho, rho)
            prof = build_profile(data)
            if prof.branch not in (Branch.POS_LOW, Branch.POS_HIGH):
                continue
            side = locate_interval(prof, data.zr)
            assert side in (Interval.LOW, Interval.HIGH)
            found += 1


class TestRandomCensus:
    def test_discriminant_sign_matches_root_count(self):
        rng = np.random.default_rng(42)
        boundary = 0
        for _ in range(10_000):
            data = InitialData(*rng.uniform(-3, 3, 4))
            p0, q0 = monic_coefficients(data)
            delta = discriminant(p0, q0, data.rho)
            prof = build_profile(data)
            scale = max(1.0, abs(2 * p0), abs(8 * data.rho) ** (2 / 3), abs(q0) ** 0.5)
            if abs(delta) <= 1e-9 * scale ** 6 or prof.branch is Branch.TRIVIAL:
                boundary += 1
                continue
            n_real = sum(1 for r in prof.roots if abs(r.imag) <= 1e-7 * max(1.0, abs(r)))
            if delta > 0:
                assert n_real == 4
            else:
                assert n_real == 2
        assert boundary < 50

    def test_viete_residuals(self):
        rng = np.random.default_rng(43)
        for _ in range(2000):
            data = InitialData(*rng.uniform(-3, 3, 4))
            prof = build_profile(data)
            r = np.array(prof.roots)
            rscale = max(1.0, float(np.max(np.abs(r))))
            e1 = np.sum(r)
            e2 = sum(r[i] * r[j] for i in range(4) for j in range(i + 1, 4))
            e3 = sum(
                r[i] * r[j] * r[k]
                for i in range(4)
                for j in range(i + 1, 4)
                for k in range(j + 1, 4)
            )
            e4 = np.prod(r)
            assert abs(e1) < 1e-9 * rscale
            assert abs(e2 - 2 * prof.p0) < 1e-9 * rscale ** 2
            assert abs(e3 - 8 * data.rho) < 1e-9 * rscale ** 3
            assert abs(e4 - prof.q0) < 1e-9 * rscale ** 4

    def test_neg_stratum_moduli_and_distance_relation(self):
        rng = np.random.default_rng(44)
        checked = 0
        while checked < 500:
            data = InitialData(*rng.uniform(-3, 3, 4))
            prof = build_profile(data)
            if prof.branch is not Branch.NEG:
                continue
            assert 0.0 < prof.k < 1.0
            lhs = prof.delta1 ** 2 - prof.delta4 ** 2
            rhs = 2.0 * prof.r1 ** 2 - 2.0 * prof.r4 ** 2
            assert abs(lhs - rhs) < 1e-8 * max(1.0, abs(rhs))
            checked += 1

    def test_root_ordering(self):
        prof = build_profile(InitialData(0.5, 0.2, -0.3, 1.0))
        assert prof.branch is Branch.NEG
        assert prof.roots[0].imag == 0.0 and prof.roots[1].imag == 0.0
        assert prof.roots[0].real < prof.roots[1].real
        assert prof.roots[3].imag > 0.0  # r3-analog carries +Im
        assert abs(prof.roots[2] - prof.roots[3].conjugate()) < 1e-12
