"""Self-contained elliptic integrals and Jacobi elliptic functions.

Everything here uses the modulus k convention (not the parameter m = k^2):

    K(k) = integral_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta)

and similarly for E and Pi.  Complete integrals run on the AGM; incomplete
ones and the third kind go through the Carlson symmetric forms RF, RD, RJ;
am/sn/cn/dn use the descending Landen (AGM phase) recurrence with argument
reduction modulo the real period.  No external special-function library is
involved, so the whole kernel can be cross-checked against direct
quadrature of the defining integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

__all__ = [
    "EllipticEval",
    "complete_K",
    "complete_E",
    "complete_K_and_E",
    "complete_K_eval",
    "complete_E_eval",
    "complete_Pi",
    "ellip_f",
    "ellip_e_inc",
    "ellip_pi_inc",
    "jacobi_am",
    "jacobi_sn",
    "jacobi_cn",
    "jacobi_dn",
    "jacobi_sn_cn_dn",
    "inverse_cn",
    "inverse_sn",
    "appendix_integrals",
    "legendre_relation_defect",
]

_EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class EllipticEval:
    """A value together with a conservative forward error estimate."""

    value: float
    estimated_error: float


def _check_modulus(k: float) -> None:
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus k must satisfy 0 <= k < 1, got {k}")


def _agm_scheme(k: float) -> tuple[list[float], list[float], list[float]]:
    """AGM sequences (a_n, b_n, c_n) for a0 = 1, b0 = k' = sqrt(1 - k^2)."""
    kp2 = (1.0 - k) * (1.0 + k)
    a, b, c = 1.0, math.sqrt(kp2), k
    aa, bb, cc = [a], [b], [c]
    for _ in range(64):
        if abs(c) <= _EPS * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        aa.append(a)
        bb.append(b)
        cc.append(c)
    else:
        raise ConvergenceError("AGM failed to converge")
    return aa, bb, cc


def complete_K(k: float) -> float:
    """Complete elliptic integral of the first kind via the AGM."""
    _check_modulus(k)
    aa, _, _ = _agm_scheme(k)
    return math.pi / (2.0 * aa[-1])


def complete_K_and_E(k: float) -> tuple[float, float]:
    """K(k) and E(k) from a single AGM run."""
    _check_modulus(k)
    aa, _, cc = _agm_scheme(k)
    big_k = math.pi / (2.0 * aa[-1])
    s = sum(2.0 ** (n - 1) * cc[n] ** 2 for n in range(len(cc)))
    return big_k, big_k * (1.0 - s)


def complete_E(k: float) -> float:
    """Complete elliptic integral of the second kind."""
    return complete_K_and_E(k)[1]


def complete_K_eval(k: float) -> EllipticEval:
    value = complete_K(k)
    return EllipticEval(value, 4.0 * _EPS * abs(value))


def complete_E_eval(k: float) -> EllipticEval:
    value = complete_E(k)
    return EllipticEval(value, 4.0 * _EPS * abs(value))


# --- Carlson symmetric forms ---------------------------------------------


def _carlson_rf(x: float, y: float, z: float) -> float:
    if min(x, y, z) < 0.0:
        raise DomainError("carlson_rf arguments must be non-negative")
    x0, y0, z0 = x, y, z
    a0 = (x + y + z) / 3.0
    q = (3.0 * _EPS) ** (-1.0 / 8.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z)
    )
    a, f = a0, 1.0
    for _ in range(64):
        if q < abs(a) * f:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        f *= 4.0
    else:
        raise ConvergenceError("carlson_rf failed to converge")
    big_x = (a0 - x0) / (a * f)
    big_y = (a0 - y0) / (a * f)
    big_z = -(big_x + big_y)
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    series = (
        1.0
        - e2 / 10.0
        + e3 / 14.0
        + e2 * e2 / 24.0
        - 3.0 * e2 * e3 / 44.0
        - 5.0 * e2 ** 3 / 208.0
        + 3.0 * e3 * e3 / 104.0
        + e2 * e2 * e3 / 16.0
    )
    return series / math.sqrt(a)


def _carlson_rc(x: float, y: float) -> float:
    # y > 0 branch only; all it is needed for is RJ with p > 0
    if x < 0.0 or y <= 0.0:
        raise DomainError("carlson_rc needs x >= 0, y > 0")
    x0, y0 = x, y
    a0 = (x + 2.0 * y) / 3.0
    q = (3.0 * _EPS) ** (-1.0 / 8.0) * abs(a0 - x)
    a, f = a0, 1.0
    for _ in range(64):
        if q < abs(a) * f:
            break
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        x, y = 0.25 * (x + lam), 0.25 * (y + lam)
        a = 0.25 * (a + lam)
        f *= 4.0
    else:
        raise ConvergenceError("carlson_rc failed to converge")
    s = (y0 - a0) / (a * f)
    series = 1.0 + s * s * (
        0.3
        + s
        * (
            1.0 / 7.0
            + s
            * (
                0.375
                + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 9.0 / 8.0))
            )
        )
    )
    return series / math.sqrt(a)


def _carlson_rd(x: float, y: float, z: float) -> float:
    if min(x, y) < 0.0 or z <= 0.0:
        raise DomainError("carlson_rd needs x, y >= 0 and z > 0")
    x0, y0 = x, y
    a0 = (x + y + 3.0 * z) / 5.0
    q = (0.25 * _EPS) ** (-1.0 / 8.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z)
    )
    a, f, acc = a0, 1.0, 0.0
    for _ in range(64):
        if q < abs(a) * f:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        acc += 1.0 / (f * sz * (z + lam))
        x, y, z = 0.25 * (x + lam), 0.25 * (y + lam), 0.25 * (z + lam)
        a = 0.25 * (a + lam)
        f *= 4.0
    else:
        raise ConvergenceError("carlson_rd failed to converge")
    big_x = (a0 - x0) / (a * f)
    big_y = (a0 - y0) / (a * f)
    big_z = -(big_x + big_y) / 3.0
    e2 = big_x * big_y - 6.0 * big_z * big_z
    e3 = (3.0 * big_x * big_y - 8.0 * big_z * big_z) * big_z
    e4 = 3.0 * (big_x * big_y - big_z * big_z) * big_z * big_z
    e5 = big_x * big_y * big_z ** 3
    series = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return series / (f * a * math.sqrt(a)) + 3.0 * acc


def _carlson_rj(x: float, y: float, z: float, p: float) -> float:
    if min(x, y, z) < 0.0 or p <= 0.0:
        raise DomainError("carlson_rj needs x, y, z >= 0 and p > 0")
    x0, y0, z0 = x, y, z
    a0 = (x + y + z + 2.0 * p) / 5.0
    delta = (p - x) * (p - y) * (p - z)
    q = (0.25 * _EPS) ** (-1.0 / 8.0) * max(
        abs(a0 - x), abs(a0 - y), abs(a0 - z), abs(a0 - p)
    )
    a, f, acc = a0, 1.0, 0.0
    for _ in range(64):
        if q < abs(a) * f:
            break
        sx, sy, sz, sp = (
            math.sqrt(x),
            math.sqrt(y),
            math.sqrt(z),
            math.sqrt(p),
        )
        lam = sx * sy + sy * sz + sz * sx
        dm = (sp + sx) * (sp + sy) * (sp + sz)
        em = delta / (f ** 3 * dm * dm)
        acc += _carlson_rc(1.0, 1.0 + em) / (f * dm)
        x, y, z, p = (
            0.25 * (x + lam),
            0.25 * (y + lam),
            0.25 * (z + lam),
            0.25 * (p + lam),
        )
        a = 0.25 * (a + lam)
        f *= 4.0
    else:
        raise ConvergenceError("carlson_rj failed to converge")
    big_x = (a0 - x0) / (a * f)
    big_y = (a0 - y0) / (a * f)
    big_z = (a0 - z0) / (a * f)
    big_p = -(big_x + big_y + big_z) / 2.0
    e2 = (
        big_x * big_y + big_x * big_z + big_y * big_z - 3.0 * big_p * big_p
    )
    e3 = big_x * big_y * big_z + 2.0 * e2 * big_p + 4.0 * big_p ** 3
    e4 = (
        2.0 * big_x * big_y * big_z + e2 * big_p + 3.0 * big_p ** 3
    ) * big_p
    e5 = big_x * big_y * big_z * big_p * big_p
    series = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return series / (f * a * math.sqrt(a)) + 6.0 * acc


# --- Incomplete integrals --------------------------------------------------


def _check_pi_alpha(alpha2: float) -> None:
    if alpha2 >= 1.0:
        raise DomainError(
            f"third-kind integral needs alpha^2 < 1, got {alpha2}"
        )


def ellip_f(phi: float, k: float) -> float:
    """Incomplete first-kind integral F(phi, k) for any real phi."""
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellip_f(-phi, k)
    # F(phi + n*pi) = F(phi) + 2nK reduces to |phi| <= pi/2
    n = math.floor(phi / math.pi + 0.5)
    shift = 2.0 * n * complete_K(k) if n else 0.0
    phi = phi - n * math.pi
    sign = 1.0
    if phi < 0.0:
        sign, phi = -1.0, -phi
    s, c = math.sin(phi), math.cos(phi)
    value = s * _carlson_rf(c * c, 1.0 - (k * s) ** 2, 1.0)
    return shift + sign * value


def ellip_e_inc(phi: float, k: float) -> float:
    """Incomplete second-kind integral E(phi, k) for any real phi."""
    _check_modulus(k)
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellip_e_inc(-phi, k)
    n = math.floor(phi / math.pi + 0.5)
    shift = 2.0 * n * complete_E(k) if n else 0.0
    phi = phi - n * math.pi
    sign = 1.0
    if phi < 0.0:
        sign, phi = -1.0, -phi
    s, c = math.sin(phi), math.cos(phi)
    y = 1.0 - (k * s) ** 2
    value = s * _carlson_rf(c * c, y, 1.0) - (k * k / 3.0) * s ** 3 * _carlson_rd(
        c * c, y, 1.0
    )
    return shift + sign * value


def ellip_pi_inc(phi: float, alpha2: float, k: float) -> float:
    """Incomplete third-kind integral Pi(phi, alpha^2, k), alpha^2 < 1."""
    _check_modulus(k)
    _check_pi_alpha(alpha2)
    if phi == 0.0:
        return 0.0
    if phi < 0.0:
        return -ellip_pi_inc(-phi, alpha2, k)
    n = math.floor(phi / math.pi + 0.5)
    shift = 2.0 * n * complete_Pi(alpha2, k) if n else 0.0
    phi = phi - n * math.pi
    sign = 1.0
    if phi < 0.0:
        sign, phi = -1.0, -phi
    s, c = math.sin(phi), math.cos(phi)
    s2 = s * s
    y = 1.0 - k * k * s2
    value = s * _carlson_rf(c * c, y, 1.0) + (alpha2 / 3.0) * s ** 3 * _carlson_rj(
        c * c, y, 1.0, 1.0 - alpha2 * s2
    )
    return shift + sign * value


def complete_Pi(alpha2: float, k: float) -> float:
    """Complete third-kind integral Pi(alpha^2, k) for alpha^2 < 1."""
    _check_modulus(k)
    _check_pi_alpha(alpha2)
    if alpha2 == 0.0:
        return complete_K(k)
    kp2 = (1.0 - k) * (1.0 + k)
    return _carlson_rf(0.0, kp2, 1.0) + (alpha2 / 3.0) * _carlson_rj(
        0.0, kp2, 1.0, 1.0 - alpha2
    )


# --- Jacobi elliptic functions ----------------------------------------------


def _am_reduced(u: float, k: float) -> float:
    """Amplitude for bounded u via the descending Landen recurrence."""
    aa, _, cc = _agm_scheme(k)
    n = len(aa) - 1
    phi = (2.0 ** n) * aa[n] * u
    for i in range(n, 0, -1):
        arg = cc[i] / aa[i] * math.sin(phi)
        arg = min(1.0, max(-1.0, arg))
        phi = 0.5 * (phi + math.asin(arg))
    return phi


def jacobi_am(u: float, k: float) -> float:
    """Jacobi amplitude am(u, k) = F(., k)^{-1}, for any real u."""
    _check_modulus(k)
    if k == 0.0:
        return u
    big_k = complete_K(k)
    # quasi-periodicity am(u + 4K) = am(u) + 2 pi
    n = math.floor(u / (4.0 * big_k))
    return _am_reduced(u - 4.0 * big_k * n, k) + 2.0 * math.pi * n


def jacobi_sn_cn_dn(u: float, k: float) -> tuple[float, float, float]:
    """sn, cn, dn at (u, k); dn from k'^2 + k^2 cn^2, stable near k -> 1."""
    _check_modulus(k)
    if k == 0.0:
        return math.sin(u), math.cos(u), 1.0
    big_k = complete_K(k)
    u_red = u - 4.0 * big_k * math.floor(u / (4.0 * big_k))
    phi = _am_reduced(u_red, k)
    sn, cn = math.sin(phi), math.cos(phi)
    kp2 = (1.0 - k) * (1.0 + k)
    dn = math.sqrt(kp2 + (k * cn) ** 2)
    return sn, cn, dn


def jacobi_sn(u: float, k: float) -> float:
    return jacobi_sn_cn_dn(u, k)[0]


def jacobi_cn(u: float, k: float) -> float:
    return jacobi_sn_cn_dn(u, k)[1]


def jacobi_dn(u: float, k: float) -> float:
    return jacobi_sn_cn_dn(u, k)[2]


def inverse_cn(v: float, k: float) -> float:
    """Principal inverse of cn: the u in [0, 2K] with cn(u, k) = v."""
    _check_modulus(k)
    if abs(v) > 1.0 + 1e-12:
        raise DomainError(f"inverse_cn argument must lie in [-1, 1], got {v}")
    v = min(1.0, max(-1.0, v))
    return ellip_f(math.acos(v), k)


def inverse_sn(v: float, k: float) -> float:
    """Principal inverse of sn: the u in [-K, K] with sn(u, k) = v."""
    _check_modulus(k)
    if abs(v) > 1.0 + 1e-12:
        raise DomainError(f"inverse_sn argument must lie in [-1, 1], got {v}")
    v = min(1.0, max(-1.0, v))
    return ellip_f(math.asin(v), k)


# --- Reference closed forms used by the verification corpus -----------------


def appendix_integrals(a: float, b: float, k: float) -> dict[str, float]:
    """Closed forms of int_0^{4K} ds/(A cn + B) and its squared version.

    Valid for 0 < A^2 < B^2:

        I1 = 4B/(B^2-A^2) Pi(-A^2/(B^2-A^2), k)
        I2 = 4B^2((1-2k^2)A^2 + 2k^2 B^2)
                 / ((B^2-A^2)^2 ((1-k^2)A^2 + k^2 B^2)) * Pi(-A^2/(B^2-A^2), k)
             + 4A^2 E(k) / ((B^2-A^2)((1-k^2)A^2 + k^2 B^2))
             - 4K(k)/(B^2-A^2)

    At k = 0 the range 4K(0) = 2 pi is one period of cos and the values
    collapse to sgn(B) 2 pi / sqrt(B^2-A^2) and 2|B| pi / (B^2-A^2)^{3/2}.
    """
    _check_modulus(k)
    a2, b2 = a * a, b * b
    if not 0.0 < a2 < b2:
        raise DomainError(
            f"appendix integrals require 0 < A^2 < B^2, got A={a}, B={b}"
        )
    big_k, big_e = complete_K_and_E(k)
    k2 = k * k
    diff = b2 - a2
    pi_val = complete_Pi(-a2 / diff, k)
    denom = (1.0 - k2) * a2 + k2 * b2
    i1 = 4.0 * b / diff * pi_val
    i2 = (
        4.0 * b2 * ((1.0 - 2.0 * k2) * a2 + 2.0 * k2 * b2)
        / (diff * diff * denom)
        * pi_val
        + 4.0 * a2 * big_e / (diff * denom)
        - 4.0 * big_k / diff
    )
    return {"I1": i1, "I2": i2}


def legendre_relation_defect(k: float) -> float:
    """E(k)K(k') + E(k')K(k) - K(k)K(k') - pi/2; zero in exact arithmetic."""
    _check_modulus(k)
    if k == 0.0:
        raise DomainError("legendre relation needs 0 < k < 1")
    kp = math.sqrt((1.0 - k) * (1.0 + k))
    big_k, big_e = complete_K_and_E(k)
    big_kp, big_ep = complete_K_and_E(kp)
    return big_e * big_kp + big_ep * big_k - big_k * big_kp - math.pi / 2.0
