"""Bessel functions, the free-space polynomials and the Laplace-Bessel
integrals A_k+-, B_k and M_nu."""
import math

import numpy as np
from scipy import special

from src.domain.entities.quadrature import QuadSpec
from src.domain.entities.special import IntegralFamily, WeightedIntegralKey
from src.domain.interface.integrator import IIntegrator
from src.utils.exceptions import DomainError


def bessel_j(nu: int, x):
    """J_nu(x) for nu in {0, 1, 2}, x >= 0 (scalar or array)."""
    if nu not in (0, 1, 2):
        raise DomainError(f"Bessel order {nu} not supported")
    if np.any(np.asarray(x) < 0):
        raise DomainError("Bessel argument must be non-negative")
    if nu == 0:
        return special.j0(x)
    if nu == 1:
        return special.j1(x)
    return special.jv(2, x)


def free_space_polys(x):
    """(a, b, g, h) at x:

    a = 1 + x + x^2
    b = 1 + 3x + 3x^2
    g = 2 exp(-2x) (3 + 6x + 5x^2 + 2x^3 + x^4)
    h = 2 exp(-2x) (1 + 2x + x^2)
    """
    if np.any(np.asarray(x) < 0):
        raise DomainError("free-space polynomial argument must be non-negative")
    a = 1.0 + x + x * x
    b = 1.0 + 3.0 * x + 3.0 * x * x
    damp = 2.0 * np.exp(-2.0 * x)
    g = damp * (3.0 + x * (6.0 + x * (5.0 + x * (2.0 + x))))
    h = damp * (1.0 + x) ** 2
    return a, b, g, h


def weighted_AB(key: WeightedIntegralKey, lam, zeta):
    """Closed forms of

    A_k+-(lam, zeta) = int_0^inf x^k e^{-lam x} [J0(zeta x) +- J2(zeta x)] dx
    B_k(lam, zeta)   = int_0^inf x^k e^{-lam x} J0(zeta x) dx

    for k in {3, 4, 5}.
    """
    if np.any(np.asarray(lam) <= 0):
        raise DomainError("lambda must be positive: the weighted integral diverges otherwise")
    family = IntegralFamily(key.family)
    if family == IntegralFamily.M:
        raise DomainError("M_nu has no closed form; use m_nu")

    l2 = lam * lam
    z2 = zeta * zeta
    r = np.sqrt(l2 + z2)
    k = key.order

    if family == IntegralFamily.A_PLUS:
        if k == 3:
            return 6.0 * lam / r ** 5
        if k == 4:
            return 6.0 * (4.0 * l2 - z2) / r ** 7
        return 30.0 * (4.0 * l2 * lam - 3.0 * lam * z2) / r ** 9
    if family == IntegralFamily.A_MINUS:
        if k == 3:
            return 6.0 * (l2 * lam - 4.0 * lam * z2) / r ** 7
        if k == 4:
            return 6.0 * (4.0 * l2 * l2 - 27.0 * l2 * z2 + 4.0 * z2 * z2) / r ** 9
        return 30.0 * (4.0 * l2 * l2 * lam - 41.0 * l2 * lam * z2 + 18.0 * lam * z2 * z2) / r ** 11
    if k == 3:
        return 3.0 * lam * (2.0 * l2 - 3.0 * z2) / r ** 7
    if k == 4:
        return 3.0 * (8.0 * l2 * l2 - 24.0 * l2 * z2 + 3.0 * z2 * z2) / r ** 9
    return 15.0 * lam * (8.0 * l2 * l2 - 40.0 * l2 * z2 + 15.0 * z2 * z2) / r ** 11


def weighted_AB_quadrature(key: WeightedIntegralKey, lam: float, zeta: float,
                           integrator: IIntegrator, spec: QuadSpec) -> float:
    """Direct quadrature of the defining integral of A_k+- / B_k."""
    if lam <= 0:
        raise DomainError("lambda must be positive")
    family = IntegralFamily(key.family)
    k = key.order
    sign = {IntegralFamily.A_PLUS: 1.0, IntegralFamily.A_MINUS: -1.0, IntegralFamily.B: 0.0}[family]

    def integrand(x: float) -> float:
        j0 = special.j0(zeta * x)
        j2 = special.jv(2, zeta * x) if sign else 0.0
        return x ** k * math.exp(-lam * x) * (j0 + sign * j2)

    return integrator.integrate_semiinf(integrand, spec, scale=1.0 / lam, axis="x").value


def m_nu(nu: int, zeta: float, zeta_p: float, s: float,
         integrator: IIntegrator, spec: QuadSpec, cutoff: float = 40.0) -> float:
    """M_nu = int_0^inf x^6 e^{-s x} J_nu(zeta x) J_nu(zeta' x) dx.

    Integrated on [0, cutoff/s]; the discarded tail is below
    cutoff^6 e^{-cutoff} / 720 of the undamped value (2.4e-11 at cutoff 40).
    """
    if nu not in (0, 1, 2):
        raise DomainError(f"M_nu order {nu} not supported")
    if not s > 0:
        raise DomainError(f"s must be positive, got {s}")
    if zeta < 0 or zeta_p < 0:
        raise DomainError("zeta arguments must be non-negative")
    if zeta == 0 and zeta_p == 0:
        return 720.0 / s ** 7 if nu == 0 else 0.0
    if nu > 0 and (zeta == 0 or zeta_p == 0):
        return 0.0

    def integrand(x: float) -> float:
        return x ** 6 * math.exp(-s * x) * bessel_j(nu, zeta * x) * bessel_j(nu, zeta_p * x)

    return integrator.integrate_finite(integrand, 0.0, cutoff / s, spec, axis="x").value
