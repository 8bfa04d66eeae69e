"""Free-space and half-space Green tensors at imaginary frequency u."""
import math

import numpy as np
from scipy import special

from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.green import GreenComponents
from src.domain.entities.media import HalfSpaceMedium, PlateKind
from src.domain.entities.quadrature import QuadSpec
from src.domain.interface.integrator import IIntegrator
from src.domain.services.materials import permeability_iu, permittivity_iu
from src.domain.services.specfun import free_space_polys
from src.utils.exceptions import DomainError, SingularityError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

FOUR_PI = 4.0 * math.pi
MIRROR = np.diag([-1.0, -1.0, 1.0])


def _require_positive_u(u: float) -> None:
    if not u > 0:
        raise DomainError(f"imaginary frequency must be positive, got {u}")


def _unit(rho) -> tuple:
    rho = np.asarray(rho, dtype=float)
    dist = float(np.linalg.norm(rho))
    if dist == 0.0:
        raise SingularityError("separation vector has zero length")
    return rho / dist, dist


def cross_matrix(e: np.ndarray) -> np.ndarray:
    """Matrix of e x I (equal to I x e)."""
    return np.array([
        [0.0, -e[2], e[1]],
        [e[2], 0.0, -e[0]],
        [-e[1], e[0], 0.0],
    ])


def free_space_green(rho, u: float) -> np.ndarray:
    """G0(rho, iu) = e^{-u rho}/(4 pi rho) [a(1/(u rho)) I - b(1/(u rho)) e e]."""
    _require_positive_u(u)
    e, dist = _unit(rho)
    a, b, _, _ = free_space_polys(1.0 / (u * dist))
    pref = math.exp(-u * dist) / (FOUR_PI * dist)
    return pref * (a * np.eye(3) - b * np.outer(e, e))


def free_space_curls(rho, u: float) -> tuple:
    """(curl G0, G0 curl'): -P e x I and +P I x e with
    P = e^{-u rho} (1 + u rho) / (4 pi rho^2)."""
    _require_positive_u(u)
    e, dist = _unit(rho)
    pref = math.exp(-u * dist) * (1.0 + u * dist) / (FOUR_PI * dist * dist)
    cross = cross_matrix(e)
    return -pref * cross, pref * cross


def dual_plate(plate: PlateKind) -> PlateKind:
    return PlateKind.PERMEABLE if PlateKind(plate) == PlateKind.CONDUCTING else PlateKind.CONDUCTING


def plate_sign(plate: PlateKind) -> float:
    """+1 for a perfect conductor (r_p = +1), -1 for a perfectly permeable plate."""
    return 1.0 if PlateKind(plate) == PlateKind.CONDUCTING else -1.0


def reflection(q, u: float, medium: HalfSpaceMedium) -> tuple:
    """Fresnel coefficients (r_s, r_p) at imaginary frequency; q may be an array."""
    _require_positive_u(u)
    q = np.asarray(q, dtype=float)
    if medium.is_perfect:
        sign = plate_sign(medium.perfect)
        return -sign * np.ones_like(q), sign * np.ones_like(q)

    eps = permittivity_iu(medium.eps_medium, u)
    mu = permeability_iu(medium.mu_medium, u)
    b = np.sqrt(u * u + q * q)
    b_m = np.sqrt(eps * mu * u * u + q * q)
    # b - b_M without cancellation at q >> u
    diff = (1.0 - eps * mu) * u * u / (b + b_m)
    r_s = ((mu - 1.0) * b + diff) / ((mu + 1.0) * b - diff)
    r_p = ((eps - 1.0) * b + diff) / ((eps + 1.0) * b - diff)
    return r_s, r_p


def static_reflection(v, eps0: float, mu0: float) -> tuple:
    """Static coefficients with b = u v (v >= 1) in the retarded limit."""
    v = np.asarray(v, dtype=float)
    radicand = eps0 * mu0 - 1.0 + v * v
    if np.any(radicand < 0):
        raise DomainError("negative radicand eps(0) mu(0) - 1 + v^2")
    root = np.sqrt(radicand)
    r_s = (mu0 * v - root) / (mu0 * v + root)
    r_p = (eps0 * v - root) / (eps0 * v + root)
    return r_s, r_p


def reflection_expansion(q, u: float, medium: HalfSpaceMedium) -> tuple:
    """Expansion of (r_s, r_p) to second order in u/b:

    r_s ~ (mu-1)/(mu+1) - mu (eps mu - 1) (u/b)^2 / (mu+1)^2
    r_p ~ (eps-1)/(eps+1) - eps (eps mu - 1) (u/b)^2 / (eps+1)^2
    """
    _require_positive_u(u)
    if medium.is_perfect:
        return reflection(q, u, medium)
    q = np.asarray(q, dtype=float)
    eps = permittivity_iu(medium.eps_medium, u)
    mu = permeability_iu(medium.mu_medium, u)
    y2 = u * u / (u * u + q * q)
    r_s = (mu - 1.0) / (mu + 1.0) - mu * (eps * mu - 1.0) * y2 / (mu + 1.0) ** 2
    r_p = (eps - 1.0) / (eps + 1.0) - eps * (eps * mu - 1.0) * y2 / (eps + 1.0) ** 2
    return r_s, r_p


def image_scattering(geom: PlanarGeometry, u: float, plate: PlateKind) -> GreenComponents:
    """Exact scattering tensor of a perfect plate from the mirror construction:
    G0(R) diag(-1, -1, 1) with R = (X, 0, Z+), sign-flipped for a permeable plate.
    Component convention matches halfspace_scattering."""
    g = free_space_green(np.array([geom.X, 0.0, geom.z_plus]), u) @ MIRROR
    return GreenComponents.from_matrix(plate_sign(plate) * g)


def _laplace_bessel_moments(geom: PlanarGeometry) -> tuple:
    """int e^{-q Z+} J_nu(q X) dq for nu = 0, 1, 2, written without 0/0 at X = 0."""
    X, zp, lp = geom.X, geom.z_plus, geom.l_plus
    j0 = 1.0 / lp
    j1 = X / ((lp + zp) * lp)
    j2 = X * X / ((lp + zp) ** 2 * lp)
    return j0, j1, j2


def nonretarded_scattering(geom: PlanarGeometry, u: float, medium: HalfSpaceMedium) -> GreenComponents:
    """Quasi-static closed forms of the scattering tensor (u l+ << 1)."""
    _require_positive_u(u)
    X, zp, lp = geom.X, geom.z_plus, geom.l_plus

    if medium.is_perfect:
        r_e, r_m, eps, mu = plate_sign(medium.perfect), 0.0, None, 1.0
    else:
        eps = permittivity_iu(medium.eps_medium, u)
        mu = permeability_iu(medium.mu_medium, u)
        r_e = (eps - 1.0) / (eps + 1.0)
        r_m = (mu - 1.0) / (mu + 1.0)

    lp3, lp5 = lp ** 3, lp ** 5
    pref = r_e / (FOUR_PI * u * u)
    gxx = pref * (2.0 * X * X - zp * zp) / lp5
    gyy = -pref / lp3
    gxz = -pref * 3.0 * X * zp / lp5
    gzz = pref * (X * X - 2.0 * zp * zp) / lp5

    if r_m != 0.0:
        j0, j1, j2 = _laplace_bessel_moments(geom)
        # r_s ~ r_m, and r_p ~ -(mu - 1) u^2 / (4 b^2) when eps = 1
        rp_tail = (mu - 1.0) / 4.0 if r_e == 0.0 else 0.0
        gxx += (r_m * (j0 + j2) + rp_tail * (j0 - j2)) / (8.0 * math.pi)
        gyy += (r_m * (j0 - j2) + rp_tail * (j0 + j2)) / (8.0 * math.pi)
        gxz += rp_tail * j1 / FOUR_PI
        gzz += rp_tail * j0 / FOUR_PI

    return GreenComponents(gxx, gyy, gxz, -gxz, gzz)


class GreenService:
    """Half-space scattering tensor by q-quadrature of the Bessel-weighted
    representation."""

    def __init__(self, integrator: IIntegrator, spec: QuadSpec = None):
        self.integrator = integrator
        self.spec = spec or QuadSpec()

    @staticmethod
    def scattering_kernel(q: np.ndarray, geom: PlanarGeometry, u: float, medium: HalfSpaceMedium) -> np.ndarray:
        """Integrands of (gxx, gyy, gxz, gzz) over q, shape (4, n)."""
        b = np.sqrt(u * u + q * q)
        damp = np.exp(-b * geom.z_plus)
        r_s, r_p = reflection(q, u, medium)
        arg = q * abs(geom.X)
        j0 = special.j0(arg)
        j1 = math.copysign(1.0, geom.X) * special.j1(arg)
        j2 = special.jv(2, arg)

        s_term = q * damp * r_s / b
        p_term = q * damp * b * r_p / (u * u)
        gxx = ((j0 + j2) * s_term - (j0 - j2) * p_term) / (8.0 * math.pi)
        gyy = ((j0 - j2) * s_term - (j0 + j2) * p_term) / (8.0 * math.pi)
        gxz = -q * q * damp * j1 * r_p / (FOUR_PI * u * u)
        gzz = -q ** 3 * damp * j0 * r_p / (FOUR_PI * b * u * u)
        return np.vstack([gxx, gyy, gxz, gzz])

    def halfspace_scattering(self, geom: PlanarGeometry, u: float, medium: HalfSpaceMedium,
                             spec: QuadSpec = None) -> GreenComponents:
        _require_positive_u(u)
        if medium.is_vacuum:
            return GreenComponents.zero()
        res = self.integrator.integrate_panels(
            lambda q: self.scattering_kernel(q, geom, u, medium),
            spec or self.spec,
            feature=u,
            decay_length=geom.z_plus,
            frequency=abs(geom.X),
            axis="q",
        )
        gxx, gyy, gxz, gzz = (float(v) for v in res.value)
        return GreenComponents(gxx, gyy, gxz, -gxz, gzz)
