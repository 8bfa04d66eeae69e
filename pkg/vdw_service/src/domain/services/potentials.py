"""Two-atom van der Waals potentials in free space and above a half space."""
import math

import numpy as np
from scipy import special

from src.domain.entities.atoms import AtomPair
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.green import GreenComponents
from src.domain.entities.media import HalfSpaceMedium
from src.domain.entities.potential import AsymptoticCoefficients, PotentialBreakdown
from src.domain.entities.quadrature import QuadSpec
from src.domain.interface.integrator import IIntegrator
from src.domain.services.greens import (
    GreenService,
    free_space_green,
    image_scattering,
    reflection,
)
from src.domain.services.materials import response_iu, static_response
from src.domain.services.specfun import free_space_polys
from src.utils.exceptions import DomainError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

PI3 = math.pi ** 3
U1_METHODS = ("auto", "sommerfeld", "image")
U2_METHODS = ("auto", "factorized", "direct", "image")
# weights of (xx, yy, xz, zz) in Tr[G1 . G1^T]; zx = -xz
_SQUARE_WEIGHTS = np.array([1.0, 1.0, 2.0, 1.0])


def _require_length(l: float) -> None:
    if not l > 0:
        raise DomainError(f"separation must be positive, got {l}")


def log_slope(ls, values) -> np.ndarray:
    """Local exponent -d ln|U| / d ln l on a grid of separations."""
    ls = np.asarray(ls, dtype=float)
    values = np.asarray(values, dtype=float)
    if ls.size < 2:
        raise DomainError("log_slope needs at least two points")
    if np.any(ls <= 0) or np.any(values == 0):
        raise DomainError("log_slope needs positive separations and nonzero values")
    return -np.gradient(np.log(np.abs(values)), np.log(ls))


def u1_trace_integrand(u: float, geom: PlanarGeometry, pair: AtomPair, g1: GreenComponents) -> float:
    """-(1/pi) u^4 alpha_A alpha_B Tr[G0 . G1^T]; the xz terms cancel because
    G0 is symmetric and G1 antisymmetric there."""
    g0 = free_space_green(np.array([geom.X, 0.0, geom.Z]), u)
    trace = g0[0, 0] * g1.gxx + g0[1, 1] * g1.gyy + g0[2, 2] * g1.gzz + g0[0, 2] * (g1.gxz + g1.gzx)
    return -(u ** 4) * response_iu(pair.a, u) * response_iu(pair.b, u) * trace / math.pi


def u2_trace_integrand(u: float, pair: AtomPair, g1: GreenComponents) -> float:
    """-(1/2pi) u^4 alpha_A alpha_B Tr[G1 . G1^T]."""
    return -(u ** 4) * response_iu(pair.a, u) * response_iu(pair.b, u) * g1.squared_sum() / (2.0 * math.pi)


def u1_explicit_integrand(u: float, q, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium):
    """Closed (u, q) integrand of U1 with the free-space tensor written out.

    With a = u^2 + u/l + 1/l^2, b_ = u^2 + 3u/l + 3/l^2 and b = sqrt(u^2 + q^2):

        {[2a - b_ X^2/l^2](r_s u^2/b - b r_p) - 2[a - b_ Z^2/l^2] q^2 r_p / b} J0(qX)
        - b_ X^2/l^2 (r_s u^2/b + b r_p) J2(qX)

    times q e^{-b Z+} and -alpha_A alpha_B e^{-ul} / (32 pi^3 l).
    """
    q = np.asarray(q, dtype=float)
    l, X, Z = geom.l, geom.X, geom.Z
    a_t = u * u + u / l + 1.0 / (l * l)
    b_t = u * u + 3.0 * u / l + 3.0 / (l * l)
    b = np.sqrt(u * u + q * q)
    r_s, r_p = reflection(q, u, medium)
    arg = q * abs(X)
    j0 = special.j0(arg)
    j2 = special.jv(2, arg)

    x2 = X * X / (l * l)
    z2 = Z * Z / (l * l)
    s_minus = r_s * u * u / b - b * r_p
    s_plus = r_s * u * u / b + b * r_p
    bracket = ((2.0 * a_t - b_t * x2) * s_minus - 2.0 * (a_t - b_t * z2) * q * q * r_p / b) * j0 \
        - b_t * x2 * s_plus * j2

    pref = -response_iu(pair.a, u) * response_iu(pair.b, u) * math.exp(-u * l) / (32.0 * PI3 * l)
    return pref * q * np.exp(-b * geom.z_plus) * bracket


def u2_explicit_integrand(u: float, q, q_p, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium):
    """(u, q, q') integrand of U2: the product of the single-q scattering
    kernels at q and q', summed over the tensor elements."""
    k = GreenService.scattering_kernel(np.atleast_1d(np.asarray(q, dtype=float)), geom, u, medium)
    k_p = GreenService.scattering_kernel(np.atleast_1d(np.asarray(q_p, dtype=float)), geom, u, medium)
    products = np.einsum("c,cn,cn->n", _SQUARE_WEIGHTS, k, k_p)
    value = -(u ** 4) * response_iu(pair.a, u) * response_iu(pair.b, u) * products / (2.0 * math.pi)
    return float(value[0]) if np.ndim(q) == 0 and np.ndim(q_p) == 0 else value


class PotentialService:
    def __init__(self, integrator: IIntegrator, green_service: GreenService,
                 spec: QuadSpec = None, nest_factor: float = 10.0):
        self.integrator = integrator
        self.green_service = green_service
        self.spec = spec or QuadSpec()
        self.nest_factor = nest_factor

    @property
    def inner_spec(self) -> QuadSpec:
        return self.spec.tightened(self.nest_factor)

    # -- free space ------------------------------------------------------

    def u0_ee(self, l: float, pair: AtomPair) -> float:
        """-1/(32 pi^3 l^6) int du alpha_A alpha_B g(ul)."""
        _require_length(l)
        pair.require_electric("u0_ee")

        def integrand(u: float) -> float:
            _, _, g, _ = free_space_polys(u * l)
            return response_iu(pair.a, u) * response_iu(pair.b, u) * g

        res = self.integrator.integrate_semiinf(integrand, self.spec, scale=min(pair.omega_min, 1.0 / l), axis="u")
        return -res.value / (32.0 * PI3 * l ** 6)

    def u0_em(self, l: float, pair: AtomPair) -> float:
        """+1/(32 pi^3 l^4) int du u^2 alpha_A beta_B h(ul); always repulsive."""
        _require_length(l)
        if not pair.is_mixed_pair():
            raise DomainError("u0_em requires an electric atom A and a magnetic atom B")

        def integrand(u: float) -> float:
            _, _, _, h = free_space_polys(u * l)
            return u * u * response_iu(pair.a, u) * response_iu(pair.b, u) * h

        res = self.integrator.integrate_semiinf(integrand, self.spec, scale=min(pair.omega_min, 1.0 / l), axis="u")
        return res.value / (32.0 * PI3 * l ** 4)

    def u0(self, l: float, pair: AtomPair) -> float:
        return self.u0_em(l, pair) if pair.is_mixed_pair() else self.u0_ee(l, pair)

    def asymptotic_coefficients(self, pair: AtomPair) -> AsymptoticCoefficients:
        scale = pair.omega_min
        c6_int = self.integrator.integrate_semiinf(
            lambda u: response_iu(pair.a, u) * response_iu(pair.b, u), self.spec, scale=scale, axis="u"
        ).value
        c4_int = self.integrator.integrate_semiinf(
            lambda u: u * u * response_iu(pair.a, u) * response_iu(pair.b, u), self.spec, scale=scale, axis="u"
        ).value
        static = static_response(pair.a) * static_response(pair.b)
        return AsymptoticCoefficients(
            c6=3.0 * c6_int / (16.0 * PI3),
            c7_ee=23.0 * static / (64.0 * PI3),
            c7_em=7.0 * static / (64.0 * PI3),
            c4=c4_int / (16.0 * PI3),
        )

    # -- half space ------------------------------------------------------

    @staticmethod
    def _u_scale(geom: PlanarGeometry, pair: AtomPair) -> float:
        return min(pair.omega_min, 1.0 / (geom.l + geom.l_plus))

    @staticmethod
    def _resolve(method: str, allowed: tuple, medium: HalfSpaceMedium, default: str) -> str:
        if method not in allowed:
            raise DomainError(f"unknown method {method!r}; expected one of {allowed}")
        if method == "auto":
            return "image" if medium.is_perfect else default
        if method == "image" and not medium.is_perfect:
            raise DomainError("the image route applies to perfect plates only")
        return method

    def scattering(self, geom: PlanarGeometry, u: float, medium: HalfSpaceMedium, route: str) -> GreenComponents:
        if route == "image":
            return image_scattering(geom, u, medium.perfect)
        return self.green_service.halfspace_scattering(geom, u, medium, self.inner_spec)

    def u1_halfspace(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium,
                     method: str = "auto") -> float:
        pair.require_electric("u1_halfspace")
        route = self._resolve(method, U1_METHODS, medium, "sommerfeld")
        if medium.is_vacuum:
            return 0.0

        if route == "image":
            def integrand(u: float) -> float:
                if u == 0.0:
                    return 0.0
                return u1_trace_integrand(u, geom, pair, image_scattering(geom, u, medium.perfect))
        else:
            inner = self.inner_spec

            def integrand(u: float) -> float:
                if u == 0.0:
                    return 0.0
                return self.integrator.integrate_panels(
                    lambda q: u1_explicit_integrand(u, q, geom, pair, medium),
                    inner, feature=u, decay_length=geom.z_plus, frequency=abs(geom.X),
                ).value

        res = self.integrator.integrate_semiinf(integrand, self.spec, scale=self._u_scale(geom, pair), axis="u")
        logger.debug({"operation": "u1_halfspace", "route": route, "evaluations": res.evaluations})
        return res.value

    def u2_halfspace(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium,
                     method: str = "auto") -> float:
        pair.require_electric("u2_halfspace")
        route = self._resolve(method, U2_METHODS, medium, "factorized")
        if medium.is_vacuum:
            return 0.0

        if route == "direct":
            q_scale = 1.0 / geom.z_plus
            res = self.integrator.integrate_3d(
                lambda u, q, q_p: u2_explicit_integrand(u, q, q_p, geom, pair, medium) if u > 0 else 0.0,
                self.spec,
                scales=(self._u_scale(geom, pair), q_scale, q_scale),
            )
        else:
            def integrand(u: float) -> float:
                if u == 0.0:
                    return 0.0
                return u2_trace_integrand(u, pair, self.scattering(geom, u, medium, route))

            res = self.integrator.integrate_semiinf(integrand, self.spec, scale=self._u_scale(geom, pair), axis="u")
        logger.debug({"operation": "u2_halfspace", "route": route, "evaluations": res.evaluations})
        return res.value

    def u_total(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium,
                method: str = "auto") -> PotentialBreakdown:
        """U0 + U1 + U2 with U1 and U2 integrated together over u from one
        scattering tensor per frequency."""
        pair.require_electric("u_total")
        u0 = self.u0_ee(geom.l, pair)
        if medium.is_vacuum:
            return PotentialBreakdown(u0, 0.0, 0.0, 0.0)
        route = self._resolve(method, U1_METHODS, medium, "sommerfeld")

        def integrand(u: float) -> np.ndarray:
            if u == 0.0:
                return np.zeros(2)
            g1 = self.scattering(geom, u, medium, route)
            return np.array([u1_trace_integrand(u, geom, pair, g1), u2_trace_integrand(u, pair, g1)])

        res = self.integrator.integrate_semiinf_vec(integrand, self.spec, scale=self._u_scale(geom, pair), axis="u")
        u1, u2 = (float(v) for v in res.value)
        logger.debug({"operation": "u_total", "route": route, "l": geom.l, "z_plus": geom.z_plus,
                      "evaluations": res.evaluations})
        return PotentialBreakdown(u0, u1, u2, res.abs_error_estimate)
