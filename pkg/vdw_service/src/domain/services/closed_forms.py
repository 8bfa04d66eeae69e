"""Closed-form asymptotic potentials for perfect and finite-response plates."""
import math

from src.domain.entities.atoms import AtomPair
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.media import HalfSpaceMedium, PlateKind
from src.domain.entities.potential import HalfSpaceCoefficients, PotentialBreakdown
from src.domain.entities.quadrature import QuadSpec
from src.domain.entities.special import WeightedIntegralKey
from src.domain.interface.integrator import IIntegrator
from src.domain.services.greens import plate_sign, static_reflection
from src.domain.services.materials import permeability_iu, permittivity_iu, response_iu, static_response
from src.domain.services.potentials import PotentialService
from src.domain.services.specfun import m_nu, weighted_AB
from src.utils.exceptions import DomainError, RegimeError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

PI3 = math.pi ** 3
_KEYS = {name: WeightedIntegralKey.parse(name) for name in (
    "A3+", "A4+", "A5+", "A3-", "A4-", "A5-", "B3", "B4", "B5",
)}


def c7_ee(pair: AtomPair) -> float:
    return 23.0 * static_response(pair.a) * static_response(pair.b) / (64.0 * PI3)


def _medium_omega(medium: HalfSpaceMedium) -> float:
    if medium.is_perfect:
        return 0.0
    return max(
        medium.eps_medium.omega_t if medium.eps_medium.omega_p > 0 else 0.0,
        medium.mu_medium.omega_t if medium.mu_medium.omega_p > 0 else 0.0,
    )


class ClosedFormService:
    def __init__(self, potentials: PotentialService, integrator: IIntegrator, spec: QuadSpec = None,
                 retarded_guard: float = 50.0, nonretarded_guard: float = 0.02,
                 m0_ratio: float = 0.05, mu_limit: float = 1e3, m_nu_cutoff: float = 40.0):
        self.potentials = potentials
        self.integrator = integrator
        self.spec = spec or QuadSpec()
        self.retarded_guard = retarded_guard
        self.nonretarded_guard = nonretarded_guard
        self.m0_ratio = m0_ratio
        self.mu_limit = mu_limit
        self.m_nu_cutoff = m_nu_cutoff

    # -- regime guards ---------------------------------------------------

    def check_retarded(self, geom: PlanarGeometry, pair: AtomPair) -> None:
        measure = pair.omega_min * min(geom.l, geom.z_plus)
        if measure < self.retarded_guard:
            raise RegimeError(
                f"retarded form needs omega_min * min(l, Z+) >= {self.retarded_guard}, got {measure:.4g}"
            )

    def check_nonretarded(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium) -> None:
        omega = max(pair.omega_max, _medium_omega(medium))
        measure = omega * max(geom.l, geom.l_plus) * medium.static_index
        if measure > self.nonretarded_guard:
            raise RegimeError(
                f"nonretarded form needs omega_max * max(l, l+) * n(0) <= {self.nonretarded_guard}, "
                f"got {measure:.4g}"
            )

    def c6(self, pair: AtomPair) -> float:
        return self.potentials.asymptotic_coefficients(pair).c6

    # -- perfect plates --------------------------------------------------

    def perfect_retarded_closed(self, geom: PlanarGeometry, pair: AtomPair,
                                plate: PlateKind = PlateKind.CONDUCTING,
                                enforce_regime: bool = True) -> PotentialBreakdown:
        """Retarded perfect-plate potential, valid for X << Z+."""
        pair.require_electric("perfect_retarded_closed")
        if enforce_regime:
            self.check_retarded(geom, pair)
        c7 = c7_ee(pair)
        X, l, zp = geom.X, geom.l, geom.z_plus
        u1 = plate_sign(plate) * (32.0 / 23.0) * (X * X + 6.0 * l * l) * c7 / (l ** 3 * zp * (l + zp) ** 5)
        return PotentialBreakdown(-c7 / l ** 7, u1, -c7 / zp ** 7)

    def perfect_nonretarded_closed(self, geom: PlanarGeometry, pair: AtomPair,
                                   plate: PlateKind = PlateKind.CONDUCTING,
                                   enforce_regime: bool = True) -> PotentialBreakdown:
        pair.require_electric("perfect_nonretarded_closed")
        if enforce_regime:
            self.check_nonretarded(geom, pair, HalfSpaceMedium.perfect_plate(plate))
        c6 = self.c6(pair)
        return self._electric_breakdown(geom, c6, plate_sign(plate) * c6 / 3.0, c6)

    @staticmethod
    def _electric_breakdown(geom: PlanarGeometry, c6: float, d: float, e: float) -> PotentialBreakdown:
        X2, Z2, zp2 = geom.X ** 2, geom.Z ** 2, geom.z_plus ** 2
        l, lp = geom.l, geom.l_plus
        u1 = (4.0 * X2 * X2 - 2.0 * Z2 * zp2 + X2 * (Z2 + zp2)) * d / (l ** 5 * lp ** 5)
        return PotentialBreakdown(-c6 / l ** 6, u1, -e / lp ** 6)

    # -- finite-response half spaces --------------------------------------

    def d_e_f_coefficients(self, pair: AtomPair, medium: HalfSpaceMedium) -> HalfSpaceCoefficients:
        if medium.is_perfect:
            raise DomainError("perfect plates carry no D/E/F coefficients; use perfect_nonretarded_closed")
        scale = pair.omega_min
        omega = _medium_omega(medium)
        if omega > 0:
            scale = min(scale, omega)

        def polar(u: float) -> float:
            return response_iu(pair.a, u) * response_iu(pair.b, u)

        def r_e(u: float) -> float:
            eps = permittivity_iu(medium.eps_medium, u)
            return (eps - 1.0) / (eps + 1.0)

        def mu_factor(u: float) -> float:
            mu = permeability_iu(medium.mu_medium, u)
            return (mu - 1.0) * (mu - 3.0) / (mu + 1.0)

        def integrate(f) -> float:
            return self.integrator.integrate_semiinf(f, self.spec, scale=scale, axis="u").value

        d = integrate(lambda u: polar(u) * r_e(u)) / (16.0 * PI3)
        e = 3.0 * integrate(lambda u: polar(u) * r_e(u) ** 2) / (16.0 * PI3)
        f = integrate(lambda u: u * u * polar(u) * mu_factor(u)) / (64.0 * PI3)
        return HalfSpaceCoefficients(d, e, f)

    def nonretarded_electric_closed(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium,
                                    enforce_regime: bool = True) -> PotentialBreakdown:
        """U = -C6/l^6 + [4X^4 - 2Z^2 Z+^2 + X^2(Z^2 + Z+^2)] D/(l^5 l+^5) - E/l+^6."""
        pair.require_electric("nonretarded_electric_closed")
        if medium.is_perfect or medium.static_mu != 1.0:
            raise DomainError("nonretarded_electric_closed needs a finite purely electric half space")
        if enforce_regime:
            self.check_nonretarded(geom, pair, medium)
        coeffs = self.d_e_f_coefficients(pair, medium)
        return self._electric_breakdown(geom, self.c6(pair), coeffs.d, coeffs.e)

    def nonretarded_magnetic_closed(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium,
                                    enforce_regime: bool = True) -> PotentialBreakdown:
        """U = -C6/l^6 + [Z^2 - 2X^2 + 3Z+(l+ - Z+)] F/(l^5 l+); no U2 term at this order."""
        pair.require_electric("nonretarded_magnetic_closed")
        if medium.is_perfect or medium.static_eps != 1.0:
            raise DomainError("nonretarded_magnetic_closed needs a finite purely magnetic half space")
        if medium.static_mu > self.mu_limit:
            raise RegimeError(
                f"mu(0) = {medium.static_mu:.4g} exceeds {self.mu_limit:.4g}: the quasi-static magnetic "
                "form does not approach the perfectly permeable plate"
            )
        if enforce_regime:
            self.check_nonretarded(geom, pair, medium)
        coeffs = self.d_e_f_coefficients(pair, medium)
        X2, Z2, zp, lp, l = geom.X ** 2, geom.Z ** 2, geom.z_plus, geom.l_plus, geom.l
        bracket = Z2 - 2.0 * X2 + 3.0 * zp * X2 / (lp + zp)
        return PotentialBreakdown(-self.c6(pair) / l ** 6, bracket * coeffs.f / (l ** 5 * lp), 0.0)

    def retarded_halfspace_closed(self, geom: PlanarGeometry, pair: AtomPair, eps0: float, mu0: float,
                                  enforce_regime: bool = True) -> PotentialBreakdown:
        """Retarded potential of a half space with static eps(0), mu(0):
        U1 as a single v-integral over A_k+-, B_k and U2 as a double
        (v, v') integral over M_nu."""
        pair.require_electric("retarded_halfspace_closed")
        if eps0 * mu0 < 1.0:
            raise DomainError("eps(0) mu(0) must be at least 1")
        if enforce_regime:
            self.check_retarded(geom, pair)
        c7 = c7_ee(pair)
        l = geom.l
        if eps0 == 1.0 and mu0 == 1.0:
            return PotentialBreakdown(-c7 / l ** 7, 0.0, 0.0)
        static = static_response(pair.a) * static_response(pair.b)

        # O(1) integrands at any l, Z+
        norm1 = (l + geom.z_plus) ** 4
        norm2 = geom.z_plus ** 7
        u1_int = self.integrator.integrate_semiinf(
            lambda v: norm1 * self._u1_v_integrand(v, geom, eps0, mu0), self.spec, scale=1.0, axis="v", offset=1.0
        ).value / norm1
        u2_int = self.integrator.integrate_2d(
            lambda v, v_p: norm2 * self._u2_v_integrand(v, v_p, geom, eps0, mu0), self.spec,
            scales=(1.0, 1.0), offsets=(1.0, 1.0),
        ).value / norm2
        return PotentialBreakdown(
            -c7 / l ** 7,
            static * u1_int / (32.0 * PI3 * l ** 3),
            -static * u2_int / (64.0 * PI3),
        )

    @staticmethod
    def _u1_v_integrand(v: float, geom: PlanarGeometry, eps0: float, mu0: float) -> float:
        X2, Z2, l = geom.X ** 2, geom.Z ** 2, geom.l
        lam = l + v * geom.z_plus
        zeta = abs(geom.X) * math.sqrt(max(v * v - 1.0, 0.0))
        w = {name: weighted_AB(key, lam, zeta) for name, key in _KEYS.items()}
        r_s, r_p = (float(r) for r in static_reflection(v, eps0, mu0))

        tilt = Z2 - 2.0 * X2
        p_bracket = Z2 * w["A5-"] + tilt * (w["A4-"] / l + w["A3-"] / l ** 2) \
            + l * l * w["A5+"] + l * w["A4+"] + w["A3+"]
        b_bracket = X2 * w["B5"] + (X2 - 2.0 * Z2) * (w["B4"] / l + w["B3"] / l ** 2)
        s_bracket = Z2 * w["A5+"] + tilt * (w["A4+"] / l + w["A3+"] / l ** 2) \
            + l * l * w["A5-"] + l * w["A4-"] + w["A3-"]
        return v * v * p_bracket * r_p + 2.0 * (v * v - 1.0) * b_bracket * r_p - s_bracket * r_s

    def _m_values(self, v: float, v_p: float, geom: PlanarGeometry) -> tuple:
        s = (v + v_p) * geom.z_plus
        if abs(geom.X) < self.m0_ratio * geom.z_plus:
            return 720.0 / s ** 7, 0.0, 0.0
        zeta = abs(geom.X) * math.sqrt(max(v * v - 1.0, 0.0))
        zeta_p = abs(geom.X) * math.sqrt(max(v_p * v_p - 1.0, 0.0))
        inner = self.spec.tightened(self.potentials.nest_factor)
        return tuple(
            m_nu(nu, zeta, zeta_p, s, self.integrator, inner, cutoff=self.m_nu_cutoff) for nu in (0, 1, 2)
        )

    def _u2_v_integrand(self, v: float, v_p: float, geom: PlanarGeometry, eps0: float, mu0: float) -> float:
        r_s, r_p = (float(r) for r in static_reflection(v, eps0, mu0))
        r_s_p, r_p_p = (float(r) for r in static_reflection(v_p, eps0, mu0))
        m0, m1, m2 = self._m_values(v, v_p, geom)
        v2, vp2 = v * v, v_p * v_p

        k0 = r_s * r_s_p - r_s * r_p_p * vp2 - r_p * r_s_p * v2 \
            + r_p * r_p_p * (3.0 * v2 * vp2 - 2.0 * (v2 + vp2) + 2.0)
        k1 = 4.0 * v * v_p * math.sqrt(max(v2 - 1.0, 0.0) * max(vp2 - 1.0, 0.0)) * r_p * r_p_p
        k2 = r_s * r_s_p + r_s * r_p_p * vp2 + r_p * r_s_p * v2 + r_p * r_p_p * v2 * vp2
        return k0 * m0 + k1 * m1 + k2 * m2
