"""Forces on each atom: analytic in free space, finite differences near a plate."""
import math

import numpy as np

from src.domain.entities.atoms import AtomPair
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.media import HalfSpaceMedium
from src.domain.entities.potential import ForcePair
from src.domain.entities.quadrature import QuadSpec
from src.domain.interface.integrator import IIntegrator
from src.domain.services.materials import response_iu
from src.domain.services.potentials import PotentialService
from src.utils.exceptions import DomainError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

PI3 = math.pi ** 3


def ee_force_bracket(x):
    """e^{-2x}(9 + 18x + 16x^2 + 8x^3 + 3x^4 + x^5)."""
    return np.exp(-2.0 * x) * (9.0 + x * (18.0 + x * (16.0 + x * (8.0 + x * (3.0 + x)))))


def em_force_bracket(x):
    """e^{-2x}(2 + 4x + 3x^2 + x^3)."""
    return np.exp(-2.0 * x) * (2.0 + x * (4.0 + x * (3.0 + x)))


class ForceService:
    def __init__(self, potentials: PotentialService, integrator: IIntegrator,
                 spec: QuadSpec = None, relative_step: float = 1e-3):
        self.potentials = potentials
        self.integrator = integrator
        self.spec = spec or QuadSpec()
        self.relative_step = relative_step

    def free_space_force(self, l: float, pair: AtomPair) -> float:
        """Radial force -dU/dl; negative is attractive, positive repulsive.

        ee: -1/(8 pi^3 l^7) int du alpha_A alpha_B e^{-2ul}(9 + 18x + ...)
        em: +1/(8 pi^3 l^5) int du u^2 alpha_A beta_B e^{-2ul}(2 + 4x + ...)
        """
        if not l > 0:
            raise DomainError(f"separation must be positive, got {l}")
        scale = min(pair.omega_min, 1.0 / l)

        if pair.is_mixed_pair():
            res = self.integrator.integrate_semiinf(
                lambda u: u * u * response_iu(pair.a, u) * response_iu(pair.b, u) * em_force_bracket(u * l),
                self.spec, scale=scale, axis="u",
            )
            return res.value / (8.0 * PI3 * l ** 5)

        pair.require_electric("free_space_force")
        res = self.integrator.integrate_semiinf(
            lambda u: response_iu(pair.a, u) * response_iu(pair.b, u) * ee_force_bracket(u * l),
            self.spec, scale=scale, axis="u",
        )
        return -res.value / (8.0 * PI3 * l ** 7)

    def free_space_force_pair(self, geom: PlanarGeometry, pair: AtomPair) -> ForcePair:
        """Forces along the line of centres; f_on_a = -f_on_b."""
        direction = np.array([geom.X, 0.0, geom.Z]) / geom.l
        f_on_b = self.free_space_force(geom.l, pair) * direction
        return ForcePair(-f_on_b, f_on_b)

    def _gradient(self, geom: PlanarGeometry, atom: str, axis: str, h: float, energy) -> float:
        def central(step: float) -> float:
            shift = {"dx": step} if axis == "x" else {"dz": step}
            back = {"dx": -step} if axis == "x" else {"dz": -step}
            try:
                plus = geom.shifted(atom, **shift)
                minus = geom.shifted(atom, **back)
            except DomainError as exc:
                raise DomainError(f"finite-difference step {step:.3g} leaves the half space: {exc.message}")
            return (energy(plus) - energy(minus)) / (2.0 * step)

        # Richardson extrapolation of two central differences
        return (4.0 * central(0.5 * h) - central(h)) / 3.0

    def halfspace_forces(self, geom: PlanarGeometry, pair: AtomPair, medium: HalfSpaceMedium,
                         step: float = None, method: str = "auto") -> ForcePair:
        """F_A = -grad_A U and F_B = -grad_B U of the full potential; they
        need not be opposite when a plate is present."""
        h = (step or self.relative_step) * geom.min_length
        if h >= min(geom.z_a, geom.z_b):
            raise DomainError(f"finite-difference step {h:.3g} reaches the surface")

        def energy(g: PlanarGeometry) -> float:
            return self.potentials.u_total(g, pair, medium, method=method).total

        forces = {}
        for atom in ("a", "b"):
            fx = -self._gradient(geom, atom, "x", h, energy)
            fz = -self._gradient(geom, atom, "z", h, energy)
            forces[atom] = np.array([fx, 0.0, fz])

        logger.debug({"operation": "halfspace_forces", "step": h, "F_on_A": forces["a"].tolist(),
                      "F_on_B": forces["b"].tolist()})
        return ForcePair(forces["a"], forces["b"])
