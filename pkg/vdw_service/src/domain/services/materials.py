"""Atom and medium response functions on the imaginary frequency axis."""
import numpy as np

from src.domain.entities.atoms import ResonanceAtom
from src.domain.entities.media import LorentzMedium, MediumKind
from src.utils.exceptions import DomainError


def _require_non_negative(u) -> None:
    if np.any(np.asarray(u) < 0):
        raise DomainError(f"imaginary frequency must be non-negative, got {u}")


def response_iu(atom: ResonanceAtom, u):
    """alpha(iu) = alpha0 w10^2 / (w10^2 + u^2); same form for magnetizabilities."""
    _require_non_negative(u)
    w2 = atom.omega10 * atom.omega10
    return atom.alpha0 * w2 / (w2 + u * u)


def static_response(atom: ResonanceAtom) -> float:
    return atom.alpha0


def lorentz_iu(medium: LorentzMedium, u):
    """1 + wP^2 / (wT^2 + u^2 + u gamma)."""
    _require_non_negative(u)
    if medium.kind == MediumKind.VACUUM or medium.omega_p == 0:
        return np.ones_like(u, dtype=float) if np.ndim(u) else 1.0
    return 1.0 + medium.omega_p ** 2 / (medium.omega_t ** 2 + u * u + u * medium.gamma)


def permittivity_iu(medium: LorentzMedium, u):
    if medium.kind == MediumKind.MAGNETIC:
        raise DomainError("permittivity requested from a magnetic medium")
    return lorentz_iu(medium, u)


def permeability_iu(medium: LorentzMedium, u):
    if medium.kind == MediumKind.ELECTRIC:
        raise DomainError("permeability requested from an electric medium")
    return lorentz_iu(medium, u)
