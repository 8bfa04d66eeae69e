import pytest

from src.domain.entities.atoms import AtomKind, AtomPair, ResonanceAtom
from src.domain.entities.media import HalfSpaceMedium
from src.domain.entities.quadrature import QuadSpec
from src.domain.services.closed_forms import ClosedFormService
from src.domain.services.forces import ForceService
from src.domain.services.greens import GreenService
from src.domain.services.potentials import PotentialService
from src.infrastructure.numerics.scipy_integrator import ScipyIntegrator


@pytest.fixture
def integrator():
    return ScipyIntegrator()


@pytest.fixture
def spec():
    return QuadSpec(rel_tol=1e-8)


@pytest.fixture
def pair():
    return AtomPair.identical()


@pytest.fixture
def mixed_pair():
    return AtomPair(ResonanceAtom(), ResonanceAtom(kind=AtomKind.MAGNETIC))


@pytest.fixture
def dielectric():
    return HalfSpaceMedium.dielectric(omega_p=3.0, omega_t=1.0, gamma=0.001)


@pytest.fixture
def magnetic():
    return HalfSpaceMedium.magnetic(omega_p=3.0, omega_t=1.0, gamma=0.001)


@pytest.fixture
def green_service(integrator):
    return GreenService(integrator, QuadSpec(rel_tol=1e-10))


@pytest.fixture
def potentials(integrator, green_service, spec):
    return PotentialService(integrator, green_service, spec)


@pytest.fixture
def closed_forms(potentials, integrator):
    return ClosedFormService(potentials, integrator, QuadSpec(rel_tol=1e-7))


@pytest.fixture
def forces(potentials, integrator, spec):
    return ForceService(potentials, integrator, spec)
