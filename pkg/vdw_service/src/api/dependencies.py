from typing import Optional

from src.config.settings import get_settings
from src.domain.entities.quadrature import QuadSpec
from src.domain.services.closed_forms import ClosedFormService
from src.domain.services.forces import ForceService
from src.domain.services.greens import GreenService
from src.domain.services.imaging import ImagingService
from src.domain.services.potentials import PotentialService
from src.domain.services.sweep import SweepService
from src.domain.services.thresholds import ThresholdService
from src.domain.services.validation import ValidationService
from src.infrastructure.numerics.scipy_integrator import ScipyIntegrator


def get_quad_spec(rel_tol: Optional[float] = None) -> QuadSpec:
    settings = get_settings()
    return QuadSpec(
        rel_tol=rel_tol or settings.QUAD_REL_TOL,
        abs_tol=settings.QUAD_ABS_TOL,
        max_subdivisions=settings.QUAD_MAX_SUBDIVISIONS,
    )


def get_integrator() -> ScipyIntegrator:
    settings = get_settings()
    return ScipyIntegrator(
        nest_factor=settings.QUAD_NEST_FACTOR,
        panel_max_rounds=settings.PANEL_MAX_ROUNDS,
        q_cutoff_decay=settings.Q_CUTOFF_DECAY,
        soft_failure_factor=settings.QUAD_SOFT_FAILURE_FACTOR,
    )


def get_green_service(integrator: ScipyIntegrator, spec: QuadSpec) -> GreenService:
    return GreenService(integrator, spec)


def get_potential_service(rel_tol: Optional[float] = None) -> PotentialService:
    integrator = get_integrator()
    spec = get_quad_spec(rel_tol)
    return PotentialService(
        integrator,
        get_green_service(integrator, spec.tightened(get_settings().QUAD_NEST_FACTOR)),
        spec,
        nest_factor=get_settings().QUAD_NEST_FACTOR,
    )


def get_closed_form_service(potentials: PotentialService) -> ClosedFormService:
    settings = get_settings()
    return ClosedFormService(
        potentials,
        potentials.integrator,
        potentials.spec,
        retarded_guard=settings.RETARDED_GUARD,
        nonretarded_guard=settings.NONRETARDED_GUARD,
        m0_ratio=settings.M0_CLOSED_FORM_RATIO,
        mu_limit=settings.MAGNETIC_MU_LIMIT,
        m_nu_cutoff=settings.M_NU_CUTOFF,
    )


def get_threshold_service(closed_forms: ClosedFormService) -> ThresholdService:
    return ThresholdService(closed_forms, xtol=get_settings().THRESHOLD_XTOL)


def get_force_service(potentials: PotentialService) -> ForceService:
    return ForceService(
        potentials,
        potentials.integrator,
        potentials.spec,
        relative_step=get_settings().FD_RELATIVE_STEP,
    )


def get_imaging_service(closed_forms: ClosedFormService) -> ImagingService:
    return ImagingService(closed_forms)


def get_validation_service(rel_tol: Optional[float] = None) -> ValidationService:
    potentials = get_potential_service(rel_tol)
    closed_forms = get_closed_form_service(potentials)
    return ValidationService(
        potentials,
        closed_forms,
        get_threshold_service(closed_forms),
        get_imaging_service(closed_forms),
        potentials.integrator,
    )


def get_sweep_service() -> SweepService:
    return SweepService(max_workers=get_settings().MAX_WORKERS)
