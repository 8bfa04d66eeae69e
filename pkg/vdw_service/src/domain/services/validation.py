"""Named acceptance checks run by the `validate` command."""
import math
from typing import Callable, List

import numpy as np

from src.domain.entities.atoms import AtomKind, AtomPair, ResonanceAtom
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.media import HalfSpaceMedium, PlateKind
from src.domain.entities.quadrature import QuadSpec
from src.domain.entities.special import WeightedIntegralKey
from src.domain.entities.thresholds import ThresholdCase
from src.domain.entities.validation import CheckResult, ValidationReport
from src.domain.interface.integrator import IIntegrator
from src.domain.services.closed_forms import ClosedFormService
from src.domain.services.imaging import ImagingService
from src.domain.services.potentials import (
    PotentialService,
    u1_explicit_integrand,
    u1_trace_integrand,
    u2_explicit_integrand,
    u2_trace_integrand,
)
from src.domain.services.specfun import weighted_AB, weighted_AB_quadrature
from src.domain.services.thresholds import ThresholdService
from src.utils.exceptions import VdwServiceException
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

REFERENCE_DIELECTRIC = HalfSpaceMedium.dielectric(omega_p=3.0, omega_t=1.0, gamma=0.001)
REFERENCE_MAGNETIC = HalfSpaceMedium.magnetic(omega_p=3.0, omega_t=1.0, gamma=0.001)


def _check(name: str, value: float, expected: float, tol: float, relative: bool = True) -> CheckResult:
    scale = abs(expected) if relative and expected != 0 else 1.0
    deviation = abs(value - expected) / scale
    return CheckResult(
        name=name,
        passed=bool(deviation <= tol),
        detail=f"deviation {deviation:.3e} (tolerance {tol:.1e})",
        value=float(value),
        expected=float(expected),
    )


def _flag(name: str, passed: bool, detail: str) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), detail=detail)


class ValidationService:
    def __init__(self, potentials: PotentialService, closed_forms: ClosedFormService,
                 thresholds: ThresholdService, imaging: ImagingService, integrator: IIntegrator):
        self.potentials = potentials
        self.closed_forms = closed_forms
        self.thresholds = thresholds
        self.imaging = imaging
        self.integrator = integrator
        self.pair = AtomPair.identical()

    def quick_checks(self) -> List[Callable[[], List[CheckResult]]]:
        return [
            self.check_free_space_limits,
            self.check_magnetoelectric_coefficients,
            self.check_retarded_on_surface,
            self.check_nonretarded_on_surface,
            self.check_thresholds,
            self.check_weighted_integrals,
            self.check_image_signs,
        ]

    def full_checks(self) -> List[Callable[[], List[CheckResult]]]:
        return [
            self.check_sommerfeld_limits,
            self.check_trace_oracle,
            self.check_far_plate,
            self.check_nonretarded_media,
            self.check_ratio_shapes,
        ]

    def run(self, quick: bool = False) -> ValidationReport:
        report = ValidationReport()
        groups = self.quick_checks() if quick else self.quick_checks() + self.full_checks()
        for group in groups:
            try:
                results = group()
            except VdwServiceException as exc:
                results = [_flag(group.__name__, False, f"{type(exc).__name__}: {exc.message}")]
            for result in results:
                logger.info({"check": result.name, "passed": result.passed, "detail": result.detail})
                report.add(result)
        return report

    # -- closed-form and single-quadrature checks ---------------------------

    def check_free_space_limits(self) -> List[CheckResult]:
        coeffs = self.potentials.asymptotic_coefficients(self.pair)
        far, near = 100.0, 1e-3
        return [
            _check("free-space-retarded", self.potentials.u0_ee(far, self.pair) * far ** 7 / coeffs.c7_ee, -1.0, 0.01),
            _check("free-space-nonretarded", self.potentials.u0_ee(near, self.pair) * near ** 6 / coeffs.c6, -1.0, 0.01),
            _check("c6-unit-atoms", coeffs.c6, 3.0 / (64.0 * math.pi ** 2), 1e-8),
        ]

    def check_magnetoelectric_coefficients(self) -> List[CheckResult]:
        mixed = AtomPair(ResonanceAtom(), ResonanceAtom(kind=AtomKind.MAGNETIC))
        coeffs = self.potentials.asymptotic_coefficients(mixed)
        values = [self.potentials.u0_em(l, mixed) for l in np.geomspace(1e-3, 1e3, 50)]
        return [
            _check("c7-em-over-ee", coeffs.c7_em / coeffs.c7_ee, 7.0 / 23.0, 1e-12),
            _flag("u0-em-repulsive", all(v > 0 for v in values), f"min value {min(values):.3e}"),
        ]

    def check_retarded_on_surface(self) -> List[CheckResult]:
        results = []
        limit_geom = PlanarGeometry.vertical(z_a=1e-12, l=100.0)
        image_geom = PlanarGeometry.vertical(z_a=0.1, l=99.9)
        for plate, expected in ((PlateKind.CONDUCTING, 40.0 / 23.0), (PlateKind.PERMEABLE, 52.0 / 23.0)):
            closed = self.closed_forms.perfect_retarded_closed(limit_geom, self.pair, plate)
            results.append(_check(f"retarded-on-surface-closed-{plate.value}", closed.ratio, expected, 1e-12))
            full = self.potentials.u_total(image_geom, self.pair, HalfSpaceMedium.perfect_plate(plate), "image")
            results.append(_check(f"retarded-on-surface-image-{plate.value}", full.ratio, expected, 0.03))
        return results

    def check_nonretarded_on_surface(self) -> List[CheckResult]:
        results = []
        l = 1e-3
        limit_geom = PlanarGeometry.parallel(l=l, z=1e-16)
        image_geom = PlanarGeometry.parallel(l=l, z=0.5e-3 * l)
        for plate, expected in ((PlateKind.CONDUCTING, 2.0 / 3.0), (PlateKind.PERMEABLE, 10.0 / 3.0)):
            closed = self.closed_forms.perfect_nonretarded_closed(limit_geom, self.pair, plate)
            results.append(_check(f"nonretarded-on-surface-closed-{plate.value}", closed.ratio, expected, 1e-12))
            full = self.potentials.u_total(image_geom, self.pair, HalfSpaceMedium.perfect_plate(plate), "image")
            results.append(_check(f"nonretarded-on-surface-image-{plate.value}", full.ratio, expected, 0.05))
        return results

    def check_thresholds(self) -> List[CheckResult]:
        analytic = 1.0 + 2.0 / (1.5 ** (1.0 / 3.0) - 1.0)
        return [
            _check("threshold-retarded-conducting", self.thresholds.threshold(
                ThresholdCase.RETARDED_CONDUCTING_VERTICAL), 4.90, 0.01, relative=False),
            _check("threshold-nonretarded-permeable", self.thresholds.threshold(
                ThresholdCase.NONRETARDED_PERMEABLE_VERTICAL), analytic, 0.01, relative=False),
        ]

    def check_weighted_integrals(self) -> List[CheckResult]:
        worst = 0.0
        for name in ("A3+", "A4+", "A5+", "A3-", "A4-", "A5-", "B3", "B4", "B5"):
            key = WeightedIntegralKey.parse(name)
            for lam in (0.5, 1.0, 2.0):
                # undamped size k!/lam^(k+1) normalizes the comparison where the value vanishes
                size = math.factorial(key.order) / lam ** (key.order + 1)
                spec = QuadSpec(rel_tol=1e-10, abs_tol=1e-10 * size)
                for zeta in (0.0, 0.5, 1.0):
                    closed = weighted_AB(key, lam, zeta)
                    numeric = weighted_AB_quadrature(key, lam, zeta, self.integrator, spec)
                    worst = max(worst, abs(closed - numeric) / size)
        return [_check("weighted-integrals", worst, 0.0, 1e-8, relative=False)]

    def check_image_signs(self) -> List[CheckResult]:
        return self.imaging.verify_against_closed_forms().checks

    # -- full-quadrature checks ------------------------------------------

    def check_sommerfeld_limits(self) -> List[CheckResult]:
        results = []
        retarded = PlanarGeometry.vertical(z_a=0.1, l=99.9)
        for plate, expected in ((PlateKind.CONDUCTING, 40.0 / 23.0), (PlateKind.PERMEABLE, 52.0 / 23.0)):
            full = self.potentials.u_total(retarded, self.pair, HalfSpaceMedium.perfect_plate(plate), "sommerfeld")
            results.append(_check(f"retarded-on-surface-sommerfeld-{plate.value}", full.ratio, expected, 0.03))

        geom = PlanarGeometry.parallel(l=1e-3, z=0.5e-4)
        for plate in PlateKind:
            full = self.potentials.u_total(geom, self.pair, HalfSpaceMedium.perfect_plate(plate), "sommerfeld")
            closed = self.closed_forms.perfect_nonretarded_closed(geom, self.pair, plate)
            results.append(_check(f"nonretarded-parallel-sommerfeld-{plate.value}", full.ratio, closed.ratio, 0.05))
        return results

    def check_trace_oracle(self) -> List[CheckResult]:
        green = self.potentials.green_service
        spec = QuadSpec(rel_tol=1e-11, abs_tol=1e-300)
        worst = 0.0
        geometries = [
            PlanarGeometry(0.0, 0.1, 0.0, 0.3),
            PlanarGeometry(0.0, 0.2, 0.1, 0.2),
            PlanarGeometry(0.0, 0.1, 0.2, 0.4),
            PlanarGeometry(0.0, 0.5, 0.3, 0.2),
            PlanarGeometry(0.0, 1.0, 0.5, 1.5),
        ]
        for geom in geometries:
            for u in (0.1, 0.5, 1.0, 3.0, 10.0):
                g1 = green.halfspace_scattering(geom, u, REFERENCE_DIELECTRIC, spec)
                trace = u1_trace_integrand(u, geom, self.pair, g1)
                explicit = self.integrator.integrate_panels(
                    lambda q: u1_explicit_integrand(u, q, geom, self.pair, REFERENCE_DIELECTRIC),
                    spec, feature=u, decay_length=geom.z_plus, frequency=abs(geom.X),
                ).value
                worst = max(worst, abs(explicit - trace) / abs(trace))
        results = [_check("u1-trace-oracle", worst, 0.0, 1e-8, relative=False)]

        worst = 0.0
        for geom in (PlanarGeometry.vertical(z_a=0.3, l=0.4), PlanarGeometry.vertical(z_a=0.1, l=0.3)):
            scale = 1.0 / geom.z_plus
            for u in (0.5, 2.0):
                trace = u2_trace_integrand(u, self.pair, green.halfspace_scattering(geom, u, REFERENCE_DIELECTRIC, spec))
                double = self.integrator.integrate_2d(
                    lambda q, q_p: u2_explicit_integrand(u, q, q_p, geom, self.pair, REFERENCE_DIELECTRIC),
                    QuadSpec(rel_tol=1e-7), scales=(scale, scale),
                ).value
                worst = max(worst, abs(double - trace) / abs(trace))
        results.append(_check("u2-trace-oracle", worst, 0.0, 1e-5, relative=False))
        return results

    def check_far_plate(self) -> List[CheckResult]:
        geom = PlanarGeometry.parallel(l=0.01, z=1.0)
        return [
            _check(f"far-plate-{name}", self.potentials.u_total(geom, self.pair, medium).ratio, 1.0, 0.01)
            for name, medium in (("dielectric", REFERENCE_DIELECTRIC), ("magnetic", REFERENCE_MAGNETIC))
        ]

    def check_nonretarded_media(self) -> List[CheckResult]:
        geom = PlanarGeometry.parallel(l=1e-3, z=1e-3)
        electric_full = self.potentials.u_total(geom, self.pair, REFERENCE_DIELECTRIC)
        electric_closed = self.closed_forms.nonretarded_electric_closed(geom, self.pair, REFERENCE_DIELECTRIC)
        magnetic_full = self.potentials.u_total(geom, self.pair, REFERENCE_MAGNETIC)
        magnetic_closed = self.closed_forms.nonretarded_magnetic_closed(geom, self.pair, REFERENCE_MAGNETIC)
        return [
            _check("nonretarded-dielectric", electric_full.total, electric_closed.total, 0.02),
            _check("nonretarded-dielectric-correction", electric_full.u1 + electric_full.u2,
                   electric_closed.u1 + electric_closed.u2, 0.02),
            _check("nonretarded-magnetic", magnetic_full.total, magnetic_closed.total, 0.02),
            _check("nonretarded-magnetic-correction", magnetic_full.u1, magnetic_closed.u1, 0.03),
        ]

    def check_ratio_shapes(self) -> List[CheckResult]:
        def ratio(geom: PlanarGeometry, medium: HalfSpaceMedium) -> float:
            return self.potentials.u_total(geom, self.pair, medium).ratio

        diel_par = [ratio(PlanarGeometry.parallel(l=l, z=0.01), REFERENCE_DIELECTRIC) for l in (1e-3, 0.1, 3.0)]
        mag_par = [ratio(PlanarGeometry.parallel(l=l, z=0.01), REFERENCE_MAGNETIC) for l in (0.1, 1.0)]
        diel_ver = [ratio(PlanarGeometry.vertical(z_a=0.01, l=l), REFERENCE_DIELECTRIC) for l in (0.05, 0.3, 30.0)]
        mag_ver = [ratio(PlanarGeometry.vertical(z_a=0.01, l=l), REFERENCE_MAGNETIC) for l in (0.01, 10.0)]
        return [
            _flag("dielectric-parallel-minimum",
                  diel_par[1] < diel_par[0] < 1.0 and diel_par[2] > diel_par[1],
                  f"ratios {np.round(diel_par, 6).tolist()}"),
            _flag("magnetic-parallel-enhanced",
                  1.0 < mag_par[0] < mag_par[1], f"ratios {np.round(mag_par, 9).tolist()}"),
            _flag("dielectric-vertical-maximum",
                  1.0 < diel_ver[0] < diel_ver[1] and diel_ver[2] < diel_ver[1],
                  f"ratios {np.round(diel_ver, 6).tolist()}"),
            _flag("magnetic-vertical-small-l-dip",
                  mag_ver[0] < 1.0 < mag_ver[1], f"ratios {np.round(mag_ver, 9).tolist()}"),
        ]
