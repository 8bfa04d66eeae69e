import numpy as np
import pytest

from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.media import HalfSpaceMedium, PlateKind
from src.domain.services.forces import ee_force_bracket, em_force_bracket
from src.utils.exceptions import DomainError


def test_force_brackets_at_origin():
    assert ee_force_bracket(0.0) == 9.0
    assert em_force_bracket(0.0) == 2.0


def test_force_brackets_decay():
    assert ee_force_bracket(50.0) < 1e-30
    assert em_force_bracket(50.0) < 1e-30


def test_ee_force_nonretarded_limit(forces, potentials, pair):
    l = 1e-3
    c6 = potentials.asymptotic_coefficients(pair).c6

    assert forces.free_space_force(l, pair) == pytest.approx(-6.0 * c6 / l ** 7, rel=0.01)


def test_em_force_nonretarded_limit(forces, potentials, mixed_pair):
    l = 1e-3
    c4 = potentials.asymptotic_coefficients(mixed_pair).c4

    force = forces.free_space_force(l, mixed_pair)

    assert force > 0
    assert force == pytest.approx(4.0 * c4 / l ** 5, rel=0.01)


@pytest.mark.parametrize("l", [0.1, 1.0, 10.0])
def test_force_is_minus_potential_gradient(forces, potentials, pair, l):
    h = 1e-4 * l

    gradient = (potentials.u0_ee(l + h, pair) - potentials.u0_ee(l - h, pair)) / (2.0 * h)

    assert forces.free_space_force(l, pair) == pytest.approx(-gradient, rel=1e-3)


def test_force_rejects_separation(forces, pair):
    with pytest.raises(DomainError):
        forces.free_space_force(0.0, pair)


def test_free_space_force_pair_is_antisymmetric(forces, pair):
    geom = PlanarGeometry(0.0, 1.0, 0.3, 1.4)

    result = forces.free_space_force_pair(geom, pair)

    np.testing.assert_allclose(result.f_on_a, -result.f_on_b)
    assert result.f_on_b[0] / result.f_on_b[2] == pytest.approx(0.3 / 0.4)
    assert np.linalg.norm(result.f_on_b) == pytest.approx(abs(forces.free_space_force(0.5, pair)))
    assert result.asymmetry == pytest.approx(0.0, abs=1e-15)


def test_far_plate_recovers_free_space_forces(forces, pair):
    geom = PlanarGeometry.parallel(l=1.0, z=100.0)
    free = forces.free_space_force(1.0, pair)

    result = forces.halfspace_forces(geom, pair, HalfSpaceMedium.perfect_plate(PlateKind.CONDUCTING))

    assert result.f_on_b[0] == pytest.approx(free, rel=1e-3)
    assert result.f_on_a[0] == pytest.approx(-free, rel=1e-3)
    assert result.f_on_a[1] == 0.0
    assert result.f_on_b[1] == 0.0
    assert abs(result.f_on_b[2]) < 1e-3 * abs(free)


def test_near_plate_forces_are_not_opposite(forces, pair):
    geom = PlanarGeometry.vertical(z_a=0.1, l=0.2)

    result = forces.halfspace_forces(geom, pair, HalfSpaceMedium.perfect_plate(PlateKind.CONDUCTING))

    assert result.asymmetry > 1e-3 * np.linalg.norm(result.f_on_b)
    assert set(result.as_dict()) == {"F_on_A_x", "F_on_A_z", "F_on_B_x", "F_on_B_z"}


def test_step_reaching_surface_is_rejected(forces, pair):
    geom = PlanarGeometry.parallel(l=1.0, z=0.5)

    with pytest.raises(DomainError):
        forces.halfspace_forces(geom, pair, HalfSpaceMedium.perfect_plate(), step=1.0)
