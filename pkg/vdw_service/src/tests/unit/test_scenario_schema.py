import json

import numpy as np
import pytest

from src.api.schemas.scenario_schema import (
    GeometrySpec,
    ScenarioConfig,
    SweepSpec,
    apply_overrides,
    load_scenario,
    parse_scenario,
)
from src.domain.entities.media import MediumKind, PlateKind
from src.utils.exceptions import ConfigError


def test_defaults():
    config = ScenarioConfig()

    assert config.pair().is_electric_pair()
    assert config.medium.eps.omega_p == 3.0
    assert config.sweep.values()[0] == pytest.approx(1e-3)
    assert config.output.format == "csv"
    assert config.rel_tol is None


def test_default_medium_without_response_is_rejected():
    with pytest.raises(ConfigError, match="halfspace medium needs"):
        parse_scenario({"medium": {"type": "halfspace"}})


def test_validation_message_names_field():
    with pytest.raises(ConfigError) as exc:
        parse_scenario({"medium": {"type": "free"}, "atoms": [{"omega10": -1.0}, {}]})

    assert "atoms.0.omega10" in exc.value.message


def test_magnetic_atom_a_rejected():
    with pytest.raises(ConfigError, match="atom A must be electric"):
        parse_scenario({"medium": {"type": "free"}, "atoms": [{"kind": "magnetic"}, {}]})


def test_eps_on_perfect_plate_rejected():
    with pytest.raises(ConfigError):
        parse_scenario({"medium": {"type": "perfect", "eps": {"omega_p": 3.0}}})


def test_medium_entities():
    free = parse_scenario({"medium": {"type": "free"}})
    perfect = parse_scenario({"medium": {"type": "perfect", "plate": "permeable"}})
    both = parse_scenario({"medium": {"eps": {"omega_p": 2.0}, "mu": {"omega_p": 1.0}}})

    assert free.medium.is_free
    assert free.medium.to_entity() is None
    assert perfect.medium.to_entity().perfect == PlateKind.PERMEABLE
    medium = both.medium.to_entity()
    assert medium.eps.kind == MediumKind.ELECTRIC
    assert medium.mu.kind == MediumKind.MAGNETIC
    assert medium.static_eps == pytest.approx(5.0)


def test_geometry_families():
    parallel = GeometrySpec(family="parallel").at(l=2.0, z=0.5)
    vertical = GeometrySpec(family="vertical").at(l=2.0, z=0.5)
    tilted = GeometrySpec(family="general", theta=60.0).at(l=2.0, z=0.5)

    assert (parallel.X, parallel.Z) == (2.0, 0.0)
    assert (vertical.X, vertical.Z) == (0.0, 2.0)
    assert tilted.X == pytest.approx(np.sqrt(3.0))
    assert tilted.Z == pytest.approx(1.0)
    assert tilted.l == pytest.approx(2.0)


def test_geometry_at_follows_sweep_variable():
    config = parse_scenario({
        "medium": {"type": "free"},
        "geometry": {"family": "vertical", "z": 0.1, "l": 3.0},
        "sweep": {"variable": "z"},
    })

    geom = config.geometry_at(0.25)

    assert geom.z_a == 0.25
    assert geom.l == pytest.approx(3.0)


def test_sweep_values():
    assert np.allclose(SweepSpec(start=1.0, stop=100.0, points=3).values(), [1.0, 10.0, 100.0])
    assert np.allclose(SweepSpec(start=1.0, stop=3.0, points=3, log=False).values(), [1.0, 2.0, 3.0])
    assert SweepSpec(start=2.0, points=1).values().tolist() == [2.0]


def test_load_scenario_reports_json_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "method": "image",\n  "forces": tru\n}\n')

    with pytest.raises(ConfigError, match="line 3"):
        load_scenario(str(path))


def test_load_scenario_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read config"):
        load_scenario(str(tmp_path / "absent.json"))


def test_load_scenario_requires_object(tmp_path):
    path = tmp_path / "list.json"
    path.write_text("[1, 2]")

    with pytest.raises(ConfigError, match="JSON object"):
        load_scenario(str(path))


def test_overrides_take_precedence(tmp_path):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps({
        "medium": {"type": "perfect"},
        "sweep": {"points": 40, "log": True},
        "rel_tol": 1e-6,
    }))
    config = load_scenario(str(path))

    overridden = apply_overrides(config, points=5, log=False, output="out.json", fmt="json")
    flagged = apply_overrides(config, rel_tol=1e-9)

    assert overridden.sweep.points == 5
    assert overridden.sweep.log is False
    assert overridden.output.path == "out.json"
    assert overridden.output.format == "json"
    assert overridden.rel_tol == 1e-6
    assert flagged.rel_tol == 1e-9


def test_settings_default_fills_rel_tol():
    config = apply_overrides(parse_scenario({"medium": {"type": "free"}}), default_rel_tol=1e-7)

    assert config.rel_tol == 1e-7


def test_effective_config_round_trips():
    config = parse_scenario({
        "atoms": [{"omega10": 2.0}, {"kind": "magnetic"}],
        "medium": {"type": "free"},
        "sweep": {"start": 0.1, "stop": 1.0, "points": 4},
    })

    again = parse_scenario(json.loads(json.dumps(config.effective())))

    assert again == config
    assert again.pair().is_mixed_pair()
