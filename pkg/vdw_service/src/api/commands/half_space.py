from functools import partial

import pandas as pd

from src.api.schemas.scenario_schema import ScenarioConfig
from src.domain.entities.atoms import AtomPair
from src.domain.entities.media import HalfSpaceMedium
from src.domain.services.forces import ForceService
from src.domain.services.potentials import PotentialService
from src.domain.services.sweep import SweepService
from src.infrastructure.output.writers import build_frame
from src.utils.exceptions import ConfigError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

COLUMNS = [
    "l", "z_A", "z_B", "U0", "U1", "U2", "U", "ratio", "error_estimate",
    "F_on_A_x", "F_on_A_z", "F_on_B_x", "F_on_B_z",
]


def half_space_point(value: float, config: ScenarioConfig, potentials: PotentialService,
                     forces: ForceService, pair: AtomPair, medium: HalfSpaceMedium) -> dict:
    geom = config.geometry_at(value)
    breakdown = potentials.u_total(geom, pair, medium, method=config.method)
    row = {"l": geom.l, "z_A": geom.z_a, "z_B": geom.z_b, **breakdown.as_dict(),
           "error_estimate": breakdown.error_estimate}
    if config.forces:
        row.update(forces.halfspace_forces(geom, pair, medium, method=config.method).as_dict())
    return row


def half_space(config: ScenarioConfig, potentials: PotentialService, forces: ForceService,
               sweep: SweepService) -> pd.DataFrame:
    medium = config.medium.to_entity()
    if medium is None:
        raise ConfigError("half-space needs a perfect or halfspace medium; use free-space otherwise")
    pair = config.pair()
    pair.require_electric("half-space")

    fn = partial(half_space_point, config=config, potentials=potentials, forces=forces, pair=pair, medium=medium)
    # a z sweep moves atom A, so failed rows are keyed by its height
    key = "l" if config.sweep.variable == "l" else "z_A"
    frame = build_frame(sweep.run(fn, config.sweep.values(), key=key), COLUMNS)
    logger.info({"command": "half-space", "rows": len(frame), "medium": config.medium.type,
                 "family": config.geometry.family})
    return frame
