from functools import partial

import numpy as np
import pandas as pd

from src.api.schemas.scenario_schema import ScenarioConfig
from src.domain.entities.atoms import AtomPair
from src.domain.entities.potential import AsymptoticCoefficients
from src.domain.services.forces import ForceService
from src.domain.services.potentials import PotentialService, log_slope
from src.domain.services.sweep import SweepService
from src.infrastructure.output.writers import build_frame
from src.utils.exceptions import ConfigError
from src.utils.logger import setup_logger

logger = setup_logger(__name__)

COLUMNS = ["l", "U", "U_retarded_asymptote", "U_nonretarded_asymptote", "force", "slope"]


def asymptotes(l: float, pair: AtomPair, coeffs: AsymptoticCoefficients) -> tuple:
    if pair.is_mixed_pair():
        return coeffs.c7_em / l ** 7, coeffs.c4 / l ** 4
    return -coeffs.c7_ee / l ** 7, -coeffs.c6 / l ** 6


def free_space_point(l: float, potentials: PotentialService, forces: ForceService,
                     pair: AtomPair, coeffs: AsymptoticCoefficients) -> dict:
    retarded, nonretarded = asymptotes(l, pair, coeffs)
    return {
        "l": l,
        "U": potentials.u0(l, pair),
        "U_retarded_asymptote": retarded,
        "U_nonretarded_asymptote": nonretarded,
        "force": forces.free_space_force(l, pair),
    }


def with_slope(frame: pd.DataFrame) -> pd.DataFrame:
    """Local exponent of |U| over the rows that evaluated cleanly."""
    frame = frame.copy()
    frame["slope"] = np.nan
    ok = frame["error"].eq("") & frame["U"].notna() & frame["U"].ne(0.0)
    if ok.sum() >= 2:
        frame.loc[ok, "slope"] = log_slope(frame.loc[ok, "l"].to_numpy(), frame.loc[ok, "U"].to_numpy())
    return frame


def free_space(config: ScenarioConfig, potentials: PotentialService, forces: ForceService,
               sweep: SweepService) -> pd.DataFrame:
    if config.sweep.variable != "l":
        raise ConfigError("free-space sweeps run over the separation l")
    pair = config.pair()
    coeffs = potentials.asymptotic_coefficients(pair)

    fn = partial(free_space_point, potentials=potentials, forces=forces, pair=pair, coeffs=coeffs)
    rows = sweep.run(fn, config.sweep.values(), key="l")
    frame = with_slope(build_frame(rows, COLUMNS))
    logger.info({"command": "free-space", "rows": len(frame), "pair": "em" if pair.is_mixed_pair() else "ee"})
    return frame
