from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", case_sensitive=True)

    SERVICE_NAME: str = "vdw-service"
    LOG_LEVEL: str = "INFO"

    # Quadrature
    QUAD_REL_TOL: float = 1e-8
    QUAD_ABS_TOL: float = 1e-14
    QUAD_MAX_SUBDIVISIONS: int = 200
    QUAD_NEST_FACTOR: float = 10.0
    # error estimates up to this multiple of the tolerance are logged, not raised
    QUAD_SOFT_FAILURE_FACTOR: float = 100.0
    PANEL_MAX_ROUNDS: int = 12
    Q_CUTOFF_DECAY: float = 50.0
    M_NU_CUTOFF: float = 40.0

    # Regime guards (dimensionless omega * length)
    RETARDED_GUARD: float = 50.0
    NONRETARDED_GUARD: float = 0.02
    M0_CLOSED_FORM_RATIO: float = 0.05
    MAGNETIC_MU_LIMIT: float = 1e3

    FD_RELATIVE_STEP: float = 1e-3
    THRESHOLD_XTOL: float = 1e-6

    MAX_WORKERS: int = 1


@lru_cache()
def get_settings():
    return Settings()
