import json
import math
from typing import List, Literal, Optional

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.domain.entities.atoms import AtomKind, AtomPair, ResonanceAtom
from src.domain.entities.geometry import PlanarGeometry
from src.domain.entities.media import HalfSpaceMedium, LorentzMedium, MediumKind, PlateKind
from src.utils.exceptions import ConfigError


class AtomSpec(BaseModel):
    omega10: float = Field(1.0, gt=0, description="transition frequency, units of the reference omega_10")
    alpha0: float = Field(1.0, gt=0, description="static polarizability or magnetizability")
    kind: AtomKind = AtomKind.ELECTRIC

    def to_entity(self) -> ResonanceAtom:
        return ResonanceAtom(omega10=self.omega10, alpha0=self.alpha0, kind=self.kind)


class LorentzSpec(BaseModel):
    omega_p: float = Field(3.0, ge=0)
    omega_t: float = Field(1.0, gt=0)
    gamma: float = Field(0.001, ge=0)


class MediumSpec(BaseModel):
    """`free` means no surface at all; `perfect` a perfect reflector;
    `halfspace` a Lorentz-type eps and/or mu."""

    type: Literal["free", "perfect", "halfspace"] = "halfspace"
    plate: PlateKind = PlateKind.CONDUCTING
    eps: Optional[LorentzSpec] = None
    mu: Optional[LorentzSpec] = None

    @model_validator(mode="after")
    def check_response(self):
        if self.type == "halfspace" and self.eps is None and self.mu is None:
            raise ValueError("a halfspace medium needs eps, mu or both")
        if self.type != "halfspace" and (self.eps is not None or self.mu is not None):
            raise ValueError(f"eps/mu are only meaningful for a halfspace medium, not {self.type!r}")
        return self

    @property
    def is_free(self) -> bool:
        return self.type == "free"

    def to_entity(self) -> Optional[HalfSpaceMedium]:
        if self.type == "free":
            return None
        if self.type == "perfect":
            return HalfSpaceMedium.perfect_plate(self.plate)
        eps = LorentzMedium(self.eps.omega_p, self.eps.omega_t, self.eps.gamma, MediumKind.ELECTRIC) \
            if self.eps else None
        mu = LorentzMedium(self.mu.omega_p, self.mu.omega_t, self.mu.gamma, MediumKind.MAGNETIC) \
            if self.mu else None
        return HalfSpaceMedium(eps=eps, mu=mu)


class GeometrySpec(BaseModel):
    """Atom A sits at height `z`; B sits a distance `l` away along the
    direction `theta` (degrees from the surface normal). `parallel` and
    `vertical` fix theta to 90 and 0."""

    family: Literal["parallel", "vertical", "general"] = "parallel"
    z: float = Field(0.01, gt=0, description="height of atom A above the surface")
    l: float = Field(1.0, gt=0, description="separation used when the sweep runs over z")
    theta: float = Field(90.0, ge=0, le=180)

    def at(self, l: float, z: float) -> PlanarGeometry:
        if self.family == "parallel":
            return PlanarGeometry.parallel(l=l, z=z)
        if self.family == "vertical":
            return PlanarGeometry.vertical(z_a=z, l=l)
        angle = math.radians(self.theta)
        return PlanarGeometry(0.0, z, l * math.sin(angle), z + l * math.cos(angle))


class SweepSpec(BaseModel):
    variable: Literal["l", "z"] = "l"
    start: float = Field(1e-3, gt=0)
    stop: float = Field(10.0, gt=0)
    points: int = Field(25, ge=1)
    log: bool = True

    def values(self) -> np.ndarray:
        if self.points == 1:
            return np.array([self.start])
        if self.log:
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


class OutputSpec(BaseModel):
    path: Optional[str] = None
    format: Literal["csv", "json"] = "csv"


class ScenarioConfig(BaseModel):
    atoms: List[AtomSpec] = Field(default_factory=lambda: [AtomSpec(), AtomSpec()], min_length=2, max_length=2)
    medium: MediumSpec = Field(default_factory=lambda: MediumSpec(eps=LorentzSpec()))
    geometry: GeometrySpec = Field(default_factory=GeometrySpec)
    sweep: SweepSpec = Field(default_factory=SweepSpec)
    output: OutputSpec = Field(default_factory=OutputSpec)
    method: Literal["auto", "sommerfeld", "image"] = "auto"
    forces: bool = True
    rel_tol: Optional[float] = Field(None, gt=0)

    @field_validator("atoms")
    @classmethod
    def check_atom_a_electric(cls, atoms: List[AtomSpec]) -> List[AtomSpec]:
        if atoms[0].kind != AtomKind.ELECTRIC:
            raise ValueError("atom A must be electric; a magnetic atom goes in position B")
        return atoms

    def pair(self) -> AtomPair:
        return AtomPair(self.atoms[0].to_entity(), self.atoms[1].to_entity())

    def geometry_at(self, value: float) -> PlanarGeometry:
        if self.sweep.variable == "l":
            return self.geometry.at(l=value, z=self.geometry.z)
        return self.geometry.at(l=self.geometry.l, z=value)

    def effective(self) -> dict:
        return self.model_dump(mode="json")


def _describe(exc: ValidationError) -> str:
    problems = []
    for err in exc.errors():
        path = ".".join(str(part) for part in err["loc"]) or "<root>"
        problems.append(f"{path}: {err['msg']}")
    return "; ".join(problems)


def parse_scenario(data: dict) -> ScenarioConfig:
    try:
        return ScenarioConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"invalid scenario: {_describe(exc)}")


def load_scenario(path: Optional[str]) -> ScenarioConfig:
    if path is None:
        return ScenarioConfig()
    try:
        with open(path) as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return parse_scenario(data)


def apply_overrides(config: ScenarioConfig, rel_tol: Optional[float] = None, points: Optional[int] = None,
                    log: Optional[bool] = None, output: Optional[str] = None,
                    fmt: Optional[str] = None, default_rel_tol: float = 1e-8) -> ScenarioConfig:
    """Flags win over file values; the file wins over settings."""
    data = config.effective()
    if points is not None:
        data["sweep"]["points"] = points
    if log is not None:
        data["sweep"]["log"] = log
    if output is not None:
        data["output"]["path"] = output
    if fmt is not None:
        data["output"]["format"] = fmt
    data["rel_tol"] = rel_tol if rel_tol is not None else (config.rel_tol or default_rel_tol)
    return parse_scenario(data)
