import os

from pydantic import Field, field_validator, model_validator

from config import DEFAULT_PITCH, DEFAULT_SEED
from core.document import DocumentLoader
from core.schema import CustomBaseModel
from module.domain import DomainSpec, Polarizer
from module.hypgeo import Geodesic, Side
from .enums import RunCommand

MIN_PITCH = 1e-4
MAX_PITCH = 0.2

_NEEDS_POLARIZER = {RunCommand.POLARIZE, RunCommand.FK, RunCommand.RIESZ}
_SWEEPS = {RunCommand.FK, RunCommand.RIESZ}


def _check_writable(path: str) -> None:
    target = os.path.dirname(os.path.abspath(path))
    while not os.path.exists(target):
        parent = os.path.dirname(target)
        if parent == target:
            break
        target = parent
    if not os.access(target, os.W_OK):
        raise ValueError(f"Path '{path}' is not writable")


class RunConfig(CustomBaseModel):
    """
    One experiment invocation, as given on the command line or in a run file.

    ``domain`` is an inline DomainSpec or the path of a domain document;
    ``geodesic`` is a mapping or the ``diam:<theta>`` / ``arc:<theta>:<a>``
    grammar. ``random`` turns fk and riesz into seeded sweeps over that many
    random instances.
    """

    command: RunCommand
    domain: DomainSpec | None = None
    geodesic: Geodesic | None = None
    side: Side = Side.POSITIVE
    pitches: list[float] = Field(default_factory=lambda: [DEFAULT_PITCH], min_length=1)
    seed: int = DEFAULT_SEED
    random: int | None = Field(default=None, ge=1)

    z: complex = 0j
    r: float = 0.1
    radii: list[float] = Field(default_factory=lambda: [0.7, 0.9, 0.99, 0.999])
    trials: int = Field(default=100, ge=1)
    count: int = Field(default=5, ge=1)
    radius: float = Field(default=0.5, alias="R")
    ns: list[int] = Field(default_factory=lambda: [128, 256, 512], min_length=1)
    n: int = 512

    output: str | None = None
    csv: str | None = None
    dump: str | None = None

    @field_validator("domain", mode="before")
    @classmethod
    def _load_domain(cls, value):
        if isinstance(value, str):
            return DocumentLoader(value, schema=DomainSpec).load()
        return value

    @field_validator("geodesic", mode="before")
    @classmethod
    def _parse_geodesic(cls, value):
        if isinstance(value, str):
            return Geodesic.parse(value)
        return value

    @field_validator("side")
    @classmethod
    def _open_side(cls, value: Side) -> Side:
        if value == Side.ON:
            raise ValueError("Polarizer side must be pos or neg")
        return value

    @field_validator("pitches")
    @classmethod
    def _pitch_range(cls, value: list[float]) -> list[float]:
        for pitch in value:
            if not MIN_PITCH < pitch < MAX_PITCH:
                raise ValueError(f"Pitch must lie in ({MIN_PITCH}, {MAX_PITCH}), got {pitch!r}")
        return value

    @model_validator(mode="after")
    def _check_inputs(self) -> "RunConfig":
        sweep = self.command in _SWEEPS and self.random is not None
        if self.command != RunCommand.ORACLE and self.domain is None and not sweep:
            raise ValueError(f"Command '{self.command.value}' requires a domain")
        if self.command in _NEEDS_POLARIZER and self.geodesic is None and not sweep:
            raise ValueError(f"Command '{self.command.value}' requires a geodesic")

        for path in (self.output, self.csv, self.dump):
            if path is not None:
                _check_writable(path)
        return self

    @property
    def pitch(self) -> float:
        return self.pitches[0]

    @property
    def polarizer(self) -> Polarizer:
        return Polarizer(geodesic=self.geodesic, side=self.side)
