from pydantic import Field

from core.schema import CustomBaseModel


class PlotRow(CustomBaseModel):
    x: float
    y: float
    series: str


class Report(CustomBaseModel):
    """
    Outcome of one verification.

    ``passed`` serializes as ``pass``; plot series stay out of the JSON record
    and are written separately as CSV.
    """

    name: str
    quantities: dict[str, float]
    tolerance: float
    passed: bool = Field(alias="pass")
    pitch: float | None = None
    nodes: int | None = None
    seed: int | None = None
    notes: list[str] = Field(default_factory=list)
    series: list[PlotRow] = Field(default_factory=list, exclude=True)

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True)
