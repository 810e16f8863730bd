from pydantic import BaseModel, ConfigDict


class CustomBaseModel(BaseModel):
    """Immutable value model shared by every schema in the package."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)
