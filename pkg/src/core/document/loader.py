from typing import IO, Any, Type

import yaml
from pydantic import BaseModel

from .error import LoadingError, ValidationError
from .matcher import EnvMatcher


class DocumentLoader:
    """
    Loads a YAML or JSON document (JSON being a YAML subset) from a path
    or an open stream and optionally validates it against a pydantic model.
    """

    def __init__(
        self,
        source: str | IO[str],
        *,
        schema: Type[BaseModel] | None = None,
        matcher: Type[yaml.SafeLoader] = EnvMatcher,
    ) -> None:
        self.source = source
        self.schema = schema
        self.matcher = matcher

    def load(self) -> Any:
        """
        Return the parsed document, or a ``schema`` instance when a schema is set.

        Raises:
            LoadingError: file missing or not parseable.
            ValidationError: parsed data rejected by the schema.
        """
        data = self._read()

        if self.schema is None:
            return data

        if not isinstance(data, dict):
            raise ValidationError(reason=f"expected a mapping, got {type(data).__name__}")

        try:
            return self.schema.model_validate(data)
        except Exception as e:
            raise ValidationError(origin=e, reason=str(e))

    def _read(self) -> Any:
        try:
            if isinstance(self.source, str):
                with open(self.source) as fh:
                    return yaml.load(fh, Loader=self.matcher)
            return yaml.load(self.source, Loader=self.matcher)
        except (yaml.YAMLError, OSError) as e:
            raise LoadingError(origin=e, reason=str(e))
