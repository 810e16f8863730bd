from typing import Any


class DocumentError(Exception):
    """
    Base class for document loading errors.

    Subclasses set ``msg_template``; keyword context fills it in.
    """

    msg_template: str = "Document error"

    def __init__(self, origin: Exception | None = None, **context: Any) -> None:
        self.origin = origin
        self.context = context or None
        super().__init__()

    def __str__(self) -> str:
        return self.msg_template.format(**self.context or {})


class LoadingError(DocumentError):
    """Reading or parsing a YAML/JSON document failed."""

    msg_template = "Loading document failed: {reason}"


class ValidationError(DocumentError):
    """The parsed document does not satisfy its schema."""

    msg_template = "Validation failed: {reason}"
