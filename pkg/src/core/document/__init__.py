from .error import DocumentError, LoadingError, ValidationError
from .loader import DocumentLoader
from .matcher import EnvMatcher

__all__ = [
    "DocumentError",
    "DocumentLoader",
    "EnvMatcher",
    "LoadingError",
    "ValidationError",
]
