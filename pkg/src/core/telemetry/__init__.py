from .util import setup_tracing

__all__ = ["setup_tracing"]