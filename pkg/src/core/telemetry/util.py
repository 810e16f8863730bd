import logging

from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import SimpleSpanProcessor

from config import SERVICE_NAME
from .export import ConsoleSpanLogExporter

_logger = logging.getLogger(__name__)
_provider: TracerProvider | None = None


def setup_tracing(service_name: str = SERVICE_NAME) -> TracerProvider:
    """Install an SDK tracer provider that logs finished spans.

    Idempotent: the global provider can only be set once per process, so
    later calls return the provider installed by the first one.
    """
    global _provider

    if _provider is not None:
        return _provider

    resource = Resource.create(attributes={"service.name": service_name})
    provider = TracerProvider(resource=resource)
    provider.add_span_processor(SimpleSpanProcessor(ConsoleSpanLogExporter()))
    trace.set_tracer_provider(provider)

    _provider = provider
    _logger.info(f"Tracing enabled for service {service_name}")
    return provider
