import logging
from typing import Sequence

from opentelemetry.sdk.trace import ReadableSpan
from opentelemetry.sdk.trace.export import SpanExporter, SpanExportResult


class ConsoleSpanLogExporter(SpanExporter):
    """Writes every finished span as a log line instead of shipping it anywhere."""

    def __init__(self, logger: logging.Logger | None = None):
        self._logger = logger or logging.getLogger("telemetry.spans")

    def export(self, spans: Sequence[ReadableSpan]) -> SpanExportResult:
        for span in spans:
            duration_ms = None
            if span.start_time is not None and span.end_time is not None:
                duration_ms = (span.end_time - span.start_time) / 1e6

            self._logger.info(
                f"span {span.name} finished",
                extra={
                    "context": {
                        "trace_id": format(span.context.trace_id, "032x"),
                        "duration_ms": duration_ms,
                        "attributes": dict(span.attributes or {}),
                    }
                },
            )
        return SpanExportResult.SUCCESS

    def shutdown(self) -> None:
        pass
