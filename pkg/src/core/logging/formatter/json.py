import json
import logging
from datetime import datetime, timezone

from opentelemetry import trace


class JsonLogFormatter(logging.Formatter):
    """One JSON object per record, tagged with the active span when there is one."""

    def __init__(self, environment: str | None = None):
        super().__init__()
        self._environment = environment

    def format(self, record: logging.LogRecord) -> str:
        log_entry = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "message": record.getMessage(),
            "logger": record.name,
        }

        if self._environment is not None:
            log_entry["environment"] = self._environment

        context = getattr(record, "context", None)
        if isinstance(context, dict):
            log_entry["context"] = context

        span_context = trace.get_current_span().get_span_context()
        if span_context.is_valid:
            log_entry["trace_id"] = format(span_context.trace_id, "032x")
            log_entry["span_id"] = format(span_context.span_id, "016x")

        if record.exc_info:
            log_entry["exc_info"] = self.formatException(record.exc_info)

        return json.dumps(log_entry, default=str, ensure_ascii=False)
