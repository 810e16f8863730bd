import json
import logging
import sys

from opentelemetry.sdk.trace import TracerProvider

from core.logging.formatter import JsonLogFormatter


def make_record(msg="hello", level=logging.INFO, **extra):
    record = logging.LogRecord("hyperlog.test", level, __file__, 1, msg, None, None)
    for key, value in extra.items():
        setattr(record, key, value)
    return record


class TestJsonLogFormatter:
    def test_emits_core_fields(self):
        entry = json.loads(JsonLogFormatter().format(make_record()))

        assert entry["message"] == "hello"
        assert entry["level"] == "INFO"
        assert entry["logger"] == "hyperlog.test"
        assert "timestamp" in entry
        assert "environment" not in entry

    def test_includes_environment(self):
        entry = json.loads(JsonLogFormatter(environment="test").format(make_record()))

        assert entry["environment"] == "test"

    def test_includes_context_mapping(self):
        record = make_record(context={"nodes": 120, "pitch": 0.05})
        entry = json.loads(JsonLogFormatter().format(record))

        assert entry["context"] == {"nodes": 120, "pitch": 0.05}

    def test_ignores_non_mapping_context(self):
        entry = json.loads(JsonLogFormatter().format(make_record(context="text")))

        assert "context" not in entry

    def test_no_trace_ids_outside_span(self):
        entry = json.loads(JsonLogFormatter().format(make_record()))

        assert "trace_id" not in entry

    def test_trace_ids_inside_span(self):
        tracer = TracerProvider().get_tracer(__name__)
        with tracer.start_as_current_span("assemble") as span:
            entry = json.loads(JsonLogFormatter().format(make_record()))
            ctx = span.get_span_context()

        assert entry["trace_id"] == format(ctx.trace_id, "032x")
        assert entry["span_id"] == format(ctx.span_id, "016x")

    def test_includes_exception_text(self):
        try:
            raise ValueError("bad pitch")
        except ValueError:
            record = make_record(level=logging.ERROR)
            record.exc_info = sys.exc_info()

        entry = json.loads(JsonLogFormatter().format(record))

        assert "ValueError: bad pitch" in entry["exc_info"]
