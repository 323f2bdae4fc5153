"""
Observability for pyeop.

This module provides optional instrumentation of the long-running parts of the
package (EOP routes, acceptance suites, potential grids):
- Metrics via OpenTelemetry with a Prometheus reader
- Tracing spans with configurable exporters
- Structured JSON logging with correlation IDs

OpenTelemetry and Prometheus are optional (``pip install pyeop[observability]``).
When they are missing every span is a no-op and loggers are plain ``logging``
loggers, so library code can call into this module unconditionally.
"""

import os
import sys
import json
import time
import uuid
import logging
import threading
from typing import Dict, Any, Optional
from dataclasses import dataclass, field

try:
    from opentelemetry import metrics, trace
    from opentelemetry.sdk.metrics import MeterProvider
    from opentelemetry.sdk.trace import TracerProvider
    from opentelemetry.sdk.trace.export import BatchSpanProcessor, ConsoleSpanExporter
    from opentelemetry.exporter.prometheus import PrometheusMetricReader
    from opentelemetry.trace import Status, StatusCode, SpanKind
    from prometheus_client import start_http_server

    try:
        from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter
        OTLP_AVAILABLE = True
    except ImportError:
        OTLP_AVAILABLE = False

    OBSERVABILITY_AVAILABLE = True
except ImportError:
    OBSERVABILITY_AVAILABLE = False
    OTLP_AVAILABLE = False


@dataclass
class MetricsConfig:
    """Configuration for metrics collection."""
    enabled: bool = True
    prometheus_port: Optional[int] = None
    custom_labels: Dict[str, str] = field(default_factory=dict)
    namespace: str = "pyeop"


@dataclass
class TracingConfig:
    """Configuration for tracing."""
    enabled: bool = True
    exporter: str = "console"  # console, otlp
    service_name: str = "pyeop"
    service_version: str = "0.1.0"
    otlp_endpoint: Optional[str] = None
    batch_export: bool = True


@dataclass
class LoggingConfig:
    """Configuration for structured logging."""
    structured: bool = False
    level: str = "WARNING"
    correlation_enabled: bool = True
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    include_trace_info: bool = True
    max_message_length: int = 1000


@dataclass
class ObservabilityConfig:
    """
    Observability configuration.

    Disabled by default: span exporters write to stdout, which the command
    line reserves for JSON and CSV output.
    """
    enabled: bool = False
    metrics: MetricsConfig = field(default_factory=MetricsConfig)
    tracing: TracingConfig = field(default_factory=TracingConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    @classmethod
    def from_env(cls) -> 'ObservabilityConfig':
        """Create configuration from environment variables."""
        return cls(
            enabled=_get_env_bool("PYEOP_OBSERVABILITY_ENABLED", False),
            metrics=MetricsConfig(
                enabled=_get_env_bool("PYEOP_METRICS_ENABLED", True),
                prometheus_port=_get_env_int("PYEOP_PROMETHEUS_PORT"),
                namespace=os.getenv("PYEOP_METRICS_NAMESPACE", "pyeop")
            ),
            tracing=TracingConfig(
                enabled=_get_env_bool("PYEOP_TRACING_ENABLED", True),
                exporter=os.getenv("PYEOP_TRACE_EXPORTER", "console"),
                service_name=os.getenv("PYEOP_SERVICE_NAME", "pyeop"),
                otlp_endpoint=os.getenv("PYEOP_OTLP_ENDPOINT"),
                batch_export=_get_env_bool("PYEOP_BATCH_EXPORT", True)
            ),
            logging=LoggingConfig(
                structured=_get_env_bool("PYEOP_STRUCTURED_LOGGING", False),
                level=os.getenv("PYEOP_LOG_LEVEL", "WARNING"),
                correlation_enabled=_get_env_bool("PYEOP_LOG_CORRELATION", True),
                include_trace_info=_get_env_bool("PYEOP_LOG_TRACE_INFO", True),
                max_message_length=_get_env_int("PYEOP_LOG_MAX_LENGTH", 1000) or 1000
            )
        )


class StructuredJSONFormatter(logging.Formatter):
    """
    JSON formatter for structured logging with trace correlation.
    """

    # Attributes every LogRecord carries; anything else came in through extra=
    STANDARD_FIELDS = frozenset({
        'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename',
        'module', 'exc_info', 'exc_text', 'stack_info', 'lineno', 'funcName',
        'created', 'msecs', 'relativeCreated', 'thread', 'threadName',
        'processName', 'process', 'message', 'taskName'
    })

    def __init__(self, config: LoggingConfig):
        super().__init__()
        self.config = config

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as structured JSON."""
        log_entry: Dict[str, Any] = {
            "timestamp": self._format_timestamp(record.created),
            "level": record.levelname,
            "logger": record.name,
            "message": self._truncate(record.getMessage()),
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
        }

        if self.config.correlation_enabled and self.config.include_trace_info:
            trace_info = self._get_trace_info()
            if trace_info:
                log_entry["trace"] = trace_info

        extra_fields = {
            key: value for key, value in record.__dict__.items()
            if key not in self.STANDARD_FIELDS and not key.startswith('_')
        }
        if extra_fields:
            log_entry["extra"] = extra_fields

        if record.exc_info and record.exc_info[0] is not None:
            log_entry["exception"] = {
                "type": record.exc_info[0].__name__,
                "message": str(record.exc_info[1]),
                "traceback": self.formatException(record.exc_info)
            }

        return json.dumps(log_entry, default=str, separators=(',', ':'))

    def _format_timestamp(self, timestamp: float) -> str:
        from datetime import datetime, timezone
        dt = datetime.fromtimestamp(timestamp, tz=timezone.utc)
        return dt.strftime('%Y-%m-%dT%H:%M:%S.%fZ')

    def _truncate(self, message: str) -> str:
        if len(message) > self.config.max_message_length:
            return message[:self.config.max_message_length] + "..."
        return message

    def _get_trace_info(self) -> Optional[Dict[str, str]]:
        if not OBSERVABILITY_AVAILABLE:
            return None
        try:
            current_span = trace.get_current_span()
            if current_span and current_span.is_recording():
                span_context = current_span.get_span_context()
                return {
                    "trace_id": f"{span_context.trace_id:032x}",
                    "span_id": f"{span_context.span_id:016x}",
                }
        except Exception:
            pass
        return None


class CorrelatedLogger:
    """
    Logger wrapper that adds a correlation id to every record.
    """

    def __init__(self, logger: logging.Logger, correlation_id: Optional[str] = None):
        self.logger = logger
        self.correlation_id = correlation_id or str(uuid.uuid4())

    def _with_correlation(self, extra: Optional[Dict[str, Any]]) -> Dict[str, Any]:
        extra = dict(extra or {})
        extra.setdefault("correlation_id", self.correlation_id)
        return extra

    def debug(self, msg, *args, extra=None, **kwargs):
        self.logger.debug(msg, *args, extra=self._with_correlation(extra), **kwargs)

    def info(self, msg, *args, extra=None, **kwargs):
        self.logger.info(msg, *args, extra=self._with_correlation(extra), **kwargs)

    def warning(self, msg, *args, extra=None, **kwargs):
        self.logger.warning(msg, *args, extra=self._with_correlation(extra), **kwargs)

    def error(self, msg, *args, extra=None, **kwargs):
        self.logger.error(msg, *args, extra=self._with_correlation(extra), **kwargs)

    def exception(self, msg, *args, extra=None, **kwargs):
        self.logger.exception(msg, *args, extra=self._with_correlation(extra), **kwargs)


class PerformanceLogger:
    """
    Times one operation (a suite, a grid) and logs its phases.
    """

    def __init__(self, logger: CorrelatedLogger, operation: str):
        self.logger = logger
        self.operation = operation
        self.start_time: Optional[float] = None

    def start(self, **context):
        """Start timing the operation."""
        self.start_time = time.perf_counter()
        self.logger.debug(f"Starting {self.operation}", extra={
            "operation": self.operation,
            "phase": "start",
            **context
        })

    def elapsed(self) -> float:
        if self.start_time is None:
            return 0.0
        return time.perf_counter() - self.start_time

    def checkpoint(self, checkpoint_name: str, **context):
        """Log a checkpoint with elapsed time."""
        self.logger.debug(f"{self.operation} checkpoint: {checkpoint_name}", extra={
            "operation": self.operation,
            "phase": "checkpoint",
            "checkpoint": checkpoint_name,
            "elapsed_seconds": self.elapsed(),
            **context
        })

    def complete(self, success: bool = True, **context):
        """Complete the operation timing."""
        level = "info" if success else "warning"
        getattr(self.logger, level)(f"Completed {self.operation}", extra={
            "operation": self.operation,
            "phase": "complete",
            "success": success,
            "duration_seconds": self.elapsed(),
            **context
        })

    def error(self, error: Exception, **context):
        """Log an error during the operation."""
        self.logger.error(f"Error in {self.operation}: {error}", extra={
            "operation": self.operation,
            "phase": "error",
            "error_type": type(error).__name__,
            "error_message": str(error),
            "duration_seconds": self.elapsed(),
            **context
        })


class ObservabilityManager:
    """Owns the tracer, the meter and the pyeop metric instruments."""

    def __init__(self, config: Optional[ObservabilityConfig] = None):
        self.config = config or ObservabilityConfig.from_env()
        self._initialized = False
        self._lock = threading.Lock()
        self._tracer = None
        self._meter = None
        self._metrics: Dict[str, Any] = {}

        if self.config.enabled and OBSERVABILITY_AVAILABLE:
            self._initialize()

    def _initialize(self):
        with self._lock:
            if self._initialized:
                return
            try:
                if self.config.metrics.enabled:
                    self._init_metrics()
                if self.config.tracing.enabled:
                    self._init_tracing()
                self._initialized = True
            except Exception as e:
                logging.getLogger(__name__).warning(
                    f"Failed to initialize observability: {e}. Continuing without observability."
                )

    def _init_metrics(self):
        try:
            prometheus_reader = PrometheusMetricReader()
            meter_provider = MeterProvider(metric_readers=[prometheus_reader])
            metrics.set_meter_provider(meter_provider)
            self._meter = metrics.get_meter(self.config.metrics.namespace)

            self._metrics = {
                'route_evaluations': self._meter.create_counter(
                    name="route_evaluations_total",
                    description="Number of EOP route evaluations",
                    unit="1"
                ),
                'route_duration': self._meter.create_histogram(
                    name="route_duration_seconds",
                    description="EOP route evaluation duration in seconds",
                    unit="s"
                ),
                'check_cases': self._meter.create_counter(
                    name="check_cases_total",
                    description="Acceptance cases run, by suite and status",
                    unit="1"
                ),
                'pole_events': self._meter.create_counter(
                    name="pole_events_total",
                    description="Evaluations that hit a Wronskian node",
                    unit="1"
                ),
            }

            if self.config.metrics.prometheus_port:
                start_http_server(self.config.metrics.prometheus_port)
        except Exception as e:
            logging.getLogger(__name__).warning(f"Failed to initialize metrics: {e}")

    def _init_tracing(self):
        try:
            from opentelemetry.sdk.resources import Resource
            resource = Resource.create({
                "service.name": self.config.tracing.service_name,
                "service.version": self.config.tracing.service_version,
                "library.name": "pyeop",
            })
            tracer_provider = TracerProvider(resource=resource)

            span_exporter = self._create_span_exporter()
            if self.config.tracing.batch_export:
                span_processor = BatchSpanProcessor(span_exporter)
            else:
                from opentelemetry.sdk.trace.export import SimpleSpanProcessor
                span_processor = SimpleSpanProcessor(span_exporter)
            tracer_provider.add_span_processor(span_processor)

            trace.set_tracer_provider(tracer_provider)
            self._tracer = trace.get_tracer(self.config.tracing.service_name)
        except Exception as e:
            logging.getLogger(__name__).warning(f"Failed to initialize tracing: {e}")

    def _create_span_exporter(self):
        exporter_type = self.config.tracing.exporter.lower()
        if exporter_type == "otlp" and OTLP_AVAILABLE:
            if self.config.tracing.otlp_endpoint:
                return OTLPSpanExporter(endpoint=self.config.tracing.otlp_endpoint)
            return OTLPSpanExporter()
        if exporter_type != "console":
            logging.getLogger(__name__).warning(
                f"Unsupported or unavailable trace exporter: {exporter_type}. "
                f"Falling back to console exporter."
            )
        return ConsoleSpanExporter(out=sys.stderr)

    def get_logger(self, name: str) -> CorrelatedLogger:
        """
        Get a correlated logger instance.

        Args:
            name: Logger name

        Returns:
            CorrelatedLogger wrapping ``logging.getLogger(name)``
        """
        return CorrelatedLogger(logging.getLogger(name))

    def create_performance_logger(self, operation: str) -> PerformanceLogger:
        """Create a performance logger for timing one operation."""
        return PerformanceLogger(self.get_logger(f"pyeop.performance.{operation}"), operation)

    @property
    def tracer(self):
        return self._tracer

    @property
    def meter(self):
        return self._meter

    def get_metric(self, name: str):
        return self._metrics.get(name)

    def record_route_evaluation(self, duration: float, **labels):
        """Record one EOP route evaluation."""
        if metric := self.get_metric('route_evaluations'):
            try:
                metric.add(1, labels)
            except Exception:
                pass
        if metric := self.get_metric('route_duration'):
            try:
                metric.record(duration, labels)
            except Exception:
                pass

    def increment_check_cases(self, count: int = 1, **labels):
        if metric := self.get_metric('check_cases'):
            try:
                metric.add(count, labels)
            except Exception:
                pass

    def record_pole_event(self, **labels):
        if metric := self.get_metric('pole_events'):
            try:
                metric.add(1, labels)
            except Exception:
                pass

    def start_span(self, name: str, **attributes):
        """
        Start a span with the given name and attributes.

        Returns:
            A context manager; a no-op one when tracing is disabled
        """
        if not self._tracer:
            return _NoOpSpan()
        try:
            span_context = self._tracer.start_as_current_span(name, kind=SpanKind.INTERNAL)
            return _SpanContextManager(span_context, attributes)
        except Exception as e:
            logging.getLogger(__name__).debug(f"Failed to start span: {e}")
            return _NoOpSpan()

    def record_span_exception(self, span, exception: Exception):
        """Record an exception on a span and set error status."""
        if span is not None and OBSERVABILITY_AVAILABLE and hasattr(span, 'record_exception'):
            try:
                span.record_exception(exception)
                span.set_status(Status(StatusCode.ERROR, str(exception)))
            except Exception:
                pass


class _SpanContextManager:
    """Activates an OpenTelemetry span and applies attributes on entry."""

    def __init__(self, span_context, attributes=None):
        self.span_context = span_context
        self.attributes = attributes or {}
        self.active_span = None

    def __enter__(self):
        self.active_span = self.span_context.__enter__()
        for key, value in self.attributes.items():
            if value is not None:
                self.active_span.set_attribute(key, str(value))
        return self.active_span

    def __exit__(self, exc_type, exc_val, exc_tb):
        return self.span_context.__exit__(exc_type, exc_val, exc_tb)


class _NoOpSpan:
    """No-operation span for when tracing is disabled."""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        return False

    def set_attribute(self, key, value):
        pass

    def record_exception(self, exception):
        pass

    def set_status(self, status):
        pass


def configure_logging(config: Optional[LoggingConfig] = None, stream=None) -> logging.Logger:
    """
    Attach one handler to the ``pyeop`` logger.

    The command line calls this with ``stream=sys.stderr`` so that standard
    output carries only results.
    """
    config = config or ObservabilityConfig.from_env().logging
    root_logger = logging.getLogger('pyeop')
    root_logger.handlers.clear()
    root_logger.setLevel(getattr(logging, config.level.upper(), logging.WARNING))

    handler = logging.StreamHandler(stream or sys.stderr)
    if config.structured:
        handler.setFormatter(StructuredJSONFormatter(config))
    else:
        handler.setFormatter(logging.Formatter(config.format))
    root_logger.addHandler(handler)
    root_logger.propagate = False
    return root_logger


# Utility functions for environment variable parsing

def _get_env_bool(key: str, default: bool = False) -> bool:
    """Get boolean value from environment variable."""
    value = os.getenv(key, "").lower()
    if value in ("true", "1", "yes", "on"):
        return True
    elif value in ("false", "0", "no", "off"):
        return False
    return default


def _get_env_int(key: str, default: Optional[int] = None) -> Optional[int]:
    """Get integer value from environment variable."""
    value = os.getenv(key)
    if value is not None:
        try:
            return int(value)
        except ValueError:
            pass
    return default


def _get_env_float(key: str, default: float = 0.0) -> float:
    """Get float value from environment variable."""
    value = os.getenv(key)
    if value is not None:
        try:
            return float(value)
        except ValueError:
            pass
    return default


# Global observability manager instance
_global_observability_manager: Optional[ObservabilityManager] = None
_global_lock = threading.Lock()


def get_observability_manager() -> ObservabilityManager:
    """Get the global observability manager, creating it from the environment."""
    global _global_observability_manager
    if _global_observability_manager is None:
        with _global_lock:
            if _global_observability_manager is None:
                _global_observability_manager = ObservabilityManager()
    return _global_observability_manager


def initialize_observability(config: Optional[ObservabilityConfig] = None) -> ObservabilityManager:
    """Replace the global observability manager."""
    global _global_observability_manager
    with _global_lock:
        _global_observability_manager = ObservabilityManager(config)
    return _global_observability_manager
