import logging
import os
import sys

from dotenv import load_dotenv

from core.logging.formatter import JsonLogFormatter

SRC_PATH = os.path.dirname(__file__)
PROJECT_PATH = os.path.dirname(SRC_PATH)

PYTEST_RUNNING = bool(os.getenv("PYTEST_VERSION"))
load_dotenv(os.path.join(PROJECT_PATH, ".env.test" if PYTEST_RUNNING else ".env"))

ENVIRONMENT = os.getenv("ENVIRONMENT", "dev")
SERVICE_NAME = os.getenv("SERVICE_NAME", "hyperlog")


# Logging / tracing
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
TRACING_ENABLED = os.getenv("TRACING_ENABLED", "false").lower() in ("1", "true", "yes")


# Geometry
ON_GEODESIC_TOL = float(os.getenv("ON_GEODESIC_TOL", "1e-12"))


# Grids
DEFAULT_PITCH = float(os.getenv("DEFAULT_PITCH", "0.02"))
MIN_INSIDE_NODES = int(os.getenv("MIN_INSIDE_NODES", "16"))


# Assembly
ASSEMBLY_BLOCK_ROWS = int(os.getenv("ASSEMBLY_BLOCK_ROWS", "512"))
ASSEMBLY_WORKERS = int(os.getenv("ASSEMBLY_WORKERS", "1"))


# Quadrature
CIRCLE_POINTS = int(os.getenv("CIRCLE_POINTS", "256"))
DECAY_ANGLES = int(os.getenv("DECAY_ANGLES", "64"))


# Verification tolerances
FK_REL_TOL = float(os.getenv("FK_REL_TOL", "1e-6"))
RIESZ_REL_TOL = float(os.getenv("RIESZ_REL_TOL", "1e-9"))
BOUND_SLACK = float(os.getenv("BOUND_SLACK", "1e-2"))
REPRESENTATION_TOL_PER_PITCH = float(os.getenv("REPRESENTATION_TOL_PER_PITCH", "1.0"))
DEGENERATE_GAP = float(os.getenv("DEGENERATE_GAP", "1e-12"))
DIRECT_ENERGY_MAX_NODES = int(os.getenv("DIRECT_ENERGY_MAX_NODES", "800"))


# Runs
DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))
RUN_MANIFEST_PATH = os.getenv(
    "RUN_MANIFEST_PATH", os.path.join(PROJECT_PATH, "runs", "manifest.jsonl")
)


# Logging
logger = logging.getLogger()
logger.setLevel(getattr(logging, LOG_LEVEL, logging.INFO))

# stdout carries command output, logs go to stderr
handler = logging.StreamHandler(sys.stderr)
handler.setFormatter(JsonLogFormatter(environment=ENVIRONMENT))
logger.addHandler(handler)

for name in ("matplotlib", "numba", "opentelemetry"):
    logging.getLogger(name).setLevel(logging.WARNING)

del logger
del handler
