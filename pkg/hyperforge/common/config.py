"""
Shared configuration settings for hyperforge
"""

import os
from pathlib import Path

from .errors import InputError

TOOL_NAME = "hyperforge"
TOOL_VERSION = "1.0.0"

# Directory paths
PACKAGE_ROOT = Path(__file__).resolve().parent.parent
FIXTURES_DIR = PACKAGE_ROOT.parent / "fixtures"
REPORTS_DIR = Path("reports")
DEFAULT_FIXTURE = FIXTURES_DIR / "r4_basis.json"

# Accepted input document suffixes (all parsed with yaml.safe_load)
INPUT_SUFFIXES = (".json", ".yaml", ".yml")

# Canonical monomial order of the coefficient rings
MONOMIAL_ORDER = "grlex"

# Concurrency
THREADS_ENV_VAR = "HYPERFORGE_THREADS"
DEFAULT_THREADS = min(4, os.cpu_count() or 1)

# Positive-product search oracle
DEFAULT_SEARCH_BUDGET = 2000
DEFAULT_SEARCH_SEED = 20240601
SEARCH_ENTRY_RANGE = 2

# Randomized calibration gate
CROSS_ORACLE_EXAMPLES = 25


def thread_limit() -> int:
    """Worker cap from HYPERFORGE_THREADS, read at call time (0 = serial)"""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV_VAR} must be a non-negative integer, got '{raw}'")
    if value < 0:
        raise InputError(f"{THREADS_ENV_VAR} must be a non-negative integer, got '{raw}'")
    return value
