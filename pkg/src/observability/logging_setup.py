import logging
import sys
from typing import Optional
from loguru import logger as loguru_logger

LOGGER_NAMES = [
    'quiver_grass',               # Root
    'quiver_grass.kronecker',     # Hom/Ext/Euler form
    'quiver_grass.quiver',        # Coefficient quivers and fixed points
    'quiver_grass.hom',           # Standard Hom bases and cells
    'quiver_grass.invariants',    # Poincare polynomials, strata
    'quiver_grass.fq',            # GF(q) oracle
    'quiver_grass.cluster',       # Laurent polynomials and CC map
    'quiver_grass.cli',           # Command line
    'quiver_grass.selftest',      # Acceptance harness
]


def setup_logging(debug_mode: bool = False, log_file: Optional[str] = None):
    """Hierarchical logging setup (stderr console, optional loguru file sink)."""

    # Check if already configured to prevent duplicate setup
    if hasattr(setup_logging, '_configured'):
        return

    level = logging.DEBUG if debug_mode else logging.WARNING

    # stdout carries command results, so the console handler writes to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(name)s - %(message)s'))

    for name in LOGGER_NAMES:
        lg = logging.getLogger(name)
        lg.handlers.clear()
        lg.setLevel(level)
        lg.addHandler(console_handler)
        lg.propagate = False

    loguru_logger.remove()  # Remove default console handler
    if log_file:
        loguru_logger.add(log_file, rotation="10 MB", retention="7 days", level="DEBUG" if debug_mode else "INFO")

    setup_logging._configured = True

    logging.getLogger('quiver_grass').debug(f"Logging setup complete (debug_mode={debug_mode}, log_file={log_file})")
