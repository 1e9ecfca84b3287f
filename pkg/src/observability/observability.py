"""
Observability for quiver-grass.

Optional Laminar tracing around the expensive entry points, plus wall-clock timing
records written through loguru.
"""

import os
import time
import logging
from contextlib import contextmanager
from functools import wraps
from typing import Iterator, Optional

from loguru import logger as loguru_logger

logger = logging.getLogger('quiver_grass')

_laminar_initialized = False


def initialize_tracing() -> bool:
    """
    Initialize Laminar tracing if an API key is configured and the package is installed.

    Returns:
        bool: True if tracing is active afterwards
    """
    global _laminar_initialized

    if _laminar_initialized:
        return True

    api_key = os.getenv('LMNR_PROJECT_API_KEY')
    if not api_key:
        logger.debug("LMNR_PROJECT_API_KEY not set, tracing disabled")
        return False

    try:
        from lmnr import Laminar

        Laminar.initialize(project_api_key=api_key)
        _laminar_initialized = True
        logger.info("Laminar tracing initialized")
        return True
    except ImportError as e:
        logger.warning(f"Laminar not available: {e}. Continuing without tracing.")
        return False
    except Exception as e:
        logger.error(f"Failed to initialize Laminar: {e}. Continuing without tracing.")
        return False


def observe_if_available(name: Optional[str] = None):
    """
    Trace calls with Laminar's ``observe`` when tracing is active.

    The check happens per call, so functions decorated at import time are traced once
    ``initialize_tracing()`` succeeds later on. Falls back to a plain call otherwise.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            if not _laminar_initialized:
                return func(*args, **kwargs)
            try:
                from lmnr import observe
                traced = observe(name=name or func.__name__)(func)
            except Exception as e:
                logger.debug(f"Failed to apply observe decorator to {func.__name__}: {e}")
                traced = func
            return traced(*args, **kwargs)

        return wrapper

    return decorator


def is_tracing_enabled() -> bool:
    return _laminar_initialized


@contextmanager
def timed(label: str) -> Iterator[dict]:
    """Measure wall time of a block; the elapsed seconds land in the yielded dict."""
    record = {"label": label}
    start = time.perf_counter()
    try:
        yield record
    finally:
        record["elapsed"] = time.perf_counter() - start
        loguru_logger.debug(f"{label} took {record['elapsed']:.3f}s")
