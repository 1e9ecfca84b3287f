"""Output rendering for the CLI: JSON envelopes, plain text and CSV."""

import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, Sequence

from src import __version__
from src.models.models import OutputEnvelope

logger = logging.getLogger('quiver_grass.cli')


class JsonUtils:
    @staticmethod
    def dumps_sorted(data: Any) -> str:
        """Deterministic JSON: sorted keys, two-space indent."""
        return json.dumps(data, sort_keys=True, indent=2)

    @staticmethod
    def parse_envelope(text: str) -> Optional[OutputEnvelope]:
        try:
            return OutputEnvelope.model_validate_json(text)
        except ValueError as e:
            logger.warning(f"JSON parse failed: {e}")
            return None


def envelope(command: str, parameters: Dict[str, Any], result: Any) -> OutputEnvelope:
    return OutputEnvelope(command=command, parameters=parameters, result=result, version=__version__)


def render_json(env: OutputEnvelope) -> str:
    return JsonUtils.dumps_sorted(env.model_dump(mode="json"))


def render_csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue().rstrip("\n")


def render(fmt: str, env: OutputEnvelope, plain: List[str], rows: Optional[Sequence[Sequence[Any]]] = None) -> str:
    """
    Pick the representation asked for.

    ``rows`` defaults to a two-column key/value table of the plain lines when a command
    has no natural tabular form.
    """
    if fmt == "json":
        return render_json(env)
    if fmt == "csv":
        if rows is None:
            rows = [["key", "value"]] + [line.split(": ", 1) for line in plain if ": " in line]
        return render_csv(rows)
    return "\n".join(plain)
