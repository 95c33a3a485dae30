"""Network files in, output documents out. Both are JSON; rationals travel as "p/q" strings."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Union

from pydantic import ValidationError

from .errors import NetworkFormatError
from .models import CactusNetwork, ExteriorVector, GroveMeasurements
from .normalize import format_rational

logger = logging.getLogger(__name__)


def parse_network(text: str) -> CactusNetwork:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NetworkFormatError(f"network file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise NetworkFormatError("network file must hold a JSON object")
    try:
        return CactusNetwork.model_validate(data)
    except ValidationError as exc:
        raise NetworkFormatError(f"network file does not match the schema: {exc}") from exc


def load_network(path: Union[str, Path]) -> CactusNetwork:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise NetworkFormatError(f"cannot read {path}: {exc}") from exc
    logger.debug("loaded network file %s", path)
    return parse_network(text)


def network_document(net: CactusNetwork) -> Dict[str, Any]:
    return {
        "n": net.n,
        "shape": [list(block) for block in net.shape],
        "internal_vertices": list(net.internal_vertices),
        "edges": [
            {"id": e.id, "ends": list(e.ends), "conductance": format_rational(e.conductance)}
            for e in net.edges
        ],
        "rotations": {v: list(net.rotations[v]) for v in sorted(net.rotations)},
    }


# -----------------------------
# Output documents
# -----------------------------

def matrix_rows(matrix) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in matrix.tolist()]


def exterior_map(vector: ExteriorVector) -> Dict[str, str]:
    return {ExteriorVector.key_label(key): format_rational(value) for key, value in vector.coords.items()}


def lambda_map(measurements: GroveMeasurements) -> Dict[str, str]:
    return {sigma.label(): format_rational(value) for sigma, value in measurements.values.items()}


def dumps(document: Any, compact: bool = False) -> str:
    if compact:
        return json.dumps(document, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(document, indent=2, ensure_ascii=False)
