from contextlib import contextmanager
from typing import Literal

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel

from app.core.check_models import NetworkAnalysis, ValidationReport
from app.core.electrical import lstar_from_resistance, resistance_matrix, response_matrix
from app.core.errors import CactusError
from app.core.groves import lambda_vector
from app.core.models import CactusNetwork
from app.core.moves import dual, ydelta
from app.core.network import is_minimal, medial_pairing, validate
from app.core.serialization import lambda_map, matrix_rows, network_document
from app.pipelines.network_pipeline import NetworkAnalysisPipeline
from app.store.memory import networks

router = APIRouter(prefix="/networks")


class NetworkUpload(BaseModel):
    network_id: str
    network: CactusNetwork


class MoveRequest(BaseModel):
    site: str
    direction: Literal["ytod", "dtoy"]
    store_as: str = ""


@contextmanager
def translate_errors():
    try:
        yield
    except CactusError as exc:
        raise HTTPException(status_code=exc.status_code, detail=str(exc)) from exc


def get_network(network_id: str) -> CactusNetwork:
    if network_id not in networks:
        raise HTTPException(status_code=404, detail=f"Network {network_id} not found")
    return networks[network_id]


# -----------------------------
# Registry
# -----------------------------

@router.post("/")
def create_network(upload: NetworkUpload):
    report = validate(upload.network)
    if report.is_valid:
        networks[upload.network_id] = upload.network
    return {
        "status": "stored" if report.is_valid else "rejected",
        "network_id": upload.network_id,
        "report": report,
    }


@router.get("/")
def list_networks():
    return sorted(networks)


@router.get("/{network_id}")
def read_network(network_id: str):
    return network_document(get_network(network_id))


# -----------------------------
# Computations
# -----------------------------

@router.get("/{network_id}/validate", response_model=ValidationReport)
def validate_network(network_id: str):
    return validate(get_network(network_id))


@router.get("/{network_id}/analysis", response_model=NetworkAnalysis)
def analyze_network(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        return NetworkAnalysisPipeline(net).run()


@router.get("/{network_id}/lambda")
def network_lambda(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        return {"lambda": lambda_map(lambda_vector(net))}


@router.get("/{network_id}/response")
def network_response(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        response = response_matrix(net)
        return {"labels": list(response.labels), "matrix": matrix_rows(response.matrix)}


@router.get("/{network_id}/resistance")
def network_resistance(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        return {"matrix": matrix_rows(resistance_matrix(net).matrix)}


@router.get("/{network_id}/lstar")
def network_lstar(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        return {"matrix": matrix_rows(lstar_from_resistance(resistance_matrix(net)).matrix)}


@router.get("/{network_id}/medial")
def network_medial(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        return {"pairs": [list(p) for p in medial_pairing(net).matching.pairs], "minimal": is_minimal(net)}


# -----------------------------
# Rewrites
# -----------------------------

def _store_result(source_id: str, suffix: str, result: CactusNetwork, store_as: str = ""):
    new_id = store_as or f"{source_id}-{suffix}"
    networks[new_id] = result
    return {"status": "stored", "network_id": new_id, "network": network_document(result)}


@router.post("/{network_id}/ydelta")
def network_ydelta(network_id: str, move: MoveRequest):
    net = get_network(network_id)
    with translate_errors():
        result = ydelta(net, move.site, move.direction)
    return _store_result(network_id, move.direction, result, move.store_as)


@router.post("/{network_id}/dual")
def network_dual(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        result = dual(net)
    return _store_result(network_id, "dual", result)
