from typing import Literal

from fastapi import APIRouter

from app.api.networks import get_network, translate_errors
from app.core.forms import is_isotropic, is_totally_nonnegative, kappa, kernel_dimension_of_kappa, omega
from app.core.grassmann import chart_for_network, extract_from_network, lam_map
from app.core.groves import electrically_equivalent, lambda_vector
from app.core.serialization import exterior_map, matrix_rows

router = APIRouter(prefix="/grassmann")


@router.get("/kernel-dim/{n}")
def kernel_dimension(n: int):
    with translate_errors():
        return {"n": n, "dimension": kernel_dimension_of_kappa(n)}


@router.get("/equiv/{first_id}/{second_id}")
def equivalence(first_id: str, second_id: str):
    first, second = get_network(first_id), get_network(second_id)
    with translate_errors():
        return electrically_equivalent(first, second)


@router.get("/{network_id}/plucker")
def plucker_coordinates(network_id: str, check_isotropy: bool = False):
    net = get_network(network_id)
    with translate_errors():
        vector = lam_map(lambda_vector(net))
        body = {"coordinates": exterior_map(vector)}
        if check_isotropy:
            body["kappa_vanishes"] = kappa(omega(net.n), vector).is_zero()
        return body


@router.get("/{network_id}/tnn")
def total_nonnegativity(network_id: str):
    net = get_network(network_id)
    with translate_errors():
        return {"totally_nonnegative": is_totally_nonnegative(lam_map(lambda_vector(net)))}


@router.get("/{network_id}/chart")
def chart(network_id: str, source: Literal["response", "resistance"] = "response"):
    net = get_network(network_id)
    with translate_errors():
        rep = chart_for_network(net, source)
        return {"matrix": matrix_rows(rep.matrix), "isotropic": is_isotropic(rep, omega(net.n))}


@router.get("/{network_id}/extract")
def extract(network_id: str, chart: Literal["not-shorted", "connected"] = "not-shorted"):
    net = get_network(network_id)
    with translate_errors():
        return {"chart": chart, "matrix": matrix_rows(extract_from_network(net, chart).matrix)}
