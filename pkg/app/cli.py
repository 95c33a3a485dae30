"""Command-line surface: one network file in, one JSON document on stdout.

Exit codes: 0 success, 1 unreadable or invalid network file, 2 an operation
called outside its domain, 3 an identity that must hold failed.
"""

import logging
from pathlib import Path
from typing import Optional

import click

from app.core.config import configure_logging
from app.core.electrical import lstar_from_resistance, resistance_matrix, response_matrix
from app.core.errors import CactusError
from app.core.exterior import subspace_from_coordinates
from app.core.forms import is_isotropic, is_totally_nonnegative, kappa, kernel_dimension_of_kappa, omega
from app.core.grassmann import chart_for_network, extract_from_network, lam_map
from app.core.groves import electrically_equivalent, lambda_vector
from app.core.models import CactusNetwork
from app.core.moves import dual, ydelta
from app.core.network import ensure_valid, is_minimal, medial_pairing, validate
from app.core.serialization import (
    dumps,
    exterior_map,
    lambda_map,
    load_network,
    matrix_rows,
    network_document,
)

logger = logging.getLogger(__name__)

network_path = click.argument("path", type=click.Path(dir_okay=False, path_type=Path))


class CactusGroup(click.Group):
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except CactusError as exc:
            click.echo(f"error: {exc}", err=True)
            ctx.exit(exc.exit_code)


def emit(document, output: Optional[Path] = None) -> None:
    ctx = click.get_current_context()
    text = dumps(document, compact=ctx.find_object(dict)["compact"])
    if output is not None:
        output.write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %s", output)
    else:
        click.echo(text)


def _load_valid(path: Path) -> CactusNetwork:
    return ensure_valid(load_network(path))


@click.group(cls=CactusGroup)
@click.option("--compact", is_flag=True, help="Single-line JSON output.")
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr.")
@click.pass_context
def main(ctx: click.Context, compact: bool, verbose: bool):
    """Grove measurements, response matrices and Lagrangian Grassmannian coordinates of cactus networks."""
    configure_logging(verbose)
    ctx.ensure_object(dict)["compact"] = compact


@main.command("validate")
@network_path
@click.pass_context
def validate_command(ctx: click.Context, path: Path):
    report = validate(load_network(path))
    emit({"valid": report.is_valid, **report.model_dump()})
    if not report.is_valid:
        ctx.exit(1)


@main.command("lambda")
@network_path
def lambda_command(path: Path):
    net = _load_valid(path)
    emit({"n": net.n, "lambda": lambda_map(lambda_vector(net))})


@main.command("response")
@network_path
def response_command(path: Path):
    response = response_matrix(_load_valid(path))
    emit({"labels": list(response.labels), "matrix": matrix_rows(response.matrix)})


@main.command("resistance")
@network_path
def resistance_command(path: Path):
    emit({"matrix": matrix_rows(resistance_matrix(_load_valid(path)).matrix)})


@main.command("lstar")
@network_path
def lstar_command(path: Path):
    emit({"matrix": matrix_rows(lstar_from_resistance(resistance_matrix(_load_valid(path))).matrix)})


@main.command("plucker")
@network_path
@click.option("--check-isotropy", is_flag=True, help="Also report whether κ vanishes.")
def plucker_command(path: Path, check_isotropy: bool):
    net = _load_valid(path)
    vector = lam_map(lambda_vector(net))
    document = {"n": net.n, "coordinates": exterior_map(vector)}
    if check_isotropy:
        document["kappa"] = "zero" if kappa(omega(net.n), vector).is_zero() else "nonzero"
    emit(document)


@main.command("isotropy")
@network_path
def isotropy_command(path: Path):
    net = _load_valid(path)
    vector = lam_map(lambda_vector(net))
    rep = subspace_from_coordinates(vector)
    emit({
        "kappa_vanishes": kappa(omega(net.n), vector).is_zero(),
        "isotropic": is_isotropic(rep, omega(net.n)),
    })


@main.command("tnn")
@network_path
def tnn_command(path: Path):
    net = _load_valid(path)
    emit({"totally_nonnegative": is_totally_nonnegative(lam_map(lambda_vector(net)))})


@main.command("chart")
@network_path
@click.option("--from", "source", type=click.Choice(["response", "resistance"]), default="response")
def chart_command(path: Path, source: str):
    rep = chart_for_network(_load_valid(path), source)
    emit({"chart": "not-shorted" if source == "response" else "connected", "matrix": matrix_rows(rep.matrix)})


@main.command("extract")
@network_path
@click.option("--chart", type=click.Choice(["not-shorted", "connected"]), default="not-shorted")
def extract_command(path: Path, chart: str):
    emit({"chart": chart, "matrix": matrix_rows(extract_from_network(_load_valid(path), chart).matrix)})


@main.command("ydelta")
@network_path
@click.option("--site", required=True, help="Internal vertex id, or three comma-separated edge ids.")
@click.option("--direction", type=click.Choice(["ytod", "dtoy"]), required=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
def ydelta_command(path: Path, site: str, direction: str, output: Optional[Path]):
    result = ydelta(_load_valid(path), site, direction)
    emit(network_document(result), output=output)


@main.command("dual")
@network_path
@click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path), default=None)
def dual_command(path: Path, output: Optional[Path]):
    emit(network_document(dual(_load_valid(path))), output=output)


@main.command("medial")
@network_path
def medial_command(path: Path):
    pairing = medial_pairing(_load_valid(path))
    emit({"pairs": [list(pair) for pair in pairing.matching.pairs]})


@main.command("minimal")
@network_path
def minimal_command(path: Path):
    emit({"minimal": is_minimal(_load_valid(path))})


@main.command("equiv")
@click.argument("first", type=click.Path(dir_okay=False, path_type=Path))
@click.argument("second", type=click.Path(dir_okay=False, path_type=Path))
def equiv_command(first: Path, second: Path):
    result = electrically_equivalent(_load_valid(first), _load_valid(second))
    emit(result.model_dump())


@main.command("kernel-dim")
@click.option("--n", "n", type=int, required=True)
def kernel_dim_command(n: int):
    emit({"n": n, "dimension": kernel_dimension_of_kappa(n)})
