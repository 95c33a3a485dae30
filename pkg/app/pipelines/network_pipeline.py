import logging

from app.core.check_models import NetworkAnalysis
from app.core.errors import PreconditionError
from app.core.electrical import lstar_from_resistance, resistance_matrix, response_matrix
from app.core.forms import is_totally_nonnegative, kappa, omega
from app.core.grassmann import extreme_coordinates, lam_map
from app.core.groves import lambda_vector
from app.core.models import CactusNetwork
from app.core.network import is_minimal, medial_pairing, validate

logger = logging.getLogger(__name__)


class NetworkAnalysisPipeline:
    """Everything the toolkit can say about one network, in one model.

    Steps that do not apply (a shorted network has no resistance, a network
    past the grove cap has no Λ) leave their field empty and add a note.
    """

    def __init__(self, net: CactusNetwork):
        self.net = net

    def run(self) -> NetworkAnalysis:
        net = self.net
        report = validate(net)
        if not report.is_valid:
            notes = [f"{c.name}: {c.detail}" for c in report.failures]
            return NetworkAnalysis(n=net.n, valid=False, notes=notes)

        result = {"n": net.n, "valid": True, "notes": []}
        logger.info("Step 1: network with %d edges is valid", len(net.edges))

        try:
            measurements = lambda_vector(net)
            vector = lam_map(measurements)
            result["lambda_values"] = {s.label(): v for s, v in measurements.values.items()}
            result["coordinates"] = {vector.key_label(k): v for k, v in vector.coords.items()}
            result["totally_nonnegative"] = is_totally_nonnegative(vector)
            if net.n >= 2:
                result["kappa_vanishes"] = kappa(omega(net.n), vector).is_zero()
                result["extremes"] = extreme_coordinates(vector)
            logger.info("Step 2: Λ has %d nonzero entries", len(measurements.values))
        except PreconditionError as exc:
            result["notes"].append(f"grove measurements: {exc}")

        try:
            result["response"] = response_matrix(net).rows()
            resistance = resistance_matrix(net)
            result["resistance"] = resistance.rows()
            if net.n >= 2:
                result["lstar"] = lstar_from_resistance(resistance).rows()
            logger.info("Step 3: electrical matrices computed")
        except PreconditionError as exc:
            result["notes"].append(f"electrical: {exc}")

        result["medial_pairs"] = list(medial_pairing(net).matching.pairs)
        result["minimal"] = is_minimal(net)
        logger.info("Step 4: medial pairing %s", result["medial_pairs"])
        return NetworkAnalysis(**result)
