from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from .normalize import Rat


# -----------------------------
# Validation
# -----------------------------

class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class ValidationReport(BaseModel):
    checks: List[CheckResult]

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]

    @property
    def is_valid(self) -> bool:
        return not self.failures

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)


# -----------------------------
# Comparisons and coordinate checks
# -----------------------------

class EquivalenceResult(BaseModel):
    equivalent: bool
    factor: Optional[Rat] = None


class ExtremeCoordinates(BaseModel):
    not_shorted: Rat
    connected: Rat


class LinearSolution(BaseModel):
    """Outcome of an exact solve: a particular solution with a nullspace basis,
    or a certificate y with y·A = 0 and y·b != 0."""

    consistent: bool
    solution: Optional[List[Rat]] = None
    nullspace: List[List[Rat]] = []
    certificate: Optional[List[Rat]] = None


# -----------------------------
# Full analysis
# -----------------------------

class NetworkAnalysis(BaseModel):
    n: int
    valid: bool
    lambda_values: Dict[str, Rat] = {}
    coordinates: Dict[str, Rat] = {}
    kappa_vanishes: Optional[bool] = None
    totally_nonnegative: Optional[bool] = None
    extremes: Optional[ExtremeCoordinates] = None
    response: Optional[List[List[Rat]]] = None
    resistance: Optional[List[List[Rat]]] = None
    lstar: Optional[List[List[Rat]]] = None
    medial_pairs: List[Tuple[int, int]] = []
    minimal: Optional[bool] = None
    notes: List[str] = []
