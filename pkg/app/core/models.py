from itertools import combinations
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import ImmutableMatrix, Integer

from .normalize import Rat, as_rational


# -----------------------------
# Label conventions
# -----------------------------
# Ground set of R^{2n}, in order 1 < 1~ < 2 < 2~ < ... < n < n~, is indexed by
# positions 0..2n-1: label i sits at 2(i-1), tilde label i~ at 2(i-1)+1.
# On the interleaved circle (1-based) the same points are i -> 2i-1, i~ -> 2i.

def ground_index(label: int, tilde: bool = False) -> int:
    return 2 * (label - 1) + (1 if tilde else 0)


def ground_label(position: int) -> str:
    base = str(position // 2 + 1)
    return base + "~" if position % 2 else base


def _canonical_blocks(blocks) -> Tuple[Tuple[int, ...], ...]:
    cleaned = [tuple(sorted(int(x) for x in block)) for block in blocks]
    return tuple(sorted(cleaned))


def _partition_problem(n: int, blocks) -> Optional[str]:
    seen: Dict[int, int] = {}
    for index, block in enumerate(blocks):
        if not block:
            return "empty block"
        for x in block:
            if x < 1 or x > n:
                return f"element {x} outside 1..{n}"
            if x in seen:
                return f"element {x} appears in two blocks"
            seen[x] = index
    missing = [x for x in range(1, n + 1) if x not in seen]
    if missing:
        return f"elements {missing} are not covered"
    return None


def _find_crossing(blocks) -> Optional[Tuple[int, int, int, int]]:
    """Return a crossing quadruple a<b<c<d, or None when the blocks are noncrossing."""
    for first, second in combinations(blocks, 2):
        for a, c in combinations(sorted(first), 2):
            inside = [b for b in second if a < b < c]
            outside = [d for d in second if d < a or d > c]
            if inside and outside:
                return tuple(sorted((a, c, inside[0], outside[0])))
    return None


# -----------------------------
# Combinatorial indexing
# -----------------------------

class NoncrossingPartition(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    blocks: Tuple[Tuple[int, ...], ...]

    @field_validator("blocks", mode="before")
    @classmethod
    def _canonicalize(cls, value):
        return _canonical_blocks(value)

    @model_validator(mode="after")
    def _check(self):
        problem = _partition_problem(self.n, self.blocks)
        if problem:
            raise ValueError(f"not a partition of 1..{self.n}: {problem}")
        crossing = _find_crossing(self.blocks)
        if crossing:
            raise ValueError(f"blocks cross at {crossing}")
        return self

    @classmethod
    def singletons(cls, n: int) -> "NoncrossingPartition":
        return cls(n=n, blocks=[(i,) for i in range(1, n + 1)])

    @classmethod
    def whole(cls, n: int) -> "NoncrossingPartition":
        return cls(n=n, blocks=[tuple(range(1, n + 1))])

    def block_of(self, label: int) -> Tuple[int, ...]:
        for block in self.blocks:
            if label in block:
                return block
        raise KeyError(label)

    def label(self, tilde: bool = False) -> str:
        mark = "~" if tilde else ""
        return ",".join("{" + ",".join(f"{x}{mark}" for x in block) + "}" for block in self.blocks)

    def __lt__(self, other: "NoncrossingPartition") -> bool:
        return (self.n, self.blocks) < (other.n, other.blocks)


class KrewerasPair(BaseModel):
    """A partition of [n] with its complement; ``sigma_tilde`` holds tilde labels as 1..n."""

    model_config = ConfigDict(frozen=True)

    sigma: NoncrossingPartition
    sigma_tilde: NoncrossingPartition

    @model_validator(mode="after")
    def _check(self):
        n = self.sigma.n
        if self.sigma_tilde.n != n:
            raise ValueError("sigma and sigma_tilde live on different n")
        if len(self.sigma.blocks) + len(self.sigma_tilde.blocks) != n + 1:
            raise ValueError("block counts must add up to n+1")
        union = [tuple(2 * x - 1 for x in b) for b in self.sigma.blocks]
        union += [tuple(2 * x for x in b) for b in self.sigma_tilde.blocks]
        if _find_crossing(union):
            raise ValueError("sigma and sigma_tilde cross on the interleaved circle")
        return self


class Matching(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    pairs: Tuple[Tuple[int, int], ...]

    @field_validator("pairs", mode="before")
    @classmethod
    def _canonicalize(cls, value):
        return tuple(sorted(tuple(sorted(pair)) for pair in value))

    @model_validator(mode="after")
    def _check(self):
        flat = sorted(x for pair in self.pairs for x in pair)
        if flat != list(range(1, 2 * self.n + 1)):
            raise ValueError(f"not a perfect matching on 1..{2 * self.n}")
        return self


class IndexPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    I: Tuple[int, ...]
    I_tilde: Tuple[int, ...]

    @field_validator("I", "I_tilde", mode="before")
    @classmethod
    def _sort(cls, value):
        return tuple(sorted(value))

    def ground(self) -> Tuple[int, ...]:
        return tuple(sorted(
            [ground_index(i) for i in self.I] + [ground_index(i, tilde=True) for i in self.I_tilde]
        ))

    @classmethod
    def from_ground(cls, key: Tuple[int, ...]) -> "IndexPair":
        return cls(
            I=[g // 2 + 1 for g in key if g % 2 == 0],
            I_tilde=[g // 2 + 1 for g in key if g % 2 == 1],
        )


# -----------------------------
# Networks
# -----------------------------

class Edge(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    ends: Tuple[str, str]
    conductance: Rat


class CactusNetwork(BaseModel):
    """A network file as parsed; semantic checks live in ``network.validate``.

    Boundary vertices are named ``b1``..``bn``. A boundary rotation lists edges
    clockwise starting next to the boundary arc toward the following label.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    shape: Tuple[Tuple[int, ...], ...]
    internal_vertices: Tuple[str, ...] = ()
    edges: Tuple[Edge, ...] = ()
    rotations: Dict[str, Tuple[str, ...]] = {}

    @field_validator("shape", mode="before")
    @classmethod
    def _canonical_shape(cls, value):
        return _canonical_blocks(value)

    @staticmethod
    def boundary_name(label: int) -> str:
        return f"b{label}"

    @property
    def boundary_vertices(self) -> Tuple[str, ...]:
        return tuple(self.boundary_name(i) for i in range(1, self.n + 1))

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.boundary_vertices + self.internal_vertices

    @property
    def partition(self) -> NoncrossingPartition:
        return NoncrossingPartition(n=self.n, blocks=self.shape)

    def boundary_label(self, vertex: str) -> Optional[int]:
        if vertex in self.boundary_vertices:
            return int(vertex[1:])
        return None

    def edge(self, edge_id: str) -> Edge:
        for edge in self.edges:
            if edge.id == edge_id:
                return edge
        raise KeyError(edge_id)

    def rotation(self, vertex: str) -> Tuple[str, ...]:
        return tuple(self.rotations.get(vertex, ()))

    def conductance_product(self):
        product = Integer(1)
        for edge in self.edges:
            product *= edge.conductance
        return product


class Grove(BaseModel):
    model_config = ConfigDict(frozen=True)

    edges: Tuple[str, ...]


class GroveMeasurements(BaseModel):
    """Sparse Λ vector: partitions with Λ_σ = 0 are absent."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    values: Dict[NoncrossingPartition, Rat] = {}

    @field_validator("values", mode="before")
    @classmethod
    def _drop_zeros(cls, value):
        return {k: v for k, v in sorted(dict(value).items()) if as_rational(v) != 0}

    def get(self, sigma: NoncrossingPartition):
        return self.values.get(sigma, Integer(0))

    def is_zero(self) -> bool:
        return not self.values


class Strand(BaseModel):
    model_config = ConfigDict(frozen=True)

    endpoints: Optional[Tuple[int, int]] = None
    crossings: Tuple[str, ...] = ()

    @property
    def closed(self) -> bool:
        return self.endpoints is None


class MedialPairing(BaseModel):
    model_config = ConfigDict(frozen=True)

    matching: Matching


# -----------------------------
# Exterior algebra and matrices
# -----------------------------

class ExteriorVector(BaseModel):
    """Sparse coordinates on the basis e_S, S a sorted tuple of ground positions."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    degree: int = Field(ge=0)
    coords: Dict[Tuple[int, ...], Rat] = {}

    @field_validator("coords", mode="before")
    @classmethod
    def _drop_zeros(cls, value):
        return {tuple(k): v for k, v in sorted((tuple(k), v) for k, v in dict(value).items()) if as_rational(v) != 0}

    @model_validator(mode="after")
    def _check_keys(self):
        for key in self.coords:
            if len(key) != self.degree or list(key) != sorted(set(key)):
                raise ValueError(f"bad basis index {key} for degree {self.degree}")
            if key and (key[0] < 0 or key[-1] >= 2 * self.n):
                raise ValueError(f"basis index {key} outside the ground set")
        return self

    def get(self, key: Tuple[int, ...]):
        return self.coords.get(tuple(key), Integer(0))

    def is_zero(self) -> bool:
        return not self.coords

    @staticmethod
    def key_label(key: Tuple[int, ...]) -> str:
        return ",".join(ground_label(g) for g in key)

    def __add__(self, other: "ExteriorVector") -> "ExteriorVector":
        merged = dict(self.coords)
        for key, value in other.coords.items():
            merged[key] = merged.get(key, Integer(0)) + value
        return ExteriorVector(n=self.n, degree=self.degree, coords=merged)

    def scaled(self, factor) -> "ExteriorVector":
        return ExteriorVector(
            n=self.n, degree=self.degree, coords={k: v * factor for k, v in self.coords.items()}
        )


class _MatrixModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: ImmutableMatrix

    @field_validator("matrix", mode="before")
    @classmethod
    def _immutable(cls, value):
        return ImmutableMatrix(value)

    def rows(self) -> List[List]:
        return self.matrix.tolist()


class SubspaceRep(_MatrixModel):
    """An (n+1) x 2n matrix, columns ordered 1, 1~, 2, 2~, ..."""

    @model_validator(mode="after")
    def _check_shape(self):
        rows, cols = self.matrix.shape
        if cols % 2 or rows != cols // 2 + 1:
            raise ValueError(f"expected an (n+1) x 2n matrix, got {rows} x {cols}")
        return self

    @property
    def n(self) -> int:
        return self.matrix.shape[1] // 2


class SkewForm(_MatrixModel):
    variant: Literal["omega", "omega_d"]

    @property
    def n(self) -> int:
        return self.matrix.shape[0] // 2


class ResponseMatrix(_MatrixModel):
    labels: Tuple[str, ...] = ()


class ResistanceMatrix(_MatrixModel):
    pass


class QuotientGraph(BaseModel):
    """Γ: boundary vertices are the blocks of the shape, keyed like ``{2,3}``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    graph: object
    boundary: Tuple[str, ...]
    internal: Tuple[str, ...]
    loops: Tuple[str, ...] = ()

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self.boundary + self.internal
