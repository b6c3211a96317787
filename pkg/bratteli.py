"""
FusedHecke Bratteli Diagrams
Bratteli diagrams of the chains {H_{k,n}(q)}, their quotients, minimal
generating sets and the centraliser diagrams
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from config import get_config
from error_handling import (
    BudgetExceededError,
    InvariantError,
    PreconditionError,
    ValidationError,
)
from logging_config import get_logger, log_performance
from shapes import Partition, kostka, phi_column_removal, res_set, s_set
from validation import BudgetValidator

logger = get_logger()

VertexKey = Tuple[int, Partition]


@dataclass(frozen=True)
class Vertex:
    partition: Partition
    dim: int


@dataclass(frozen=True)
class Edge:
    """Joins vertex `upper` at level n to vertex `lower` at level n+1."""

    upper: int
    lower: int
    multiplicity: int = 1


@dataclass
class BratteliDiagram:
    """
    Levelled multigraph of irreducible representations.

    levels[n] lists the vertices of level n in reverse lexicographic order;
    edges[n] joins level n to level n+1.
    """

    k: Tuple[int, ...]
    levels: List[List[Vertex]]
    edges: List[List[Edge]] = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def keys(self) -> List[VertexKey]:
        return [(n, v.partition) for n, level in enumerate(self.levels) for v in level]

    def index(self, n: int, partition: Partition) -> int:
        for j, v in enumerate(self.levels[n]):
            if v.partition == partition:
                return j
        raise ValidationError(
            f"No vertex {partition} at level {n}", field="vertex", value=(n, partition.parts)
        )

    def successors(self, n: int, partition: Partition) -> List[Partition]:
        if n >= self.depth:
            return []
        j = self.index(n, partition)
        return [self.levels[n + 1][e.lower].partition for e in self.edges[n] if e.upper == j]

    def predecessors(self, n: int, partition: Partition) -> List[Partition]:
        if n == 0:
            return []
        j = self.index(n, partition)
        return [self.levels[n - 1][e.upper].partition for e in self.edges[n - 1] if e.lower == j]

    def dims(self, n: int) -> Dict[Partition, int]:
        return {v.partition: v.dim for v in self.levels[n]}


def _with_dims(
    k: Tuple[int, ...],
    labels: List[List[Partition]],
    edge_labels: List[List[Tuple[Partition, Partition]]],
) -> BratteliDiagram:
    """Assemble a diagram from labels, computing dims by the path recursion."""
    levels: List[List[Vertex]] = []
    edges: List[List[Edge]] = []
    for n, level in enumerate(labels):
        if n == 0:
            levels.append([Vertex(p, 1) for p in level])
            continue
        lower_index = {p: j for j, p in enumerate(level)}
        upper_index = {p: j for j, p in enumerate(labels[n - 1])}
        below = [
            Edge(upper_index[u], lower_index[v])
            for u, v in edge_labels[n - 1]
            if u in upper_index and v in lower_index
        ]
        edges.append(sorted(below, key=lambda e: (e.upper, e.lower)))
        dims = [0] * len(level)
        for e in below:
            dims[e.lower] += levels[n - 1][e.upper].dim * e.multiplicity
        levels.append([Vertex(p, d) for p, d in zip(level, dims)])
    return BratteliDiagram(k, levels, edges)


def _edge_labels(d: BratteliDiagram) -> List[List[Tuple[Partition, Partition]]]:
    return [
        [(d.levels[n][e.upper].partition, d.levels[n + 1][e.lower].partition) for e in level]
        for n, level in enumerate(d.edges)
    ]


@log_performance("bratteli.build_chain")
def build_chain(k: Sequence[int], n_max: int) -> BratteliDiagram:
    """Levels S_{k,0..n_max}; edges from horizontal strips of size k_n."""
    if n_max < 0:
        raise ValidationError("n_max must be non-negative", field="n_max", value=n_max)
    k = tuple(k)[:n_max]
    if len(k) < n_max:
        raise ValidationError("Composition shorter than n_max", field="k", value=k)
    limit = get_config().budget.max_bratteli_weight
    if not BudgetValidator(limit, "bratteli").validate(sum(k)).is_valid:
        raise BudgetExceededError(
            f"Diagram weight {sum(k)} exceeds {limit}", weight=sum(k), limit=limit
        )

    labels = [s_set(k, n) for n in range(n_max + 1)]
    edge_labels = [
        [(mu, lam) for lam in labels[n] for mu in res_set(lam, k, n)]
        for n in range(1, n_max + 1)
    ]
    diagram = _with_dims(k, labels, edge_labels)
    for n, level in enumerate(diagram.levels):
        for v in level:
            expected = kostka(v.partition, k[:n])
            if v.dim != expected:
                raise InvariantError(
                    f"Dimension of {v.partition} at level {n} is {v.dim}, "
                    f"Kostka number is {expected}",
                    kind="BratteliDiagram",
                    value=v.partition.parts,
                )
    return diagram


def closure(d: BratteliDiagram, seed: Iterable[VertexKey]) -> Set[VertexKey]:
    """⟨S⟩: every vertex reached from S by a path going down the levels."""
    out: Set[VertexKey] = set()
    frontier = list(seed)
    for n, p in frontier:
        d.index(n, p)
    while frontier:
        key = frontier.pop()
        if key in out:
            continue
        out.add(key)
        n, p = key
        frontier.extend((n + 1, s) for s in d.successors(n, p))
    return out


def quotient(d: BratteliDiagram, seed: Iterable[VertexKey]) -> BratteliDiagram:
    """Remove ⟨S⟩ and every edge touching it."""
    removed = closure(d, seed)
    labels = [
        [v.partition for v in level if (n, v.partition) not in removed]
        for n, level in enumerate(d.levels)
    ]
    result = _with_dims(d.k, labels, _edge_labels(d))
    for n, level in enumerate(result.levels):
        original = d.dims(n)
        for v in level:
            if v.dim != original[v.partition]:
                raise InvariantError(
                    "Quotient changed a surviving dimension",
                    kind="quotient",
                    value=(n, v.partition.parts),
                )
    return result


def _sorted_keys(keys: Iterable[VertexKey]) -> List[VertexKey]:
    return sorted(keys, key=lambda key: (key[0], tuple(-p for p in key[1].parts)))


def minimal_generators(d: BratteliDiagram, removed: Iterable[VertexKey]) -> List[VertexKey]:
    """Minimal elements of a path-closed vertex set, by level then partition."""
    removed = set(removed)
    for n, p in removed:
        missing = [s for s in d.successors(n, p) if (n + 1, s) not in removed]
        if missing:
            raise PreconditionError(
                f"Set is not closed: {p} at level {n} leads to {missing[0]}",
                operation="minimal_generators",
                vertex=p.parts,
                level=n,
            )
    return _sorted_keys(
        (n, p)
        for n, p in removed
        if not any((n - 1, u) in removed for u in d.predecessors(n, p))
    )


def short_partitions(d: BratteliDiagram) -> Set[VertexKey]:
    """S^<: vertices λ at level n with fewer than n rows."""
    return {(n, p) for n, p in d.keys() if p.length < n}


def predicted_minimal_generators(k: Sequence[int], n_max: int) -> List[VertexKey]:
    """{λ ∈ S_{k,n} : l(λ) < n and λ_{n-1} > k_n} over the levels up to n_max."""
    k = tuple(k)
    return _sorted_keys(
        (n, lam)
        for n in range(1, n_max + 1)
        for lam in s_set(k, n)
        if lam.length < n and lam.part(n - 1) > k[n - 1]
    )


def long_partitions(d: BratteliDiagram, N: int) -> Set[VertexKey]:
    return {(n, p) for n, p in d.keys() if p.length > N}


@log_performance("bratteli.centralizer_diagram")
def centralizer_diagram(k: Sequence[int], N: int, n_max: int) -> BratteliDiagram:
    """Quotient of the chain by every λ with more than N rows."""
    if N < 1:
        raise ValidationError("N must be positive", field="N", value=N)
    d = build_chain(k, n_max)
    removed = long_partitions(d, N)
    prefix = d.k
    if all(a >= b for a, b in zip(prefix, prefix[1:])) and n_max > N:
        generated = closure(d, [(N + 1, p) for p in d.dims(N + 1) if p.length == N + 1])
        if generated != removed:
            raise InvariantError(
                "Removed set is not generated at level N+1",
                kind="centralizer_diagram",
                value=N,
            )
    return quotient(d, removed)


def is_chain_of_quotients(d: BratteliDiagram, removed: Iterable[VertexKey]) -> bool:
    """I_n = I_{n+1} ∩ A_n: v is removed exactly when all its successors are."""
    removed = set(removed)
    for n, p in d.keys():
        if n >= d.depth:
            continue
        inside = (n, p) in removed
        above = all((n + 1, s) in removed for s in d.successors(n, p))
        if inside != above:
            return False
    return True


def relabel(
    d: BratteliDiagram,
    mapping: Callable[[int, Partition], Partition],
    k: Optional[Sequence[int]] = None,
) -> BratteliDiagram:
    """Rename every vertex; levels are re-sorted into canonical order."""
    labels = [
        sorted((mapping(n, v.partition) for v in level), reverse=True)
        for n, level in enumerate(d.levels)
    ]
    edge_labels = [
        [(mapping(n, u), mapping(n + 1, v)) for u, v in level]
        for n, level in enumerate(_edge_labels(d))
    ]
    return _with_dims(tuple(k) if k is not None else d.k, labels, edge_labels)


def _signature(d: BratteliDiagram):
    return (
        [sorted((v.partition, v.dim) for v in level) for level in d.levels],
        [sorted(level) for level in _edge_labels(d)],
    )


def isomorphic(d1: BratteliDiagram, d2: BratteliDiagram) -> bool:
    """Same labelled vertices, dimensions and edges on every level."""
    return d1.depth == d2.depth and _signature(d1) == _signature(d2)


def column_removal_image(d: BratteliDiagram, k_minus_one: Sequence[int]) -> BratteliDiagram:
    """Relabel a diagram of full-length partitions by removing first columns."""
    return relabel(d, lambda n, p: phi_column_removal(p, n), k_minus_one)


def level_dimension(d: BratteliDiagram, n: int) -> int:
    """Σ dim² over level n: the dimension of the algebra at that level."""
    return sum(v.dim**2 for v in d.levels[n])


def to_json(d: BratteliDiagram) -> Dict:
    return {
        "k": list(d.k),
        "levels": [
            [{"partition": v.partition.to_json(), "dim": v.dim} for v in level]
            for level in d.levels
        ],
        "edges": [[[e.upper, e.lower] for e in level] for level in d.edges],
    }


def structure(d: BratteliDiagram) -> Dict[str, List]:
    """Vertices as (parts, dim) and edges as (upper parts, lower parts), in diagram order."""
    return {
        "vertices": [[(v.partition.parts, v.dim) for v in level] for level in d.levels],
        "edges": [[(u.parts, v.parts) for u, v in level] for level in _edge_labels(d)],
    }


def _dot_id(n: int, j: int) -> str:
    return f'"v{n}_{j}"'


def to_dot(d: BratteliDiagram, name: str = "bratteli") -> str:
    """Deterministic DOT text, one rank per level, labels "λ (dim)"."""
    lines = [f"digraph {name} {{", "\trankdir=TB;", "\tnode [shape=plaintext];"]
    for n, level in enumerate(d.levels):
        lines.append("\t{")
        lines.append("\t\trank = same;")
        for j, v in enumerate(level):
            lines.append(f'\t\t{_dot_id(n, j)} [label="{v.partition} ({v.dim})"];')
        lines.append("\t}")
    for n, level in enumerate(d.edges):
        for e in level:
            lines.append(f"\t{_dot_id(n, e.upper)} -> {_dot_id(n + 1, e.lower)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
