"""
FusedHecke Shapes
Partitions, skew shapes, standard and semistandard tableaux, Kostka numbers
and the branching combinatorics of the fused chain
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from error_handling import InvariantError, PreconditionError, SizeMismatchError
from permcomb import Blocks

Node = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts; parts beyond the length read as 0."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(p <= 0 for p in self.parts) or any(
            a < b for a, b in zip(self.parts, self.parts[1:])
        ):
            raise InvariantError(
                f"Not a partition: {self.parts}", kind="Partition", value=self.parts
            )

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Partition":
        """Build from a sequence, dropping trailing zeros."""
        return cls(tuple(p for p in parts if p != 0))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """λ_i, 1-based, zero past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p >= c) for c in range(1, self.parts[0] + 1))
        )

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= p for i, p in enumerate(other.parts, start=1))

    def nodes(self) -> List[Node]:
        return [(r, c) for r, p in enumerate(self.parts, start=1) for c in range(1, p + 1)]

    def to_json(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        return "(" + ",".join(map(str, self.parts)) + ")"


EMPTY = Partition()


def partitions(size: int, max_length: Optional[int] = None) -> List[Partition]:
    """All partitions of size, reverse lexicographic."""
    return list(_partitions(size, size if max_length is None else max_length))


@lru_cache(maxsize=None)
def _partitions(size: int, max_length: int) -> Tuple[Partition, ...]:
    out: List[Partition] = []

    def build(remaining: int, largest: int, prefix: List[int]):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if len(prefix) == max_length:
            return
        for p in range(min(remaining, largest), 0, -1):
            prefix.append(p)
            build(remaining - p, p, prefix)
            prefix.pop()

    build(size, size, [])
    return tuple(out)


def ordered(weight: Sequence[int]) -> Partition:
    """ν^ord: the parts of a composition sorted decreasingly."""
    return Partition.of(sorted(weight, reverse=True))


@dataclass(frozen=True)
class SkewShape:
    """λ/μ with μ ⊆ λ; cells are (row, column), 1-based."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise InvariantError(
                f"{self.inner} is not contained in {self.outer}",
                kind="SkewShape",
                value=(self.outer.parts, self.inner.parts),
            )

    @classmethod
    def of(cls, outer: Sequence[int], inner: Sequence[int] = ()) -> "SkewShape":
        return cls(Partition.of(outer), Partition.of(inner))

    @cached_property
    def nodes(self) -> Tuple[Node, ...]:
        """Cells in row-major scan order."""
        return tuple(
            (r, c)
            for r in range(1, self.outer.length + 1)
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1)
        )

    @property
    def size(self) -> int:
        return len(self.nodes)

    def is_horizontal_strip(self) -> bool:
        """At most one cell in each column."""
        columns = [c for _, c in self.nodes]
        return len(columns) == len(set(columns))

    def __str__(self) -> str:
        if not self.inner.parts:
            return str(self.outer)
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class Tableau:
    """Filling of a skew shape; entries follow the shape's row-major cell order."""

    shape: SkewShape
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.shape.size:
            raise SizeMismatchError(
                "Tableau entries do not match its shape",
                len(self.entries),
                self.shape.size,
            )

    @cached_property
    def cells(self) -> Dict[Node, int]:
        return dict(zip(self.shape.nodes, self.entries))

    def rows(self) -> List[List[Optional[int]]]:
        """Row arrays; inner cells are None."""
        out = []
        for r in range(1, self.shape.outer.length + 1):
            inner = self.shape.inner.part(r)
            out.append(
                [None] * inner
                + [self.cells[(r, c)] for c in range(inner + 1, self.shape.outer.part(r) + 1)]
            )
        return out

    def to_json(self) -> List[List[Optional[int]]]:
        return self.rows()

    def weight(self, length: Optional[int] = None) -> Tuple[int, ...]:
        top = max(self.entries, default=0)
        size = top if length is None else max(length, top)
        return tuple(self.entries.count(a) for a in range(1, size + 1))

    def is_semistandard(self) -> bool:
        cells = self.cells
        for (r, c), x in cells.items():
            if (r, c + 1) in cells and cells[(r, c + 1)] < x:
                return False
            if (r + 1, c) in cells and cells[(r + 1, c)] <= x:
                return False
        return True

    def is_standard(self) -> bool:
        return sorted(self.entries) == list(range(1, self.shape.size + 1)) and (
            self.is_semistandard()
        )

    def node_of(self, letter: int) -> Node:
        """Cell holding a letter of a standard tableau."""
        return self.shape.nodes[self.entries.index(letter)]

    def content(self, letter: int) -> int:
        """Column minus row of the cell holding the letter."""
        r, c = self.node_of(letter)
        return c - r

    def swap(self, i: int) -> "Tableau":
        """s_i(t): exchange the letters i and i+1."""
        swap = {i: i + 1, i + 1: i}
        return Tableau(self.shape, tuple(swap.get(x, x) for x in self.entries))

    def __str__(self) -> str:
        return "/".join(
            ",".join("." if x is None else str(x) for x in row) for row in self.rows()
        )


def _check_sizes(shape: SkewShape, weight: Sequence[int]):
    if shape.size != sum(weight):
        raise SizeMismatchError("Shape and weight sizes differ", shape.size, sum(weight))


def _fillings(shape: SkewShape, weight: Sequence[int]) -> Iterator[Tableau]:
    nodes = shape.nodes
    remaining = list(weight)
    filled: Dict[Node, int] = {}
    entries: List[int] = []

    def place(pos: int) -> Iterator[Tableau]:
        if pos == len(nodes):
            yield Tableau(shape, tuple(entries))
            return
        r, c = nodes[pos]
        low = max(filled.get((r, c - 1), 1), filled.get((r - 1, c), 0) + 1)
        for value in range(low, len(remaining) + 1):
            if not remaining[value - 1]:
                continue
            remaining[value - 1] -= 1
            filled[(r, c)] = value
            entries.append(value)
            yield from place(pos + 1)
            entries.pop()
            del filled[(r, c)]
            remaining[value - 1] += 1

    yield from place(0)


def enumerate_semistandard(shape: SkewShape, weight: Sequence[int]) -> List[Tableau]:
    """Semistandard fillings of the given weight, lexicographic on entries."""
    _check_sizes(shape, weight)
    return list(_fillings(shape, tuple(weight)))


def enumerate_standard(shape: SkewShape) -> List[Tableau]:
    return enumerate_semistandard(shape, (1,) * shape.size)


def kostka(shape, weight: Sequence[int]) -> int:
    """K_{λ,ν}; shape may be a Partition or a SkewShape."""
    if isinstance(shape, Partition):
        shape = SkewShape(shape)
    _check_sizes(shape, weight)
    return _kostka(shape, tuple(weight))


@lru_cache(maxsize=None)
def _kostka(shape: SkewShape, weight: Tuple[int, ...]) -> int:
    return sum(1 for _ in _fillings(shape, weight))


def dominance_geq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """λ ≥ μ in dominance order."""
    lam = lam.parts if isinstance(lam, Partition) else tuple(lam)
    mu = mu.parts if isinstance(mu, Partition) else tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatchError("Dominance needs equal sizes", sum(lam), sum(mu))
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def slide_witness(lam: Partition, mu: Sequence[int]) -> Tableau:
    """
    A tableau in SSTab(λ, μ) built letter by letter from the last one.

    The letter n goes to the bottom cell of each of the first μ_n columns
    and is slid right along its row; the rest is filled recursively.
    """
    mu = tuple(mu)
    if lam.size != sum(mu):
        raise SizeMismatchError("Shape and weight sizes differ", lam.size, sum(mu))
    if not dominance_geq(lam, ordered(mu)):
        raise PreconditionError(
            f"No semistandard tableau of shape {lam} and weight {mu}",
            operation="slide_witness",
            shape=lam.parts,
            weight=mu,
        )
    grid = [[0] * p for p in lam.parts]
    current = list(lam.parts)
    for letter in range(len(mu), 0, -1):
        count = mu[letter - 1]
        column_heights = Partition.of(current).conjugate().parts
        per_row = [0] * len(current)
        for c in range(count):
            per_row[column_heights[c] - 1] += 1
        for r, taken in enumerate(per_row):
            for c in range(current[r] - taken, current[r]):
                grid[r][c] = letter
            current[r] -= taken
        if any(a < b for a, b in zip(current, current[1:])):
            raise InvariantError(
                "Sliding left a non-partition shape", kind="slide_witness", value=current
            )
    return Tableau(SkewShape(lam), tuple(x for row in grid for x in row))


def _prefix(k: Sequence[int], n: int) -> Tuple[int, ...]:
    k = tuple(k)
    if len(k) < n:
        raise SizeMismatchError("Composition shorter than the level", len(k), n)
    return k[:n]


def s_set(k: Sequence[int], n: int) -> List[Partition]:
    """Partitions λ ⊢ k_1+...+k_n with λ ≥ (k_1,...,k_n)^ord, reverse lexicographic."""
    return list(_s_set(_prefix(k, n)))


@lru_cache(maxsize=None)
def _s_set(prefix: Tuple[int, ...]) -> Tuple[Partition, ...]:
    target = ordered(prefix)
    return tuple(lam for lam in partitions(sum(prefix)) if dominance_geq(lam, target))


def is_horizontal_strip(lam: Partition, mu: Partition) -> bool:
    """μ ⊆ λ and λ/μ has at most one cell per column."""
    return lam.contains(mu) and all(
        lam.part(i + 1) <= mu.part(i) for i in range(1, lam.length + 1)
    )


def res_set(lam: Partition, k: Sequence[int], n: int) -> List[Partition]:
    """μ ∈ S_{k,n-1} with λ/μ a horizontal strip of k_n cells."""
    prefix = _prefix(k, n)
    if lam not in _s_set(prefix):
        raise PreconditionError(
            f"{lam} does not label an irreducible representation at level {n}",
            operation="res_set",
            shape=lam.parts,
            k=prefix,
        )
    if n == 0:
        return []
    return [mu for mu in _s_set(prefix[:-1]) if is_horizontal_strip(lam, mu)]


def bar_map(t: Tableau, k: Sequence[int], n: int) -> Tableau:
    """Replace the first k_1 letters by 1, the next k_2 by 2, and so on."""
    blocks = Blocks(_prefix(k, n))
    if t.shape.size != blocks.m:
        raise SizeMismatchError("Tableau size and composition differ", t.shape.size, blocks.m)
    return Tableau(t.shape, tuple(blocks.block_of[x - 1] + 1 for x in t.entries))


def phi_column_removal(lam: Partition, n: int) -> Partition:
    """Remove the first column of a partition with exactly n rows."""
    if lam.length != n:
        raise PreconditionError(
            f"{lam} does not have {n} rows", operation="phi_column_removal", shape=lam.parts
        )
    return Partition.of([p - 1 for p in lam.parts])


def gl_dimension(lam: Partition, N: int) -> int:
    """Number of semistandard tableaux of shape λ with entries ≤ N (hook-content)."""
    conj = lam.conjugate()
    numerator = denominator = 1
    for r, c in lam.nodes():
        numerator *= N + c - r
        denominator *= (lam.part(r) - c) + (conj.part(c) - r) + 1
    return numerator // denominator
