"""
FusedHecke Schur-Weyl Oracle
The Ř-matrix action of H_m(q) on (Q^N)^{⊗m} at rational points, ranks of
centraliser images and kernel membership
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import linalg
from config import get_config
from error_handling import BudgetExceededError, SizeMismatchError, ValidationError
from fused import FusedElem, basis_element
from hecke import HeckeElem, antisymmetrizer, antisymmetrizer_numerator, parabolic_symmetrizer
from logging_config import get_logger, log_performance
from monitoring import parallel_map
from permcomb import Blocks, enumerate_fused, reduced_word, rep_from_matrix
from shapes import Partition, gl_dimension, kostka, s_set
from validation import QPointValidator, validate_or_raise

logger = get_logger()

Row = Dict[int, Fraction]


@dataclass
class SparseMat:
    """Square matrix over Q stored by rows; explicit zeros are never kept."""

    dim: int
    rows: Dict[int, Row] = field(default_factory=dict)

    @classmethod
    def identity(cls, dim: int) -> "SparseMat":
        return cls(dim, {i: {i: Fraction(1)} for i in range(dim)})

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[Tuple[int, int, Fraction]]) -> "SparseMat":
        rows: Dict[int, Row] = {}
        for i, j, v in entries:
            row = rows.setdefault(i, {})
            row[j] = row.get(j, Fraction(0)) + v
        return cls(dim, _pruned(rows))

    def entries(self) -> Iterator[Tuple[int, int, Fraction]]:
        for i in sorted(self.rows):
            for j in sorted(self.rows[i]):
                yield i, j, self.rows[i][j]

    def _check(self, other: "SparseMat"):
        if other.dim != self.dim:
            raise SizeMismatchError("Tensor dimensions differ", self.dim, other.dim)

    def __matmul__(self, other: "SparseMat") -> "SparseMat":
        self._check(other)
        out: Dict[int, Row] = {}
        for i, row in self.rows.items():
            target: Row = {}
            for t, a in row.items():
                for j, b in other.rows.get(t, {}).items():
                    target[j] = target.get(j, Fraction(0)) + a * b
            out[i] = target
        return SparseMat(self.dim, _pruned(out))

    def __add__(self, other: "SparseMat") -> "SparseMat":
        self._check(other)
        out = {i: dict(row) for i, row in self.rows.items()}
        for i, row in other.rows.items():
            target = out.setdefault(i, {})
            for j, v in row.items():
                target[j] = target.get(j, Fraction(0)) + v
        return SparseMat(self.dim, _pruned(out))

    def __sub__(self, other: "SparseMat") -> "SparseMat":
        return self + other.scale(-1)

    def scale(self, c) -> "SparseMat":
        c = Fraction(c)
        if not c:
            return SparseMat(self.dim)
        return SparseMat(
            self.dim, {i: {j: c * v for j, v in row.items()} for i, row in self.rows.items()}
        )

    def is_zero(self) -> bool:
        return not self.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMat):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def vectorize(self) -> Row:
        """Entries as one sparse row indexed by row * dim + col."""
        return {i * self.dim + j: v for i, j, v in self.entries()}

    def rank(self) -> int:
        return linalg.rank_rational([self.rows.get(i, {}) for i in range(self.dim)], self.dim)

    def to_json(self) -> Dict:
        return {"dim": self.dim, "entries": [[i, j, str(v)] for i, j, v in self.entries()]}


def _pruned(rows: Dict[int, Row]) -> Dict[int, Row]:
    out = {}
    for i, row in rows.items():
        kept = {j: v for j, v in row.items() if v}
        if kept:
            out[i] = kept
    return out


def _check_point(q0) -> Fraction:
    validate_or_raise(QPointValidator(), q0, "q0")
    return Fraction(q0)


def _check_states(N: int, m: int) -> int:
    if N < 2:
        raise ValidationError("Tensor factors need N >= 2", field="N", value=N)
    states = N**m
    limit = get_config().budget.max_tensor_states
    if states > limit:
        raise BudgetExceededError(
            f"Tensor space of dimension {states} exceeds {limit}", weight=states, limit=limit
        )
    return states


def tensor_basis(N: int, m: int) -> List[Tuple[int, ...]]:
    """Index tuples of e_{j1}⊗...⊗e_{jm} in lexicographic order, entries 1..N."""
    return list(itertools.product(range(1, N + 1), repeat=m))


@lru_cache(maxsize=None)
def _rmatrix(N: int, m: int, i: int, q0: Fraction) -> SparseMat:
    basis = tensor_basis(N, m)
    index = {t: j for j, t in enumerate(basis)}
    delta = q0 - 1 / q0
    entries = []
    for col, t in enumerate(basis):
        a, b = t[i - 1], t[i]
        swapped = index[t[: i - 1] + (b, a) + t[i + 1 :]]
        if a == b:
            entries.append((col, col, q0))
            continue
        entries.append((swapped, col, Fraction(1)))
        if a < b:
            entries.append((col, col, delta))
    return SparseMat.from_entries(len(basis), entries)


def rmatrix_action(N: int, m: int, i: int, q0) -> SparseMat:
    """Id ⊗ ... ⊗ Ř ⊗ ... ⊗ Id acting on tensor factors i and i+1."""
    q0 = _check_point(q0)
    _check_states(N, m)
    if not 1 <= i < m:
        raise ValidationError(f"Generator index {i} out of range", field="i", value=i)
    return _rmatrix(N, m, i, q0)


@lru_cache(maxsize=None)
def _word_action(N: int, m: int, word: Tuple[int, ...], q0: Fraction) -> SparseMat:
    if not word:
        return SparseMat.identity(N**m)
    return _word_action(N, m, word[:-1], q0) @ _rmatrix(N, m, word[-1], q0)


def _hecke_action(e: HeckeElem, N: int, q0: Fraction) -> SparseMat:
    total = SparseMat(N**e.m)
    for w, value in e.specialize(q0).items():
        total = total + _word_action(N, e.m, reduced_word(w), q0).scale(value)
    return total


@lru_cache(maxsize=None)
def _projector(blocks: Blocks, N: int, q0: Fraction) -> SparseMat:
    return _hecke_action(parabolic_symmetrizer(blocks), N, q0)


def _fused_action(e: FusedElem, N: int, q0: Fraction) -> SparseMat:
    P = _projector(e.blocks, N, q0)
    total = SparseMat(N**e.blocks.m)
    for w, value in e.specialize(q0).items():
        word = reduced_word(rep_from_matrix(w, e.blocks))
        total = total + (P @ _word_action(N, e.blocks.m, word, q0) @ P).scale(value)
    return total


def rep_matrix(e: Union[HeckeElem, FusedElem], N: int, q0) -> SparseMat:
    """
    Action of e on (Q^N)^{⊗m} at q = q0.

    A fused element acts through F_w ↦ P σ_w P on the whole tensor space;
    the image vanishes off the range of P.
    """
    q0 = _check_point(q0)
    m = e.blocks.m if isinstance(e, FusedElem) else e.m
    _check_states(N, m)
    if isinstance(e, FusedElem):
        return _fused_action(e, N, q0)
    return _hecke_action(e, N, q0)


def dump_matrices(k: Sequence[int], n: int, N: int, q0) -> Dict:
    """Image of every standard basis element, keyed by its matrix label."""
    blocks = Blocks(tuple(k)[:n])
    return {
        "k": list(blocks.parts),
        "N": N,
        "q0": str(Fraction(q0)),
        "matrices": [
            {"label": w.to_json(), "action": rep_matrix(basis_element(blocks, w), N, q0).to_json()}
            for w in enumerate_fused(blocks)
        ],
    }


@log_performance("sworacle.centralizer_dim")
def centralizer_dim(k: Sequence[int], n: int, N: int, q0, threads: Optional[int] = None) -> int:
    """Dimension of the image of H_{k,n}(q0) in End((Q^N)^{⊗m})."""
    blocks = Blocks(tuple(k)[:n])
    q0 = _check_point(q0)
    states = _check_states(N, blocks.m)
    labels = enumerate_fused(blocks)
    rows = parallel_map(
        lambda w: rep_matrix(basis_element(blocks, w), N, q0).vectorize(), labels, threads
    )
    rank = linalg.rank_rational(rows, states * states)
    logger.debug(
        "Centraliser rank", k=list(blocks.parts), N=N, q0=str(q0), rank=rank, basis=len(labels)
    )
    return rank


def expected_centralizer_dim(k: Sequence[int], n: int, N: int) -> int:
    """Σ K_{λ,k}² over λ ∈ S_{k,n} with at most N rows."""
    prefix = tuple(k)[:n]
    return sum(kostka(lam, prefix) ** 2 for lam in s_set(prefix, n) if lam.length <= N)


def kernel_member(
    e: Union[HeckeElem, FusedElem], N: int, q0s: Optional[Sequence] = None
) -> bool:
    """e acts as zero at every sample point; a certificate at generic points."""
    points = q0s if q0s is not None else get_config().arithmetic.fractions()
    return all(rep_matrix(e, N, q0).is_zero() for q0 in points)


def antisymmetrizer_vanishes(N: int, q0) -> bool:
    """The q-antisymmetriser on N+1 letters acts as zero on (Q^N)^{⊗(N+1)}."""
    return (
        rep_matrix(antisymmetrizer(N + 1), N, q0).is_zero()
        and rep_matrix(antisymmetrizer_numerator(N + 1), N, q0).is_zero()
    )


def symmetric_power_dimension(k: Sequence[int], N: int) -> int:
    """dim L_{(k1)} ⊗ ... ⊗ L_{(kn)} = ∏ binom(N + k_a - 1, k_a)."""
    return math.prod(math.comb(N + a - 1, a) for a in k)


def tensor_decomposition(k: Sequence[int], n: int, N: int) -> Dict[Partition, Tuple[int, int]]:
    """λ ↦ (multiplicity K_{λ,k}, dim L_λ) over the λ with at most N rows."""
    prefix = tuple(k)[:n]
    return {
        lam: (kostka(lam, prefix), gl_dimension(lam, N))
        for lam in s_set(prefix, n)
        if lam.length <= N
    }
