"""
FusedHecke Seminormal Representations
Seminormal matrices of H_m(q) on skew shapes, symmetriser images and the
irreducible representations W_{k,λ} of the fused Hecke algebras
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import linalg
from error_handling import InvariantError, PreconditionError, SizeMismatchError, ValidationError
from fused import basis_element, embed
from hecke import HeckeElem, parabolic_symmetrizer, symmetrizer
from linalg import DenseMat
from logging_config import get_logger, log_performance
from monitoring import parallel_map
from permcomb import Blocks, FusedPerm, enumerate_fused, reduced_word, rep_from_matrix
from qcoeff import QField, RatFunc, q, q_number
from shapes import (
    Partition,
    SkewShape,
    Tableau,
    bar_map,
    enumerate_semistandard,
    enumerate_standard,
    res_set,
    s_set,
)

logger = get_logger()


@dataclass
class RepMatrix:
    """Square matrix of an algebra element acting on a labelled basis."""

    entries: DenseMat
    basis_labels: List[Tableau]

    def __post_init__(self):
        if len(self.entries) != len(self.basis_labels) or any(
            len(row) != len(self.entries) for row in self.entries
        ):
            raise SizeMismatchError(
                "Representation matrix is not square over its basis",
                len(self.entries),
                len(self.basis_labels),
            )

    @property
    def dim(self) -> int:
        return len(self.basis_labels)

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(linalg.matmul(self.entries, other.entries), self.basis_labels)

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        return RepMatrix(linalg.add(self.entries, other.entries), self.basis_labels)

    def scale(self, c) -> "RepMatrix":
        return RepMatrix(linalg.scale(self.entries, c), self.basis_labels)

    def is_zero(self) -> bool:
        return linalg.is_zero(self.entries)

    def trace(self) -> RatFunc:
        return linalg.trace(self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return self.basis_labels == other.basis_labels and self.entries == other.entries

    def to_json(self) -> Dict:
        return {
            "basis": [t.to_json() for t in self.basis_labels],
            "matrix": linalg.to_strings(self.entries),
        }


def zero_matrix(labels: List[Tableau]) -> RepMatrix:
    return RepMatrix(linalg.zeros(len(labels), len(labels)), labels)


def identity_matrix(labels: List[Tableau]) -> RepMatrix:
    return RepMatrix(linalg.identity(len(labels)), labels)


def q_content(t: Tableau, letter: int) -> RatFunc:
    """c(θ) = q^{2(column - row)} of the cell holding the letter."""
    return q ** (2 * t.content(letter))


@lru_cache(maxsize=None)
def _standard(shape: SkewShape) -> Tuple[Tableau, ...]:
    return tuple(enumerate_standard(shape))


def _check_generator(shape: SkewShape, i: int):
    if not 1 <= i < shape.size:
        raise ValidationError(
            f"Generator index {i} out of range for shape {shape}", field="i", value=i
        )


def _seminormal(shape: SkewShape, i: int, coefficients) -> RepMatrix:
    labels = list(_standard(shape))
    index = {t: j for j, t in enumerate(labels)}
    M = linalg.zeros(len(labels), len(labels))
    for j, t in enumerate(labels):
        diagonal, off = coefficients(t)
        M[j][j] = diagonal
        moved = t.swap(i)
        if moved in index:
            M[index[moved]][j] = off
    return RepMatrix(M, labels)


@lru_cache(maxsize=None)
def generator_matrix(shape: SkewShape, i: int) -> RepMatrix:
    """Matrix of σ_i on the basis v_t, columns indexed by t."""
    _check_generator(shape, i)

    def coefficients(t):
        c_i, c_next = q_content(t, i), q_content(t, i + 1)
        gap = c_next - c_i
        return (q - q ** (-1)) * c_next / gap, (q * c_next - q ** (-1) * c_i) / gap

    return _seminormal(shape, i, coefficients)


def generator_matrix_axial(shape: SkewShape, i: int) -> RepMatrix:
    """The same matrix written with the axial distance d and q-numbers."""
    _check_generator(shape, i)

    def coefficients(t):
        d = t.content(i + 1) - t.content(i)
        return q**d / q_number(d), q_number(d + 1) / q_number(d)

    return _seminormal(shape, i, coefficients)


def generator_matrices(shape: SkewShape, threads: Optional[int] = None) -> List[RepMatrix]:
    """All σ_i matrices, computed independently."""
    return parallel_map(
        lambda i: generator_matrix(shape, i), range(1, shape.size), threads
    )


@lru_cache(maxsize=None)
def _word_matrix(shape: SkewShape, word: Tuple[int, ...]) -> RepMatrix:
    if not word:
        return identity_matrix(list(_standard(shape)))
    return _word_matrix(shape, word[:-1]) @ generator_matrix(shape, word[-1])


def rep_of_hecke(e: HeckeElem, shape: SkewShape) -> RepMatrix:
    """Linear extension of σ_w ↦ R_{i1}···R_{ir} over a reduced word of w."""
    if e.m != shape.size:
        raise SizeMismatchError("Element and shape sizes differ", e.m, shape.size)
    labels = list(_standard(shape))
    result = zero_matrix(labels)
    for w, c in e.items():
        result = result + _word_matrix(shape, reduced_word(w)).scale(c)
    return result


@dataclass
class SymmetrizerImage:
    rank: int
    vector: Optional[List[RatFunc]]


def symmetrizer_image(shape: SkewShape) -> SymmetrizerImage:
    """Rank of P_k on V_{λ/μ}; a horizontal strip gives the line through Σ v_t."""
    image = rep_of_hecke(symmetrizer(shape.size), shape)
    rank = linalg.rank_over_field(image.entries)
    if rank == 0:
        return SymmetrizerImage(0, None)
    total = [QField.one] * image.dim
    projected = linalg.matmul(image.entries, [[x] for x in total])
    if rank != 1 or [row[0] for row in projected] != total:
        raise InvariantError(
            f"Unexpected symmetriser image on {shape}", kind="symmetrizer_image", value=rank
        )
    return SymmetrizerImage(1, total)


def _require_label(lam: Partition, k: Sequence[int], n: int):
    if lam not in s_set(k, n):
        raise PreconditionError(
            f"{lam} does not label a representation of H_{{k,{n}}}",
            operation="fused_irrep",
            shape=lam.parts,
            k=tuple(k)[:n],
        )


@lru_cache(maxsize=None)
def _fused_irrep(lam: Partition, k: Tuple[int, ...]) -> Dict[FusedPerm, RepMatrix]:
    n = len(k)
    blocks = Blocks(k)
    shape = SkewShape(lam)
    standard = list(_standard(shape))
    classes = enumerate_semistandard(shape, k)
    class_index = {T: a for a, T in enumerate(classes)}
    owner = [class_index.get(bar_map(t, k, n)) for t in standard]

    # w_T has entry 1 exactly on the standard t with bar(t) = T
    columns = [
        [QField.one if owner[j] == a else QField.zero for j in range(len(standard))]
        for a in range(len(classes))
    ]
    projector = rep_of_hecke(parabolic_symmetrizer(blocks), shape)

    out: Dict[FusedPerm, RepMatrix] = {}
    for label in enumerate_fused(blocks):
        sigma = _word_matrix(shape, reduced_word(rep_from_matrix(label, blocks)))
        action = projector @ sigma @ projector
        M = linalg.zeros(len(classes), len(classes))
        for a, column in enumerate(columns):
            image = linalg.matmul(action.entries, [[x] for x in column])
            seen: Dict[int, RatFunc] = {}
            for j, (value,) in enumerate(image):
                b = owner[j]
                if b is None:
                    if value:
                        raise InvariantError(
                            "Image left the span of the w_T vectors",
                            kind="fused_irrep",
                            value=str(standard[j]),
                        )
                    continue
                if b in seen and seen[b] != value:
                    raise InvariantError(
                        "Image is not constant on a w_T support",
                        kind="fused_irrep",
                        value=str(classes[b]),
                    )
                seen[b] = value
            for b, value in seen.items():
                M[b][a] = value
        out[label] = RepMatrix(M, classes)
    return out


@log_performance("seminormal.fused_irrep")
def fused_irrep(lam: Partition, k: Sequence[int], n: int) -> Dict[FusedPerm, RepMatrix]:
    """
    Matrices of every F_w on W_{k,λ} in the basis w_T.

    w_T is the sum of the v_t whose block relabelling is T; the supports of
    distinct w_T are disjoint, so coordinates are read off any such t.
    """
    _require_label(lam, k, n)
    return _fused_irrep(lam, tuple(k)[:n])


def restricted_character(lam: Partition, k: Sequence[int], n: int) -> Dict[FusedPerm, RatFunc]:
    """Traces of the basis of H_{k,n-1} acting on W_{k,λ} through the inclusion."""
    _require_label(lam, k, n)
    k = tuple(k)[:n]
    lower = Blocks(k[:-1])
    irrep = _fused_irrep(lam, k)
    out = {}
    for u in enumerate_fused(lower):
        lifted = embed(basis_element(lower, u), Blocks(k)).support()[0]
        out[u] = irrep[lifted].trace()
    return out


def branching_check(lam: Partition, k: Sequence[int], n: int) -> bool:
    """Restriction of W_{k,λ} has the character of ⊕_{μ ∈ Res(λ)} W_{k,μ}."""
    restricted = restricted_character(lam, k, n)
    expected = {u: QField.zero for u in restricted}
    for mu in res_set(lam, k, n):
        for u, matrix in _fused_irrep(mu, tuple(k)[: n - 1]).items():
            expected[u] += matrix.trace()
    ok = restricted == expected
    logger.log_check(
        "branching", "verified" if ok else "failed", shape=lam.parts, level=n
    )
    return ok
