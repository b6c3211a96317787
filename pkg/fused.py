"""
FusedHecke Fused Algebras
The algebra of fused permutations with its diagram product, and the fused
Hecke algebra H_{k,n}(q) = P H_m(q) P in the standard basis {F_w}
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from error_handling import BlockMismatchError, PreconditionError, ValidationError
from hecke import (
    HeckeElem,
    LinearCombination,
    Scalar,
    mul,
    mul_word,
    parabolic_symmetrizer,
)
from logging_config import get_logger, log_performance
from monitoring import parallel_map
from permcomb import (
    Blocks,
    FusedPerm,
    collapse,
    contingency_tables,
    enumerate_fused,
    identity_matrix,
    matrix_from_perm,
    reduced_word,
    rep_from_matrix,
)
from qcoeff import QField, RatFunc, coerce, is_constant, q, q_number, to_string

logger = get_logger()


class FusedElem(LinearCombination[FusedPerm]):
    """Element of H_{k,n}(q) in the standard basis F_w."""

    __slots__ = ("blocks",)

    def __init__(self, blocks: Blocks, terms: Mapping[FusedPerm, Scalar] = None):
        self.blocks = blocks
        super().__init__(terms)
        for w in self._terms:
            w.check(blocks)

    def _same_space(self, other) -> None:
        if not isinstance(other, FusedElem) or other.blocks != self.blocks:
            raise BlockMismatchError(
                "Fused elements over different blocks",
                self.blocks,
                getattr(other, "blocks", other),
            )

    def _new(self, terms):
        return FusedElem(self.blocks, terms)

    def __mul__(self, other):
        if isinstance(other, FusedElem):
            return multiply_q(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({to_string(c)})*F{w.to_json()}" for w, c in self.items())

    def to_json(self) -> List[List]:
        return [[w.to_json(), to_string(c)] for w, c in self.items()]


def basis_element(blocks: Blocks, w: FusedPerm) -> FusedElem:
    return FusedElem(blocks, {w: 1})


def basis(blocks: Blocks) -> List[FusedElem]:
    """The standard basis in canonical matrix order."""
    return [basis_element(blocks, w) for w in enumerate_fused(blocks)]


def unit(blocks: Blocks) -> FusedElem:
    return basis_element(blocks, identity_matrix(blocks))


def dimension(blocks: Blocks) -> int:
    return len(enumerate_fused(blocks))


def from_hecke(h: HeckeElem, blocks: Blocks) -> FusedElem:
    """
    Express P·h·P in the standard basis.

    Each σ_π contributes q^{ℓ(π)-ℓ(w)} F_w where w is the distinguished
    representative of the double coset of π.
    """
    if h.m != blocks.m:
        raise BlockMismatchError("Hecke element and blocks disagree", h.m, blocks.m)
    terms: Dict[FusedPerm, RatFunc] = {}
    for pi, c in h.items():
        _, excess = collapse(pi, blocks)
        key = matrix_from_perm(pi, blocks)
        terms[key] = terms.get(key, QField.zero) + c * q**excess
    return FusedElem(blocks, terms)


def lift(e: FusedElem) -> HeckeElem:
    """F_w ↦ P σ_w P in H_m(q)."""
    P = parabolic_symmetrizer(e.blocks)
    total = HeckeElem(e.blocks.m)
    for w, c in e.items():
        word = reduced_word(rep_from_matrix(w, e.blocks))
        total = total + mul(mul_word(P, word, "right"), P).scale(c)
    return total


@lru_cache(maxsize=None)
def _basis_product(
    blocks: Blocks, u: FusedPerm, v: FusedPerm
) -> Tuple[Tuple[FusedPerm, RatFunc], ...]:
    P = parabolic_symmetrizer(blocks)
    left = mul_word(P, reduced_word(rep_from_matrix(u, blocks)), "left")
    middle = mul_word(left, reduced_word(rep_from_matrix(v, blocks)), "right")
    return tuple(from_hecke(middle, blocks).items())


def multiply_q(a: FusedElem, b: FusedElem) -> FusedElem:
    """Product in H_{k,n}(q) through σ_u·P·σ_v in H_m(q)."""
    a._same_space(b)
    total: Dict[FusedPerm, RatFunc] = {}
    for u, c in a.items():
        for v, d in b.items():
            for w, e in _basis_product(a.blocks, u, v):
                total[w] = total.get(w, QField.zero) + c * d * e
    return FusedElem(a.blocks, total)


SpecializedElem = Dict[FusedPerm, Fraction]


@lru_cache(maxsize=None)
def _basis_product_at(
    blocks: Blocks, u: FusedPerm, v: FusedPerm, q0: Fraction
) -> Tuple[Tuple[FusedPerm, Fraction], ...]:
    delta = q0 - 1 / q0
    P = HeckeElem(blocks.m, parabolic_symmetrizer(blocks).specialize(q0))
    left = mul_word(P, reduced_word(rep_from_matrix(u, blocks)), "left", delta)
    middle = mul_word(left, reduced_word(rep_from_matrix(v, blocks)), "right", delta)
    terms: Dict[FusedPerm, Fraction] = {}
    for pi, c in middle.specialize(q0).items():
        _, excess = collapse(pi, blocks)
        key = matrix_from_perm(pi, blocks)
        terms[key] = terms.get(key, Fraction(0)) + c * q0**excess
    return tuple(sorted((w, c) for w, c in terms.items() if c))


def multiply_at(
    blocks: Blocks, a: Mapping[FusedPerm, Fraction], b: Mapping[FusedPerm, Fraction], q0
) -> SpecializedElem:
    """Product of two elements already specialised at q = q0, computed in H_m(q0)."""
    q0 = Fraction(q0)
    total: SpecializedElem = {}
    for u, c in a.items():
        for v, d in b.items():
            for w, e in _basis_product_at(blocks, u, v, q0):
                total[w] = total.get(w, Fraction(0)) + c * d * e
    return {w: c for w, c in total.items() if c}


def _classical_basis_product(
    blocks: Blocks, A: FusedPerm, B: FusedPerm
) -> Dict[FusedPerm, Fraction]:
    n = blocks.n
    per_middle = []
    for a in range(n):
        incoming = [A.mat[i][a] for i in range(n)]
        outgoing = list(B.mat[a])
        numerator = math.prod(math.factorial(x) for x in incoming + outgoing)
        options = []
        for c in contingency_tables(incoming, outgoing):
            denominator = math.prod(math.factorial(x) for row in c for x in row)
            options.append((c, numerator // denominator))
        per_middle.append(options)

    norm = math.prod(math.factorial(k) for k in blocks.parts)
    result: Dict[FusedPerm, Fraction] = {}
    for choice in itertools.product(*per_middle):
        weight = math.prod(count for _, count in choice)
        C = [[sum(choice[a][0][i][b] for a in range(n)) for b in range(n)] for i in range(n)]
        key = FusedPerm.of(C)
        result[key] = result.get(key, Fraction(0)) + Fraction(weight, norm)
    return result


def multiply_classical(a: FusedElem, b: FusedElem) -> FusedElem:
    """
    Diagram product of the q = 1 algebra.

    Sums over every way of connecting the strands through the middle
    ellipses, then divides by k_1!···k_n!. Independent of the Hecke route.
    """
    a._same_space(b)
    for c in itertools.chain(
        (c for _, c in a.items()), (c for _, c in b.items())
    ):
        if not is_constant(c):
            raise PreconditionError(
                "Classical product needs coefficients constant in q",
                operation="multiply_classical",
                coefficient=to_string(c),
            )
    total: Dict[FusedPerm, RatFunc] = {}
    for u, c in a.items():
        for v, d in b.items():
            for w, weight in _classical_basis_product(a.blocks, u, v).items():
                total[w] = total.get(w, QField.zero) + c * d * coerce(weight)
    return FusedElem(a.blocks, total)


@log_performance("fused.product_table")
def product_table(
    blocks: Blocks, classical: bool = False, threads: Optional[int] = None
) -> Dict[Tuple[FusedPerm, FusedPerm], FusedElem]:
    """All basis products F_u·F_v, keyed by (u, v) in canonical order."""
    labels = enumerate_fused(blocks)
    pairs = list(itertools.product(labels, labels))
    product = multiply_classical if classical else multiply_q

    def compute(pair):
        u, v = pair
        return product(basis_element(blocks, u), basis_element(blocks, v))

    results = parallel_map(compute, pairs, threads)
    logger.debug(
        "Product table computed", blocks=list(blocks.parts), pairs=len(pairs)
    )
    return dict(zip(pairs, results))


def specialize(e: FusedElem, q0) -> Dict[FusedPerm, Fraction]:
    """Coefficients at q = q0; at q0 = 1 this is the classical algebra."""
    return e.specialize(q0)


def embed(e: FusedElem, target: Blocks) -> FusedElem:
    """Inclusion H_{k,n} ⊂ H_{k,n'}: new ellipses are joined vertically."""
    k, n = e.blocks.parts, e.blocks.n
    if target.parts[:n] != k:
        raise BlockMismatchError(
            "Target blocks must extend the source blocks", e.blocks, target
        )
    size = target.n
    terms = {}
    for w, c in e.items():
        mat = [
            [
                w.mat[a][b] if a < n and b < n else (target.parts[a] if a == b else 0)
                for b in range(size)
            ]
            for a in range(size)
        ]
        terms[FusedPerm.of(mat)] = c
    return FusedElem(target, terms)


def _constant_index(blocks: Blocks, i: int) -> int:
    if not blocks.is_constant() or blocks.n < 2:
        raise PreconditionError(
            "Σ_i and T_i need constant blocks (k,...,k) with n ≥ 2",
            operation="sigma_element",
            blocks=list(blocks.parts),
        )
    if not 1 <= i < blocks.n:
        raise ValidationError(f"Index {i} out of range", field="i", value=i)
    return blocks.parts[0]


def sigma_element(blocks: Blocks, i: int) -> FusedElem:
    """Σ_i: all k strands of ellipse i cross all k strands of ellipse i+1."""
    k = _constant_index(blocks, i)
    mat = [list(row) for row in identity_matrix(blocks).mat]
    mat[i - 1][i - 1] = mat[i][i] = 0
    mat[i - 1][i] = mat[i][i - 1] = k
    return basis_element(blocks, FusedPerm.of(mat))


def t_element(blocks: Blocks, i: int) -> FusedElem:
    """T_i: a single pair of strands crosses between ellipses i and i+1."""
    k = _constant_index(blocks, i)
    mat = [list(row) for row in identity_matrix(blocks).mat]
    mat[i - 1][i - 1] = mat[i][i] = k - 1
    mat[i - 1][i] = mat[i][i - 1] = 1
    return basis_element(blocks, FusedPerm.of(mat))


def characteristic_roots(k: int) -> List[RatFunc]:
    """Eigenvalues (-1)^{k+l} q^{-k+l(l+1)}, l = 0..k, of Σ_i."""
    return [(-1) ** (k + l) * q ** (-k + l * (l + 1)) for l in range(k + 1)]


def characteristic_product(blocks: Blocks, i: int = 1) -> FusedElem:
    """∏_l (Σ_i - root_l); vanishes in H_{k,n}(q)."""
    sigma = sigma_element(blocks, i)
    one = unit(blocks)
    result = one
    for root in characteristic_roots(blocks.parts[0]):
        result = result * (sigma - one.scale(root))
    return result


def sigma_square_expected(blocks: Blocks, i: int = 1) -> FusedElem:
    """(q-q^-1)^2{2}_q Σ_i + (q-q^-1){3}_q T_i + 1, the square of Σ_i for k = 2."""
    if blocks.parts[:1] != (2,):
        raise PreconditionError(
            "The quadratic expansion of Σ_i is for k = 2",
            operation="sigma_square_expected",
            blocks=list(blocks.parts),
        )
    delta = q - q ** (-1)
    return (
        sigma_element(blocks, i).scale(delta**2 * q_number(2, "brace"))
        + t_element(blocks, i).scale(delta * q_number(3, "brace"))
        + unit(blocks)
    )


def from_matrices(
    blocks: Blocks, rows: Sequence[Sequence[Sequence[int]]], coeffs: Sequence[Scalar]
) -> FusedElem:
    """Build Σ c_j F_{M_j} from explicit matrices."""
    return FusedElem(
        blocks, {FusedPerm.of(M).check(blocks): c for M, c in zip(rows, coeffs)}
    )
