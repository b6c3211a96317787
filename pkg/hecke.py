"""
FusedHecke Hecke Algebra
The Hecke algebra H_m(q) over Q(q) in the basis {σ_w}, with q-symmetrisers
and q-antisymmetrisers
"""

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Generic, Iterator, List, Mapping, Sequence, Tuple, TypeVar, Union

from error_handling import SizeMismatchError, ValidationError
from permcomb import (
    Blocks,
    Perm,
    all_perms,
    extend,
    identity,
    left_ascent,
    length,
    parabolic_elements,
    reduced_word,
    right_ascent,
    simple_reflection,
    swap_positions,
    swap_values,
)
from qcoeff import QField, QKind, RatFunc, coerce, evaluate, q, q_factorial, to_string

K = TypeVar("K")
Scalar = Union[RatFunc, int, Fraction]

# q - q^-1, the coefficient of the quadratic relation
HECKE_DELTA = q - q ** (-1)


class LinearCombination(Generic[K]):
    """
    Finite Q(q)-linear combination of basis labels; treated as immutable.

    Zero coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, Scalar] = None):
        self._terms: Dict[K, RatFunc] = {}
        for key, coeff in (terms or {}).items():
            coeff = coerce(coeff)
            if coeff:
                self._terms[key] = coeff

    def _same_space(self, other) -> None:
        raise NotImplementedError

    def _new(self, terms: Dict[K, RatFunc]):
        raise NotImplementedError

    def items(self) -> List[Tuple[K, RatFunc]]:
        """Terms in canonical label order."""
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def support(self) -> List[K]:
        return sorted(self._terms)

    def coefficient(self, key: K) -> RatFunc:
        return self._terms.get(key, QField.zero)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[K]:
        return iter(sorted(self._terms))

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearCombination):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other):
        self._same_space(other)
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            terms[key] = terms.get(key, QField.zero) + coeff
        return self._new(terms)

    def __neg__(self):
        return self._new({key: -c for key, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Scalar):
        c = coerce(c)
        return self._new({key: c * v for key, v in self._terms.items()})

    def map_coefficients(self, func) -> Dict[K, object]:
        return {key: func(c) for key, c in self.items()}

    def specialize(self, q0) -> Dict[K, Fraction]:
        """Coefficients evaluated at q0; zero values dropped."""
        values = {key: evaluate(c, q0) for key, c in self.items()}
        return {key: v for key, v in values.items() if v}


class HeckeElem(LinearCombination[Perm]):
    """Element of H_m(q) in the basis σ_w, w ∈ S_m."""

    __slots__ = ("m",)

    def __init__(self, m: int, terms: Mapping[Perm, Scalar] = None):
        self.m = m
        super().__init__(terms)
        for w in self._terms:
            if w.size != m:
                raise SizeMismatchError("Basis label of the wrong size", w.size, m)

    def _same_space(self, other) -> None:
        if not isinstance(other, HeckeElem) or other.m != self.m:
            raise SizeMismatchError(
                "Hecke elements of different sizes",
                self.m,
                getattr(other, "m", other),
            )

    def _new(self, terms):
        return HeckeElem(self.m, terms)

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({to_string(c)})*T{w}" for w, c in self.items())

    def to_json(self) -> List[List]:
        return [[list(w.images), to_string(c)] for w, c in self.items()]


def basis_element(w: Perm) -> HeckeElem:
    return HeckeElem(w.size, {w: 1})


def one(m: int) -> HeckeElem:
    return basis_element(identity(m))


def generator(i: int, m: int) -> HeckeElem:
    return basis_element(simple_reflection(i, m))


def _check_index(i: int, m: int) -> None:
    if not 1 <= i < m:
        raise ValidationError(f"Generator index {i} out of range for H_{m}", field="i", value=i)


def mul_gen(a: HeckeElem, i: int, side: str = "right", delta: Scalar = HECKE_DELTA) -> HeckeElem:
    """Multiply by σ_i on the given side using the quadratic relation.

    delta is the coefficient q - q^{-1}; pass its value at a point to
    compute in the specialised algebra.
    """
    delta = coerce(delta)
    _check_index(i, a.m)
    terms: Dict[Perm, RatFunc] = {}

    def add(w, c):
        terms[w] = terms.get(w, QField.zero) + c

    for w, c in a._terms.items():
        if side == "right":
            moved, up = swap_values(w, i), right_ascent(w, i)
        elif side == "left":
            moved, up = swap_positions(w, i), left_ascent(w, i)
        else:
            raise ValidationError(f"Unknown side {side}", field="side", value=side)
        add(moved, c)
        if not up:
            add(w, delta * c)
    return HeckeElem(a.m, terms)


def mul_word(
    a: HeckeElem, word: Sequence[int], side: str = "right", delta: Scalar = HECKE_DELTA
) -> HeckeElem:
    """a·σ_{i1}···σ_{ir} (right) or σ_{i1}···σ_{ir}·a (left)."""
    letters = word if side == "right" else reversed(word)
    for i in letters:
        a = mul_gen(a, i, side, delta)
    return a


def mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    """Product expanding each σ_v of b along its reduced word."""
    a._same_space(b)
    total: Dict[Perm, RatFunc] = {}
    for v, c in b._terms.items():
        partial = mul_word(a, reduced_word(v))
        for w, d in partial._terms.items():
            total[w] = total.get(w, QField.zero) + c * d
    return HeckeElem(a.m, total)


def from_word(word: Sequence[int], m: int) -> HeckeElem:
    """σ_{i1}···σ_{ir}; the word need not be reduced."""
    return mul_word(one(m), word)


def inverse_generator(i: int, m: int) -> HeckeElem:
    """σ_i^{-1} = σ_i - (q - q^{-1})."""
    _check_index(i, m)
    return generator(i, m) - one(m).scale(HECKE_DELTA)


def invert_word(word: Sequence[int], m: int) -> HeckeElem:
    """(σ_{i1}···σ_{ir})^{-1} = σ_{ir}^{-1}···σ_{i1}^{-1}."""
    result = one(m)
    for i in reversed(word):
        result = mul(result, inverse_generator(i, m))
    return result


def embed(e: HeckeElem, m: int) -> HeckeElem:
    """Natural inclusion H_k(q) ⊂ H_m(q) on the first k strands."""
    return HeckeElem(m, {extend(w, m): c for w, c in e._terms.items()})


def _weighted_sum(m: int, weight) -> HeckeElem:
    return HeckeElem(m, {w: weight(length(w)) for w in all_perms(m)})


def symmetrizer(m: int) -> HeckeElem:
    """P_m = Σ q^{ℓ(w)} σ_w / {m}_q!."""
    return _symmetrizer(max(m, 0))


@lru_cache(maxsize=None)
def _symmetrizer(m: int) -> HeckeElem:
    if m <= 1:
        return one(m)
    total = _weighted_sum(m, lambda l: q**l)
    return total.scale(1 / q_factorial(m, QKind.BRACE))


def symmetrizer_forms(m: int) -> List[HeckeElem]:
    """The two normalisations of P_m: by {m}_q! and by q^{m(m-1)/2}[m]_q!."""
    total = _weighted_sum(m, lambda l: q**l)
    return [
        total.scale(1 / q_factorial(m, QKind.BRACE)),
        total.scale(1 / (q ** (m * (m - 1) // 2) * q_factorial(m, QKind.BRACKET))),
    ]


def antisymmetrizer_numerator(m: int) -> HeckeElem:
    """Σ (-q^{-1})^{ℓ(w)} σ_w."""
    return _weighted_sum(m, lambda l: (-(q ** (-1))) ** l)


@lru_cache(maxsize=None)
def antisymmetrizer(m: int) -> HeckeElem:
    """P'_m = Σ (-q^{-1})^{ℓ(w)} σ_w / Σ q^{-2ℓ(w)}."""
    if m <= 1:
        return one(max(m, 0))
    norm = sum((q ** (-2 * length(w)) for w in all_perms(m)), QField.zero)
    return antisymmetrizer_numerator(m).scale(1 / norm)


def antisymmetrizer_forms(m: int) -> List[HeckeElem]:
    """The three displayed normalisations of P'_m."""
    numerator = antisymmetrizer_numerator(m)
    norm = sum((q ** (-2 * length(w)) for w in all_perms(m)), QField.zero)
    return [
        numerator.scale(1 / norm),
        numerator.scale(1 / (q ** (-m * (m - 1)) * q_factorial(m, QKind.BRACE))),
        numerator.scale(q ** (m * (m - 1) // 2) / q_factorial(m, QKind.BRACKET)),
    ]


@lru_cache(maxsize=None)
def parabolic_symmetrizer(blocks: Blocks) -> HeckeElem:
    """P_{k,n} = P_{k1} ⊗ ··· ⊗ P_{kn}, expanded once per composition."""
    norm = QField.one
    for k in blocks.parts:
        norm *= q_factorial(k, QKind.BRACE)
    return HeckeElem(
        blocks.m,
        {u: q ** length(u) / norm for u in parabolic_elements(blocks)},
    )
