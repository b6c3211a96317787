"""
FusedHecke Coefficients
The field Q(q) of rational functions with integer coefficients, and q-numbers
"""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Mapping, Tuple, Union

from sympy import ZZ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement

from error_handling import CoefficientError, ErrorCode, ValidationError

# Elements are reduced on construction: common factors cancelled, the
# denominator primitive with positive leading coefficient.
QField, q = field("q", ZZ)

RatFunc = FracElement
IntPoly = PolyElement

Rational = Union[int, Fraction]


class Op(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class QKind(Enum):
    BRACKET = "bracket"
    BRACE = "brace"


def _poly(coeffs: Mapping[int, int]) -> IntPoly:
    return QField.ring.from_dict({(e,): c for e, c in coeffs.items() if c})


def ratfunc(num: Union[int, Mapping[int, int]], den: Union[int, Mapping[int, int]] = 1) -> RatFunc:
    """Build num/den from integers or {exponent: coefficient} maps."""
    n = _poly(num) if isinstance(num, Mapping) else QField.ring(num)
    d = _poly(den) if isinstance(den, Mapping) else QField.ring(den)
    if not d:
        raise CoefficientError("Zero denominator", ErrorCode.DIVISION_BY_ZERO)
    return QField.new(n, d)


def coerce(value: Union[RatFunc, int, Fraction]) -> RatFunc:
    """Lift integers and rationals into Q(q)."""
    if isinstance(value, FracElement):
        return value
    if isinstance(value, Fraction):
        return ratfunc(value.numerator, value.denominator)
    return QField(value)


def arith(a: RatFunc, b: RatFunc, op: Union[Op, str]) -> RatFunc:
    """Exact field arithmetic; division by zero raises CoefficientError."""
    op = Op(op)
    a, b = coerce(a), coerce(b)
    if op is Op.ADD:
        return a + b
    if op is Op.SUB:
        return a - b
    if op is Op.MUL:
        return a * b
    if not b:
        raise CoefficientError("Division by zero in Q(q)", ErrorCode.DIVISION_BY_ZERO)
    return a / b


def q_power(m: int) -> RatFunc:
    """q^m for any integer m."""
    return q**m


def q_number(L: int, kind: Union[QKind, str] = QKind.BRACKET) -> RatFunc:
    """[L]_q = (q^L - q^-L)/(q - q^-1) or {L}_q = (q^2L - 1)/(q^2 - 1)."""
    kind = QKind(kind)
    if kind is QKind.BRACKET:
        return (q**L - q ** (-L)) / (q - q ** (-1))
    return (q ** (2 * L) - 1) / (q**2 - 1)


def q_factorial(L: int, kind: Union[QKind, str] = QKind.BRACKET) -> RatFunc:
    """Product of q_number(1..L); the empty product is 1."""
    if L < 0:
        raise ValidationError("q-factorial of a negative integer", field="L", value=L)
    result = QField.one
    for j in range(1, L + 1):
        result *= q_number(j, kind)
    return result


def _eval_poly(p: IntPoly, q0: Fraction) -> Fraction:
    return sum((Fraction(int(c)) * q0**e for (e,), c in p.terms()), Fraction(0))


def evaluate(f: Union[RatFunc, int], q0: Rational) -> Fraction:
    """Exact value of f at the rational q0."""
    f = coerce(f)
    q0 = Fraction(q0)
    den = _eval_poly(f.denom, q0)
    if den == 0:
        raise CoefficientError(
            f"Pole of {to_string(f)} at q = {q0}", ErrorCode.POLE_AT_POINT, point=q0
        )
    return _eval_poly(f.numer, q0) / den


def is_constant(f: RatFunc) -> bool:
    return f.numer.is_ground and f.denom.is_ground


def _poly_string(p: IntPoly) -> Tuple[str, int]:
    terms = p.terms()
    if not terms:
        return "0", 1
    pieces = []
    for (e,), c in terms:
        c = int(c)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        pieces.append((sign, body))
    text = "".join((s if (i or s == "-") else "") + b for i, (s, b) in enumerate(pieces))
    return text, len(terms)


def to_string(f: Union[RatFunc, int]) -> str:
    """Canonical rendering, e.g. (q^2+1)/q."""
    f = coerce(f)
    num, num_terms = _poly_string(f.numer)
    if f.denom == 1:
        return num
    den, den_terms = _poly_string(f.denom)
    if num_terms > 1:
        num = f"({num})"
    if den_terms > 1:
        den = f"({den})"
    return f"{num}/{den}"


def _poly_pairs(p: IntPoly) -> List[List[int]]:
    return [[e, int(c)] for (e,), c in sorted(p.terms())]


def to_json(f: Union[RatFunc, int]) -> Dict[str, List[List[int]]]:
    f = coerce(f)
    return {"num": _poly_pairs(f.numer), "den": _poly_pairs(f.denom)}


def from_json(data: Mapping[str, List[List[int]]]) -> RatFunc:
    return ratfunc({e: c for e, c in data["num"]}, {e: c for e, c in data["den"]})
