"""
FusedHecke Linear Algebra
Small dense matrices over Q(q) and exact ranks through sympy's DomainMatrix
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from error_handling import SizeMismatchError
from qcoeff import QField, RatFunc, coerce, evaluate, to_string

DenseMat = List[List[RatFunc]]

# Q(q) as a sympy domain; its elements are the QField elements themselves.
QDomain = QField.to_domain()


def zeros(rows: int, cols: int) -> DenseMat:
    return [[QField.zero] * cols for _ in range(rows)]


def identity(n: int) -> DenseMat:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = QField.one
    return out


def shape(A: DenseMat):
    return len(A), (len(A[0]) if A else 0)


def matmul(A: DenseMat, B: DenseMat) -> DenseMat:
    (r, inner), (inner_b, c) = shape(A), shape(B)
    if inner != inner_b and r and inner_b:
        raise SizeMismatchError("Matrix shapes do not chain", shape(A), shape(B))
    out = zeros(r, c)
    for i in range(r):
        row = A[i]
        for t in range(inner):
            a = row[t]
            if not a:
                continue
            Bt = B[t]
            target = out[i]
            for j in range(c):
                if Bt[j]:
                    target[j] += a * Bt[j]
    return out


def add(A: DenseMat, B: DenseMat) -> DenseMat:
    if shape(A) != shape(B):
        raise SizeMismatchError("Matrix shapes differ", shape(A), shape(B))
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A: DenseMat, c) -> DenseMat:
    c = coerce(c)
    return [[c * a for a in row] for row in A]


def is_zero(A: DenseMat) -> bool:
    return not any(x for row in A for x in row)


def trace(A: DenseMat) -> RatFunc:
    return sum((A[i][i] for i in range(len(A))), QField.zero)


def evaluate_matrix(A: DenseMat, q0) -> List[List[Fraction]]:
    return [[evaluate(x, q0) for x in row] for row in A]


def to_strings(A: DenseMat) -> List[List[str]]:
    return [[to_string(x) for x in row] for row in A]


def rank_over_field(rows: Sequence[Sequence[RatFunc]]) -> int:
    """Exact rank over Q(q)."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        return 0
    return DomainMatrix(rows, (len(rows), len(rows[0])), QDomain).rank()


def rank_rational(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    """Exact rank over Q of sparse rows given as {column: value}."""
    data = {
        i: {j: QQ(v.numerator, v.denominator) for j, v in row.items() if v}
        for i, row in enumerate(rows)
    }
    data = {i: row for i, row in data.items() if row}
    if not data or not ncols:
        return 0
    return DomainMatrix(data, (len(rows), ncols), QQ).rank()


class SparseEchelon:
    """
    Row echelon form over Q built one sparse row at a time.

    Each stored row is normalised to 1 at its pivot, the smallest column
    it touches; new rows are reduced against the stored pivots in
    increasing column order.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Reduce ``row`` and keep it if independent; returns whether the rank grew."""
        work = {j: Fraction(v) for j, v in row.items() if v}
        while work:
            col = min(work)
            pivot = self.pivots.get(col)
            if pivot is None:
                lead = work[col]
                self.pivots[col] = {j: v / lead for j, v in work.items()}
                return True
            factor = work[col]
            for j, v in pivot.items():
                value = work.get(j, Fraction(0)) - factor * v
                if value:
                    work[j] = value
                else:
                    work.pop(j, None)
        return False


def rank_rational_until(rows: Iterable[Mapping[int, Fraction]], target: int = None) -> int:
    """Rank over Q of a stream of sparse rows, stopping once ``target`` is reached."""
    echelon = SparseEchelon()
    for row in rows:
        echelon.add(row)
        if target is not None and echelon.rank >= target:
            break
    return echelon.rank
