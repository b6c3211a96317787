"""
FusedHecke Permutations
Permutations, block compositions, fused permutation matrices and
distinguished double coset representatives
"""

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, List, Sequence, Tuple

from error_handling import InvariantError, SizeMismatchError, ValidationError


@dataclass(frozen=True, order=True)
class Perm:
    """
    Bijection of {1..m} in one-line notation.

    Products are read as diagram stacking: in a·b the diagram of a sits on
    top, so (a·b)(i) = b(a(i)).
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise InvariantError(
                f"Not a permutation: {self.images}", kind="Perm", value=self.images
            )

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


@dataclass(frozen=True)
class Blocks:
    """Composition (k_1, ..., k_n) of m cutting {1..m} into consecutive intervals."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(k, int) or k < 0 for k in self.parts):
            raise ValidationError(
                f"Block sizes must be non-negative integers: {self.parts}",
                field="blocks",
                value=self.parts,
            )

    @classmethod
    def of(cls, parts: Sequence[int]) -> "Blocks":
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def m(self) -> int:
        return sum(self.parts)

    @cached_property
    def intervals(self) -> Tuple[Tuple[int, ...], ...]:
        """Positions of each block, 1-based."""
        out, start = [], 1
        for k in self.parts:
            out.append(tuple(range(start, start + k)))
            start += k
        return tuple(out)

    @cached_property
    def block_of(self) -> Tuple[int, ...]:
        """Block index (0-based) of each position 1..m, stored at index position-1."""
        return tuple(a for a, block in enumerate(self.intervals) for _ in block)

    def is_constant(self) -> bool:
        return len(set(self.parts)) <= 1

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True, order=True)
class FusedPerm:
    """n×n matrix of non-negative integers; the row-major order is canonical."""

    mat: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "FusedPerm":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.mat)

    def check(self, blocks: Blocks) -> "FusedPerm":
        """Raise unless rows and columns sum to the block sizes."""
        k = blocks.parts
        ok = (
            len(self.mat) == len(k)
            and all(len(row) == len(k) for row in self.mat)
            and all(x >= 0 for row in self.mat for x in row)
            and all(sum(row) == k[a] for a, row in enumerate(self.mat))
            and all(sum(row[b] for row in self.mat) == k[b] for b in range(len(k)))
        )
        if not ok:
            raise InvariantError(
                f"Matrix {self.mat} does not have margins {k}",
                kind="FusedPerm",
                value=self.mat,
            )
        return self

    def to_json(self) -> List[List[int]]:
        return [list(row) for row in self.mat]


def identity(m: int) -> Perm:
    return Perm(tuple(range(1, m + 1)))


def simple_reflection(i: int, m: int) -> Perm:
    if not 1 <= i < m:
        raise ValidationError(f"Generator index {i} out of range for S_{m}", field="i", value=i)
    images = list(range(1, m + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Perm(tuple(images))


def longest(m: int) -> Perm:
    return Perm(tuple(range(m, 0, -1)))


def _same_size(a: Perm, b: Perm):
    if a.size != b.size:
        raise SizeMismatchError("Permutations of different sizes", a.size, b.size)


def compose(a: Perm, b: Perm) -> Perm:
    """The product a·b: apply a, then b."""
    _same_size(a, b)
    return Perm(tuple(b.images[x - 1] for x in a.images))


def inverse(a: Perm) -> Perm:
    out = [0] * a.size
    for i, x in enumerate(a.images, start=1):
        out[x - 1] = i
    return Perm(tuple(out))


def length(a: Perm) -> int:
    """Number of inversions."""
    return _length(a.images)


@lru_cache(maxsize=None)
def _length(images: Tuple[int, ...]) -> int:
    return sum(
        1
        for i, j in itertools.combinations(range(len(images)), 2)
        if images[i] > images[j]
    )


def swap_positions(w: Perm, i: int) -> Perm:
    """s_i·w: exchange the entries at positions i and i+1."""
    images = list(w.images)
    images[i - 1], images[i] = images[i], images[i - 1]
    return Perm(tuple(images))


def swap_values(w: Perm, i: int) -> Perm:
    """w·s_i: exchange the values i and i+1."""
    swap = {i: i + 1, i + 1: i}
    return Perm(tuple(swap.get(x, x) for x in w.images))


def right_ascent(w: Perm, i: int) -> bool:
    """ℓ(w·s_i) > ℓ(w), i.e. value i precedes value i+1."""
    return w.images.index(i) < w.images.index(i + 1)


def left_ascent(w: Perm, i: int) -> bool:
    """ℓ(s_i·w) > ℓ(w), i.e. w(i) < w(i+1)."""
    return w.images[i - 1] < w.images[i]


@lru_cache(maxsize=None)
def reduced_word(a: Perm) -> Tuple[int, ...]:
    """Lexicographically smallest reduced word: peel the smallest left descent."""
    word = []
    w = a
    while True:
        descent = next(
            (i for i in range(1, w.size) if w.images[i - 1] > w.images[i]), None
        )
        if descent is None:
            return tuple(word)
        word.append(descent)
        w = swap_positions(w, descent)


def from_word(word: Sequence[int], m: int) -> Perm:
    w = identity(m)
    for i in word:
        w = compose(w, simple_reflection(i, m))
    return w


def all_perms(m: int) -> Iterator[Perm]:
    for images in itertools.permutations(range(1, m + 1)):
        yield Perm(images)


def extend(w: Perm, m: int) -> Perm:
    """Embed S_k into S_m by fixing k+1..m."""
    if m < w.size:
        raise SizeMismatchError("Cannot shrink a permutation", w.size, m)
    return Perm(w.images + tuple(range(w.size + 1, m + 1)))


@lru_cache(maxsize=None)
def parabolic_elements(blocks: Blocks) -> Tuple[Perm, ...]:
    """Elements of the Young subgroup permuting each block interval, sorted."""
    factors = [list(itertools.permutations(block)) for block in blocks.intervals]
    out = []
    for choice in itertools.product(*factors):
        out.append(Perm(tuple(x for part in choice for x in part)))
    return tuple(sorted(out))


def _increasing_on_blocks(images: Sequence[int], blocks: Blocks) -> bool:
    return all(
        images[p - 1] < images[p] for block in blocks.intervals for p in block[:-1]
    )


def is_distinguished(w: Perm, blocks: Blocks) -> bool:
    """w and w^-1 are increasing on every block interval."""
    if w.size != blocks.m:
        raise SizeMismatchError("Permutation and blocks disagree", w.size, blocks.m)
    return _increasing_on_blocks(w.images, blocks) and _increasing_on_blocks(
        inverse(w).images, blocks
    )


def matrix_from_perm(w: Perm, blocks: Blocks) -> FusedPerm:
    """M[a][b] = number of i in block a with w(i) in block b."""
    if w.size != blocks.m:
        raise SizeMismatchError("Permutation and blocks disagree", w.size, blocks.m)
    n = blocks.n
    mat = [[0] * n for _ in range(n)]
    block_of = blocks.block_of
    for i, x in enumerate(w.images):
        mat[block_of[i]][block_of[x - 1]] += 1
    return FusedPerm.of(mat)


def rep_from_matrix(M: FusedPerm, blocks: Blocks) -> Perm:
    """
    The distinguished permutation with block matrix M.

    Positions of block a are sent, in increasing order, to block 1 first,
    then block 2, and so on; inside a target block the free positions are
    consumed in increasing order.
    """
    M.check(blocks)
    next_free = [block[0] if block else 0 for block in blocks.intervals]
    images = [0] * blocks.m
    for a, source in enumerate(blocks.intervals):
        targets = []
        for b, count in enumerate(M.mat[a]):
            targets.extend(range(next_free[b], next_free[b] + count))
            next_free[b] += count
        for position, target in zip(source, targets):
            images[position - 1] = target
    return Perm(tuple(images))


def collapse(pi: Perm, blocks: Blocks) -> Tuple[Perm, int]:
    """Distinguished representative of the double coset of pi and the length excess."""
    w = rep_from_matrix(matrix_from_perm(pi, blocks), blocks)
    return w, length(pi) - length(w)


def contingency_tables(
    row_sums: Sequence[int], col_sums: Sequence[int]
) -> List[Tuple[Tuple[int, ...], ...]]:
    """Non-negative integer matrices with the given margins, row-major lexicographic."""
    rows, cols = len(row_sums), len(col_sums)
    if sum(row_sums) != sum(col_sums):
        return []
    if rows == 0 or cols == 0:
        return [tuple(() for _ in range(rows))]
    results: List[Tuple[Tuple[int, ...], ...]] = []
    mat = [[0] * cols for _ in range(rows)]
    row_rem = list(row_sums)
    col_rem = list(col_sums)

    def place(pos: int):
        if pos == rows * cols:
            if not any(row_rem) and not any(col_rem):
                results.append(tuple(tuple(r) for r in mat))
            return
        a, b = divmod(pos, cols)
        if b == cols - 1:
            choices = [row_rem[a]] if row_rem[a] <= col_rem[b] else []
        elif a == rows - 1:
            choices = [col_rem[b]] if col_rem[b] <= row_rem[a] else []
        else:
            choices = range(min(row_rem[a], col_rem[b]) + 1)
        for value in choices:
            mat[a][b] = value
            row_rem[a] -= value
            col_rem[b] -= value
            place(pos + 1)
            row_rem[a] += value
            col_rem[b] += value
        mat[a][b] = 0

    place(0)
    return results


@lru_cache(maxsize=None)
def enumerate_fused(blocks: Blocks) -> Tuple[FusedPerm, ...]:
    """All matrices with row and column sums k, in row-major lexicographic order."""
    return tuple(
        FusedPerm(mat) for mat in contingency_tables(blocks.parts, blocks.parts)
    )


def identity_matrix(blocks: Blocks) -> FusedPerm:
    n = blocks.n
    return FusedPerm.of(
        [[blocks.parts[a] if a == b else 0 for b in range(n)] for a in range(n)]
    )
