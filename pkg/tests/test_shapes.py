"""
Tests for partitions, tableaux, Kostka numbers and branching sets.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from error_handling import InvariantError, PreconditionError, SizeMismatchError
from permcomb import Blocks, enumerate_fused
from shapes import (
    Partition,
    SkewShape,
    Tableau,
    bar_map,
    dominance_geq,
    enumerate_semistandard,
    enumerate_standard,
    gl_dimension,
    is_horizontal_strip,
    kostka,
    ordered,
    partitions,
    phi_column_removal,
    res_set,
    s_set,
    slide_witness,
)


def _tableau(rows):
    shape = SkewShape.of([len(r) for r in rows])
    return Tableau(shape, tuple(x for r in rows for x in r))


compositions = st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=3)

SKEW_SHAPES = [
    SkewShape(outer, inner)
    for total in range(1, 7)
    for outer in partitions(total)
    for inner_size in range(max(total - 5, 0), total)
    for inner in partitions(inner_size)
    if outer.contains(inner)
]


def _compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _swap_component(t):
    """Standard tableaux reachable from t by admissible swaps of i and i+1."""
    seen = {t}
    frontier = [t]
    while frontier:
        current = frontier.pop()
        for i in range(1, current.shape.size):
            moved = current.swap(i)
            if moved not in seen and moved.is_standard():
                seen.add(moved)
                frontier.append(moved)
    return seen


def _restrict(t, n):
    """Cells holding letters below n, as a tableau of the straight shape they fill."""
    kept = [(r, x) for (r, _), x in zip(t.shape.nodes, t.entries) if x < n]
    rows = [sum(1 for row, _ in kept if row == r) for r in range(1, t.shape.outer.length + 1)]
    mu = Partition.of(rows)
    return mu, Tableau(SkewShape(mu), tuple(x for _, x in kept))


@pytest.mark.unit
class TestPartition:
    """Partitions and dominance."""

    def test_rejects_increasing(self):
        with pytest.raises(InvariantError):
            Partition((1, 2))

    def test_of_drops_zeros(self, P):
        assert Partition.of([3, 1, 0, 0]) == P(3, 1)

    def test_conjugate(self, P):
        assert P(3, 1).conjugate() == P(2, 1, 1)
        assert Partition().conjugate() == Partition()

    def test_part_past_length(self, P):
        assert P(2, 1).part(3) == 0

    def test_str(self, P):
        assert str(P(3, 1)) == "(3,1)"
        assert str(Partition()) == "∅"

    def test_partitions_reverse_lex(self, P):
        assert partitions(4) == [P(4), P(3, 1), P(2, 2), P(2, 1, 1), P(1, 1, 1, 1)]
        assert partitions(4, 2) == [P(4), P(3, 1), P(2, 2)]

    def test_dominance(self):
        assert dominance_geq((3, 1), (2, 2))
        assert not dominance_geq((2, 2), (3, 1))
        with pytest.raises(SizeMismatchError):
            dominance_geq((2,), (1,))

    def test_ordered(self, P):
        assert ordered((1, 3, 2)) == P(3, 2, 1)


@pytest.mark.unit
class TestTableaux:
    """Skew shapes and fillings."""

    def test_skew_shape_containment(self):
        with pytest.raises(InvariantError):
            SkewShape.of([2], [3])

    def test_skew_nodes(self):
        assert SkewShape.of([3, 1], [1]).nodes == ((1, 2), (1, 3), (2, 1))

    def test_horizontal_strip(self, P):
        assert SkewShape.of([2, 1], [1]).is_horizontal_strip()
        assert not SkewShape.of([2, 2], [1, 1]).is_horizontal_strip()
        assert is_horizontal_strip(P(3, 1), P(2))
        assert not is_horizontal_strip(P(2, 2), P(1, 1))

    def test_entries_must_fill_shape(self):
        with pytest.raises(SizeMismatchError):
            Tableau(SkewShape.of([2]), (1,))

    def test_standard(self):
        t = _tableau([[1, 2, 4], [3]])
        assert t.is_standard()
        assert t.content(3) == -1
        assert t.swap(3).rows() == [[1, 2, 3], [4]]
        assert not _tableau([[2, 1]]).is_semistandard()

    def test_rows_of_skew_tableau(self):
        t = Tableau(SkewShape.of([2, 1], [1]), (1, 1))
        assert t.rows() == [[None, 1], [1]]
        assert t.weight() == (2,)

    def test_enumerate_standard(self):
        assert len(enumerate_standard(SkewShape.of([2, 2]))) == 2
        assert len(enumerate_standard(SkewShape.of([3, 2]))) == 5

    def test_enumerate_semistandard(self):
        tableaux = enumerate_semistandard(SkewShape.of([2, 1]), (1, 1, 1))
        assert [t.rows() for t in tableaux] == [[[1, 2], [3]], [[1, 3], [2]]]
        assert all(t.is_semistandard() for t in tableaux)


@pytest.mark.unit
class TestKostka:
    """Kostka numbers."""

    def test_values(self, P):
        assert kostka(P(4, 4), (2, 2, 2, 2)) == 3
        assert kostka(P(2, 1), (1, 1, 1)) == 2
        assert kostka(P(2, 2, 2), (2, 2, 2)) == 1

    def test_skew(self):
        assert kostka(SkewShape.of([2, 1], [1]), (1, 1)) == 2

    def test_size_mismatch(self, P):
        with pytest.raises(SizeMismatchError):
            kostka(P(2), (1, 2))

    def test_weight_order_irrelevant(self, P):
        assert kostka(P(3, 2, 1), (1, 2, 3)) == kostka(P(3, 2, 1), (3, 2, 1))

    @settings(max_examples=30, deadline=None)
    @given(k=compositions, data=st.data())
    def test_symmetric_in_weight(self, k, data):
        permuted = data.draw(st.permutations(k))
        for lam in partitions(sum(k)):
            assert kostka(lam, k) == kostka(lam, permuted)

    @pytest.mark.parametrize("shape", SKEW_SHAPES, ids=str)
    def test_standard_tableaux_connected_by_swaps(self, shape):
        """Admissible swaps s_i link every pair of standard tableaux of a skew shape."""
        standard = enumerate_standard(shape)
        assert _swap_component(standard[0]) == set(standard)

    @pytest.mark.parametrize(
        "k", [k for total in range(1, 7) for k in _compositions(total)], ids=str
    )
    def test_squared_kostka_counts_fused_basis(self, k):
        """Σ_λ K_{λ,k}² equals the number of fused permutation matrices."""
        total = sum(kostka(lam, k) ** 2 for lam in partitions(sum(k)))
        assert total == len(enumerate_fused(Blocks(k)))

    @settings(max_examples=30, deadline=None)
    @given(k=st.lists(st.integers(min_value=1, max_value=3), min_size=2, max_size=3))
    def test_restriction_is_bijective(self, k):
        """Dropping the letter n pairs SSYT(λ, k) with SSYT(μ, k[:-1]), μ in the restriction."""
        n = len(k)
        for lam in s_set(k, n):
            images = set()
            for t in enumerate_semistandard(SkewShape(lam), k):
                mu, restricted = _restrict(t, n)
                assert mu in res_set(lam, k, n)
                assert restricted.is_semistandard()
                images.add((mu, restricted))
            expected = {
                (mu, s)
                for mu in res_set(lam, k, n)
                for s in enumerate_semistandard(SkewShape(mu), k[:-1])
            }
            assert images == expected
            assert len(images) == kostka(lam, k)

    def test_slide_witness(self, P):
        t = slide_witness(P(4, 4), (2, 2, 2, 2))
        assert t.is_semistandard()
        assert t.weight() == (2, 2, 2, 2)

    def test_slide_witness_needs_dominance(self, P):
        with pytest.raises(PreconditionError):
            slide_witness(P(2, 2), (3, 1))

    @settings(max_examples=30, deadline=None)
    @given(k=compositions)
    def test_witness_exists_exactly_when_dominant(self, k):
        for lam in partitions(sum(k)):
            dominant = dominance_geq(lam, ordered(k))
            assert (kostka(lam, k) > 0) == dominant
            if dominant:
                assert slide_witness(lam, k).weight(len(k)) == tuple(k)


@pytest.mark.unit
class TestBranching:
    """Label sets S_{k,n} and restriction sets."""

    def test_s_set(self, P):
        assert s_set((2, 1), 2) == [P(3), P(2, 1)]
        assert s_set((2, 2, 2), 3) == partitions(6, 3)

    def test_s_set_short_composition(self):
        with pytest.raises(SizeMismatchError):
            s_set((2,), 2)

    def test_res_set(self, P):
        assert res_set(P(3, 1), (3, 1, 1), 2) == [P(3)]
        assert res_set(P(4, 1), (3, 1, 1), 3) == [P(4), P(3, 1)]
        assert res_set(P(3, 3), (2, 2, 2), 3) == [P(3, 1)]

    def test_res_set_needs_label(self, P):
        with pytest.raises(PreconditionError):
            res_set(P(1, 1, 1), (2, 1), 2)

    def test_bar_map(self):
        good = bar_map(_tableau([[1, 2, 3], [4]]), (2, 2), 2)
        bad = bar_map(_tableau([[1, 3, 4], [2]]), (2, 2), 2)
        assert good.rows() == [[1, 1, 2], [2]]
        assert good.is_semistandard()
        assert bad.rows() == [[1, 2, 2], [1]]
        assert not bad.is_semistandard()

    def test_phi_column_removal(self, P):
        assert phi_column_removal(P(3, 2), 2) == P(2, 1)
        assert phi_column_removal(P(1, 1), 2) == Partition()
        with pytest.raises(PreconditionError):
            phi_column_removal(P(3, 2), 3)

    @pytest.mark.parametrize(
        "shape, N, dim",
        [((1,), 4, 4), ((2,), 2, 3), ((1, 1), 2, 1), ((2, 1), 3, 8), ((1, 1, 1), 2, 0)],
    )
    def test_gl_dimension(self, shape, N, dim):
        assert gl_dimension(Partition(shape), N) == dim

    @pytest.mark.parametrize("m, N", [(3, 2), (4, 3)])
    def test_tensor_power_dimension(self, m, N):
        total = sum(kostka(lam, (1,) * m) * gl_dimension(lam, N) for lam in partitions(m))
        assert total == N**m
