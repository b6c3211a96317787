"""
Tests for the fused Hecke algebras H_{k,n}(q) and their classical limit.
"""

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import fused
import hecke
from error_handling import BlockMismatchError, PreconditionError
from permcomb import (
    Blocks,
    FusedPerm,
    enumerate_fused,
    matrix_from_perm,
    parabolic_elements,
    rep_from_matrix,
)
from qcoeff import q


def _crossing(blocks):
    return fused.from_matrices(blocks, [[[1, 1], [1, 1]]], [1])


def _compositions(total, max_parts):
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first, max_parts - 1):
            yield (first,) + rest


SMALL_COMPOSITIONS = [k for total in range(2, 7) for k in _compositions(total, 3)]
ALL_COMPOSITIONS = [k for total in range(2, 7) for k in _compositions(total, total)]
BOUNDED_COMPOSITIONS = [k for k in SMALL_COMPOSITIONS if max(k) <= 3]


def _basis_elements(data, blocks, count):
    pick = st.sampled_from(enumerate_fused(blocks))
    return [fused.basis_element(blocks, data.draw(pick)) for _ in range(count)]


def _classical_by_enumeration(A, B, blocks):
    """(1/|Y|) Σ_{g ∈ Y} F_{u·g·v} over the Young subgroup Y, at q = 1."""
    u, v = rep_from_matrix(A, blocks), rep_from_matrix(B, blocks)
    young = parabolic_elements(blocks)
    terms = {}
    for g in young:
        key = matrix_from_perm(u * g * v, blocks)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(1, len(young))
    return terms


@pytest.mark.unit
class TestBasis:
    """Standard basis and dimension."""

    def test_dimension(self, blocks_211, blocks_22):
        assert fused.dimension(blocks_211) == 7
        assert fused.dimension(blocks_22) == 3
        assert len(fused.basis(blocks_22)) == 3

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_constant_pair(self, k):
        assert fused.dimension(Blocks((k, k))) == k + 1

    def test_elements_over_different_blocks(self, blocks_22, blocks_211):
        with pytest.raises(BlockMismatchError):
            fused.unit(blocks_22) + fused.unit(blocks_211)

    def test_to_json(self, blocks_22):
        assert _crossing(blocks_22).scale(q).to_json() == [[[[1, 1], [1, 1]], "q"]]


@pytest.mark.unit
class TestProducts:
    """The product through P σ_u P σ_v P."""

    def test_unit(self, blocks_211):
        one = fused.unit(blocks_211)
        for F in fused.basis(blocks_211):
            assert fused.multiply_q(one, F) == F
            assert fused.multiply_q(F, one) == F

    def test_crossing_squared(self, blocks_22):
        F = _crossing(blocks_22)
        norm = (1 + q**2) ** 2
        expected = fused.from_matrices(
            blocks_22,
            [[[2, 0], [0, 2]], [[1, 1], [1, 1]], [[0, 2], [2, 0]]],
            [1 / norm, (q - q ** (-1) + 2 * q**3) / norm, q**2 / norm],
        )
        assert F * F == expected

    def test_associative(self):
        blocks = Blocks((2, 1))
        basis = fused.basis(blocks)
        for a, b, c in itertools.product(basis, repeat=3):
            assert (a * b) * c == a * (b * c)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "k", [k for k in ALL_COMPOSITIONS if sum(k) <= 5], ids=str
    )
    @settings(max_examples=5, deadline=None)
    @given(data=st.data())
    def test_associative_random_elements(self, k, data):
        blocks = Blocks(k)
        coefficient = st.integers(min_value=-3, max_value=3)
        a, b, c = (
            sum(
                (F.scale(data.draw(coefficient)) for F in _basis_elements(data, blocks, 2)),
                fused.unit(blocks).scale(data.draw(coefficient)),
            )
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)

    def test_lift_round_trip(self, blocks_211):
        for F in fused.basis(blocks_211):
            assert fused.from_hecke(fused.lift(F), blocks_211) == F

    def test_from_hecke_block_mismatch(self, blocks_22):
        with pytest.raises(BlockMismatchError):
            fused.from_hecke(hecke.one(3), blocks_22)

    def test_product_at_point_matches_symbolic(self, blocks_211, q0):
        basis = fused.basis(blocks_211)
        for a, b in itertools.product(basis[:4], repeat=2):
            at_point = fused.multiply_at(blocks_211, a.specialize(q0), b.specialize(q0), q0)
            assert at_point == fused.multiply_q(a, b).specialize(q0)

    def test_product_table(self, blocks_22):
        table = fused.product_table(blocks_22, threads=2)
        labels = enumerate_fused(blocks_22)
        assert list(table) == list(itertools.product(labels, labels))
        F = _crossing(blocks_22)
        assert table[(F.support()[0], F.support()[0])] == F * F


@pytest.mark.unit
class TestClassical:
    """The diagram product at q = 1."""

    def test_crossing_squared(self, blocks_22):
        F = _crossing(blocks_22)
        expected = fused.from_matrices(
            blocks_22,
            [[[2, 0], [0, 2]], [[1, 1], [1, 1]], [[0, 2], [2, 0]]],
            [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)],
        )
        assert fused.multiply_classical(F, F) == expected

    def test_worked_product_211(self, blocks_211):
        A = fused.from_matrices(blocks_211, [[[1, 0, 1], [1, 0, 0], [0, 1, 0]]], [1])
        B = fused.from_matrices(blocks_211, [[[1, 1, 0], [1, 0, 0], [0, 0, 1]]], [1])
        expected = fused.from_matrices(
            blocks_211,
            [[[1, 0, 1], [0, 1, 0], [1, 0, 0]], [[0, 1, 1], [1, 0, 0], [1, 0, 0]]],
            [Fraction(1, 2), Fraction(1, 2)],
        )
        assert fused.multiply_classical(A, B) == expected

    def test_unit(self, blocks_211):
        one = fused.unit(blocks_211)
        for F in fused.basis(blocks_211):
            assert fused.multiply_classical(one, F) == F

    def test_specialization_of_q_product(self, blocks_211):
        basis = fused.basis(blocks_211)
        for a, b in itertools.product(basis, repeat=2):
            classical = fused.specialize(fused.multiply_classical(a, b), 1)
            assert fused.specialize(fused.multiply_q(a, b), 1) == classical

    def test_rejects_q_dependent_coefficients(self, blocks_22):
        F = _crossing(blocks_22)
        with pytest.raises(PreconditionError):
            fused.multiply_classical(F.scale(q), F)

    @pytest.mark.slow
    @pytest.mark.parametrize("k", SMALL_COMPOSITIONS, ids=str)
    def test_classical_oracle(self, k):
        basis = fused.basis(Blocks(k))
        for a, b in itertools.product(basis, repeat=2):
            classical = fused.specialize(fused.multiply_classical(a, b), 1)
            assert fused.specialize(fused.multiply_q(a, b), 1) == classical

    @pytest.mark.slow
    @pytest.mark.parametrize("k", ALL_COMPOSITIONS, ids=str)
    @settings(max_examples=8, deadline=None)
    @given(data=st.data())
    def test_classical_oracle_sampled(self, k, data):
        """Every composition of weight up to 6, on sampled basis pairs."""
        a, b = _basis_elements(data, Blocks(k), 2)
        classical = fused.specialize(fused.multiply_classical(a, b), 1)
        assert fused.specialize(fused.multiply_q(a, b), 1) == classical

    @pytest.mark.slow
    @pytest.mark.parametrize("k", BOUNDED_COMPOSITIONS, ids=str)
    def test_classical_product_by_enumeration(self, k):
        """The diagram product agrees with averaging u·g·v over the Young subgroup."""
        blocks = Blocks(k)
        for A, B in itertools.product(enumerate_fused(blocks), repeat=2):
            product = fused.multiply_classical(
                fused.basis_element(blocks, A), fused.basis_element(blocks, B)
            )
            assert fused.specialize(product, 1) == _classical_by_enumeration(A, B, blocks)


@pytest.mark.unit
class TestEmbedding:
    """Inclusion H_{k,n} ⊂ H_{k,n+1}."""

    def test_unit_maps_to_unit(self):
        assert fused.embed(fused.unit(Blocks((2,))), Blocks((2, 1))) == fused.unit(
            Blocks((2, 1))
        )

    def test_matrix_extended_by_identity(self, blocks_22):
        image = fused.embed(_crossing(blocks_22), Blocks((2, 2, 1)))
        assert image.support() == [FusedPerm.of([[1, 1, 0], [1, 1, 0], [0, 0, 1]])]

    def test_embedding_is_multiplicative(self, blocks_22):
        target = Blocks((2, 2, 2))
        F = _crossing(blocks_22)
        assert fused.embed(F * F, target) == fused.embed(F, target) * fused.embed(F, target)

    def test_mismatched_prefix(self, blocks_22):
        with pytest.raises(BlockMismatchError):
            fused.embed(fused.unit(blocks_22), Blocks((2, 1, 1)))


@pytest.mark.unit
class TestConstantBlocks:
    """Σ_i and T_i for k = (k, k, ...)."""

    def test_characteristic_equation_k1(self):
        assert fused.characteristic_product(Blocks((1, 1))) == 0

    def test_characteristic_equation_k2(self, blocks_22):
        assert fused.characteristic_product(blocks_22) == 0

    @pytest.mark.slow
    def test_characteristic_equation_k3(self):
        assert fused.characteristic_product(Blocks((3, 3))) == 0

    def test_sigma_square(self, blocks_22):
        S = fused.sigma_element(blocks_22, 1)
        assert S * S == fused.sigma_square_expected(blocks_22)

    def test_t_sigma_relation(self, blocks_22):
        S, T = fused.sigma_element(blocks_22, 1), fused.t_element(blocks_22, 1)
        assert T * S == S.scale(q - q ** (-1)) + T.scale(q**2)

    def test_braid(self):
        blocks = Blocks((2, 2, 2))
        S1, S2 = fused.sigma_element(blocks, 1), fused.sigma_element(blocks, 2)
        assert S1 * S2 * S1 == S2 * S1 * S2

    def test_roots(self):
        assert fused.characteristic_roots(1) == [-(q ** (-1)), q]

    def test_non_constant_blocks(self, blocks_211):
        with pytest.raises(PreconditionError):
            fused.sigma_element(blocks_211, 1)

    def test_sigma_square_needs_k2(self):
        with pytest.raises(PreconditionError):
            fused.sigma_square_expected(Blocks((1, 1)))
