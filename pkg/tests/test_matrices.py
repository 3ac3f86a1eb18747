"""4x4 and 2x2 matrix representations and their self-contained arithmetic."""

import numpy as np
import pytest
from hypothesis import given

import _oracles as oracles
from _strategies import paravectors, nonsingular_paravectors
from paravec import (
    ONE,
    Matrix2,
    Matrix4,
    NotAParavectorMatrix,
    Paravector,
    Tolerance,
    ValidationError,
    approx_eq,
    format_matrix,
    from_matrix4,
    to_matrix4,
    to_pauli,
)
from paravec.matrices import SIGMA_0, SIGMA_X, SIGMA_Y, SIGMA_Z


class TestEmbeddingPattern:
    def test_identity_embeds_as_identity(self):
        assert to_matrix4(ONE) == Matrix4.identity()

    def test_unit_vector_pattern(self):
        got = to_matrix4(Paravector(0, (1, 0, 0)))
        assert got.rows == (
            (0j, 1 + 0j, 0j, 0j),
            (1 + 0j, 0j, 0j, 0j),
            (0j, 0j, 0j, -1j),
            (0j, 0j, 1j, 0j),
        )

    @given(paravectors())
    def test_matches_the_numpy_construction(self, g):
        assert np.array_equal(oracles.mat_of(to_matrix4(g)), oracles.np4(g))

    @given(paravectors())
    def test_reversion_negates_the_vector_blocks(self, g):
        assert np.array_equal(
            oracles.mat_of(to_matrix4(g.rev())), oracles.np4(g.rev())
        )


class TestHomomorphism:
    @given(paravectors(), paravectors())
    def test_products_map_to_matrix_products(self, a, b):
        lhs = to_matrix4(a * b)
        rhs = to_matrix4(a) @ to_matrix4(b)
        assert lhs.approx_eq(rhs, Tolerance(1e-8, 1e-8))

    @given(paravectors(), paravectors())
    def test_sums_map_to_matrix_sums(self, a, b):
        assert to_matrix4(a + b) == to_matrix4(a) + to_matrix4(b)

    @given(paravectors())
    def test_conjugation_is_hermitian_conjugation(self, g):
        assert to_matrix4(g.conj()) == to_matrix4(g).conj_transpose()

    @given(paravectors())
    def test_determinant_squares(self, g):
        d = g.det()
        det4 = to_matrix4(g).det()
        assert abs(det4 - d * d) <= 1e-7 * max(1.0, abs(det4), abs(d * d))

    @given(nonsingular_paravectors(min_det=0.1))
    def test_inverse_maps_to_the_matrix_inverse(self, g):
        lhs = to_matrix4(g.inverse())
        assert lhs.approx_eq(to_matrix4(g).inverse(), Tolerance(1e-6, 1e-6))


class TestRoundTrip:
    @given(paravectors())
    def test_from_matrix4_inverts_to_matrix4(self, g):
        assert from_matrix4(to_matrix4(g)) == g

    def test_identity_reads_back(self):
        assert from_matrix4(Matrix4.identity()) == ONE

    def test_pattern_violation_is_located(self):
        rows = [list(r) for r in to_matrix4(Paravector(1, (2, 3, 4))).rows]
        rows[1][0] += 0.5
        with pytest.raises(NotAParavectorMatrix) as err:
            from_matrix4(Matrix4(rows))
        assert err.value.entry == (1, 0)


class TestMatrixArithmetic:
    @given(paravectors(), paravectors())
    def test_lu_determinant_against_numpy(self, a, b):
        m = to_matrix4(a) @ to_matrix4(b)
        want = np.linalg.det(oracles.mat_of(m))
        assert m.det() == pytest.approx(want, rel=1e-7, abs=1e-7)

    @given(nonsingular_paravectors(min_det=0.1))
    def test_gauss_jordan_inverse_against_numpy(self, g):
        m = to_matrix4(g)
        want = np.linalg.inv(oracles.mat_of(m))
        assert np.allclose(oracles.mat_of(m.inverse()), want, atol=1e-8)

    def test_singular_matrix_has_no_inverse(self):
        with pytest.raises(ValueError):
            to_matrix4(Paravector(1, (1, 0, 0))).inverse()

    def test_rejects_non_finite_entries(self):
        with pytest.raises(ValidationError):
            Matrix2(((float("inf"), 0), (0, 1)))

    def test_rejects_wrong_shapes(self):
        with pytest.raises(ValidationError):
            Matrix4(((1, 2), (3, 4)))


class TestPauli:
    def test_identity_is_sigma0(self):
        assert to_pauli(ONE) == SIGMA_0

    def test_basis_vectors_are_the_sigma_matrices(self):
        assert to_pauli(Paravector(0, (1, 0, 0))) == SIGMA_X
        assert to_pauli(Paravector(0, (0, 1, 0))) == SIGMA_Y
        assert to_pauli(Paravector(0, (0, 0, 1))) == SIGMA_Z

    def test_sigma_matrices_have_the_textbook_entries(self):
        assert SIGMA_X.rows == ((0j, 1 + 0j), (1 + 0j, 0j))
        assert SIGMA_Y.rows == ((0j, -1j), (1j, 0j))
        assert SIGMA_Z.rows == ((1 + 0j, 0j), (0j, -1 + 0j))

    @given(paravectors())
    def test_matches_the_numpy_combination(self, g):
        assert np.allclose(oracles.mat_of(to_pauli(g)), oracles.np2(g))

    @given(paravectors(), paravectors())
    def test_products_map_to_matrix_products(self, a, b):
        lhs = to_pauli(a * b)
        assert lhs.approx_eq(to_pauli(a) @ to_pauli(b), Tolerance(1e-8, 1e-8))

    @given(paravectors())
    def test_determinant_is_preserved(self, g):
        d = g.det()
        det2 = to_pauli(g).det()
        assert abs(det2 - d) <= 1e-8 * max(1.0, abs(d))


def test_format_matrix_gives_a_grid():
    text = format_matrix(to_matrix4(Paravector(1, (0, 0, 1))).rows)
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("[") and lines[0].endswith("]")
    assert "1" in lines[0]
