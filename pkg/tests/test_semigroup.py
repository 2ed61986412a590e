import numpy as np
import pytest

import hardylab as hl
from hardylab.errors import IndexOutOfRange, TruncationTooShort
from hardylab.verify import adjoint_duality_gap, random_series


@pytest.fixture
def rng():
    return np.random.default_rng(2024)


class TestWeightedDilation:
    def test_constant(self):
        got = hl.weighted_dilation(2, hl.one())
        assert np.array_equal(got.coeffs, [1, 1])

    def test_monomial_spreads_into_block(self):
        got = hl.weighted_dilation(3, hl.monomial(1))
        assert np.array_equal(got.coeffs, [0, 0, 0, 1, 1, 1])

    def test_one_plus_z(self):
        got = hl.weighted_dilation(2, hl.from_coeffs([1, 1]))
        assert np.array_equal(got.coeffs, [1, 1, 1, 1])

    def test_index_one_is_identity(self):
        f = hl.from_coeffs([3, 1, 4])
        assert hl.weighted_dilation(1, f) is f

    def test_output_valid_degree(self):
        f = hl.from_coeffs(np.arange(8))
        assert hl.weighted_dilation(5, f).valid_degree == 5 * 7 + 4

    def test_rejects_bad_index(self):
        with pytest.raises(IndexOutOfRange):
            hl.weighted_dilation(0, hl.one())


class TestAdjoint:
    def test_block_sum(self):
        got = hl.weighted_dilation_adjoint(2, hl.from_coeffs([1, 1]))
        assert np.array_equal(got.coeffs, [2])

    def test_kills_one_minus_z(self):
        got = hl.weighted_dilation_adjoint(2, hl.from_coeffs([1, -1]))
        assert np.array_equal(got.coeffs, [0])

    def test_second_block(self):
        f = hl.from_coeffs([0, 0, 0, 1, 2, 1])
        got = hl.weighted_dilation_adjoint(3, f)
        assert np.array_equal(got.coeffs, [0, 4])

    def test_window_shrinks_to_complete_blocks(self):
        f = hl.from_coeffs(np.arange(11))  # valid degree 10
        got = hl.weighted_dilation_adjoint(3, f)
        # blocks (0,1,2), (3,4,5), (6,7,8); degree 9..10 is a partial block
        assert got.valid_degree == 2
        assert np.array_equal(got.coeffs, [3, 12, 21])

    def test_too_short_raises(self):
        with pytest.raises(TruncationTooShort):
            hl.weighted_dilation_adjoint(3, hl.from_coeffs([1, 1]))

    def test_index_one_is_identity(self):
        f = hl.from_coeffs([5, 6])
        assert hl.weighted_dilation_adjoint(1, f) is f


class TestPlainDilation:
    def test_examples(self):
        assert np.array_equal(hl.dilation(2, hl.from_coeffs([1, 1])).coeffs, [1, 0, 1])
        assert np.array_equal(hl.dilation(3, hl.one()).coeffs, [1])
        got = hl.dilation(2, hl.from_coeffs([0, 1, 1]))
        assert np.array_equal(got.coeffs, [0, 0, 1, 0, 1])

    def test_valid_degree(self):
        assert hl.dilation(4, hl.from_coeffs([1, 2])).valid_degree == 4


class TestSemiconjugacy:
    def test_constant(self):
        assert hl.semiconjugacy_residual(2, hl.one()) == 0

    def test_small_polynomial(self):
        assert hl.semiconjugacy_residual(3, hl.from_coeffs([1, 2, 1])) <= 1e-14

    def test_random(self, rng):
        f = random_series(rng, 200)
        assert hl.semiconjugacy_residual(5, f) <= 1e-12 * hl.norm(f)

    def test_many_random(self, rng):
        for n in (2, 3, 5):
            for _ in range(25):
                f = random_series(rng, 97)
                assert hl.semiconjugacy_residual(n, f) <= 1e-12 * hl.norm(f)


class TestKernelVectors:
    def test_first_vector_is_one_minus_z(self):
        assert np.array_equal(hl.kernel_vector(2, 0).coeffs, [1, -1])

    def test_n3_k1(self):
        got = hl.kernel_vector(3, 1)
        assert np.array_equal(got.coeffs, [0, 0, 0, 1, 1, -2])

    def test_n2_k1(self):
        assert np.array_equal(hl.kernel_vector(2, 1).coeffs, [0, 0, 1, -1])

    def test_annihilated_by_adjoint(self):
        for n in (2, 3, 5):
            for k in range(4):
                v = hl.pad(hl.kernel_vector(n, k), n * 6 - 1)
                img = hl.weighted_dilation_adjoint(n, v)
                assert np.max(np.abs(img.coeffs)) == 0

    def test_pairwise_orthogonal_exactly(self):
        vecs = [hl.kernel_vector(3, k) for k in range(6)]
        for i in range(6):
            for j in range(i + 1, 6):
                assert hl.inner(vecs[i], vecs[j]) == 0

    def test_rejects_index_below_two(self):
        with pytest.raises(IndexOutOfRange):
            hl.kernel_vector(1, 0)
        with pytest.raises(IndexOutOfRange):
            hl.kernel_vector(2, -1)


class TestKernelIntersectionBasis:
    def test_k1(self):
        basis = hl.kernel_intersection_basis(1)
        assert len(basis) == 1
        assert np.array_equal(basis[0].coeffs, [1, -1])

    def test_killed_beyond_k(self):
        member = hl.kernel_intersection_basis(3)[2]  # 1 - z^3 at valid degree 3
        img = hl.weighted_dilation_adjoint(4, member)
        assert np.max(np.abs(img.coeffs)) == 0
        for n in (5, 7, 11):
            img = hl.weighted_dilation_adjoint(n, hl.pad(member, n - 1))
            assert np.max(np.abs(img.coeffs)) == 0

    def test_escape_witness_below_k(self):
        # block sums of (1, 0, -1, 0) under index 2 are (1, -1): not killed
        member = hl.pad(hl.kernel_intersection_basis(2)[1], 3)
        got = hl.weighted_dilation_adjoint(2, member)
        assert np.array_equal(got.coeffs, [1, -1])


class TestOperatorIdentities:
    def test_adjoint_duality(self, rng):
        for _ in range(50):
            f = random_series(rng, 512)
            g = random_series(rng, 512)
            scale = hl.norm(f) * hl.norm(g)
            for n in (2, 3, 5, 7):
                assert adjoint_duality_gap(n, f, g) <= 1e-10 * scale

    def test_isometry(self, rng):
        for _ in range(30):
            f = random_series(rng, 300)
            for n in (2, 3, 7, 10):
                w = hl.weighted_dilation(n, f)
                assert hl.norm(w) == pytest.approx(np.sqrt(n) * hl.norm(f), rel=1e-12)

    def test_semigroup_law_exact(self, rng):
        f = random_series(rng, 64)
        for m, n in [(2, 2), (2, 5), (3, 2), (3, 5)]:
            lhs = hl.weighted_dilation(m, hl.weighted_dilation(n, f))
            rhs = hl.weighted_dilation(m * n, f)
            assert np.array_equal(lhs.coeffs, rhs.coeffs)
            assert lhs.valid_degree == rhs.valid_degree

    def test_adjoint_inverts_dilation(self, rng):
        f = random_series(rng, 77)
        for n in (2, 3, 6):
            back = hl.weighted_dilation_adjoint(n, hl.weighted_dilation(n, f))
            assert back.valid_degree == f.valid_degree
            assert np.max(np.abs(back.coeffs - n * f.coeffs)) <= 1e-13 * hl.norm(f)

    def test_no_eigenvector_gap(self, rng):
        for _ in range(50):
            f = random_series(rng, 64)
            w = hl.weighted_dilation(2, f)
            gap = hl.norm(w) ** 2 * hl.norm(f) ** 2 - abs(hl.inner(w, f)) ** 2
            assert gap > 1e-12 * hl.norm(f) ** 4
