import random
from fractions import Fraction

import pytest

from sasakian.matrix import ExactMatrix
from sasakian.scalars import GaussianRational, I, ONE, ZERO


def rand_scalar(rng):
    return GaussianRational(
        Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
        Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
    )


def rand_matrix(rng, rows, cols):
    return ExactMatrix(rows, cols, [[rand_scalar(rng) for _ in range(cols)] for _ in range(rows)])


def test_identity_kernel_is_zero():
    m = ExactMatrix.identity(3)
    assert m.kernel_basis() == []
    assert m.rank() == 3


def test_zero_matrix_kernel_is_full():
    m = ExactMatrix.zero(2, 3)
    basis = m.kernel_basis()
    assert len(basis) == 3
    assert m.rank() == 0


def test_hand_reduced_complex_kernel():
    # [[1, i], [-i, 1]]: row 2 = -i * row 1, so the kernel is the line
    # x = -i*y, spanned by (-i, 1), equivalently by (1, i) after scaling by i.
    m = ExactMatrix(2, 2, [[ONE, I], [-I, ONE]])
    basis = m.kernel_basis()
    assert len(basis) == 1
    v = basis[0]
    assert all(x.is_zero() for x in m.apply(v))
    # (1, i) must be proportional to the computed vector.
    from sasakian.subspace import Subspace

    span = Subspace.from_vectors(2, basis)
    assert span.contains([ONE, I])
    assert not span.contains([I, ONE])


def test_rank_one_outer_product_image():
    u = [GaussianRational(1), GaussianRational(2), GaussianRational(-1)]
    v = [GaussianRational(3), GaussianRational(0, 1), GaussianRational(5)]
    m = ExactMatrix(3, 3, [[u[i] * v[j] for j in range(3)] for i in range(3)])
    # independent oracle: rank of a nonzero outer product is 1
    assert m.rank() == 1
    cols = m.column_space_basis()
    assert len(cols) == 1
    from sasakian.subspace import Subspace

    assert Subspace.from_vectors(3, cols) == Subspace.from_vectors(3, [u])


def test_rank_nullity_and_transpose_on_random_matrices():
    rng = random.Random(7)
    for _ in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = rand_matrix(rng, rows, cols)
        r = m.rank()
        assert r == m.transpose().rank()
        assert r + len(m.kernel_basis()) == cols
        for v in m.kernel_basis():
            assert all(x.is_zero() for x in m.apply(v))
        assert m.transpose().transpose() == m


def test_solve_and_inverse_round_trip():
    rng = random.Random(11)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n, n)
        if m.rank() < n:
            continue
        inv = m.inverse()
        assert m @ inv == ExactMatrix.identity(n)
        assert inv @ m == ExactMatrix.identity(n)
        b = rand_matrix(rng, n, 2)
        x = m.solve(b)
        assert x is not None and m @ x == b


def test_solve_detects_inconsistency():
    m = ExactMatrix(2, 1, [[ONE], [ONE]])
    rhs = ExactMatrix(2, 1, [[ONE], [ZERO]])
    assert m.solve(rhs) is None


def test_determinant_matches_cofactor_oracle():
    rng = random.Random(13)

    def cofactor_det(m):
        n = m.rows
        if n == 0:
            return ONE
        if n == 1:
            return m[0, 0]
        acc = ZERO
        sign = ONE
        for j in range(n):
            minor = m.submatrix(range(1, n), [c for c in range(n) if c != j])
            acc = acc + sign * m[0, j] * cofactor_det(minor)
            sign = -sign
        return acc

    for _ in range(10):
        n = rng.randint(1, 4)
        m = rand_matrix(rng, n, n)
        assert m.determinant() == cofactor_det(m)


def test_conjugate_transpose_is_involution():
    rng = random.Random(3)
    m = rand_matrix(rng, 3, 2)
    assert m.conjugate_transpose().conjugate_transpose() == m


def test_kronecker_against_direct_product():
    a = ExactMatrix(2, 2, [[1, 2], [0, 1]])
    b = ExactMatrix(2, 2, [[0, 1], [1, 0]])
    k = a.kronecker(b)
    assert k.shape == (4, 4)
    assert k[0, 1] == 1 and k[0, 0] == 0
    assert k[0, 3] == 2 and k[2, 3] == 1 and k[3, 3] == 0


def test_shape_errors():
    with pytest.raises(ValueError):
        ExactMatrix(2, 2, [[1, 2]])
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) @ ExactMatrix.zero(3, 1)
