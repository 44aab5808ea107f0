import random
from fractions import Fraction

import pytest

from sasakian.matrix import ExactMatrix
from sasakian.scalars import GaussianRational, I, ONE
from sasakian.subspace import Subspace, image, kernel


def e(n, i):
    v = [GaussianRational(0)] * n
    v[i] = ONE
    return v


def test_canonical_form_is_representation_independent():
    a = Subspace.from_vectors(3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace.from_vectors(3, [[2, 2, 0], [1, 2, 1], [1, 0, -1]])
    assert a == b
    assert a.dim == 2


def test_intersect_self_and_disjoint_lines():
    x = Subspace.from_vectors(2, [e(2, 0), [1, 1]])
    assert x.intersect(x) == x
    l1 = Subspace.from_vectors(2, [e(2, 0)])
    l2 = Subspace.from_vectors(2, [e(2, 1)])
    assert l1.intersect(l2).dim == 0


def test_quotient_basis_dimension_count():
    total = Subspace.full(2)
    line = Subspace.from_vectors(2, [[1, 1]])
    reps = total.quotient_basis(line)
    # dimension oracle: dim(total) - dim(line) = 1
    assert len(reps) == 1
    combined = Subspace.from_vectors(2, [[1, 1], reps[0]])
    assert combined == total


def test_quotient_basis_requires_containment():
    a = Subspace.from_vectors(3, [e(3, 0)])
    b = Subspace.from_vectors(3, [e(3, 1)])
    with pytest.raises(ValueError):
        a.quotient_basis(b)


def test_sum_and_modular_dimension_law():
    rng = random.Random(5)

    def rand_subspace(n):
        k = rng.randint(0, n)
        vecs = [
            [
                GaussianRational(Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-2, 2)))
                for _ in range(n)
            ]
            for _ in range(k)
        ]
        return Subspace.from_vectors(n, vecs)

    for _ in range(20):
        n = rng.randint(1, 5)
        a = rand_subspace(n)
        b = rand_subspace(n)
        s = a.add(b)
        i = a.intersect(b)
        assert s.dim + i.dim == a.dim + b.dim
        assert a.contains_subspace(i) and b.contains_subspace(i)
        assert s.contains_subspace(a) and s.contains_subspace(b)


def test_membership_is_exact_over_gaussian_rationals():
    s = Subspace.from_vectors(2, [[ONE, I]])
    assert s.contains([I, GaussianRational(-1)])
    assert not s.contains([ONE, ONE])
    coords = s.coordinates([I, GaussianRational(-1)])
    assert coords is not None
    recovered = s.basis.apply(coords)
    assert recovered == [I, GaussianRational(-1)]


def test_kernel_image_helpers():
    m = ExactMatrix(2, 3, [[1, 0, 1], [0, 1, 1]])
    k = kernel(m)
    assert k.dim == 1
    assert k.contains([1, 1, -1])
    im = image(m)
    assert im == Subspace.full(2)
