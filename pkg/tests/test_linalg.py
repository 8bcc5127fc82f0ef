import random
from fractions import Fraction

from hypothesis import given, strategies as st

from wpposet import linalg


def dense_to_vecs(M):
    return [{j: x for j, x in enumerate(row) if x} for row in M]


def test_rank_simple():
    M = [[1, 2, 3], [2, 4, 6], [0, 1, 1]]
    assert linalg.rank_of(dense_to_vecs(M)) == 2


def test_kernel_basis_annihilates():
    M = [[1, 2, 3], [2, 4, 6], [0, 1, 1], [1, 3, 4]]
    vecs = dense_to_vecs(M)
    basis = linalg.kernel_basis(vecs)
    assert len(basis) == 2
    for combo in basis:
        total = {}
        for j, c in combo.items():
            total = linalg.vec_combine(total, 1, vecs[j], c)
        assert total == {}
        assert linalg.vec_content(combo) == 1


def test_solve_rational_exact():
    vecs = dense_to_vecs([[2, 0], [1, 1]])
    sol = linalg.solve_rational(vecs, {0: 1, 1: 3})
    total = {}
    for j, c in sol.items():
        for k, x in vecs[j].items():
            total[k] = total.get(k, 0) + c * x
    assert total == {0: Fraction(1), 1: Fraction(3)}


def test_solve_rational_inconsistent():
    vecs = dense_to_vecs([[1, 1, 0]])
    assert linalg.solve_rational(vecs, {2: 1}) is None


def test_snf_divisibility_chain():
    M = [[2, 0], [0, 3]]
    assert linalg.snf_invariant_factors(dense_to_vecs(M)) == [1, 6]
    M = [[4, 0], [0, 6]]
    assert linalg.snf_invariant_factors(dense_to_vecs(M)) == [2, 12]
    M = [[1, 0], [0, 1]]
    assert linalg.snf_invariant_factors(dense_to_vecs(M)) == [1, 1]


def test_bareiss_det_known():
    assert linalg.bareiss_det([[1, 2], [3, 4]]) == -2
    assert linalg.bareiss_det([[2, 0, 0], [0, 3, 0], [0, 0, 5]]) == 30
    assert linalg.bareiss_det([[1, 1], [1, 1]]) == 0
    assert linalg.bareiss_det([]) == 1


@given(st.integers(0, 10_000))
def test_random_matrix_rank_vs_det(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    M = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
    det = linalg.bareiss_det(M)
    rank = linalg.rank_of(dense_to_vecs(M))
    if det != 0:
        assert rank == n
    else:
        assert rank < n


@given(st.integers(0, 10_000))
def test_random_kernel_dimension(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    M = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
    vecs = dense_to_vecs(M)
    basis = linalg.kernel_basis(vecs)
    assert len(basis) == rows - linalg.rank_of(vecs)
    for combo in basis:
        total = {}
        for j, c in combo.items():
            total = linalg.vec_combine(total, 1, vecs[j], c)
        assert total == {}


@given(st.integers(0, 10_000))
def test_snf_product_matches_det(seed):
    # |det| equals the product of the invariant factors for square full rank
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    M = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
    det = abs(linalg.bareiss_det(M))
    factors = linalg.snf_invariant_factors(dense_to_vecs(M))
    if det:
        prod = 1
        for f in factors:
            prod *= f
        assert len(factors) == n and prod == det
    else:
        assert len(factors) < n
