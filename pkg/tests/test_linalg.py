import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import F81
from constacyclic.exceptions import DimensionMismatch, RankDeficiency
from constacyclic.linalg import ModP, inverse, left_inverse_mod_p, mat_vec, rank, solve_linear


def test_one_by_one_extension_system(f81):
    beta = f81.alpha_pow(8)
    sol = solve_linear(f81, [[beta]], [f81.mul(2, beta)])
    assert sol.status == "unique"
    assert sol.solution == (2,)


def test_identity_returns_rhs(f81):
    b = [5, 0, 77, 3]
    eye = [[int(i == j) for j in range(4)] for i in range(4)]
    assert solve_linear(f81, eye, b).solution == tuple(b)


def test_zero_matrix_inconsistent(f81):
    sol = solve_linear(f81, [[0, 0], [0, 0]], [0, 4])
    assert sol.status == "inconsistent"
    assert (sol.rank, sol.augmented_rank) == (0, 1)


def test_underdetermined_nullspace(f81):
    A = [[1, 1, 0], [0, 1, 1]]
    sol = solve_linear(f81, A, [2, 1])
    assert sol.status == "underdetermined" and sol.rank == 2
    assert mat_vec(f81, A, sol.particular) == [2, 1]
    for v in sol.nullspace:
        assert mat_vec(f81, A, v) == [0, 0]


def test_dimension_checks(f81):
    with pytest.raises(DimensionMismatch):
        solve_linear(f81, [[1]], [1, 2])
    with pytest.raises(DimensionMismatch):
        solve_linear(f81, [[1, 2], [1]], [1, 2])
    assert solve_linear(f81, [], [], unknowns=2).status == "underdetermined"


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(0, 2**32))
def test_random_invertible_systems(n, seed):
    f = F81
    rnd = random.Random(seed)
    while True:
        A = [[rnd.randrange(f.order) for _ in range(n)] for _ in range(n)]
        if rank(f, A) == n:
            break
    x0 = [rnd.randrange(f.order) for _ in range(n)]
    sol = solve_linear(f, A, mat_vec(f, A, x0))
    assert sol.status == "unique"
    assert list(sol.solution) == x0


def test_inverse_mod_p():
    ops = ModP(5)
    rnd = random.Random(3)
    A = [[rnd.randrange(5) for _ in range(4)] for _ in range(4)]
    while rank(ops, A) < 4:
        A = [[rnd.randrange(5) for _ in range(4)] for _ in range(4)]
    inv = inverse(ops, A)
    prod = [[sum(a * b for a, b in zip(row, col)) % 5 for col in zip(*inv)] for row in A]
    assert prod == [[int(i == j) for j in range(4)] for i in range(4)]
    with pytest.raises(RankDeficiency):
        inverse(ops, [[1, 2], [2, 4]])


def test_left_inverse():
    M = [[1, 0], [2, 1], [0, 1]]
    L = left_inverse_mod_p(M, 3)
    prod = [[sum(L[i][k] * M[k][j] for k in range(3)) % 3 for j in range(2)] for i in range(2)]
    assert prod == [[1, 0], [0, 1]]
