from fractions import Fraction

from jetforge.linalg import mat_vec, rank, solve
from jetforge.scalar import Scalar


def S(re, im=0):
    return Scalar(Fraction(re), Fraction(im))


def test_mat_vec():
    matrix = [[S(1), S(2)], [S(0), S(3)]]
    assert mat_vec(matrix, [S(1), S(1)]) == [S(3), S(3)]


def test_rank_examples():
    assert rank([[S(1), S(2)], [S(2), S(4)]]) == 1
    assert rank([[S(1), S(0)], [S(0), S(1)]]) == 2
    assert rank([[S(0), S(0)]]) == 0


def test_solve_unique():
    matrix = [[S(2), S(0)], [S(0), S(4)]]
    x, pivots = solve(matrix, [S(6), S(8)])
    assert x == [S(3), S(2)]
    assert pivots == [0, 1]


def test_solve_underdetermined_pins_free_variables():
    # one equation, two unknowns: x2 is free and stays zero
    matrix = [[S(1), S(1)]]
    x, pivots = solve(matrix, [S(5)])
    assert x == [S(5), S(0)]
    assert pivots == [0]


def test_solve_skips_zero_column():
    matrix = [[S(0), S(1), S(0)], [S(0), S(0), S(1)]]
    x, pivots = solve(matrix, [S(1), S(2)])
    assert x == [S(0), S(1), S(2)]
    assert pivots == [1, 2]


def test_solve_inconsistent():
    matrix = [[S(1), S(1)], [S(1), S(1)]]
    x, pivots = solve(matrix, [S(0), S(1)])
    assert x is None
    assert pivots == [0]


def test_solve_complex_entries():
    matrix = [[Scalar(0, 1)]]
    x, _ = solve(matrix, [S(1)])
    assert x == [Scalar(0, -1)]


def test_solution_satisfies_system():
    import random

    rng = random.Random(23)
    for _ in range(30):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 5)
        matrix = [
            [S(rng.randint(-3, 3)) for _ in range(cols)] for _ in range(rows)
        ]
        rhs = mat_vec(matrix, [S(rng.randint(-3, 3)) for _ in range(cols)])
        x, _ = solve(matrix, rhs)
        assert x is not None  # rhs was constructed in the image
        assert mat_vec(matrix, x) == rhs
