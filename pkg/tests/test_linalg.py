import random
from fractions import Fraction

from dickson.linalg import FpOps, QOps, in_span, kernel_basis, rank, solve


def _matvec(rows, vec, ops):
    out = []
    for row in rows:
        acc = ops.zero
        for r, v in zip(row, vec):
            acc = ops.add(acc, ops.mul(r, v))
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# prime-field systems

def test_kernel_vectors_annihilate():
    ops = FpOps(5)
    rng = random.Random(11)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randrange(5) for _ in range(n)] for _ in range(m)]
        ker = kernel_basis(rows, n, ops)
        assert rank(rows, ops) + len(ker) == n
        for vec in ker:
            assert all(x == 0 for x in _matvec(rows, vec, ops))


def test_solve_solution_satisfies_system_mod_p():
    ops = FpOps(3)
    rng = random.Random(12)
    hits = 0
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        rows = [[rng.randrange(3) for _ in range(n)] for _ in range(m)]
        target = [rng.randrange(3) for _ in range(n)]
        rhs = _matvec(rows, target, ops)
        sol = solve(rows, rhs, ops)
        assert sol is not None
        assert _matvec(rows, sol, ops) == rhs
        hits += 1
    assert hits == 60


def test_solve_reports_inconsistent_systems():
    ops = FpOps(3)
    rows = [[1, 0], [1, 0]]
    assert solve(rows, [1, 2], ops) is None


def test_fp_ops_reduce_mod_p():
    ops = FpOps(7)
    assert ops.sub(0, 5) == 2
    assert ops.neg(1) == 6
    assert ops.mul(3, 5) == 1


# ---------------------------------------------------------------------------
# rational systems

def test_rational_kernel_and_span():
    ops = QOps()
    rows = [[Fraction(1), Fraction(2), Fraction(3)],
            [Fraction(2), Fraction(4), Fraction(6)]]
    ker = kernel_basis(rows, 3, ops)
    assert len(ker) == 2
    for vec in ker:
        assert all(x == 0 for x in _matvec(rows, vec, ops))
    assert in_span([[1, 0, 0], [0, 1, 0]], [3, -2, 0], ops)
    assert not in_span([[1, 0, 0], [0, 1, 0]], [0, 0, 1], ops)


def test_rational_solve_exact():
    ops = QOps()
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1), Fraction(-1)]]
    rhs = [Fraction(5, 6), Fraction(0)]
    sol = solve(rows, rhs, ops)
    assert sol == [Fraction(1), Fraction(1)]
