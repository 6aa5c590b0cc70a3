from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from prerigid.linalg import Matrix, Subspace, block_diag, hstack, vstack

entries = st.integers(-3, 3)


@st.composite
def matrices(draw, max_rows=4, max_cols=4):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix.from_rows(rows, cols=c)


def to_sympy(M: Matrix) -> sympy.Matrix:
    return sympy.Matrix(M.rows, M.cols, [sympy.Rational(x.numerator, x.denominator) for x in M.flatten()])


@given(matrices())
def test_rank_matches_sympy(M):
    assert M.rank() == to_sympy(M).rank()


@given(matrices())
def test_nullspace_is_kernel_of_right_dimension(M):
    basis = M.nullspace()
    assert len(basis) == M.cols - M.rank()
    for v in basis:
        assert (M @ Matrix.column(v)).is_zero()


@given(matrices(), st.lists(entries, min_size=4, max_size=4))
def test_solve_consistent_systems(M, x):
    x = x[: M.cols]
    b = (M @ Matrix.column(x)).flatten() if M.cols else (Fraction(0),) * M.rows
    sol = M.solve(b)
    assert sol is not None
    assert (M @ Matrix.column(sol)).flatten() == tuple(b)


def test_solve_inconsistent_returns_none():
    assert Matrix.from_rows([[1, 1], [2, 2]]).solve([1, 3]) is None


@given(matrices(3, 3), matrices(3, 3))
def test_kron_matches_sympy(A, B):
    ours = to_sympy(A.kron(B))
    theirs = sympy.kronecker_product(to_sympy(A), to_sympy(B)) if A.rows * A.cols * B.rows * B.cols else None
    if theirs is not None:
        assert ours == theirs
    assert A.kron(B).shape == (A.rows * B.rows, A.cols * B.cols)


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(entries, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_inverse_iff_full_rank(rows):
    M = Matrix.from_rows(rows)
    inv = M.inverse()
    if M.rank() == M.rows:
        assert M @ inv == Matrix.identity(M.rows)
        assert to_sympy(inv) == to_sympy(M).inv()
    else:
        assert inv is None


def test_transpose_and_permutation():
    M = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert M.T.shape == (3, 2) and M.T[2, 1] == 6
    P = Matrix.permutation([1, 2, 0])
    assert P.is_permutation() and P @ P.T == Matrix.identity(3)
    assert not Matrix.from_rows([[1, 1], [0, 1]]).is_permutation()


def test_exact_fractions():
    M = Matrix.from_rows([[Fraction(1, 3), 0], [0, 3]])
    assert M @ M.inverse() == Matrix.identity(2)


def test_stacking_helpers():
    A, B = Matrix.identity(1), Matrix.from_rows([[2, 3]])
    assert hstack([A, Matrix.from_rows([[5]])]).shape == (1, 2)
    assert vstack([B, B]).shape == (2, 2)
    assert block_diag([A, B]).shape == (2, 3)


def test_subspace_coordinates():
    S = Subspace.kernel(Matrix.from_rows([[1, 1, 0]]))
    assert S.dim == 2
    v = S.vector([1, 2])
    assert S.contains(v) and S.coords(v) == (1, 2)
    assert not S.contains((1, 0, 0))
