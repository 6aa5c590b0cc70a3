"""Exact dense matrices over the rationals.

Everything here works on ``fractions.Fraction`` entries so rank and
bijectivity questions have exact answers. Sizes stay in the tens, so plain
Gaussian elimination is adequate.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Immutable ``rows x cols`` matrix with Fraction entries."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: tuple[tuple[Fraction, ...], ...]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entries do not match shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        data = tuple(tuple(_frac(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, tuple((_ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_flat(cls, rows: int, cols: int, flat: Sequence) -> Matrix:
        if len(flat) != rows * cols:
            raise ValueError("flat vector has wrong length")
        return cls(rows, cols, tuple(tuple(_frac(flat[i * cols + j]) for j in range(cols)) for i in range(rows)))

    @classmethod
    def column(cls, vec: Sequence) -> Matrix:
        return cls(len(vec), 1, tuple((_frac(x),) for x in vec))

    @classmethod
    def row(cls, vec: Sequence) -> Matrix:
        return cls(1, len(vec), (tuple(_frac(x) for x in vec),))

    @classmethod
    def from_function(cls, rows: int, cols: int, fn) -> Matrix:
        return cls(rows, cols, tuple(tuple(_frac(fn(i, j)) for j in range(cols)) for i in range(rows)))

    @classmethod
    def permutation(cls, images: Sequence[int]) -> Matrix:
        """Matrix sending basis vector ``e_k`` to ``e_{images[k]}``."""
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError("not a permutation")
        rows = [[_ZERO] * n for _ in range(n)]
        for k, t in enumerate(images):
            rows[t][k] = _ONE
        return cls(n, n, tuple(tuple(r) for r in rows))

    # protocol

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.entries]

    def flatten(self) -> tuple[Fraction, ...]:
        """Row-major coordinates."""
        return tuple(x for r in self.entries for x in r)

    # arithmetic

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        out = []
        for r in self.entries:
            nz = [(k, x) for k, x in enumerate(r) if x]
            out.append(tuple(sum((x * c[k] for k, x in nz), _ZERO) for c in ocols))
        return Matrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return Matrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = _frac(c)
        return Matrix(self.rows, self.cols, tuple(tuple(c * a for a in r) for r in self.entries))

    def transpose(self) -> Matrix:
        if self.rows == 0:
            return Matrix.zeros(self.cols, 0)
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)))

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def kron(self, other: Matrix) -> Matrix:
        zero_block = (_ZERO,) * other.cols
        rows = []
        for r in self.entries:
            for s in other.entries:
                row: list = []
                for a in r:
                    # entries are mostly 0 or 1, skip the Fraction products there
                    if not a:
                        row.extend(zero_block)
                    elif a == 1:
                        row.extend(s)
                    else:
                        row.extend(a * b for b in s)
                rows.append(tuple(row))
        return Matrix(self.rows * other.rows, self.cols * other.cols, tuple(rows))

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def is_permutation(self) -> bool:
        if self.rows != self.cols:
            return False
        for r in self.entries:
            if sorted(r) != [_ZERO] * (self.cols - 1) + [_ONE]:
                return False
        return all(sum(c) == 1 for c in zip(*self.entries)) if self.rows else True

    # elimination

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row echelon form and the pivot columns."""
        m = [list(r) for r in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            p = next((i for i in range(r, self.rows) if m[i][c]), None)
            if p is None:
                continue
            m[r], m[p] = m[p], m[r]
            piv = m[r][c]
            if piv != 1:
                m[r] = [x / piv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.rows, self.cols, tuple(tuple(x) for x in m)), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[tuple[Fraction, ...]]:
        """Kernel basis, returned in reduced column echelon form."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [_ZERO] * self.cols
            v[f] = _ONE
            for i, p in enumerate(pivots):
                v[p] = -red[i, f]
            basis.append(v)
        if not basis:
            return []
        # rows of the rref of the basis matrix are the reduced column echelon columns
        ech, piv = Matrix.from_rows(basis, self.cols).rref()
        return [ech.entries[i] for i in range(len(piv))]

    def solve(self, rhs: Sequence) -> tuple[Fraction, ...] | None:
        """A solution of ``self @ x = rhs`` with free variables zero, or None."""
        if len(rhs) != self.rows:
            raise ValueError("right-hand side has wrong length")
        aug = Matrix(self.rows, self.cols + 1, tuple(
            r + (_frac(b),) for r, b in zip(self.entries, rhs)))
        red, pivots = aug.rref()
        if pivots and pivots[-1] == self.cols:
            return None
        x = [_ZERO] * self.cols
        for i, p in enumerate(pivots):
            x[p] = red[i, self.cols]
        return tuple(x)

    def inverse(self) -> Matrix | None:
        if self.rows != self.cols:
            return None
        n = self.rows
        eye = Matrix.identity(n).entries
        aug = Matrix(n, 2 * n, tuple(r + eye[i] for i, r in enumerate(self.entries)))
        red, pivots = aug.rref()
        if tuple(pivots[:n]) != tuple(range(n)):
            return None
        return Matrix(n, n, tuple(r[n:] for r in red.entries))


def hstack(blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    if not blocks:
        return Matrix.zeros(rows or 0, 0)
    r = blocks[0].rows
    if any(b.rows != r for b in blocks):
        raise ValueError("hstack row mismatch")
    return Matrix(r, sum(b.cols for b in blocks), tuple(
        tuple(x for b in blocks for x in b.entries[i]) for i in range(r)))


def vstack(blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not blocks:
        return Matrix.zeros(0, cols or 0)
    c = blocks[0].cols
    if any(b.cols != c for b in blocks):
        raise ValueError("vstack column mismatch")
    return Matrix(sum(b.rows for b in blocks), c, tuple(r for b in blocks for r in b.entries))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[_ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = b.entries[i]
        r0 += b.rows
        c0 += b.cols
    return Matrix(rows, cols, tuple(tuple(r) for r in out))


def random_matrix(rng: random.Random, rows: int, cols: int, lo: int = -2, hi: int = 2) -> Matrix:
    return Matrix(rows, cols, tuple(
        tuple(Fraction(rng.randint(lo, hi)) for _ in range(cols)) for _ in range(rows)))


def stack_columns(vectors: Iterable[Sequence], length: int) -> Matrix:
    """Matrix whose columns are the given vectors."""
    vs = list(vectors)
    return Matrix(length, len(vs), tuple(tuple(_frac(v[i]) for v in vs) for i in range(length)))


class Subspace:
    """Span of vectors in reduced column echelon form.

    Each basis vector has a 1 at its pivot and every other basis vector is 0
    there, so coordinates of a member are read off at the pivots.
    """

    def __init__(self, basis: Sequence[Sequence], ambient: int):
        self.basis = [tuple(_frac(x) for x in v) for v in basis]
        self.ambient = ambient
        self.pivots = [next(i for i, x in enumerate(v) if x) for v in self.basis]

    @classmethod
    def kernel(cls, M: Matrix) -> "Subspace":
        return cls(M.nullspace(), M.cols)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v: Sequence) -> tuple[Fraction, ...]:
        return tuple(_frac(v[p]) for p in self.pivots)

    def vector(self, coords: Sequence) -> tuple[Fraction, ...]:
        out = [_ZERO] * self.ambient
        for c, b in zip(coords, self.basis):
            if c:
                for i, x in enumerate(b):
                    if x:
                        out[i] += c * x
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return self.vector(self.coords(v)) == tuple(_frac(x) for x in v)
