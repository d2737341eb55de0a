"""Exact dense linear algebra over the integers and rationals.

Everything in this package that looks like a linear map acts on *row*
vectors from the right, so the matrix of "f then g" is ``matrix(f) *
matrix(g)`` and every representation of a word w1*w2 is the product of
the representations of w1 and w2 in that order.

Matrices are immutable and small (nothing downstream exceeds ~40x40), so
the implementation favours clarity over asymptotics.  Integer-valued
entries are stored as ``int`` and only genuinely fractional entries as
``Fraction``; the two compare and hash consistently, and no floating
point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Scalar = int | Fraction


def _norm(x: Scalar) -> Scalar:
    """Collapse integer-valued Fractions to int; reject anything inexact."""
    if isinstance(x, bool):
        raise TypeError("matrix entries must be int or Fraction, got bool")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


def parse_scalar(text: str) -> Scalar:
    """Parse "p" or "p/q" into an exact scalar."""
    s = text.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return _norm(Fraction(int(p), int(q)))
    return int(s)


def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


@dataclass(frozen=True)
class ExactMatrix:
    """Immutable dense matrix with exact int/Fraction entries."""

    rows: int
    cols: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        norm_rows = []
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"expected {self.cols} columns, got {len(row)}")
            norm_rows.append(tuple(_norm(x) for x in row))
        object.__setattr__(self, "entries", tuple(norm_rows))

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> "ExactMatrix":
        rows = [tuple(r) for r in rows]
        if rows:
            width = len(rows[0])
        elif cols is not None:
            width = cols
        else:
            width = 0
        return ExactMatrix(len(rows), width, tuple(rows))

    @staticmethod
    def identity(n: int) -> "ExactMatrix":
        return ExactMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zeros(rows: int, cols: int) -> "ExactMatrix":
        return ExactMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def diagonal(values: Sequence[Scalar]) -> "ExactMatrix":
        n = len(values)
        return ExactMatrix(n, n, tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def block_diagonal(blocks: Iterable["ExactMatrix"]) -> "ExactMatrix":
        blocks = list(blocks)
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[0] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                out[r0 + i][c0:c0 + b.cols] = list(b.entries[i])
            r0 += b.rows
            c0 += b.cols
        return ExactMatrix.from_rows(out, cols=cols)

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        ocols = list(zip(*other.entries)) if other.entries else [()] * other.cols
        out = []
        for row in self.entries:
            out.append(tuple(sum(a * b for a, b in zip(row, col)) for col in ocols))
        return ExactMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(
            self.rows, self.cols,
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)),
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, tuple(tuple(-a for a in r) for r in self.entries))

    def __pow__(self, exponent: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices can be raised to a power")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExactMatrix.identity(self.rows)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def _same_shape(self, other: "ExactMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def scale(self, s: Scalar) -> "ExactMatrix":
        s = _norm(s)
        return ExactMatrix(self.rows, self.cols, tuple(tuple(s * a for a in r) for r in self.entries))

    def transpose(self) -> "ExactMatrix":
        if not self.entries:
            return ExactMatrix(self.cols, self.rows, tuple(() for _ in range(self.cols)))
        return ExactMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == (1 if i == j else 0) for i in range(self.rows) for j in range(self.cols)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for r in self.entries for x in r)

    def det(self) -> Scalar:
        """Determinant by exact fraction-based elimination."""
        if not self.is_square:
            raise ValueError("determinant requires a square matrix")
        n = self.rows
        a = [[Fraction(x) for x in row] for row in self.entries]
        sign = 1
        result = Fraction(1)
        for k in range(n):
            pivot = next((i for i in range(k, n) if a[i][k]), None)
            if pivot is None:
                return 0
            if pivot != k:
                a[k], a[pivot] = a[pivot], a[k]
                sign = -sign
            result *= a[k][k]
            inv = 1 / a[k][k]
            for i in range(k + 1, n):
                if a[i][k]:
                    factor = a[i][k] * inv
                    a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
        return _norm(sign * result)

    def inverse(self) -> "ExactMatrix":
        """Exact inverse by Gauss-Jordan; raises ValueError when singular."""
        if not self.is_square:
            raise ValueError("inverse requires a square matrix")
        n = self.rows
        a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for k in range(n):
            pivot = next((i for i in range(k, n) if a[i][k]), None)
            if pivot is None:
                raise ValueError("matrix is singular")
            a[k], a[pivot] = a[pivot], a[k]
            inv = 1 / a[k][k]
            a[k] = [x * inv for x in a[k]]
            for i in range(n):
                if i != k and a[i][k]:
                    factor = a[i][k]
                    a[i] = [x - factor * y for x, y in zip(a[i], a[k])]
        return ExactMatrix.from_rows([row[n:] for row in a], cols=n)

    def to_json_obj(self) -> list[list[str]]:
        """Row-major nested lists of exact scalar strings ("p" or "p/q")."""
        return [[format_scalar(x) for x in row] for row in self.entries]

    @staticmethod
    def from_json_obj(obj: Sequence[Sequence[str]], cols: int | None = None) -> "ExactMatrix":
        return ExactMatrix.from_rows([[parse_scalar(x) for x in row] for row in obj], cols=cols)

    def __str__(self) -> str:
        if not self.entries:
            return f"<{self.rows}x{self.cols}>"
        cells = [[format_scalar(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in row) + "]" for row in cells)


@dataclass(frozen=True)
class SymplecticForm:
    """Standard symplectic form of genus g on Z^(2g), basis x1,y1,...,xg,yg."""

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError("genus must be positive")

    @property
    def dim(self) -> int:
        return 2 * self.genus

    @property
    def matrix(self) -> ExactMatrix:
        block = ExactMatrix.from_rows([[0, 1], [-1, 0]])
        return ExactMatrix.block_diagonal([block] * self.genus)

    def pairing(self, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
        """<u, v> = u J v^T; antisymmetric, <x_i, y_i> = 1."""
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        total: Scalar = 0
        for i in range(self.genus):
            total += u[2 * i] * v[2 * i + 1] - u[2 * i + 1] * v[2 * i]
        return _norm(total)


def is_symplectic(m: ExactMatrix, form: SymplecticForm) -> bool:
    """True iff m^T J m = J for the form's Gram matrix J.

    A shape mismatch is a usage bug, not a negative answer.
    """
    if m.rows != form.dim or m.cols != form.dim:
        raise ValueError(f"expected a {form.dim}x{form.dim} matrix, got {m.rows}x{m.cols}")
    j = form.matrix
    return m.transpose() * j * m == j


def smith_normal_form(m: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Smith normal form of an integer matrix.

    Returns (d, u, v) with u*m*v = d, u and v unimodular, d diagonal with
    nonnegative entries satisfying d[0] | d[1] | ... .  Pivots are chosen
    as the smallest nonzero absolute value in the trailing submatrix, ties
    broken by row-major position, which makes the output deterministic.
    """
    if not m.is_integer():
        raise ValueError("smith_normal_form requires integer entries")
    rows, cols = m.rows, m.cols
    a = [list(map(int, row)) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in a:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row[dst] += q * row[src]
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def pivot_position(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = abs(a[i][j])
                if x and (best is None or x < best[0]):
                    best = (x, i, j)
        return None if best is None else (best[1], best[2])

    t = 0
    while t < min(rows, cols):
        pos = pivot_position(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # Clear the pivot column, re-pivoting on any smaller remainder.
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # Row and column are clear; enforce divisibility of the rest.
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        t += 1

    for i in range(min(rows, cols)):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]

    d = ExactMatrix.from_rows(a, cols=cols)
    return d, ExactMatrix.from_rows(u, cols=rows), ExactMatrix.from_rows(v, cols=cols)


def invariant_factors(m: ExactMatrix) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith normal form, in order."""
    d, _, _ = smith_normal_form(m)
    return tuple(d.entries[i][i] for i in range(min(d.rows, d.cols)) if d.entries[i][i])
