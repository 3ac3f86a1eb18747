"""Matrix representations of paravectors.

``to_matrix4`` embeds a paravector into the 4x4 complex matrix whose
first row lists the four complex components and whose remaining rows
repeat them in a fixed cross pattern; the embedding turns paravector
sums and products into matrix sums and products, paravector conjugation
into Hermitian conjugation, and squares the determinant.  ``to_pauli``
gives the 2x2 representation over the sigma-matrix basis, which
preserves products and the determinant exactly.

The matrix classes here deliberately carry their own naive
multiplication, LU determinant, and Gauss-Jordan inverse instead of
delegating to the paravector code, so they can serve as an independent
differential-testing oracle for it.
"""

from __future__ import annotations

import cmath

from .core import DEFAULT_TOL, Paravector, format_complex
from .errors import NotAParavectorMatrix, ValidationError


def _check_rows(rows, n):
    try:
        rows = tuple(tuple(complex(e) for e in row) for row in rows)
    except (TypeError, ValueError):
        raise ValidationError("matrix rows must hold complex numbers") from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValidationError(f"expected a {n}x{n} matrix")
    for row in rows:
        for e in row:
            if not cmath.isfinite(e):
                raise ValidationError("matrix entries must be finite")
    return rows


class _SquareMatrix:
    __slots__ = ("rows",)
    _n = 0

    def __init__(self, rows):
        self.rows = _check_rows(rows, self._n)

    @classmethod
    def identity(cls):
        n = cls._n
        return cls(
            tuple(
                tuple(1 + 0j if i == j else 0j for j in range(n)) for i in range(n)
            )
        )

    def __eq__(self, other):
        return type(self) is type(other) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return type(self)(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.rows, other.rows)
            )
        )

    def __matmul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        n = self._n
        a, b = self.rows, other.rows
        out = []
        for i in range(n):
            ai = a[i]
            row = []
            for j in range(n):
                acc = 0j
                for k in range(n):
                    acc += ai[k] * b[k][j]
                row.append(acc)
            out.append(tuple(row))
        return type(self)(tuple(out))

    def conj_transpose(self):
        n = self._n
        r = self.rows
        return type(self)(
            tuple(tuple(r[j][i].conjugate() for j in range(n)) for i in range(n))
        )

    def det(self):
        """Determinant via LU elimination with partial pivoting."""
        n = self._n
        a = [list(row) for row in self.rows]
        result = 1 + 0j
        for col in range(n):
            piv = max(range(col, n), key=lambda r: abs(a[r][col]))
            if abs(a[piv][col]) == 0.0:
                return 0j
            if piv != col:
                a[piv], a[col] = a[col], a[piv]
                result = -result
            p = a[col][col]
            result *= p
            for r in range(col + 1, n):
                f = a[r][col] / p
                for c in range(col + 1, n):
                    a[r][c] -= f * a[col][c]
        return result

    def inverse(self):
        """Inverse via Gauss-Jordan elimination with partial pivoting."""
        n = self._n
        a = [list(row) + [1 + 0j if i == j else 0j for j in range(n)]
             for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = max(range(col, n), key=lambda r: abs(a[r][col]))
            if abs(a[piv][col]) == 0.0:
                raise ValueError("matrix is singular")
            if piv != col:
                a[piv], a[col] = a[col], a[piv]
            p = a[col][col]
            a[col] = [e / p for e in a[col]]
            for r in range(n):
                if r == col:
                    continue
                f = a[r][col]
                if f != 0:
                    a[r] = [er - f * ec for er, ec in zip(a[r], a[col])]
        return type(self)(tuple(tuple(row[n:]) for row in a))

    def approx_eq(self, other, tol=DEFAULT_TOL):
        scale = 0.0
        for m in (self, other):
            for row in m.rows:
                for e in row:
                    scale = max(scale, abs(e.real), abs(e.imag))
        thr = tol.linear(scale)
        return all(
            abs(a - b) <= thr
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def __str__(self):
        return format_matrix(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({self.rows!r})"


class Matrix4(_SquareMatrix):
    """A 4x4 complex matrix with self-contained arithmetic."""

    _n = 4


class Matrix2(_SquareMatrix):
    """A 2x2 complex matrix with self-contained arithmetic."""

    _n = 2


def to_matrix4(p):
    """4x4 embedding of a paravector."""
    a = p.s
    x, y, z = p.v
    return Matrix4(
        (
            (a, x, y, z),
            (x, a, -1j * z, 1j * y),
            (y, 1j * z, a, -1j * x),
            (z, -1j * y, 1j * x, a),
        )
    )


def from_matrix4(m, tol=DEFAULT_TOL):
    """Read a paravector back out of its 4x4 embedding.

    The scalar comes from the top-left entry and the vector from the rest
    of the first row; all sixteen entries are then checked against the
    embedding pattern (rebuilt here on purpose, without calling
    to_matrix4) and the first offending entry is reported.
    """
    r = m.rows
    a = r[0][0]
    x, y, z = r[0][1], r[0][2], r[0][3]
    expected = (
        (a, x, y, z),
        (x, a, -1j * z, 1j * y),
        (y, 1j * z, a, -1j * x),
        (z, -1j * y, 1j * x, a),
    )
    scale = 0.0
    for row in r:
        for e in row:
            scale = max(scale, abs(e.real), abs(e.imag))
    thr = tol.linear(scale)
    for i in range(4):
        for j in range(4):
            if abs(r[i][j] - expected[i][j]) > thr:
                raise NotAParavectorMatrix(
                    f"entry ({i},{j}) breaks the paravector pattern", entry=(i, j)
                )
    return Paravector(a, (x, y, z))


SIGMA_0 = Matrix2(((1, 0), (0, 1)))
SIGMA_X = Matrix2(((0, 1), (1, 0)))
SIGMA_Y = Matrix2(((0, -1j), (1j, 0)))
SIGMA_Z = Matrix2(((1, 0), (0, -1)))


def to_pauli(p):
    """2x2 representation: scalar times sigma_0 plus vector dotted into sigma."""
    a = p.s
    x, y, z = p.v
    return Matrix2(((a + z, x - 1j * y), (x + 1j * y, a - z)))


def format_matrix(rows):
    """Plain-text grid of a complex matrix."""
    cells = [[format_complex(e) for e in row] for row in rows]
    widths = [max(len(cells[i][j]) for i in range(len(cells))) for j in range(len(cells[0]))]
    lines = []
    for row in cells:
        padded = "  ".join(c.rjust(w) for c, w in zip(row, widths))
        lines.append(f"[ {padded} ]")
    return "\n".join(lines)
