"""Exact rational linear algebra on dense nested lists of Fractions.

Matrices are tuples of row tuples; vectors are tuples. Everything returned is
immutable so values can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Scalar = Fraction
Vector = tuple
Matrix = tuple

Number = Union[int, Fraction, str]


class DimensionError(ValueError):
    pass


def scalar(x: Number) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a reduced Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; pass 'p/q' strings")
    raise TypeError(f"cannot interpret {x!r} as a rational scalar")


def format_scalar(x: Fraction) -> str:
    return str(x)


def vector(entries: Iterable[Number]) -> Vector:
    return tuple(scalar(x) for x in entries)


def matrix(rows: Iterable[Iterable[Number]]) -> Matrix:
    m = tuple(tuple(scalar(x) for x in row) for row in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimensionError("ragged matrix rows")
    return m


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((Fraction(0),) * cols for _ in range(rows))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise DimensionError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt)
        for row in a
    )


def matvec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    if shape(a)[1] != len(v):
        raise DimensionError(f"matrix has {shape(a)[1]} columns, vector has {len(v)} entries")
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise DimensionError("shape mismatch")
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(c: Number, a: Matrix) -> Matrix:
    c = scalar(c)
    return tuple(tuple(c * x for x in row) for row in a)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def _rref(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form; return pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        pr = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


def rank(a: Matrix) -> int:
    rows = [list(r) for r in a]
    return len(_rref(rows, shape(a)[1]))


def solve_linear(a: Matrix, b: Sequence[Number]) -> Optional[Vector]:
    """Return one exact solution of ``a x = b`` or None if the system is inconsistent.

    Free variables are set to zero.
    """
    nrows, ncols = shape(a)
    if nrows != len(b):
        raise DimensionError(f"matrix has {nrows} rows, right-hand side has {len(b)} entries")
    rows = [list(r) + [scalar(x)] for r, x in zip(a, b)]
    pivots = _rref(rows, ncols)
    for row in rows[len(pivots):]:
        if row[ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][ncols]
    return tuple(x)


def kernel_basis(a: Matrix, ncols: Optional[int] = None) -> list[Vector]:
    """Exact basis of the null space of ``a`` (one vector per free column).

    ``ncols`` is only needed when ``a`` has no rows.
    """
    if ncols is None:
        ncols = shape(a)[1]
    rows = [list(r) for r in a]
    pivots = _rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][free]
        basis.append(tuple(v))
    return basis


def _require_square(a: Matrix) -> int:
    n, m = shape(a)
    if n != m:
        raise DimensionError(f"expected a square matrix, got {n}x{m}")
    return n


def determinant(a: Matrix) -> Fraction:
    n = _require_square(a)
    rows = [list(r) for r in a]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f /= piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def invert(a: Matrix) -> Optional[Matrix]:
    """Exact inverse, or None for singular input."""
    n = _require_square(a)
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    pivots = _rref(rows, n)
    if len(pivots) < n:
        return None
    return tuple(tuple(r[n:]) for r in rows)
