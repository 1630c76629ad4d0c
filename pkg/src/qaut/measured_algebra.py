"""Finite-dimensional measured (Frobenius) algebras over the rationals.

Conventions, fixed once for the whole package:

* ``structure[i][j][k]`` is the coefficient of ``e_k`` in ``e_i * e_j``.
* ``unit`` holds the coordinates of 1 and ``measure[i]`` is ``phi(e_i)``.
* An algebra map ``f`` stores ``f(e_i) = sum_l matrix[l][i] e_l``, i.e. the
  columns are indexed by the source basis.
* The Gram matrix is ``G[i][j] = phi(e_i e_j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from . import exact_linalg as la
from .report import ValidationReport

__all__ = [
    "MeasuredAlgebra",
    "AlgebraMap",
    "Copairing",
    "validate",
    "gram",
    "copairing",
    "invertible_decomposition",
    "measure_decomposition",
    "function_algebra",
    "matrix_algebra",
    "group_algebra",
    "dual_function_algebra_of_group",
    "dual_numbers",
    "sweedler_algebra",
    "is_function_algebra",
]


@dataclass(frozen=True, eq=False)
class MeasuredAlgebra:
    structure: tuple
    unit: tuple
    measure: tuple
    basis: tuple = ()

    def __post_init__(self):
        n = len(self.structure)
        if n == 0:
            raise la.DimensionError("an algebra needs positive dimension")
        for i in range(n):
            if len(self.structure[i]) != n or any(len(r) != n for r in self.structure[i]):
                raise la.DimensionError(f"structure tensor is not {n}x{n}x{n}")
        if len(self.unit) != n or len(self.measure) != n:
            raise la.DimensionError("unit/measure length does not match dimension")
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(n)))
        elif len(self.basis) != n:
            raise la.DimensionError("basis label count does not match dimension")

    @classmethod
    def from_triples(cls, dim: int, triples: Iterable[Sequence], unit: Sequence,
                     measure: Sequence, basis: Sequence[str] = ()) -> "MeasuredAlgebra":
        """Build from sparse ``(i, j, k, coefficient)`` entries; omitted entries are zero."""
        c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, v in triples:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise la.DimensionError(f"structure index ({i},{j},{k}) out of range for dim {dim}")
            c[i][j][k] += la.scalar(v)
        return cls(
            structure=tuple(tuple(tuple(r) for r in plane) for plane in c),
            unit=la.vector(unit),
            measure=la.vector(measure),
            basis=tuple(basis),
        )

    @property
    def dim(self) -> int:
        return len(self.structure)

    @cached_property
    def nonzero_structure(self) -> tuple:
        """Sparse view: tuples ``(i, j, k, c)`` with ``c != 0``."""
        n = self.dim
        return tuple(
            (i, j, k, self.structure[i][j][k])
            for i, j, k in product(range(n), repeat=3)
            if self.structure[i][j][k]
        )

    def triples(self) -> list:
        return list(self.nonzero_structure)

    def with_measure(self, measure: Sequence) -> "MeasuredAlgebra":
        return MeasuredAlgebra(self.structure, self.unit, la.vector(measure), self.basis)

    def basis_vector(self, i: int) -> tuple:
        return tuple(Fraction(int(k == i)) for k in range(self.dim))

    def multiply(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, j, k, c in self.nonzero_structure:
            if a[i] and b[j]:
                out[k] += a[i] * b[j] * c
        return tuple(out)

    def left_multiplication(self, a: Sequence[Fraction]) -> la.Matrix:
        """Matrix of ``L(a): b -> a b``; column j is ``a e_j``."""
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for i, j, k, c in self.nonzero_structure:
            if a[i]:
                m[k][j] += a[i] * c
        return tuple(tuple(r) for r in m)

    def apply_measure(self, a: Sequence[Fraction]) -> Fraction:
        return sum((x * y for x, y in zip(self.measure, a)), Fraction(0))

    def twisted_form(self, a: Sequence[Fraction]) -> tuple:
        """The linear form ``phi(a -)`` as a coordinate vector."""
        g = gram(self)
        return tuple(sum((a[i] * g[i][j] for i in range(self.dim)), Fraction(0)) for j in range(self.dim))

    def is_commutative(self) -> bool:
        n = self.dim
        s = self.structure
        return all(s[i][j][k] == s[j][i][k] for i, j, k in product(range(n), repeat=3))

    def __eq__(self, other):
        if not isinstance(other, MeasuredAlgebra):
            return NotImplemented
        return (self.structure, self.unit, self.measure) == (other.structure, other.unit, other.measure)

    def __hash__(self):
        return hash((self.structure, self.unit, self.measure))

    def __repr__(self):
        return f"MeasuredAlgebra(dim={self.dim}, basis={list(self.basis)}, measure={[str(x) for x in self.measure]})"


def _check_structure(z: MeasuredAlgebra, report: ValidationReport) -> None:
    n = z.dim
    c = z.structure
    report.checked.append("associativity")
    for i, j, k, l in product(range(n), repeat=4):
        lhs = sum((c[i][j][p] * c[p][k][l] for p in range(n) if c[i][j][p]), Fraction(0))
        rhs = sum((c[j][k][q] * c[i][q][l] for q in range(n) if c[j][k][q]), Fraction(0))
        if lhs != rhs:
            report.fail("associativity", "(e_i e_j) e_k != e_i (e_j e_k) in coefficient l", i, j, k, l)
            break
    report.checked.append("unit")
    eta = z.unit
    for j, k in product(range(n), repeat=2):
        left = sum((eta[i] * c[i][j][k] for i in range(n) if eta[i]), Fraction(0))
        right = sum((eta[i] * c[j][i][k] for i in range(n) if eta[i]), Fraction(0))
        want = Fraction(int(j == k))
        if left != want or right != want:
            report.fail("unit", "unit vector is not a two-sided identity", j, k)
            break


def validate(z: MeasuredAlgebra) -> ValidationReport:
    """Check associativity, the unit axioms and nondegeneracy of the measure."""
    report = ValidationReport(subject="measured algebra")
    _check_structure(z, report)
    report.checked.append("nondegenerate")
    if la.determinant(gram(z)) == 0:
        report.fail("nondegenerate", "Gram matrix phi(e_i e_j) is singular")
    return report


def gram(z: MeasuredAlgebra) -> la.Matrix:
    n = z.dim
    g = [[Fraction(0)] * n for _ in range(n)]
    for i, j, k, c in z.nonzero_structure:
        if z.measure[k]:
            g[i][j] += c * z.measure[k]
    return tuple(tuple(r) for r in g)


@dataclass(frozen=True)
class Copairing:
    """Element ``sum B'[i][j] e_i (x) e_j`` of ``Z (x) Z`` dual to ``B(x, y) = phi(xy)``."""

    algebra: MeasuredAlgebra = field(repr=False)
    matrix: la.Matrix

    def check(self) -> ValidationReport:
        report = ValidationReport(subject="copairing")
        g = gram(self.algebra)
        ident = la.identity(self.algebra.dim)
        report.checked.append("snake")
        if la.matmul(g, self.matrix) != ident:
            report.fail("snake", "(B (x) id)(id (x) B') != id")
        if la.matmul(self.matrix, g) != ident:
            report.fail("snake", "(id (x) B)(B' (x) id) != id")
        return report


def copairing(z: MeasuredAlgebra) -> Copairing:
    inv = la.invert(gram(z))
    if inv is None:
        raise ValueError("measure is degenerate: Gram matrix is singular, no copairing exists")
    return Copairing(z, inv)


def _is_invertible_element(z: MeasuredAlgebra, a: Sequence[Fraction]) -> bool:
    return la.determinant(z.left_multiplication(a)) != 0


def invertible_decomposition(z: MeasuredAlgebra, a: Sequence) -> list[tuple[Fraction, tuple]]:
    """Write ``a`` as a combination of invertible elements.

    Returns ``[(coefficient, element), ...]`` with at most two terms. A singular
    ``a`` is split as ``(a - lam*1) + lam*1`` with ``lam`` the least of
    ``1, ..., n+1`` making ``L(a) - lam*id`` invertible. Zero gives ``[]``.
    """
    a = la.vector(a)
    if len(a) != z.dim:
        raise la.DimensionError(f"element has {len(a)} coordinates, algebra has dimension {z.dim}")
    if la.is_zero_vector(a):
        return []
    if _is_invertible_element(z, a):
        return [(Fraction(1), a)]
    la_ = z.left_multiplication(a)
    n = z.dim
    for lam in range(1, n + 2):
        shifted = tuple(
            tuple(la_[r][c] - (lam if r == c else 0) for c in range(n)) for r in range(n)
        )
        if la.determinant(shifted) != 0:
            lam = Fraction(lam)
            return [(Fraction(1), tuple(x - lam * u for x, u in zip(a, z.unit))), (lam, z.unit)]
    # at most n eigenvalues, so n+1 candidates always contain a good one
    raise AssertionError("no admissible shift found; algebra unit is inconsistent")


def measure_decomposition(z: MeasuredAlgebra, f: Sequence) -> list[tuple[Fraction, tuple]]:
    """Write the linear form ``f`` as a combination of measures ``phi(a_i -)``."""
    f = la.vector(f)
    if len(f) != z.dim:
        raise la.DimensionError(f"form has {len(f)} coordinates, algebra has dimension {z.dim}")
    if la.is_zero_vector(f):
        return []
    # f(e_j) = phi(a e_j) = sum_i a_i G[i][j], so a solves G^T a = f
    a = la.solve_linear(la.transpose(gram(z)), f)
    if a is None:
        raise ValueError("measure is degenerate; cannot represent the form as phi(a -)")
    out = []
    for lam, elem in invertible_decomposition(z, a):
        form = z.twisted_form(elem)
        if la.determinant(gram(z.with_measure(form))) == 0:
            raise AssertionError("twisted form phi(a -) is not a measure for invertible a")
        out.append((lam, form))
    return out


def is_function_algebra(z: MeasuredAlgebra) -> bool:
    """True when the basis consists of orthogonal idempotents: ``e_i e_j = delta_ij e_i``."""
    n = z.dim
    s = z.structure
    return all(
        s[i][j][k] == (1 if i == j == k else 0) for i, j, k in product(range(n), repeat=3)
    ) and all(u == 1 for u in z.unit)


# constructors ----------------------------------------------------------------


def function_algebra(n: int, weights: Optional[Sequence] = None, labels: Sequence[str] = ()) -> MeasuredAlgebra:
    """Functions on ``n`` points; the measure defaults to normalized counting measure."""
    if n < 1:
        raise ValueError("need at least one point")
    w = la.vector(weights) if weights is not None else (Fraction(1, n),) * n
    if len(w) != n:
        raise la.DimensionError(f"{len(w)} weights for {n} points")
    if any(x == 0 for x in w):
        raise ValueError("zero weight makes the measure degenerate")
    return MeasuredAlgebra.from_triples(
        n, [(i, i, i, 1) for i in range(n)], [1] * n, w, labels or [f"d{i + 1}" for i in range(n)]
    )


def matrix_algebra(d: int, measure: Optional[Sequence] = None) -> MeasuredAlgebra:
    """``M_d`` with matrix units ``E_ab`` in row-major order; trace measure by default."""
    if d < 1:
        raise ValueError("d must be positive")
    idx = lambda a, b: a * d + b  # noqa: E731
    triples = [
        (idx(a, b), idx(b, c), idx(a, c), 1) for a in range(d) for b in range(d) for c in range(d)
    ]
    unit = [int(a == b) for a in range(d) for b in range(d)]
    phi = measure if measure is not None else unit
    labels = [f"E{a + 1}{b + 1}" for a in range(d) for b in range(d)]
    return MeasuredAlgebra.from_triples(d * d, triples, unit, phi, labels)


def group_algebra(m: int) -> MeasuredAlgebra:
    """``Q[Z/m]`` with basis ``g^0, ..., g^(m-1)`` and the coefficient-of-identity measure."""
    if m < 1:
        raise ValueError("group order must be positive")
    triples = [(a, b, (a + b) % m, 1) for a in range(m) for b in range(m)]
    unit = [int(a == 0) for a in range(m)]
    return MeasuredAlgebra.from_triples(m, triples, unit, unit, [f"g^{a}" for a in range(m)])


def dual_function_algebra_of_group(m: int) -> MeasuredAlgebra:
    """Functions on ``Z/m`` with the normalized Haar (counting) measure."""
    return function_algebra(m, labels=[f"delta_{a}" for a in range(m)])


def dual_numbers() -> MeasuredAlgebra:
    """``Q[x]/(x^2)`` with ``phi(alpha + beta x) = beta``."""
    return MeasuredAlgebra.from_triples(2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], [1, 0], [0, 1], ["1", "x"])


def sweedler_products() -> list[tuple[int, int, int, int]]:
    """Multiplication table of Sweedler's algebra on ``1, g, x, gx``.

    ``g^a x^b`` has index ``a + 2b``; ``x g = -g x``, ``g^2 = 1``, ``x^2 = 0``.
    """
    out = []
    for a, b, c, d in product(range(2), repeat=4):
        if b + d >= 2:
            continue
        sign = -1 if (b and c) else 1
        out.append((a + 2 * b, c + 2 * d, (a + c) % 2 + 2 * (b + d), sign))
    return out


def sweedler_algebra(measure: Optional[Sequence] = None) -> MeasuredAlgebra:
    """Sweedler's 4-dimensional algebra; default measure is the x-coefficient (its right integral)."""
    phi = measure if measure is not None else [0, 0, 1, 0]
    return MeasuredAlgebra.from_triples(4, sweedler_products(), [1, 0, 0, 0], phi, ["1", "g", "x", "gx"])


# maps ------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraMap:
    """Unital algebra morphism; ``matrix[l][i]`` is the coefficient of ``e_l`` in ``f(e_i)``."""

    source: MeasuredAlgebra
    target: MeasuredAlgebra
    matrix: la.Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", la.matrix(self.matrix))

    def apply(self, v: Sequence[Fraction]) -> tuple:
        return la.matvec(self.matrix, v)

    def validate(self) -> ValidationReport:
        report = ValidationReport(subject="algebra map")
        rows, cols = la.shape(self.matrix)
        report.checked.append("dimensions")
        if (rows, cols) != (self.target.dim, self.source.dim):
            report.fail("dimensions", f"matrix is {rows}x{cols}, expected {self.target.dim}x{self.source.dim}")
            return report
        report.checked.append("unital")
        if self.apply(self.source.unit) != self.target.unit:
            report.fail("unital", "f(1) != 1")
        report.checked.append("multiplicative")
        cols_ = la.transpose(self.matrix)
        n = self.source.dim
        for i, j in product(range(n), repeat=2):
            lhs = self.apply(self.source.multiply(self.source.basis_vector(i), self.source.basis_vector(j)))
            rhs = self.target.multiply(cols_[i], cols_[j])
            if lhs != rhs:
                report.fail("multiplicative", "f(e_i e_j) != f(e_i) f(e_j)", i, j)
                break
        return report
