"""Finite-dimensional Hopf algebras given by structure tensors.

Index conventions:

* ``mult[i][j][k]``: coefficient of ``e_k`` in ``e_i e_j``
* ``comul[i][j][k]``: coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``
* ``antipode[l][i]``: coefficient of ``e_l`` in ``S(e_i)``
* comodule coaction ``rho[j][i][a]``: coefficient of ``v_j (x) e_a`` in ``alpha(v_i)``

Tensors are stored dense; sparse views are cached for the inner loops.
Elements of tensor powers are plain ``{index tuple: Fraction}`` dicts.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Optional, Sequence

from . import exact_linalg as la
from .measured_algebra import MeasuredAlgebra, _check_structure, gram, sweedler_products
from .report import ValidationReport

__all__ = [
    "FiniteHopfAlgebra",
    "Comodule",
    "ComoduleAlgebra",
    "HaarResult",
    "KappaResult",
    "validate_hopf",
    "haar_integral",
    "kappa",
    "check_comodule_algebra",
    "check_star_condition",
    "group_hopf",
    "sweedler_hopf",
    "function_hopf",
    "regular_comodule",
    "trivial_comodule",
]


def _dense3(n: int, triples) -> tuple:
    t = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, v in triples:
        t[i][j][k] += la.scalar(v)
    return tuple(tuple(tuple(r) for r in plane) for plane in t)


def _sparse3(t) -> tuple:
    return tuple(
        (i, j, k, t[i][j][k])
        for i in range(len(t)) for j in range(len(t[i])) for k in range(len(t[i][j]))
        if t[i][j][k]
    )


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@dataclass(frozen=True, eq=False)
class FiniteHopfAlgebra:
    mult: tuple
    unit: tuple
    comul: tuple
    counit: tuple
    antipode: la.Matrix
    basis: tuple = ()

    def __post_init__(self):
        n = len(self.mult)
        for name in ("unit", "counit"):
            if len(getattr(self, name)) != n:
                raise la.DimensionError(f"{name} has wrong length for dimension {n}")
        if la.shape(self.antipode) != (n, n):
            raise la.DimensionError("antipode must be an n x n matrix")
        if len(self.comul) != n:
            raise la.DimensionError("comultiplication tensor has wrong size")
        if not self.basis:
            object.__setattr__(self, "basis", tuple(f"e{i}" for i in range(n)))

    @classmethod
    def from_triples(cls, dim: int, mult, unit, comul, counit, antipode, basis=()) -> "FiniteHopfAlgebra":
        return cls(
            mult=_dense3(dim, mult),
            unit=la.vector(unit),
            comul=_dense3(dim, comul),
            counit=la.vector(counit),
            antipode=la.matrix(antipode),
            basis=tuple(basis),
        )

    @property
    def dim(self) -> int:
        return len(self.mult)

    @cached_property
    def mult_terms(self) -> tuple:
        return _sparse3(self.mult)

    @cached_property
    def comul_terms(self) -> tuple:
        return _sparse3(self.comul)

    @cached_property
    def _comul_by_k(self) -> dict:
        out = defaultdict(list)
        for i, j, k, c in self.comul_terms:
            out[k].append((i, j, c))
        return out

    @cached_property
    def _mult_by_ij(self) -> dict:
        out = defaultdict(list)
        for i, j, k, c in self.mult_terms:
            out[i, j].append((k, c))
        return out

    def as_algebra(self, measure: Optional[Sequence] = None) -> MeasuredAlgebra:
        """Underlying algebra; the measure defaults to the counit (only a placeholder)."""
        phi = la.vector(measure) if measure is not None else self.counit
        return MeasuredAlgebra(self.mult, self.unit, phi, self.basis)

    def basis_product(self, i: int, j: int) -> list:
        return self._mult_by_ij.get((i, j), [])

    def multiply(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, j, k, c in self.mult_terms:
            if a[i] and b[j]:
                out[k] += a[i] * b[j] * c
        return tuple(out)

    def coproduct_of_basis(self, k: int) -> list:
        return self._comul_by_k.get(k, [])

    def coproduct(self, a: Sequence[Fraction]) -> dict:
        out: dict = defaultdict(Fraction)
        for k, ak in enumerate(a):
            if ak:
                for i, j, c in self.coproduct_of_basis(k):
                    out[i, j] += ak * c
        return _clean(out)

    def antipode_of_basis(self, i: int) -> tuple:
        return tuple(self.antipode[l][i] for l in range(self.dim))

    def __repr__(self):
        return f"FiniteHopfAlgebra(dim={self.dim}, basis={list(self.basis)})"


def _basis(n: int, i: int) -> tuple:
    return tuple(Fraction(int(k == i)) for k in range(n))


def validate_hopf(a: FiniteHopfAlgebra) -> ValidationReport:
    """Exact check of every Hopf algebra axiom on basis elements."""
    report = ValidationReport(subject="Hopf algebra")
    n = a.dim
    _check_structure(a.as_algebra(), report)

    report.checked.append("coassociativity")
    for k in range(n):
        left: dict = defaultdict(Fraction)
        right: dict = defaultdict(Fraction)
        for i, j, c in a.coproduct_of_basis(k):
            for p, q, d in a.coproduct_of_basis(i):
                left[p, q, j] += c * d
            for p, q, d in a.coproduct_of_basis(j):
                right[i, p, q] += c * d
        if _clean(left) != _clean(right):
            report.fail("coassociativity", "(Delta (x) id) Delta != (id (x) Delta) Delta", k)
            break

    report.checked.append("counit")
    for k in range(n):
        left = [Fraction(0)] * n
        right = [Fraction(0)] * n
        for i, j, c in a.coproduct_of_basis(k):
            left[j] += a.counit[i] * c
            right[i] += a.counit[j] * c
        if tuple(left) != _basis(n, k) or tuple(right) != _basis(n, k):
            report.fail("counit", "(eps (x) id) Delta != id", k)
            break

    report.checked.append("comultiplication multiplicative")
    if a.coproduct(a.unit) != {(i, j): a.unit[i] * a.unit[j] for i in range(n) for j in range(n) if a.unit[i] and a.unit[j]}:
        report.fail("comultiplication multiplicative", "Delta(1) != 1 (x) 1")
    for x, y in product(range(n), repeat=2):
        lhs = a.coproduct(a.multiply(_basis(n, x), _basis(n, y)))
        rhs: dict = defaultdict(Fraction)
        for i, j, c in a.coproduct_of_basis(x):
            for p, q, d in a.coproduct_of_basis(y):
                for k1, m1 in a.basis_product(i, p):
                    for k2, m2 in a.basis_product(j, q):
                        rhs[k1, k2] += c * d * m1 * m2
        if lhs != _clean(rhs):
            report.fail("comultiplication multiplicative", "Delta(xy) != Delta(x) Delta(y)", x, y)
            break

    report.checked.append("counit multiplicative")
    if sum((e * u for e, u in zip(a.counit, a.unit)), Fraction(0)) != 1:
        report.fail("counit multiplicative", "eps(1) != 1")
    for x, y in product(range(n), repeat=2):
        prod = a.multiply(_basis(n, x), _basis(n, y))
        if sum((e * v for e, v in zip(a.counit, prod)), Fraction(0)) != a.counit[x] * a.counit[y]:
            report.fail("counit multiplicative", "eps(xy) != eps(x) eps(y)", x, y)
            break

    report.checked.append("antipode")
    for k in range(n):
        left = [Fraction(0)] * n
        right = [Fraction(0)] * n
        for i, j, c in a.coproduct_of_basis(k):
            si = a.antipode_of_basis(i)
            sj = a.antipode_of_basis(j)
            for t, v in enumerate(a.multiply(si, _basis(n, j))):
                left[t] += c * v
            for t, v in enumerate(a.multiply(_basis(n, i), sj)):
                right[t] += c * v
        want = tuple(a.counit[k] * u for u in a.unit)
        if tuple(left) != want or tuple(right) != want:
            report.fail("antipode", "m(S (x) id)Delta != u eps or m(id (x) S)Delta != u eps", k)
            break
    return report


# constructors ----------------------------------------------------------------


def group_hopf(m: int) -> FiniteHopfAlgebra:
    """Group algebra ``Q[Z/m]``: ``g`` group-like, ``S(g) = g^-1``."""
    mult = [(a, b, (a + b) % m, 1) for a in range(m) for b in range(m)]
    comul = [(a, a, a, 1) for a in range(m)]
    antipode = [[int(l == (-i) % m) for i in range(m)] for l in range(m)]
    return FiniteHopfAlgebra.from_triples(
        m, mult, [int(a == 0) for a in range(m)], comul, [1] * m, antipode, [f"g^{a}" for a in range(m)]
    )


def function_hopf(m: int) -> FiniteHopfAlgebra:
    """Functions on ``Z/m``: pointwise product, ``Delta(delta_g) = sum_{hk=g} delta_h (x) delta_k``."""
    mult = [(a, a, a, 1) for a in range(m)]
    comul = [(h, k, (h + k) % m, 1) for h in range(m) for k in range(m)]
    antipode = [[int(l == (-i) % m) for i in range(m)] for l in range(m)]
    return FiniteHopfAlgebra.from_triples(
        m, mult, [1] * m, comul, [int(a == 0) for a in range(m)], antipode, [f"delta_{a}" for a in range(m)]
    )


def sweedler_hopf() -> FiniteHopfAlgebra:
    """Sweedler's 4-dimensional Hopf algebra on ``1, g, x, gx``.

    ``Delta(g) = g (x) g``, ``Delta(x) = x (x) 1 + g (x) x``, ``S(g) = g``, ``S(x) = -gx``.
    """
    one, g, x, gx = range(4)
    comul = [
        (one, one, one, 1),
        (g, g, g, 1),
        (x, one, x, 1), (g, x, x, 1),
        (gx, g, gx, 1), (one, gx, gx, 1),
    ]
    # S(1)=1, S(g)=g, S(x)=-gx, S(gx)=S(x)S(g)=-gx g = x
    antipode = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]
    return FiniteHopfAlgebra.from_triples(
        4, sweedler_products(), [1, 0, 0, 0], comul, [1, 1, 0, 0], antipode, ["1", "g", "x", "gx"]
    )


# Haar measure ----------------------------------------------------------------


@dataclass(frozen=True)
class HaarResult:
    integral: Optional[tuple]
    is_measure: bool
    cosemisimple: bool
    solution_dimension: int
    side: str = "right"
    anomaly: str = ""


def haar_integral(a: FiniteHopfAlgebra, side: str = "right") -> HaarResult:
    """Colinear functional ``J``: ``(J (x) id)Delta = J(-)1`` (right) or ``(id (x) J)Delta = J(-)1`` (left).

    Normalized to ``J(1) = 1`` when possible, otherwise the first nonzero
    coordinate is set to 1.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    n = a.dim
    rows = []
    for k, t in product(range(n), repeat=2):
        row = [Fraction(0)] * n
        for i, j, c in a.coproduct_of_basis(k):
            if side == "right" and j == t:
                row[i] += c
            elif side == "left" and i == t:
                row[j] += c
        row[k] -= a.unit[t]
        if any(row):
            rows.append(tuple(row))
    sols = la.kernel_basis(tuple(rows), n)
    if not sols:
        return HaarResult(None, False, False, 0, side, "no nonzero colinear functional")
    if len(sols) > 1:
        return HaarResult(None, False, False, len(sols), side,
                          f"solution space has dimension {len(sols)}; input is not a Hopf algebra")
    j = sols[0]
    j_one = sum((x * u for x, u in zip(j, a.unit)), Fraction(0))
    norm = j_one if j_one else next(x for x in j if x)
    j = tuple(x / norm for x in j)
    is_measure = la.determinant(gram(a.as_algebra(j))) != 0
    return HaarResult(j, is_measure, j_one != 0, 1, side)


# comodules -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Comodule:
    host: FiniteHopfAlgebra = field(repr=False)
    rho: tuple  # rho[j][i][a]

    @property
    def dim(self) -> int:
        return len(self.rho)

    @cached_property
    def terms(self) -> dict:
        """``i -> [(j, a, coefficient)]`` for ``alpha(v_i)``."""
        out = defaultdict(list)
        for j, i, a, c in _sparse3_rect(self.rho):
            out[i].append((j, a, c))
        return out

    def coact(self, i: int) -> list:
        return self.terms.get(i, [])

    def coact_vector(self, v: Sequence[Fraction]) -> dict:
        out: dict = defaultdict(Fraction)
        for i, vi in enumerate(v):
            if vi:
                for j, a, c in self.coact(i):
                    out[j, a] += vi * c
        return _clean(out)

    def validate(self) -> ValidationReport:
        report = ValidationReport(subject="comodule")
        h = self.host
        report.checked.append("coassociativity")
        for i in range(self.dim):
            left: dict = defaultdict(Fraction)
            right: dict = defaultdict(Fraction)
            for j, a, c in self.coact(i):
                for k, b, d in self.coact(j):
                    left[k, b, a] += c * d
                for b, a2, d in h.coproduct_of_basis(a):
                    right[j, b, a2] += c * d
            if _clean(left) != _clean(right):
                report.fail("coassociativity", "(alpha (x) id) alpha != (id (x) Delta) alpha", i)
                break
        report.checked.append("counit")
        for i in range(self.dim):
            out = [Fraction(0)] * self.dim
            for j, a, c in self.coact(i):
                out[j] += c * h.counit[a]
            if tuple(out) != _basis(self.dim, i):
                report.fail("counit", "(id (x) eps) alpha != id", i)
                break
        return report


def _sparse3_rect(t) -> list:
    return [
        (i, j, k, t[i][j][k])
        for i in range(len(t)) for j in range(len(t[i])) for k in range(len(t[i][j]))
        if t[i][j][k]
    ]


def comodule_from_triples(host: FiniteHopfAlgebra, dim: int, triples) -> Comodule:
    rho = [[[Fraction(0)] * host.dim for _ in range(dim)] for _ in range(dim)]
    for j, i, a, v in triples:
        rho[j][i][a] += la.scalar(v)
    return Comodule(host, tuple(tuple(tuple(r) for r in plane) for plane in rho))


def regular_comodule(a: FiniteHopfAlgebra) -> Comodule:
    """``A`` coacting on itself through ``Delta``."""
    return comodule_from_triples(a, a.dim, [(j, k, t, c) for j, t, k, c in a.comul_terms])


def trivial_comodule(a: FiniteHopfAlgebra, dim: int = 1) -> Comodule:
    """``V_0``: coaction ``v -> v (x) 1``."""
    return comodule_from_triples(a, dim, [(i, i, t, u) for i in range(dim) for t, u in enumerate(a.unit) if u])


@dataclass(frozen=True)
class KappaResult:
    forward: la.Matrix
    inverse: la.Matrix
    report: ValidationReport

    @property
    def ok(self) -> bool:
        return self.report.ok


def kappa(v: Comodule) -> KappaResult:
    """``kappa_V = (1 (x) m)(alpha_V (x) 1)`` on ``V (x) A`` and its inverse.

    The inverse is ``(1 (x) m)(1 (x) S (x) 1)(alpha_V (x) 1)``; both composites
    are compared with the identity exactly. Index ``(j, a)`` of ``V (x) A`` is
    ``j * dim A + a``.
    """
    h = v.host
    n = h.dim
    size = v.dim * n
    fwd = [[Fraction(0)] * size for _ in range(size)]
    inv = [[Fraction(0)] * size for _ in range(size)]
    s_cols = [h.antipode_of_basis(a) for a in range(n)]
    for i in range(v.dim):
        for b in range(n):
            col = i * n + b
            for j, a, c in v.coact(i):
                for k, m in h.basis_product(a, b):
                    fwd[j * n + k][col] += c * m
                for s_idx, s_val in enumerate(s_cols[a]):
                    if s_val:
                        for k, m in h.basis_product(s_idx, b):
                            inv[j * n + k][col] += c * s_val * m
    fwd_m = tuple(tuple(r) for r in fwd)
    inv_m = tuple(tuple(r) for r in inv)
    report = ValidationReport(subject="kappa")
    ident = la.identity(size)
    report.checked.append("kappa o inverse")
    if la.matmul(fwd_m, inv_m) != ident:
        report.fail("kappa o inverse", "kappa composed with the explicit inverse is not the identity")
    report.checked.append("inverse o kappa")
    if la.matmul(inv_m, fwd_m) != ident:
        report.fail("inverse o kappa", "explicit inverse composed with kappa is not the identity")
    return KappaResult(fwd_m, inv_m, report)


@dataclass(frozen=True)
class ComoduleAlgebra:
    algebra: MeasuredAlgebra
    comodule: Comodule


def _check_algebra_coaction(z: MeasuredAlgebra, co: Comodule, report: ValidationReport) -> None:
    h = co.host
    report.checked.append("coaction unital")
    one_one = {(j, a): z.unit[j] * h.unit[a] for j in range(z.dim) for a in range(h.dim) if z.unit[j] and h.unit[a]}
    if co.coact_vector(z.unit) != one_one:
        report.fail("coaction unital", "alpha(1) != 1 (x) 1")
    report.checked.append("coaction multiplicative")
    for x, y in product(range(z.dim), repeat=2):
        lhs = co.coact_vector(z.multiply(z.basis_vector(x), z.basis_vector(y)))
        rhs: dict = defaultdict(Fraction)
        for j, a, c in co.coact(x):
            for k, b, d in co.coact(y):
                for l, m in enumerate(z.structure[j][k]):
                    if not m:
                        continue
                    for t, mh in h.basis_product(a, b):
                        rhs[l, t] += c * d * m * mh
        if lhs != _clean(rhs):
            report.fail("coaction multiplicative", "alpha(xy) != alpha(x) alpha(y)", x, y)
            break


def check_comodule_algebra(ca: ComoduleAlgebra) -> ValidationReport:
    """Comodule axioms, coaction is an algebra map, and the measure is colinear."""
    z, co = ca.algebra, ca.comodule
    h = co.host
    report = ValidationReport(subject="measured comodule algebra")
    if co.dim != z.dim:
        report.fail("dimensions", f"comodule dimension {co.dim} != algebra dimension {z.dim}")
        return report
    report.merge(co.validate())
    _check_algebra_coaction(z, co, report)
    report.checked.append("measure colinear")
    for i in range(z.dim):
        out = [Fraction(0)] * h.dim
        for j, a, c in co.coact(i):
            out[a] += z.measure[j] * c
        if tuple(out) != tuple(z.measure[i] * u for u in h.unit):
            report.fail("measure colinear", "(phi (x) id) alpha(e_i) != phi(e_i) 1", i)
            break
    return report


def _first_difference(x: Sequence, y: Sequence) -> int:
    return next(i for i, (p, q) in enumerate(zip(x, y)) if p != q)


def _check_hopf_morphism(h: FiniteHopfAlgebra, a: FiniteHopfAlgebra, pi: la.Matrix,
                         report: ValidationReport) -> bool:
    if la.shape(pi) != (a.dim, h.dim):
        report.fail("pi", f"pi must be {a.dim}x{h.dim}, got {la.shape(pi)[0]}x{la.shape(pi)[1]}")
        return False
    cols = la.transpose(pi)
    report.checked.append("pi unital")
    image = la.matvec(pi, h.unit)
    if image != a.unit:
        report.fail("pi unital", "pi(1) != 1", _first_difference(image, a.unit))
    report.checked.append("pi multiplicative")
    for x, y in product(range(h.dim), repeat=2):
        if la.matvec(pi, h.multiply(_basis(h.dim, x), _basis(h.dim, y))) != a.multiply(cols[x], cols[y]):
            report.fail("pi multiplicative", "pi(xy) != pi(x) pi(y)", x, y)
            break
    report.checked.append("pi comultiplicative")
    for k in range(h.dim):
        lhs: dict = defaultdict(Fraction)
        for i, j, c in h.coproduct_of_basis(k):
            for p, vp in enumerate(cols[i]):
                if vp:
                    for q, vq in enumerate(cols[j]):
                        if vq:
                            lhs[p, q] += c * vp * vq
        if _clean(lhs) != a.coproduct(cols[k]):
            report.fail("pi comultiplicative", "(pi (x) pi) Delta_H != Delta_A pi", k)
            break
    report.checked.append("pi counital")
    eps = tuple(sum((a.counit[l] * cols[k][l] for l in range(a.dim)), Fraction(0)) for k in range(h.dim))
    if eps != h.counit:
        report.fail("pi counital", "eps_A pi != eps_H", _first_difference(eps, h.counit))
    report.checked.append("pi antipode")
    lhs, rhs = la.matmul(pi, h.antipode), la.matmul(a.antipode, pi)
    if lhs != rhs:
        row = _first_difference(lhs, rhs)
        report.fail("pi antipode", "pi S_H != S_A pi", row, _first_difference(lhs[row], rhs[row]))
    return True


def check_star_condition(h: FiniteHopfAlgebra, a: FiniteHopfAlgebra, pi: Sequence, alpha: Comodule) -> ValidationReport:
    """Check that ``A`` is an ``H``-Hopf module via ``mu = m_A (pi (x) 1)``.

    Preconditions (reported, with witnesses, under ``pre:`` names): ``pi`` is a
    Hopf algebra morphism, ``alpha`` makes ``A`` an ``H``-comodule algebra and
    ``(1 (x) pi) alpha = Delta_A``. Then ``alpha mu`` is compared on every basis
    pair ``h_x (x) e_b`` with ``(mu (x) m_H)(1 (x) C (x) 1)(Delta_H (x) alpha)``,
    and ``kappa = (1 (x) m_A)(Delta_A (x) 1)`` is checked to be ``H``-colinear.
    """
    pi = la.matrix(pi)
    report = ValidationReport(subject="Hopf module condition")
    pre = ValidationReport()
    pre.merge(validate_hopf(h), "H ")
    pre.merge(validate_hopf(a), "A ")
    shape_ok = _check_hopf_morphism(h, a, pi, pre)
    if alpha.host is not h and alpha.host.dim != h.dim:
        pre.fail("alpha", "coaction is not over H")
        shape_ok = False
    if alpha.dim != a.dim:
        pre.fail("alpha", "coaction is not on A")
        shape_ok = False
    if shape_ok:
        pre.merge(alpha.validate(), "alpha ")
        _check_algebra_coaction(a.as_algebra(), alpha, pre)
        pre.checked.append("(1 (x) pi) alpha = Delta_A")
        cols = la.transpose(pi)
        for i in range(a.dim):
            lhs: dict = defaultdict(Fraction)
            for j, t, c in alpha.coact(i):
                for l, v in enumerate(cols[t]):
                    if v:
                        lhs[j, l] += c * v
            if _clean(lhs) != a.coproduct(_basis(a.dim, i)):
                pre.fail("(1 (x) pi) alpha = Delta_A", "(1 (x) pi) alpha(e_i) != Delta_A(e_i)", i)
                break
    report.merge(pre, "pre: ")
    if not shape_ok:
        return report

    cols = la.transpose(pi)

    def mu(x: int, b: int) -> tuple:
        return a.multiply(cols[x], _basis(a.dim, b))

    report.checked.append("star")
    for x, b in product(range(h.dim), range(a.dim)):
        lhs = alpha.coact_vector(mu(x, b))
        rhs: dict = defaultdict(Fraction)
        for p, q, c in h.coproduct_of_basis(x):
            for cc, d, r in alpha.coact(b):
                left = mu(p, cc)
                for t, m in h.basis_product(q, d):
                    for l, v in enumerate(left):
                        if v:
                            rhs[l, t] += c * r * m * v
        if lhs != _clean(rhs):
            report.fail("star", "alpha(mu(h (x) a)) differs from the right-hand side of the Hopf module condition", x, b)
            break

    report.checked.append("kappa colinear")
    for x, y in product(range(a.dim), repeat=2):
        # kappa(e_x (x) e_y) = sum Delta[i][j][x] e_i (x) e_j e_y
        kap: dict = defaultdict(Fraction)
        for i, j, c in a.coproduct_of_basis(x):
            for k, m in a.basis_product(j, y):
                kap[i, k] += c * m
        lhs: dict = defaultdict(Fraction)
        for (i, k), c in kap.items():
            for k2, t, r in alpha.coact(k):
                lhs[i, k2, t] += c * r
        rhs: dict = defaultdict(Fraction)
        for c1, d1, r1 in alpha.coact(x):
            for c2, d2, r2 in alpha.coact(y):
                for t, mh in h.basis_product(d1, d2):
                    for i, j, c in a.coproduct_of_basis(c1):
                        for k, m in a.basis_product(j, c2):
                            rhs[i, k, t] += r1 * r2 * mh * c * m
        if _clean(lhs) != _clean(rhs):
            report.fail("kappa colinear", "kappa is not an H-comodule map", x, y)
            break
    return report


def with_antipode(a: FiniteHopfAlgebra, antipode: Sequence) -> FiniteHopfAlgebra:
    return replace(a, antipode=la.matrix(antipode))
