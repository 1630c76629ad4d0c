"""Universal quantum automorphism Hopf algebra of a finite diagram, by generators and relations.

Every object ``X`` of dimension ``n`` contributes an ``n x n`` matrix of
generators ``u^X`` and coacts by ``alpha(e_i) = sum_j e_j (x) u^X_ji``, so a
scalar solution of the relations acts on coordinates by the matrix itself.
Relations say that the multiplication, unit, measure, pairing ``B = phi m``
and copairing ``B'`` of each object, and the matrix of each arrow, are
colinear. ``Delta(u_ij) = sum_k u_ik (x) u_kj``, ``eps(u_ij) = delta_ij`` and
``S(u) = B' u^T G`` (``G`` the Gram matrix).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations, product
from typing import Mapping, Optional, Sequence

from . import exact_linalg as la
from .diagram import Diagram, validate_diagram
from .finite_hopf import FiniteHopfAlgebra
from .measured_algebra import MeasuredAlgebra, copairing, gram, is_function_algebra
from .ncrewrite import (
    Membership,
    NCPolynomial,
    RewriteSystem,
    Verdict,
    complete,
    default_degree_cap,
)
from .report import ValidationReport

__all__ = [
    "Relation",
    "HopfPresentation",
    "HopfCheck",
    "present",
    "antipode_matrix",
    "check_hopf_wellformedness",
    "classical_points",
    "verify_classical_point",
    "check_coaction",
    "magic_unitary_relations",
    "generator_name",
    "UnsupportedDiagram",
    "FAMILIES",
]

FAMILIES = ("mult", "unit", "measure", "B", "Bprime", "intertwine")

P = NCPolynomial


class UnsupportedDiagram(ValueError):
    pass


def generator_name(obj: str, i: int, j: int, dim: int) -> str:
    """Name of ``u^obj_ij`` with 1-based indices, e.g. ``u0_12``."""
    if dim <= 9:
        return f"u{obj}_{i}{j}"
    return f"u{obj}_{i}_{j}"


@dataclass(frozen=True)
class Relation:
    family: str
    owner: str
    indices: tuple
    polynomial: NCPolynomial

    @property
    def label(self) -> str:
        idx = ",".join(str(i) for i in self.indices)
        return f"{self.family}[{self.owner}]({idx})"

    @classmethod
    def from_label(cls, label: str, polynomial: NCPolynomial) -> "Relation":
        family, rest = label.split("[", 1)
        owner, rest = rest.split("]", 1)
        idx = rest.strip("()")
        return cls(family, owner, tuple(int(x) for x in idx.split(",")) if idx else (), polynomial)


@dataclass(eq=False)
class HopfPresentation:
    objects: dict                  # object id -> dimension, in generator order
    relations: tuple
    antipode: dict = field(default_factory=dict)
    diagram: Optional[Diagram] = None

    @cached_property
    def generators(self) -> tuple:
        return tuple(
            generator_name(x, i, j, n)
            for x, n in self.objects.items()
            for i in range(1, n + 1) for j in range(1, n + 1)
        )

    def u(self, obj: str, i: int, j: int) -> NCPolynomial:
        """Generator ``u^obj_ij`` (1-based)."""
        return P.gen(generator_name(obj, i, j, self.objects[obj]))

    def matrix(self, obj: str) -> list:
        n = self.objects[obj]
        return [[self.u(obj, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def polynomials(self, families: Optional[Sequence[str]] = None) -> list:
        return [r.polynomial for r in self.relations if families is None or r.family in families]

    def default_cap(self) -> int:
        return default_degree_cap(self.polynomials())

    def system(self, degree_cap: Optional[int] = None, families: Optional[Sequence[str]] = None) -> RewriteSystem:
        cap = self.default_cap() if degree_cap is None else degree_cap
        key = (cap, tuple(families) if families is not None else None)
        cache = self.__dict__.setdefault("_systems", {})
        if key not in cache:
            cache[key] = complete(self.polynomials(families), cap, self.generators)
        return cache[key]

    def membership(self, p: NCPolynomial, degree_cap: Optional[int] = None) -> Membership:
        return self.system(degree_cap).membership(p)

    def counit(self, p: NCPolynomial) -> Fraction:
        values = {}
        for x, n in self.objects.items():
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    values[generator_name(x, i, j, n)] = int(i == j)
        return p.evaluate(values)

    def coproduct(self, p: NCPolynomial) -> NCPolynomial:
        """Image under ``Delta`` in the tensor square, legs named ``L_g`` and ``R_g``."""
        images = {}
        for x, n in self.objects.items():
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    images[generator_name(x, i, j, n)] = sum(
                        (P.gen("L_" + generator_name(x, i, k, n)) * P.gen("R_" + generator_name(x, k, j, n))
                         for k in range(1, n + 1)),
                        P(),
                    )
        return p.substitute(images)

    def tensor_square(self) -> tuple[list, list]:
        """Relations and generator order presenting ``A (x) A``."""
        left = ["L_" + g for g in self.generators]
        right = ["R_" + g for g in self.generators]
        rels = []
        for side in ("L_", "R_"):
            ren = {g: P.gen(side + g) for g in self.generators}
            rels.extend(r.polynomial.substitute(ren) for r in self.relations)
        for a in left:
            for b in right:
                rels.append(P.gen(b) * P.gen(a) - P.gen(a) * P.gen(b))
        return rels, left + right

    def to_dict(self) -> dict:
        return {
            "objects": dict(self.objects),
            "generators": list(self.generators),
            "relations": [r.polynomial.format(self.generators) for r in self.relations],
            "relation_labels": [r.label for r in self.relations],
            "coproduct": "matrix",
            "counit": "kronecker",
            "antipode": {
                x: [[s.format(self.generators) for s in row] for row in mat]
                for x, mat in self.antipode.items()
            },
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "HopfPresentation":
        objects = {str(k): int(v) for k, v in data["objects"].items()}
        polys = [P.parse(s) for s in data["relations"]]
        labels = data.get("relation_labels")
        if labels is not None and len(labels) != len(polys):
            raise ValueError("relation_labels and relations differ in length")
        rels = tuple(
            Relation.from_label(lbl, p) if labels else Relation("relation", "", (k,), p)
            for k, (lbl, p) in enumerate(zip(labels or [None] * len(polys), polys))
        )
        antipode = {
            str(x): [[P.parse(s) for s in row] for row in mat]
            for x, mat in data.get("antipode", {}).items()
        }
        pres = cls(objects, rels, antipode)
        declared = data.get("generators")
        if declared is not None and list(declared) != list(pres.generators):
            raise ValueError("generator list does not match the object dimensions")
        unknown = set().union(*(p.generators() for p in polys)) - set(pres.generators) if polys else set()
        if unknown:
            raise ValueError(f"relations use undeclared generators: {sorted(unknown)}")
        return pres


def _object_relations(x: str, z: MeasuredAlgebra, u) -> dict:
    n = z.dim
    c = z.structure
    eta = z.unit
    phi = z.measure
    g = gram(z)
    bp = copairing(z).matrix
    rng = range(n)
    fam: dict = {f: [] for f in FAMILIES}
    for i, j, l in product(rng, repeat=3):
        p = P()
        for k in rng:
            if c[i][j][k]:
                p = p + u(l, k) * c[i][j][k]
        for a, b in product(rng, repeat=2):
            if c[a][b][l]:
                p = p - u(a, i) * u(b, j) * c[a][b][l]
        fam["mult"].append(((i + 1, j + 1, l + 1), p))
    for j in rng:
        p = sum((u(j, i) * eta[i] for i in rng if eta[i]), P()) - eta[j]
        fam["unit"].append(((j + 1,), p))
    for i in rng:
        p = sum((u(j, i) * phi[j] for j in rng if phi[j]), P()) - phi[i]
        fam["measure"].append(((i + 1,), p))
    for i, j in product(rng, repeat=2):
        p = sum((u(k, i) * u(l, j) * g[k][l] for k, l in product(rng, repeat=2) if g[k][l]), P()) - g[i][j]
        fam["B"].append(((i + 1, j + 1), p))
    for k, l in product(rng, repeat=2):
        p = sum((u(k, i) * u(l, j) * bp[i][j] for i, j in product(rng, repeat=2) if bp[i][j]), P()) - bp[k][l]
        fam["Bprime"].append(((k + 1, l + 1), p))
    return fam


def present(d: Diagram) -> HopfPresentation:
    """Generators and relations of the universal Hopf algebra coacting on ``d``.

    Relation order: family (mult, unit, measure, B, Bprime, intertwine), then
    object or arrow, then indices. Relations that vanish identically are dropped.
    """
    report = validate_diagram(d)
    if not report:
        raise ValueError(f"invalid diagram:\n{report}")
    objects = {x: z.dim for x, z in d.objects.items()}

    def gen(x):
        n = objects[x]
        return lambda i, j: P.gen(generator_name(x, i + 1, j + 1, n))

    per_object = {x: _object_relations(x, z, gen(x)) for x, z in d.objects.items()}
    rels = []
    for family in FAMILIES[:-1]:
        for x in objects:
            for idx, p in per_object[x][family]:
                if p:
                    rels.append(Relation(family, x, idx, p))
    for a in d.arrows:
        ux, uy = gen(a.src), gen(a.dst)
        f = a.matrix
        nx, ny = objects[a.src], objects[a.dst]
        for m, i in product(range(ny), range(nx)):
            p = sum((uy(m, l) * f[l][i] for l in range(ny) if f[l][i]), P())
            p = p - sum((ux(j, i) * f[m][j] for j in range(nx) if f[m][j]), P())
            if p:
                rels.append(Relation("intertwine", a.id, (m + 1, i + 1), p))
    pres = HopfPresentation(objects, tuple(rels), diagram=d)
    pres.antipode = {x: antipode_matrix(pres, x) for x in objects}
    return pres


def antipode_matrix(pres: HopfPresentation, x: str) -> list:
    """``S(u_ij) = sum_{a,b} B'_ia G_bj u_ba`` for object ``x``."""
    if pres.diagram is None:
        if x in pres.antipode:
            return pres.antipode[x]
        raise ValueError("presentation carries no diagram to derive the antipode from")
    z = pres.diagram.objects[x]
    g = gram(z)
    bp = copairing(z).matrix
    n = z.dim
    u = lambda i, j: P.gen(generator_name(x, i + 1, j + 1, n))  # noqa: E731
    return [
        [
            sum(
                (u(b, a) * (bp[i][a] * g[b][j]) for a in range(n) for b in range(n) if bp[i][a] and g[b][j]),
                P(),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]


def antipode_axioms(pres: HopfPresentation) -> list:
    """``(label, polynomial)`` for ``S(u)u - 1`` and ``u S(u) - 1`` entrywise."""
    out = []
    for x, n in pres.objects.items():
        s = pres.antipode[x]
        u = pres.matrix(x)
        for i, k in product(range(n), repeat=2):
            delta = int(i == k)
            left = sum((s[i][j] * u[j][k] for j in range(n)), P()) - delta
            right = sum((u[i][j] * s[j][k] for j in range(n)), P()) - delta
            out.append((f"S(u)u[{x}]({i + 1},{k + 1})", left))
            out.append((f"uS(u)[{x}]({i + 1},{k + 1})", right))
    return out


@dataclass
class HopfCheck:
    degree_cap: int
    status: str
    tensor_status: str
    counit: list = field(default_factory=list)       # (label, bool)
    coproduct: list = field(default_factory=list)    # (label, Membership)
    antipode: list = field(default_factory=list)     # (label, Membership)

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.counit) and all(
            m.verdict is Verdict.ZERO for _, m in self.coproduct + self.antipode
        )

    @property
    def inconclusive(self) -> list:
        return [lbl for lbl, m in self.coproduct + self.antipode if m.verdict is Verdict.INCONCLUSIVE]

    @property
    def failed(self) -> list:
        bad = [lbl for lbl, v in self.counit if not v]
        return bad + [lbl for lbl, m in self.coproduct + self.antipode if m.verdict is Verdict.NONZERO]

    def summary(self) -> dict:
        def tally(items):
            out = {v.value: 0 for v in Verdict}
            for _, m in items:
                out[m.verdict.value] += 1
            return out

        return {
            "ok": self.ok,
            "degree_cap": self.degree_cap,
            "status": self.status,
            "tensor_status": self.tensor_status,
            "counit": {"checked": len(self.counit), "failed": sum(1 for _, v in self.counit if not v)},
            "coproduct": tally(self.coproduct),
            "antipode": tally(self.antipode),
            "inconclusive": self.inconclusive,
            "failed": self.failed,
        }


def check_hopf_wellformedness(pres: HopfPresentation, degree_cap: Optional[int] = None,
                              coproduct: bool = True) -> HopfCheck:
    """Counit kills the relations, ``Delta`` maps them into the ideal of the
    tensor square, and the antipode formula satisfies the antipode axioms."""
    cap = pres.default_cap() if degree_cap is None else degree_cap
    system = pres.system(cap)
    check = HopfCheck(cap, system.status, "skipped")
    for r in pres.relations:
        check.counit.append((r.label, pres.counit(r.polynomial) == 0))
    if coproduct:
        rels, gens = pres.tensor_square()
        tensor = complete(rels, cap, gens)
        check.tensor_status = tensor.status
        for r in pres.relations:
            check.coproduct.append((r.label, tensor.membership(pres.coproduct(r.polynomial))))
    for label, p in antipode_axioms(pres):
        check.antipode.append((label, system.membership(p)))
    return check


# classical points -----------------------------------------------------------------


def _permutation_matrix(sigma: Sequence[int]) -> la.Matrix:
    """Matrix of ``e_i -> e_sigma(i)``: entry ``[sigma(i)][i] = 1``."""
    n = len(sigma)
    return tuple(tuple(Fraction(int(sigma[i] == j)) for i in range(n)) for j in range(n))


def classical_points(d: Diagram) -> list:
    """All tuples of measure-preserving permutations intertwining every arrow.

    Only diagrams of function algebras are supported: their automorphisms are
    the permutations of the idempotent basis.
    """
    for x, z in d.objects.items():
        if not is_function_algebra(z):
            raise UnsupportedDiagram(
                f"object {x} is not a function algebra; enumerate is unsupported, use verify_classical_point"
            )
    per_object = {}
    for x, z in d.objects.items():
        phi = z.measure
        per_object[x] = [
            _permutation_matrix(s) for s in permutations(range(z.dim))
            if all(phi[s[i]] == phi[i] for i in range(z.dim))
        ]
    order = list(d.objects)
    points = []

    def consistent(assign: dict) -> bool:
        for a in d.arrows:
            if a.src in assign and a.dst in assign:
                if la.matmul(assign[a.dst], a.matrix) != la.matmul(a.matrix, assign[a.src]):
                    return False
        return True

    def extend(k: int, assign: dict) -> None:
        if k == len(order):
            points.append(dict(assign))
            return
        x = order[k]
        for m in per_object[x]:
            assign[x] = m
            if consistent(assign):
                extend(k + 1, assign)
            del assign[x]

    extend(0, {})
    return points


def _point_values(pres: HopfPresentation, point: Mapping[str, Sequence]) -> dict:
    values = {}
    for x, n in pres.objects.items():
        if x not in point:
            raise ValueError(f"point has no matrix for object {x}")
        m = la.matrix(point[x])
        if la.shape(m) != (n, n):
            raise la.DimensionError(f"object {x}: expected a {n}x{n} matrix")
        for i in range(n):
            for j in range(n):
                values[generator_name(x, i + 1, j + 1, n)] = m[i][j]
    return values


def classical_point_failures(pres: HopfPresentation, point: Mapping[str, Sequence]) -> list:
    values = _point_values(pres, point)
    return [r.label for r in pres.relations if r.polynomial.evaluate(values) != 0]


def verify_classical_point(pres: HopfPresentation, point: Mapping[str, Sequence]) -> bool:
    """Does the scalar assignment ``u^X -> point[X]`` satisfy every relation?"""
    return not classical_point_failures(pres, point)


def check_coaction(pres: HopfPresentation, hopf: FiniteHopfAlgebra, coactions: Mapping[str, Sequence]) -> ValidationReport:
    """Substitute concrete coaction coefficients into the relations.

    ``coactions[X][j][i]`` is the element of ``hopf`` (a coordinate vector)
    playing ``u^X_ji``. The report is clean iff the assignment extends to an
    algebra map from the presented algebra to ``hopf``.
    """
    report = ValidationReport(subject="coaction factorization")
    vals = {}
    for x, n in pres.objects.items():
        for i in range(n):
            for j in range(n):
                vals[generator_name(x, i + 1, j + 1, n)] = la.vector(coactions[x][i][j])
    report.checked.append("relations")
    zero = (Fraction(0),) * hopf.dim
    for r in pres.relations:
        total = list(zero)
        for w, c in r.polynomial.items():
            v = tuple(c * e for e in hopf.unit)
            for g in w:
                v = hopf.multiply(v, vals[g])
            total = [a + b for a, b in zip(total, v)]
        if any(total):
            report.fail("relations", "relation does not vanish under the coaction", r.label)
    return report


def magic_unitary_relations(n: int, obj: str = "0") -> list:
    """Standard presentation of the quantum permutation algebra on the same generators."""
    u = lambda i, j: P.gen(generator_name(obj, i, j, n))  # noqa: E731
    rng = range(1, n + 1)
    rels = []
    for i, j, k in product(rng, repeat=3):
        rels.append(u(i, j) * u(i, k) - (u(i, j) if j == k else P()))
        rels.append(u(j, i) * u(k, i) - (u(j, i) if j == k else P()))
    for i in rng:
        rels.append(sum((u(i, j) for j in rng), P()) - 1)
        rels.append(sum((u(j, i) for j in rng), P()) - 1)
    return rels
