"""Finite diagrams of measured algebras: a quiver with algebra maps on the arrows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from . import exact_linalg as la
from .measured_algebra import AlgebraMap, MeasuredAlgebra, function_algebra, validate
from .report import ValidationReport

__all__ = ["Arrow", "Diagram", "validate_diagram", "graph_diagram", "single_object"]


@dataclass(frozen=True)
class Arrow:
    id: str
    src: str
    dst: str
    matrix: la.Matrix

    def __post_init__(self):
        object.__setattr__(self, "matrix", la.matrix(self.matrix))


@dataclass(frozen=True)
class Diagram:
    """Objects are kept sorted by id; that order fixes the generator order downstream."""

    objects: Mapping[str, MeasuredAlgebra]
    arrows: tuple = ()
    composites: tuple = ()  # (g, f, h) asserts g o f = h

    def __post_init__(self):
        objs = {str(k): self.objects[k] for k in sorted(self.objects, key=str)}
        if not objs:
            raise ValueError("a diagram needs at least one object")
        object.__setattr__(self, "objects", objs)
        object.__setattr__(self, "arrows", tuple(self.arrows))
        object.__setattr__(self, "composites", tuple(tuple(c) for c in self.composites))
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids")

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def algebra_map(self, a: Arrow) -> AlgebraMap:
        return AlgebraMap(self.objects[a.src], self.objects[a.dst], a.matrix)


def validate_diagram(d: Diagram) -> ValidationReport:
    report = ValidationReport(subject="diagram")
    for oid, z in d.objects.items():
        report.merge(validate(z), f"object {oid}: ")
    for a in d.arrows:
        report.checked.append(f"arrow {a.id}")
        if a.src not in d.objects or a.dst not in d.objects:
            report.fail(f"arrow {a.id}", "endpoint is not an object", a.src, a.dst)
            continue
        report.merge(d.algebra_map(a).validate(), f"arrow {a.id}: ")
    for g, f, h in d.composites:
        check = f"composite {g}o{f}={h}"
        report.checked.append(check)
        try:
            ag, af, ah = d.arrow(g), d.arrow(f), d.arrow(h)
        except KeyError as e:
            report.fail(check, f"unknown arrow {e.args[0]!r}")
            continue
        if af.dst != ag.src or ah.src != af.src or ah.dst != ag.dst:
            report.fail(check, "arrows are not composable with the asserted endpoints")
            continue
        try:
            prod = la.matmul(ag.matrix, af.matrix)
        except la.DimensionError as e:
            report.fail(check, str(e))
            continue
        if prod != ah.matrix:
            report.fail(check, "matrix of g o f differs from h")
    return report


def single_object(z: MeasuredAlgebra, object_id: str = "0") -> Diagram:
    """The one-object, identity-only category sent to ``z``."""
    return Diagram({object_id: z})


def graph_diagram(vertices: Sequence[Hashable], edges: Sequence[Sequence[Hashable]]) -> Diagram:
    """Two objects ``"0" = C(V)`` and ``"1" = C(E)`` with normalized counting measures,
    and the pullbacks ``s`` and ``t`` of the source and target maps ``E -> V``.

    ``s(delta_v) = sum of delta_e over edges leaving v``; likewise ``t`` for edges entering v.
    """
    vertices = list(vertices)
    edges = [tuple(e) for e in edges]
    if not vertices:
        raise ValueError("graph has no vertices")
    if not edges:
        raise ValueError("graph has no edges")
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("duplicate vertices")
    for e in edges:
        if len(e) != 2 or e[0] not in index or e[1] not in index:
            raise ValueError(f"edge {e!r} does not join two listed vertices")
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edges")
    s = [[int(index[e[0]] == v) for v in range(len(vertices))] for e in edges]
    t = [[int(index[e[1]] == v) for v in range(len(vertices))] for e in edges]
    cv = function_algebra(len(vertices), labels=[f"v{v}" for v in vertices])
    ce = function_algebra(len(edges), labels=[f"e{a}{b}" for a, b in edges])
    return Diagram({"0": cv, "1": ce}, (Arrow("s", "0", "1", s), Arrow("t", "0", "1", t)))
