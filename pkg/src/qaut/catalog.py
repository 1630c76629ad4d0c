"""Named example algebras, Hopf algebras and diagrams shipped with the package."""

from __future__ import annotations

from fractions import Fraction

from . import finite_hopf as fh
from . import measured_algebra as ma
from .diagram import graph_diagram, single_object


def _nonuniform(n: int) -> list:
    total = n * (n + 1) // 2
    return [Fraction(i, total) for i in range(1, n + 1)]


def shipped_algebras() -> dict:
    out = {}
    for n in range(1, 7):
        out[f"function_algebra({n})"] = ma.function_algebra(n)
        if n > 1:
            out[f"function_algebra({n}, nonuniform)"] = ma.function_algebra(n, _nonuniform(n))
    out["function_algebra(2, (1/3, 2/3))"] = ma.function_algebra(2, ["1/3", "2/3"])
    out["matrix_algebra(2)"] = ma.matrix_algebra(2)
    out["matrix_algebra(2, non-tracial)"] = ma.matrix_algebra(2, [1, 0, 1, 2])
    for m in range(1, 5):
        out[f"group_algebra({m})"] = ma.group_algebra(m)
    out["dual_numbers"] = ma.dual_numbers()
    out["sweedler_algebra"] = ma.sweedler_algebra()
    return out


def shipped_hopf() -> dict:
    return {
        "group_hopf(1)": fh.group_hopf(1),
        "group_hopf(2)": fh.group_hopf(2),
        "group_hopf(3)": fh.group_hopf(3),
        "group_hopf(4)": fh.group_hopf(4),
        "function_hopf(1)": fh.function_hopf(1),
        "function_hopf(3)": fh.function_hopf(3),
        "sweedler_hopf": fh.sweedler_hopf(),
    }


def shipped_diagrams() -> dict:
    return {
        "uniform(1)": single_object(ma.function_algebra(1)),
        "uniform(2)": single_object(ma.function_algebra(2)),
        "uniform(3)": single_object(ma.function_algebra(3)),
        "weighted(1/3, 2/3)": single_object(ma.function_algebra(2, ["1/3", "2/3"])),
        "graph(loop)": graph_diagram([0], [(0, 0)]),
        "graph(3-cycle)": graph_diagram([0, 1, 2], [(0, 1), (1, 2), (2, 0)]),
    }
