"""JSON file formats.

Scalars are strings ``"p/q"`` (or ``"p"``); integers are accepted on input.
All indices are 0-based.

algebra::

    {"dim": n, "basis": [...], "structure": [[i, j, k, "c"], ...],
     "unit": [...], "measure": [...]}

or a constructor shortcut such as ``{"constructor": "function_algebra", "n": 3}``.

Hopf algebra: the algebra keys plus ``"comul": [[i, j, k, "c"], ...]``
(coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``), ``"counit": [...]`` and
``"antipode"`` as a dense matrix with ``antipode[l][i]`` the coefficient of
``e_l`` in ``S(e_i)``; ``"measure"`` is optional.

comodule: ``{"regular": true}``, ``{"trivial": dim}`` or
``{"dim": v, "coaction": [[j, i, a, "c"], ...]}`` (coefficient of
``v_j (x) e_a`` in ``alpha(v_i)``).

diagram::

    {"objects": {id: algebra-or-path}, "arrows": [{"id", "src", "dst", "matrix"}],
     "composites": [[g, f, h], ...]}

graph: ``{"vertices": [...], "edges": [[src, dst], ...]}``.
point: ``{object id: matrix}`` (optionally wrapped as ``{"point": {...}}``).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from . import exact_linalg as la
from . import finite_hopf as fh
from . import measured_algebra as ma
from .diagram import Arrow, Diagram, graph_diagram
from .presentation import HopfPresentation

__all__ = [
    "FormatError",
    "load_json",
    "algebra_from_dict",
    "algebra_to_dict",
    "hopf_from_dict",
    "hopf_to_dict",
    "comodule_from_dict",
    "diagram_from_dict",
    "diagram_to_dict",
    "graph_from_dict",
    "point_from_dict",
    "presentation_from_dict",
]


class FormatError(ValueError):
    pass


PathLike = Union[str, Path]


def load_json(path: PathLike) -> Any:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise FormatError(f"{path}: {e.strerror}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e


def _require(d: Mapping, key: str, what: str) -> Any:
    if not isinstance(d, Mapping):
        raise FormatError(f"{what} must be a JSON object")
    if key not in d:
        raise FormatError(f"{what} is missing the {key!r} field")
    return d[key]


def _scalars(xs, what: str) -> tuple:
    try:
        return la.vector(xs)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise FormatError(f"{what}: {e}") from e


def _triples(entries, what: str) -> list:
    out = []
    for t in entries:
        if not isinstance(t, (list, tuple)) or len(t) != 4:
            raise FormatError(f"{what}: expected [i, j, k, coefficient], got {t!r}")
        i, j, k, c = t
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j, k)):
            raise FormatError(f"{what}: indices must be integers in {t!r}")
        out.append((i, j, k, _scalars([c], what)[0]))
    return out


_ALGEBRA_CONSTRUCTORS = {
    "function_algebra": lambda d: ma.function_algebra(int(d["n"]), d.get("weights")),
    "matrix_algebra": lambda d: ma.matrix_algebra(int(d["d"]), d.get("measure")),
    "group_algebra": lambda d: ma.group_algebra(int(d["m"])),
    "dual_function_algebra_of_group": lambda d: ma.dual_function_algebra_of_group(int(d["m"])),
    "dual_numbers": lambda d: ma.dual_numbers(),
    "sweedler_algebra": lambda d: ma.sweedler_algebra(d.get("measure")),
}

_HOPF_CONSTRUCTORS = {
    "group_hopf": lambda d: fh.group_hopf(int(d["m"])),
    "function_hopf": lambda d: fh.function_hopf(int(d["m"])),
    "sweedler_hopf": lambda d: fh.sweedler_hopf(),
}


def _construct(d: Mapping, table: dict, what: str):
    name = d["constructor"]
    if name not in table:
        raise FormatError(f"unknown {what} constructor {name!r}; choose from {sorted(table)}")
    try:
        return table[name](d)
    except KeyError as e:
        raise FormatError(f"{what} constructor {name!r} needs field {e.args[0]!r}") from e
    except (TypeError, ValueError) as e:
        raise FormatError(f"{what} constructor {name!r}: {e}") from e


def algebra_from_dict(d: Mapping) -> ma.MeasuredAlgebra:
    if isinstance(d, Mapping) and "constructor" in d:
        return _construct(d, _ALGEBRA_CONSTRUCTORS, "algebra")
    dim = _require(d, "dim", "algebra")
    try:
        return ma.MeasuredAlgebra.from_triples(
            int(dim),
            _triples(_require(d, "structure", "algebra"), "structure"),
            _scalars(_require(d, "unit", "algebra"), "unit"),
            _scalars(_require(d, "measure", "algebra"), "measure"),
            d.get("basis", ()),
        )
    except la.DimensionError as e:
        raise FormatError(f"algebra: {e}") from e


def algebra_to_dict(z: ma.MeasuredAlgebra) -> dict:
    return {
        "dim": z.dim,
        "basis": list(z.basis),
        "structure": [[i, j, k, str(c)] for i, j, k, c in z.nonzero_structure],
        "unit": [str(x) for x in z.unit],
        "measure": [str(x) for x in z.measure],
    }


def hopf_from_dict(d: Mapping) -> fh.FiniteHopfAlgebra:
    if isinstance(d, Mapping) and "constructor" in d:
        return _construct(d, _HOPF_CONSTRUCTORS, "Hopf algebra")
    dim = int(_require(d, "dim", "Hopf algebra"))
    try:
        return fh.FiniteHopfAlgebra.from_triples(
            dim,
            _triples(_require(d, "structure", "Hopf algebra"), "structure"),
            _scalars(_require(d, "unit", "Hopf algebra"), "unit"),
            _triples(_require(d, "comul", "Hopf algebra"), "comul"),
            _scalars(_require(d, "counit", "Hopf algebra"), "counit"),
            la.matrix(_require(d, "antipode", "Hopf algebra")),
            d.get("basis", ()),
        )
    except (la.DimensionError, IndexError) as e:
        raise FormatError(f"Hopf algebra: {e}") from e


def hopf_to_dict(h: fh.FiniteHopfAlgebra, measure=None) -> dict:
    out = {
        "dim": h.dim,
        "basis": list(h.basis),
        "structure": [[i, j, k, str(c)] for i, j, k, c in h.mult_terms],
        "unit": [str(x) for x in h.unit],
        "comul": [[i, j, k, str(c)] for i, j, k, c in h.comul_terms],
        "counit": [str(x) for x in h.counit],
        "antipode": [[str(x) for x in row] for row in h.antipode],
    }
    if measure is not None:
        out["measure"] = [str(x) for x in measure]
    return out


def comodule_from_dict(d: Mapping, host: fh.FiniteHopfAlgebra) -> fh.Comodule:
    if not isinstance(d, Mapping):
        raise FormatError("comodule must be a JSON object")
    if d.get("regular"):
        return fh.regular_comodule(host)
    if "trivial" in d:
        return fh.trivial_comodule(host, int(d["trivial"]))
    dim = int(_require(d, "dim", "comodule"))
    try:
        return fh.comodule_from_triples(host, dim, _triples(_require(d, "coaction", "comodule"), "coaction"))
    except IndexError as e:
        raise FormatError("comodule: coaction index out of range") from e


def diagram_from_dict(d: Mapping, base_dir: Optional[PathLike] = None) -> Diagram:
    base = Path(base_dir) if base_dir is not None else Path(".")
    objs_raw = _require(d, "objects", "diagram")
    if not isinstance(objs_raw, Mapping):
        raise FormatError("diagram objects must map ids to algebras")
    objects = {}
    for oid, entry in objs_raw.items():
        if isinstance(entry, str):
            entry = load_json(base / entry)
        objects[str(oid)] = algebra_from_dict(entry)
    arrows = []
    for a in d.get("arrows", []):
        try:
            arrows.append(Arrow(str(a["id"]), str(a["src"]), str(a["dst"]), a["matrix"]))
        except KeyError as e:
            raise FormatError(f"arrow is missing the {e.args[0]!r} field") from e
        except (la.DimensionError, TypeError, ValueError) as e:
            raise FormatError(f"arrow {a.get('id')!r}: {e}") from e
    composites = []
    for c in d.get("composites", []):
        if not isinstance(c, (list, tuple)) or len(c) != 3:
            raise FormatError(f"composite must be [g, f, h], got {c!r}")
        composites.append(tuple(str(x) for x in c))
    try:
        return Diagram(objects, tuple(arrows), tuple(composites))
    except ValueError as e:
        raise FormatError(f"diagram: {e}") from e


def diagram_to_dict(dg: Diagram) -> dict:
    return {
        "objects": {k: algebra_to_dict(z) for k, z in dg.objects.items()},
        "arrows": [
            {"id": a.id, "src": a.src, "dst": a.dst, "matrix": [[str(x) for x in row] for row in a.matrix]}
            for a in dg.arrows
        ],
        "composites": [list(c) for c in dg.composites],
    }


def graph_from_dict(d: Mapping) -> Diagram:
    vertices = _require(d, "vertices", "graph")
    edges = _require(d, "edges", "graph")
    try:
        return graph_diagram(vertices, [tuple(e) for e in edges])
    except (TypeError, ValueError) as e:
        raise FormatError(f"graph: {e}") from e


def point_from_dict(d: Mapping) -> dict:
    if isinstance(d, Mapping) and "point" in d:
        d = d["point"]
    if not isinstance(d, Mapping):
        raise FormatError("point must map object ids to matrices")
    try:
        return {str(k): la.matrix(v) for k, v in d.items()}
    except (la.DimensionError, TypeError, ValueError) as e:
        raise FormatError(f"point: {e}") from e


def presentation_from_dict(d: Mapping) -> HopfPresentation:
    try:
        return HopfPresentation.from_dict(d)
    except KeyError as e:
        raise FormatError(f"presentation is missing the {e.args[0]!r} field") from e
    except ValueError as e:
        raise FormatError(f"presentation: {e}") from e
