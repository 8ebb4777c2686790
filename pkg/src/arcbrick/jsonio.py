"""JSON encodings shared by the library and the CLI.

Rational entries are strings ``"p/q"`` (or ``"p"``); every ``*_to_json``
has a matching ``*_from_json`` that round-trips exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Dict, List

from . import linalg as la
from .arcs import Arc, make_arc
from .diagrams import ArcDiagram
from .reps import AlgebraSpec, Representation, algebra, arrows, hereditary_algebra, make_rep
from .witness import SesWitness


def dumps(obj: Any) -> str:
    """Compact, key-ordered JSON used for every line the CLI prints."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def _mat(m: la.Matrix) -> List[List[str]]:
    return [[la.fmt(x) for x in row] for row in m]


def _unmat(rows) -> la.Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def arc_to_json(g: Arc) -> Dict[str, Any]:
    return {"n": g.n, "left": g.left, "pattern": g.pattern}


def arc_from_json(d: Dict[str, Any]) -> Arc:
    return make_arc(int(d["left"]), d["pattern"], int(d["n"]))


def diagram_to_json(d: ArcDiagram) -> Dict[str, Any]:
    return {"n": d.n, "arcs": [arc_to_json(g) for g in d.arcs]}


def diagram_from_json(d: Dict[str, Any]) -> ArcDiagram:
    n = int(d["n"])
    arcs = []
    for a in d["arcs"]:
        if isinstance(a, str):
            from .arcs import parse_arc

            arcs.append(parse_arc(a, n))
        else:
            arcs.append(arc_from_json({"n": n, **a}))
    return ArcDiagram(tuple(arcs), n)


def rep_to_json(M: Representation) -> Dict[str, Any]:
    return {"n": M.n, "dims": list(M.dims), "maps": {a: _mat(M.map(a)) for a, _, _ in arrows(M.n)}}


def rep_from_json(d: Dict[str, Any]) -> Representation:
    return make_rep(int(d["n"]), d["dims"], {a: _unmat(m) for a, m in d.get("maps", {}).items()})


def algebra_to_json(A: AlgebraSpec) -> Dict[str, Any]:
    if A.mode == "hereditary":
        return {"n": A.n, "mode": "hereditary", "eps": A.eps}
    return {"n": A.n, "mode": "preproj", "S": sorted(A.S)}


def algebra_from_json(d: Dict[str, Any]) -> AlgebraSpec:
    if d.get("mode") == "hereditary":
        return hereditary_algebra(int(d["n"]), d["eps"])
    return algebra(int(d["n"]), d.get("S", []))


def _maps(ms, rows, cols) -> List[List[List[str]]]:
    return [_mat(m) if r and c else [[] for _ in range(r)] for m, r, c in zip(ms, rows, cols)]


def witness_to_json(w: SesWitness) -> Dict[str, Any]:
    n = w.X.n
    return {
        "kind": w.kind,
        "pair": list(w.pair) if w.pair is not None else None,
        "Y": rep_to_json(w.Y),
        "E": rep_to_json(w.E),
        "X": rep_to_json(w.X),
        "iota": _maps(w.iota, w.E.dims, w.Y.dims),
        "pi": _maps(w.pi, w.X.dims, w.E.dims),
    }


def _maps_back(ms, rows, cols):
    out = []
    for m, r, c in zip(ms, rows, cols):
        out.append(_unmat(m) if r and c else [[] for _ in range(r)])
    return tuple(out)


def witness_from_json(d: Dict[str, Any]) -> SesWitness:
    Y, E, X = rep_from_json(d["Y"]), rep_from_json(d["E"]), rep_from_json(d["X"])
    pair = tuple(d["pair"]) if d.get("pair") is not None else None
    return SesWitness(
        Y, E, X,
        _maps_back(d["iota"], E.dims, Y.dims),
        _maps_back(d["pi"], X.dims, E.dims),
        d["kind"],
        pair,
    )
