"""Text formats: scene JSON, DIMACS-style graphs with a label sidecar, MIPA JSON.

Rationals are written as ``[num, den]`` and points as ``[x_num, x_den, y_num, y_den]``
so that every file round-trips exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .geometry import AxisRect, ConvexBody, HalfPlane, Placement, Scene, SceneObject
from .graph import IntersectionGraph
from .mipa import MipaInstance


def _q(x) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def _unq(v) -> Fraction:
    if isinstance(v, list):
        if len(v) != 2 or v[1] == 0:
            raise ValueError(f"bad rational {v!r}")
        return Fraction(int(v[0]), int(v[1]))
    if isinstance(v, (int, str)) and not isinstance(v, bool):
        return Fraction(v)
    raise ValueError(f"bad rational {v!r}")


def _p(p) -> list[int]:
    return _q(p[0]) + _q(p[1])


def _unp(v):
    if not isinstance(v, list) or len(v) != 4:
        raise ValueError(f"bad point {v!r}")
    return (_unq(v[:2]), _unq(v[2:]))


def _body(body: ConvexBody | None):
    return None if body is None else [_p(v) for v in body.vertices]


def _unbody(v):
    return None if v is None else ConvexBody(tuple(_unp(p) for p in v))


def scene_to_dict(scene: Scene) -> dict:
    objs = []
    for o in scene.objects:
        d: dict = {"kind": o.kind}
        s = o.shape
        if o.kind in ("translate", "homothet"):
            d["center"] = _p(s.center)
            if o.kind == "homothet":
                d["scale"] = _q(s.scale)
        elif o.kind == "halfplane":
            d["a"], d["b"], d["side"] = _p(s.a), _p(s.b), s.side
        else:
            d.update(x_lo=_q(s.x_lo), x_hi=_q(s.x_hi), y_lo=_q(s.y_lo), y_hi=_q(s.y_hi))
            if s.allow_degenerate:
                d["allow_degenerate"] = True
        if o.body is not None:
            d["body"] = _body(o.body)
        d["label"] = o.label
        d["weight"] = o.weight
        objs.append(d)
    return {"body": _body(scene.body), "objects": objs}


def scene_from_dict(data: dict) -> Scene:
    if not isinstance(data, dict) or "objects" not in data:
        raise ValueError("scene JSON needs an 'objects' list")
    objs = []
    for d in data["objects"]:
        kind = d.get("kind")
        if kind in ("translate", "homothet"):
            scale = _unq(d["scale"]) if kind == "homothet" else Fraction(1)
            shape = Placement(_unp(d["center"]), scale)
        elif kind == "halfplane":
            shape = HalfPlane(_unp(d["a"]), _unp(d["b"]), d.get("side", "upper"))
        elif kind == "rect":
            shape = AxisRect(
                _unq(d["x_lo"]),
                _unq(d["x_hi"]),
                _unq(d["y_lo"]),
                _unq(d["y_hi"]),
                bool(d.get("allow_degenerate", False)),
            )
        else:
            raise ValueError(f"unknown object kind {kind!r}")
        weight = d.get("weight", 1)
        if not isinstance(weight, int) or isinstance(weight, bool):
            raise ValueError("weight must be an integer")
        objs.append(SceneObject(kind, shape, str(d.get("label", "")), weight, _unbody(d.get("body"))))
    return Scene(_unbody(data.get("body")), tuple(objs))


def dump_scene(scene: Scene) -> str:
    return json.dumps(scene_to_dict(scene), indent=1) + "\n"


def load_scene(text: str) -> Scene:
    return scene_from_dict(json.loads(text))


def dump_graph(g: IntersectionGraph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def dump_labels(g: IntersectionGraph) -> str:
    return json.dumps(list(g.labels)) + "\n"


def load_graph(text: str, labels_text: str | None = None) -> IntersectionGraph:
    n = None
    edges = []
    for raw in text.splitlines():
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"bad problem line: {raw!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError("edge before the problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {raw!r} out of range")
            edges.append((u, v))
        else:
            raise ValueError(f"unrecognised line: {raw!r}")
    if n is None:
        raise ValueError("missing problem line")
    labels = tuple(json.loads(labels_text)) if labels_text else ()
    return IntersectionGraph.from_edges(n, edges, labels)


def mipa_to_dict(inst: MipaInstance) -> dict:
    d = {"n": inst.n, "sigma": list(inst.sigma), "intervals": [list(iv) for iv in inst.intervals]}
    # validation flags only appear when set
    for flag in ("symmetric", "bounded_length"):
        if getattr(inst, flag):
            d[flag] = True
    return d


def dump_mipa(inst: MipaInstance) -> str:
    return json.dumps(mipa_to_dict(inst)) + "\n"


def load_mipa(text: str) -> MipaInstance:
    d = json.loads(text)
    try:
        return MipaInstance(
            int(d["n"]),
            tuple(d["sigma"]),
            tuple(tuple(iv) for iv in d["intervals"]),
            symmetric=bool(d.get("symmetric", False)),
            bounded_length=bool(d.get("bounded_length", False)),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed MIPA JSON: {exc}") from exc
