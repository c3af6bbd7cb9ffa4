"""JSON instance files: an LM object plus optional representation, cochain(s) and pair.

Layout (all numbers are rational strings such as ``"3"`` or ``"-1/2"``)::

    {
      "field": "Q",
      "g": {"dim": n, "labels": [...], "alpha": n x n, "product": n x n x n,
            "handedness": "left"},
      "M": {"dim": m, "labels": [...], "alphaM": m x m, "left": n x m x m, "right": m x n x m},
      "f": n x m,
      "rep": {"V": {"dim", "labels", "alpha"}, "W": {...}, "phi": w x v,
              "vLeft": n x v x v, "vRight": v x n x v, "wLeft": n x w x w,
              "wRight": w x n x w, "crossR": w x m x v, "crossL": m x w x v},
      "cochain": {"omega": n x n x w, "mu": n x m x v, "nu": m x n x v, "theta": w x m},
      "cochains": [ {...}, ... ],
      "pair": {"n0": n x n, "n1": m x m}
    }

Matrices are ``[row][column]`` with column ``j`` the image of basis vector
``j``; a product entry ``product[i][j]`` is the coordinate vector of
``e_i e_j``.  A 1-cochain may be given as ``{"n0": w x n, "n1": v x m}``.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .cohomology import Cochain1, Cochain2
from .deform import NijenhuisPair
from .homcore import LEFT, RIGHT, Bimodule, HomAlgebra, HomVectorSpace, default_labels
from .lmcat import LMObject, LMRepresentation
from .qlinalg import format_rational, parse_rational

FORMAT_VERSION = 1

_TOP_KEYS = {"field", "formatVersion", "name", "description", "g", "M", "f", "rep", "cochain", "cochains", "pair"}


class InstanceError(ValueError):
    """Malformed instance file; ``path`` locates the offending entry."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass
class Instance:
    obj: LMObject | None
    rep: LMRepresentation | None = None
    cochain: Cochain1 | Cochain2 | None = None
    cochains: tuple[Cochain2, ...] = ()
    pair: NijenhuisPair | None = None
    digest: str = ""


# ------------------------------------------------------------------ parsing


def _tensor(doc, path: str, shape: tuple[int, ...]) -> np.ndarray:
    out = np.empty(shape, dtype=object)

    def walk(node, p, depth, idx):
        if depth == len(shape):
            try:
                q = parse_rational(node)
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise InstanceError(p, f"bad rational {node!r} ({exc})") from None
            out[idx] = q.numerator if q.denominator == 1 else q
            return
        if not isinstance(node, list):
            raise InstanceError(p, f"expected a list of length {shape[depth]}")
        if len(node) != shape[depth]:
            raise InstanceError(p, f"expected length {shape[depth]}, got {len(node)}")
        for k, child in enumerate(node):
            walk(child, f"{p}[{k}]", depth + 1, idx + (k,))

    walk(doc, path, 0, ())
    return out


def _section(doc: dict, key: str, path: str, allowed: set[str]) -> dict:
    node = doc.get(key)
    p = f"{path}.{key}" if path else key
    if not isinstance(node, dict):
        raise InstanceError(p, "missing or not an object")
    unknown = sorted(set(node) - allowed)
    if unknown:
        raise InstanceError(p, f"unknown field {unknown[0]!r}")
    return node


def _dim(node: dict, path: str) -> int:
    d = node.get("dim")
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise InstanceError(f"{path}.dim", "expected a non-negative integer")
    return d


def _labels(node: dict, path: str, dim: int, prefix: str) -> tuple[str, ...]:
    labels = node.get("labels")
    if labels is None:
        return default_labels(prefix, dim)
    if not (isinstance(labels, list) and all(isinstance(x, str) for x in labels)) or len(labels) != dim:
        raise InstanceError(f"{path}.labels", f"expected {dim} strings")
    return tuple(labels)


def _space(node: dict, path: str, prefix: str, twist_key: str = "alpha") -> HomVectorSpace:
    d = _dim(node, path)
    twist = _tensor(node[twist_key], f"{path}.{twist_key}", (d, d)) if twist_key in node else None
    if twist is None:
        twist = np.array([[1 if i == j else 0 for j in range(d)] for i in range(d)], dtype=object).reshape(d, d)
    return HomVectorSpace(twist, _labels(node, path, d, prefix))


def _parse_object(doc: dict) -> LMObject:
    g = _section(doc, "g", "", {"dim", "labels", "alpha", "product", "handedness"})
    gspace = _space(g, "g", "e")
    n = gspace.dim
    hand = g.get("handedness", LEFT)
    if hand not in (LEFT, RIGHT):
        raise InstanceError("g.handedness", "expected 'left' or 'right'")
    if "product" not in g:
        raise InstanceError("g.product", "missing")
    algebra = HomAlgebra(gspace, _tensor(g["product"], "g.product", (n, n, n)), hand)
    M = _section(doc, "M", "", {"dim", "labels", "alphaM", "left", "right"})
    mspace = _space(M, "M", "m", "alphaM")
    m = mspace.dim
    for key in ("left", "right"):
        if key not in M:
            raise InstanceError(f"M.{key}", "missing")
    module = Bimodule(
        mspace, _tensor(M["left"], "M.left", (n, m, m)), _tensor(M["right"], "M.right", (m, n, m)), n
    )
    if "f" not in doc:
        raise InstanceError("f", "missing")
    return LMObject(algebra, module, _tensor(doc["f"], "f", (n, m)))


_REP_KEYS = {"V", "W", "phi", "vLeft", "vRight", "wLeft", "wRight", "crossR", "crossL"}


def _parse_rep(doc: dict, o: LMObject) -> LMRepresentation:
    rep = _section(doc, "rep", "", _REP_KEYS)
    vs = _space(_section(rep, "V", "rep", {"dim", "labels", "alpha"}), "rep.V", "v")
    ws = _space(_section(rep, "W", "rep", {"dim", "labels", "alpha"}), "rep.W", "w")
    n, m, v, w = o.n, o.m, vs.dim, ws.dim
    shapes = {
        "phi": (w, v), "vLeft": (n, v, v), "vRight": (v, n, v), "wLeft": (n, w, w),
        "wRight": (w, n, w), "crossR": (w, m, v), "crossL": (m, w, v),
    }
    missing = sorted(k for k in shapes if k not in rep)
    if missing:
        raise InstanceError(f"rep.{missing[0]}", "missing")
    t = {k: _tensor(rep[k], f"rep.{k}", s) for k, s in shapes.items()}
    return LMRepresentation(
        vs, ws, t["phi"], t["vLeft"], t["vRight"], t["wLeft"], t["wRight"], t["crossR"], t["crossL"]
    )


def _parse_cochain(node, path: str, o: LMObject, v: int, w: int):
    if not isinstance(node, dict):
        raise InstanceError(path, "expected an object")
    n, m = o.n, o.m
    if "n0" in node or "n1" in node:
        unknown = sorted(set(node) - {"n0", "n1"})
        if unknown:
            raise InstanceError(f"{path}.{unknown[0]}", "unknown field")
        return Cochain1(_tensor(node.get("n0"), f"{path}.n0", (w, n)), _tensor(node.get("n1"), f"{path}.n1", (v, m)))
    shapes = {"omega": (n, n, w), "mu": (n, m, v), "nu": (m, n, v), "theta": (w, m)}
    unknown = sorted(set(node) - set(shapes))
    if unknown:
        raise InstanceError(f"{path}.{unknown[0]}", "unknown field")
    return Cochain2(**{k: _tensor(node.get(k), f"{path}.{k}", s) for k, s in shapes.items()})


def _fiber_dims(o: LMObject, rep: LMRepresentation | None) -> tuple[int, int]:
    return (rep.v, rep.w) if rep is not None else (o.m, o.n)


def _canonical(doc) -> str:
    return json.dumps(_normalize(doc), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _normalize(node):
    # rational strings are rewritten canonically so "2/4" and "1/2" digest alike
    if isinstance(node, dict):
        return {k: _normalize(v) for k, v in node.items()}
    if isinstance(node, list):
        return [_normalize(x) for x in node]
    if isinstance(node, str):
        try:
            return format_rational(parse_rational(node))
        except (TypeError, ValueError, ZeroDivisionError):
            return node
    return node


def load_document(path: str | Path) -> dict:
    p = resolve_path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceError("", f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError("", f"{p.name} line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise InstanceError("", "top level must be an object")
    return doc


def parse_document(doc: dict, base: LMObject | None = None, base_rep: LMRepresentation | None = None) -> Instance:
    """Parse a document; sections other than the object may lean on ``base``."""
    unknown = sorted(set(doc) - _TOP_KEYS)
    if unknown:
        raise InstanceError(unknown[0], "unknown field")
    if doc.get("field", "Q") != "Q":
        raise InstanceError("field", "only 'Q' is supported")
    obj = _parse_object(doc) if "g" in doc else None
    o = obj or base
    inst = Instance(obj, digest=hashlib.sha256(_canonical(doc).encode()).hexdigest())
    if "rep" in doc:
        if o is None:
            raise InstanceError("rep", "needs an object")
        inst.rep = _parse_rep(doc, o)
    fiber = inst.rep or base_rep
    if "cochain" in doc:
        if o is None:
            raise InstanceError("cochain", "needs an object")
        inst.cochain = _parse_cochain(doc["cochain"], "cochain", o, *_fiber_dims(o, fiber))
    if "cochains" in doc:
        if o is None or not isinstance(doc["cochains"], list):
            raise InstanceError("cochains", "expected a list and an object")
        cs = []
        for k, node in enumerate(doc["cochains"]):
            c = _parse_cochain(node, f"cochains[{k}]", o, o.m, o.n)
            if not isinstance(c, Cochain2):
                raise InstanceError(f"cochains[{k}]", "expected a 2-cochain")
            cs.append(c)
        inst.cochains = tuple(cs)
    if "pair" in doc:
        if o is None:
            raise InstanceError("pair", "needs an object")
        node = _section(doc, "pair", "", {"n0", "n1"})
        inst.pair = NijenhuisPair(_tensor(node.get("n0"), "pair.n0", (o.n, o.n)), _tensor(node.get("n1"), "pair.n1", (o.m, o.m)))
    return inst


def parse_instance(path: str | Path, base: LMObject | None = None, base_rep=None) -> Instance:
    return parse_document(load_document(path), base, base_rep)


def bundled_dir():
    return resources.files("homleibniz") / "instances"


def bundled_names() -> list[str]:
    return sorted(p.name for p in bundled_dir().iterdir() if p.name.endswith(".json"))


def resolve_path(path: str | Path) -> Path:
    """``path`` itself if it exists, else a bundled instance of that name."""
    p = Path(path)
    if p.exists():
        return p
    candidate = bundled_dir() / p.name
    if candidate.is_file():
        return Path(str(candidate))
    return p


# ------------------------------------------------------------- serializing


def _dense(arr) -> list:
    arr = np.asarray(arr, dtype=object)
    if arr.ndim == 0:
        return format_rational(arr.item())
    return [_dense(x) for x in arr] if arr.ndim > 1 else [format_rational(x) for x in arr]


def _dense_shaped(arr) -> list:
    arr = np.asarray(arr, dtype=object)
    if arr.size == 0:
        return _empty(arr.shape)
    return _dense(arr)


def _empty(shape):
    if len(shape) == 1:
        return []
    return [_empty(shape[1:]) for _ in range(shape[0])]


def _space_doc(s: HomVectorSpace, twist_key: str = "alpha") -> dict:
    return {"dim": s.dim, "labels": list(s.labels), twist_key: _dense_shaped(s.twist)}


def object_document(o: LMObject) -> dict:
    a, b = o.algebra, o.module
    g = _space_doc(a.space)
    g["product"] = _dense_shaped(a.product)
    if a.handedness != LEFT:
        g["handedness"] = a.handedness
    M = _space_doc(b.space, "alphaM")
    M["left"] = _dense_shaped(b.left)
    M["right"] = _dense_shaped(b.right)
    return {"field": "Q", "g": g, "M": M, "f": _dense_shaped(o.anchor)}


def rep_document(r: LMRepresentation) -> dict:
    return {
        "V": _space_doc(r.v_space), "W": _space_doc(r.w_space), "phi": _dense_shaped(r.phi),
        "vLeft": _dense_shaped(r.v_left), "vRight": _dense_shaped(r.v_right),
        "wLeft": _dense_shaped(r.w_left), "wRight": _dense_shaped(r.w_right),
        "crossR": _dense_shaped(r.cross_r), "crossL": _dense_shaped(r.cross_l),
    }


def cochain_document(c) -> dict:
    from dataclasses import fields

    return {f.name: _dense_shaped(getattr(c, f.name)) for f in fields(c)}


def pair_document(p: NijenhuisPair) -> dict:
    return {"n0": _dense_shaped(p.n0), "n1": _dense_shaped(p.n1)}


def instance_document(o: LMObject | None = None, rep=None, cochain=None, cochains=(), pair=None, **meta) -> dict:
    doc = dict(meta)
    if o is not None:
        doc.update(object_document(o))
    if rep is not None:
        doc["rep"] = rep_document(rep)
    if cochain is not None:
        doc["cochain"] = cochain_document(cochain)
    if cochains:
        doc["cochains"] = [cochain_document(c) for c in cochains]
    if pair is not None:
        doc["pair"] = pair_document(pair)
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


__all__ = [
    "FORMAT_VERSION",
    "Instance",
    "InstanceError",
    "bundled_names",
    "dumps",
    "instance_document",
    "load_document",
    "parse_document",
    "parse_instance",
    "resolve_path",
]
