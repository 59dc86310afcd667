"""JSON descriptions of groups and quandles.

A description is a tagged object, e.g. ``{"type": "dihedral", "n": 5}``;
products and free unions nest further descriptions. :func:`parse_spec` checks
the shape and reports the JSON pointer of the first problem, :func:`resolve`
builds the quandle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from typing import Any

from . import constructors as C
from .errors import QuandleError, SchemaError, SpecError, SpecSyntaxError, UnknownType
from .groups import FiniteGroup, cyclic, direct_product_group, from_table, symmetric_group
from .permutation import Permutation, parse_cycles
from .quandle import FiniteQuandle, direct_product, free_union, validate

__all__ = [
    "GroupSpec",
    "QuandleSpec",
    "parse_spec",
    "parse_spec_obj",
    "resolve",
    "resolve_group",
    "resolve_graph_spec",
    "quandle_to_json",
    "dumps",
    "GRAPH_TYPES",
]

GRAPH_TYPES = ("graph", "cycle", "path")
_IGNORED_KEYS = {"type", "name", "comment", "description"}


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    params: dict = field(hash=False)
    factors: tuple = ()
    path: str = ""


@dataclass(frozen=True)
class QuandleSpec:
    kind: str
    params: dict = field(hash=False)
    children: tuple = ()
    path: str = ""


# -- shape checks -----------------------------------------------------------

def _ptr(path, key):
    return f"{path}/{key}"


def _check_keys(obj, path, required, optional=()):
    for k in required:
        if k not in obj:
            raise SchemaError(_ptr(path, k), "missing")
    allowed = set(required) | set(optional) | _IGNORED_KEYS
    for k in obj:
        if k not in allowed:
            raise SchemaError(_ptr(path, k), "unexpected key")


def _int(obj, key, path, minimum=None):
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SchemaError(_ptr(path, key), f"must be an integer, got {json.dumps(v)}")
    if minimum is not None and v < minimum:
        raise SchemaError(_ptr(path, key), f"must be >= {minimum}, got {v}")
    return v


def _int_list(v, path, minimum=None, nonempty=True):
    if not isinstance(v, list) or (nonempty and not v):
        raise SchemaError(path, "must be a non-empty list of integers")
    for i, x in enumerate(v):
        if isinstance(x, bool) or not isinstance(x, int):
            raise SchemaError(_ptr(path, i), f"must be an integer, got {json.dumps(x)}")
        if minimum is not None and x < minimum:
            raise SchemaError(_ptr(path, i), f"must be >= {minimum}, got {x}")
    return list(v)


def _matrix(v, path):
    if not isinstance(v, list) or not v:
        raise SchemaError(path, "must be a non-empty list of rows")
    rows = [_int_list(row, _ptr(path, i)) for i, row in enumerate(v)]
    n = len(rows)
    for i, row in enumerate(rows):
        if len(row) != n:
            raise SchemaError(_ptr(path, i), f"must have {n} entries to make a square matrix")
    return rows


def _obj_list(v, path):
    if not isinstance(v, list) or not v:
        raise SchemaError(path, "must be a non-empty list")
    return v


def _type_of(obj, path):
    if not isinstance(obj, dict):
        raise SchemaError(path or "/", "must be an object")
    if "type" not in obj:
        raise SchemaError(_ptr(path, "type"), "missing")
    tag = obj["type"]
    if not isinstance(tag, str):
        raise SchemaError(_ptr(path, "type"), "must be a string")
    return tag


def _parse_group(obj, path) -> GroupSpec:
    tag = _type_of(obj, path)
    if tag == "cyclic":
        _check_keys(obj, path, ["n"])
        return GroupSpec(tag, {"n": _int(obj, "n", path, 1)}, path=path)
    if tag == "symmetric":
        _check_keys(obj, path, ["n"])
        return GroupSpec(tag, {"n": _int(obj, "n", path, 1)}, path=path)
    if tag == "product":
        _check_keys(obj, path, ["factors"])
        p = _ptr(path, "factors")
        items = _obj_list(obj["factors"], p)
        return GroupSpec(tag, {}, tuple(_parse_group(f, _ptr(p, i)) for i, f in enumerate(items)), path)
    if tag == "table":
        _check_keys(obj, path, ["mult"])
        return GroupSpec(tag, {"mult": _matrix(obj["mult"], _ptr(path, "mult"))}, path=path)
    raise UnknownType(tag, path)


def _parse_sigma(v, path):
    if isinstance(v, str):
        return v
    return _int_list(v, path, minimum=0)


def _parse_quandle(obj, path) -> QuandleSpec:
    tag = _type_of(obj, path)
    if tag in ("trivial", "dihedral"):
        _check_keys(obj, path, ["n"])
        return QuandleSpec(tag, {"n": _int(obj, "n", path, 1)}, path=path)
    if tag in ("cycle", "path"):
        _check_keys(obj, path, ["n"])
        return QuandleSpec(tag, {"n": _int(obj, "n", path, 2)}, path=path)
    if tag == "sphere":
        _check_keys(obj, path, ["dim"])
        return QuandleSpec(tag, {"dim": _int(obj, "dim", path, 1)}, path=path)
    if tag == "torus":
        _check_keys(obj, path, ["m"])
        return QuandleSpec(tag, {"m": _int_list(obj["m"], _ptr(path, "m"), minimum=1)}, path=path)
    if tag == "galex":
        _check_keys(obj, path, ["group", "sigma"])
        group = _parse_group(obj["group"], _ptr(path, "group"))
        sigma = _parse_sigma(obj["sigma"], _ptr(path, "sigma"))
        return QuandleSpec(tag, {"group": group, "sigma": sigma}, path=path)
    if tag == "core":
        _check_keys(obj, path, ["group"])
        return QuandleSpec(tag, {"group": _parse_group(obj["group"], _ptr(path, "group"))}, path=path)
    if tag == "graph":
        _check_keys(obj, path, ["vertices", "weight_group", "d"])
        params = {
            "vertices": _int(obj, "vertices", path, 1),
            "weight_group": _parse_group(obj["weight_group"], _ptr(path, "weight_group")),
            "d": _matrix(obj["d"], _ptr(path, "d")),
        }
        if len(params["d"]) != params["vertices"]:
            raise SchemaError(_ptr(path, "d"), f"must be {params['vertices']}x{params['vertices']}")
        return QuandleSpec(tag, params, path=path)
    if tag in ("product", "free_union"):
        key = "factors" if tag == "product" else "parts"
        _check_keys(obj, path, [key])
        p = _ptr(path, key)
        items = _obj_list(obj[key], p)
        children = tuple(_parse_quandle(c, _ptr(p, i)) for i, c in enumerate(items))
        return QuandleSpec(tag, {}, children, path)
    if tag == "table":
        _check_keys(obj, path, ["s"], ["n", "labels"])
        s = _matrix(obj["s"], _ptr(path, "s"))
        params = {"s": s}
        if "n" in obj:
            n = _int(obj, "n", path, 1)
            if n != len(s):
                raise SchemaError(_ptr(path, "n"), f"is {n} but the table has {len(s)} rows")
        if "labels" in obj:
            labels = obj["labels"]
            if not isinstance(labels, list) or len(labels) != len(s) or not all(isinstance(x, str) for x in labels):
                raise SchemaError(_ptr(path, "labels"), f"must be a list of {len(s)} strings")
            params["labels"] = list(labels)
        return QuandleSpec(tag, params, path=path)
    raise UnknownType(tag, path)


def parse_spec_obj(obj: Any) -> QuandleSpec:
    """Check an already-decoded JSON value."""
    return _parse_quandle(obj, "")


def parse_spec(text: str | bytes) -> QuandleSpec:
    """Decode and check a quandle description."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecSyntaxError(f"not UTF-8 ({exc.reason})") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return parse_spec_obj(obj)


# -- resolution -------------------------------------------------------------

def _located(path):
    def wrap(exc: QuandleError):
        if not isinstance(exc, SpecError) and not hasattr(exc, "spec_path"):
            exc.spec_path = path or "/"
        return exc
    return wrap


def resolve_group(spec: GroupSpec) -> FiniteGroup:
    try:
        if spec.kind == "cyclic":
            return cyclic(spec.params["n"])
        if spec.kind == "symmetric":
            return symmetric_group(spec.params["n"])
        if spec.kind == "product":
            return reduce(direct_product_group, (resolve_group(f) for f in spec.factors))
        if spec.kind == "table":
            return from_table(spec.params["mult"])
    except QuandleError as exc:
        raise _located(spec.path)(exc)
    raise UnknownType(spec.kind, spec.path)


def _sigma(value, G: FiniteGroup) -> Permutation:
    if isinstance(value, str):
        return parse_cycles(value, G.order)
    return Permutation(value)


def resolve_graph_spec(spec: QuandleSpec) -> C.WeightedGraphSpec:
    """The weighted graph behind a ``graph``, ``cycle`` or ``path`` description."""
    try:
        if spec.kind == "graph":
            A = resolve_group(spec.params["weight_group"])
            return C.WeightedGraphSpec(spec.params["vertices"], A, spec.params["d"])
        if spec.kind == "cycle":
            return C.cycle_graph_spec(spec.params["n"])
        if spec.kind == "path":
            return C.path_graph_spec(spec.params["n"])
    except QuandleError as exc:
        raise _located(spec.path)(exc)
    raise SchemaError(spec.path or "/", f"type {spec.kind!r} is not a weighted graph")


def resolve(spec: QuandleSpec) -> FiniteQuandle:
    """Build the quandle a description stands for.

    Errors from the builders propagate unchanged, tagged with a
    ``spec_path`` attribute pointing at the offending node.
    """
    k, p = spec.kind, spec.params
    if k in ("product", "free_union"):
        op = direct_product if k == "product" else free_union
        return reduce(op, (resolve(c) for c in spec.children))
    try:
        if k == "trivial":
            return C.trivial(p["n"])
        if k == "dihedral":
            return C.dihedral(p["n"])
        if k == "sphere":
            return C.discrete_sphere(p["dim"])
        if k == "torus":
            return C.discrete_torus(p["m"])
        if k == "galex":
            G = resolve_group(p["group"])
            return C.galex(G, _sigma(p["sigma"], G))
        if k == "core":
            return C.core(resolve_group(p["group"]))
        if k in GRAPH_TYPES:
            X = C.graph_quandle(resolve_graph_spec(spec))
            return X
        if k == "table":
            return validate(p["s"], p.get("labels"))
    except QuandleError as exc:
        raise _located(spec.path)(exc)
    raise UnknownType(k, spec.path)


# -- output -----------------------------------------------------------------

def quandle_to_json(X: FiniteQuandle) -> dict:
    out = {"type": "table", "n": X.size, "s": X.to_lists()}
    if X.labels:
        out["labels"] = list(X.labels)
    return out


def dumps(obj, compact: bool = False) -> str:
    """Deterministic JSON text (insertion-ordered keys, no floats involved)."""
    if compact:
        return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)
    return json.dumps(obj, indent=2, ensure_ascii=False)
