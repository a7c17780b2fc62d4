"""JSON forms for the combinatorial structures, shared by the CLI.

One object per structure, a "kind" field first, slot tables as objects
keyed by the vertex (JSON object keys are strings), null for vacancies.
Output is deterministic: keys are emitted in a fixed order and
collections are sorted.
"""

from __future__ import annotations

import json

from .multisets import CyclicMultiset
from .paths import GoodPath, MinimalField, Ornament
from .trees import CycleRootedTree, PlaneTree, RootMinimalForest


def _slots_obj(slots) -> dict:
    return {str(v): list(row) for v, row in slots}


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(f"expected an integer, got {value!r}")
    return int(value)


def _int_list(values) -> tuple[int, ...]:
    return tuple(_as_int(v) for v in values)


def _slots_from_obj(obj) -> dict:
    if not isinstance(obj, dict):
        raise ValueError("slots must be an object keyed by vertex")
    out = {}
    for key, row in obj.items():
        if not isinstance(row, list):
            raise ValueError("each slot array must be a list")
        out[_as_int(key)] = tuple(None if c is None else _as_int(c) for c in row)
    return out


def to_obj(x) -> dict:
    """Plain-dict form of any structure, dispatching on its type."""
    if isinstance(x, GoodPath):
        return {"kind": "path", "k": x.k, "steps": x.steps, "labels": list(x.labels)}
    if isinstance(x, Ornament):
        return {
            "kind": "ornament",
            "k": x.k,
            "steps": x.rep.steps,
            "labels": list(x.rep.labels),
        }
    if isinstance(x, MinimalField):
        parts = sorted(x.parts, key=lambda p: (p.steps, p.labels))
        return {"kind": "field", "parts": [to_obj(p) for p in parts]}
    if isinstance(x, PlaneTree):
        return {"kind": "tree", "k": x.k, "root": x.root, "slots": _slots_obj(x.slots)}
    if isinstance(x, RootMinimalForest):
        parts = sorted(x.parts, key=lambda t: t.root)
        return {"kind": "forest", "parts": [to_obj(t) for t in parts]}
    if isinstance(x, CycleRootedTree):
        return {
            "kind": "cycle-tree",
            "k": x.k,
            "cycle": list(x.cycle),
            "slots": _slots_obj(x.slots),
        }
    if isinstance(x, CyclicMultiset):
        return {
            "kind": "multiset",
            "k": x.k,
            "cycle": list(x.cycle),
            "f": {str(v): list(vec) for v, vec in x.f},
        }
    raise ValueError(f"cannot serialize {type(x).__name__}")


def from_obj(obj):
    """Rebuild a structure from its plain-dict form; constructor validation
    reports the violated invariant on bad input."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("input must be a JSON object with a 'kind' field")
    kind = obj["kind"]
    try:
        if kind == "path":
            return GoodPath(_as_int(obj["k"]), str(obj["steps"]), _int_list(obj["labels"]))
        if kind == "ornament":
            return Ornament(
                GoodPath(_as_int(obj["k"]), str(obj["steps"]), _int_list(obj["labels"]))
            )
        if kind == "field":
            return MinimalField(frozenset(from_obj(p) for p in obj["parts"]))
        if kind == "tree":
            return PlaneTree(
                _as_int(obj["k"]), _as_int(obj["root"]), _slots_from_obj(obj["slots"])
            )
        if kind == "forest":
            return RootMinimalForest(frozenset(from_obj(t) for t in obj["parts"]))
        if kind == "cycle-tree":
            return CycleRootedTree(
                _as_int(obj["k"]), _int_list(obj["cycle"]), _slots_from_obj(obj["slots"])
            )
        if kind == "multiset":
            return CyclicMultiset(
                _as_int(obj["k"]),
                _int_list(obj["cycle"]),
                {_as_int(v): _int_list(vec) for v, vec in obj["f"].items()},
            )
    except KeyError as exc:
        raise ValueError(f"{kind} object is missing field {exc}") from exc
    raise ValueError(f"unknown kind {kind!r}")


def dumps(x) -> str:
    """Single-line canonical JSON for a structure."""
    return json.dumps(to_obj(x), separators=(",", ":"))


def loads(text: str):
    return from_obj(json.loads(text))
