"""JSON wire formats.

Every encoder has a matching decoder and the composite is the identity on
valid data.  Key encodings are canonical (no whitespace, fixed field order)
so identical objects always serialize byte-for-byte identically.
"""

from __future__ import annotations

import json

from .errors import DegreeMismatch
from .gammacat import GammaOperator
from .gammaset import GammaSet
from .pointed import FinPointedSet, PointedMap, map_space
from .prolong import CoendTable


def dumps(obj) -> str:
    """Canonical text form: sorted keys, compact separators, one newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _expect(d, field, kind):
    if not isinstance(d, dict) or field not in d:
        raise ValueError(f"missing field {field!r}")
    v = d[field]
    if kind is int and (not isinstance(v, int) or isinstance(v, bool)):
        raise ValueError(f"field {field!r} must be an integer")
    if kind is list and not isinstance(v, list):
        raise ValueError(f"field {field!r} must be a list")
    return v


# --- pointed sets and maps -------------------------------------------------


def pointed_set_to_json(X: FinPointedSet) -> dict:
    out = {"size": X.size}
    if X.labels is not None:
        out["labels"] = list(X.labels)
    return out


def pointed_set_from_json(d) -> FinPointedSet:
    size = _expect(d, "size", int)
    labels = d.get("labels")
    if labels is not None:
        labels = tuple(str(s) for s in labels)
    return FinPointedSet(size, labels=labels)


def pointed_map_to_json(f: PointedMap) -> dict:
    return {"dom": f.dom.size, "cod": f.cod.size, "table": list(f.table)}


def pointed_map_from_json(d) -> PointedMap:
    dom = FinPointedSet(_expect(d, "dom", int))
    cod = FinPointedSet(_expect(d, "cod", int))
    table = _expect(d, "table", list)
    return PointedMap(dom, cod, tuple(int(v) for v in table))


# --- operators -------------------------------------------------------------


def operator_to_json(op: GammaOperator) -> dict:
    return {"dom": op.dom, "cod": op.cod, "pieces": [list(p) for p in op.pieces]}


def operator_from_json(d) -> GammaOperator:
    pieces = tuple(tuple(int(j) for j in p) for p in _expect(d, "pieces", list))
    return GammaOperator(_expect(d, "dom", int), _expect(d, "cod", int), pieces)


# --- tabulated functors ----------------------------------------------------


def _action_key(m: int, n: int, table: tuple[int, ...]) -> str:
    return f"{m}>{n}:" + json.dumps(list(table), separators=(",", ":"))


def _parse_action_key(key: str) -> tuple[int, int, tuple[int, ...]]:
    try:
        arrow, _, rest = key.partition(":")
        m, _, n = arrow.partition(">")
        table = json.loads(rest)
        return int(m), int(n), tuple(int(v) for v in table)
    except (ValueError, json.JSONDecodeError) as e:
        raise ValueError(f"bad action key {key!r}") from e


def gamma_set_to_json(A: GammaSet) -> dict:
    action = {}
    for m in range(A.bound + 1):
        for n in range(A.bound + 1):
            for f in map_space(FinPointedSet(m), FinPointedSet(n)).maps():
                action[_action_key(m, n, f.table)] = list(A.act(f).table)
    return {
        "degree_bound": A.bound,
        "levels": [lv.size for lv in A.levels],
        "action": action,
    }


def gamma_set_from_json(d) -> GammaSet:
    bound = _expect(d, "degree_bound", int)
    sizes = _expect(d, "levels", list)
    if len(sizes) != bound + 1:
        raise ValueError("levels must list every degree 0..degree_bound")
    levels = [FinPointedSet(int(s)) for s in sizes]
    raw = d.get("action")
    if not isinstance(raw, dict):
        raise ValueError("field 'action' must be an object")
    action = {}
    for key, tab in raw.items():
        m, n, ftab = _parse_action_key(key)
        if not (0 <= m <= bound and 0 <= n <= bound):
            raise ValueError(f"action key {key!r} outside the degree bound")
        if len(ftab) != m + 1 or not isinstance(tab, list):
            raise ValueError(f"action entry {key!r} malformed")
        action[(m, n, ftab)] = PointedMap(
            levels[m], levels[n], tuple(int(v) for v in tab)
        )
    try:
        return GammaSet(levels, action)  # checks the key set is complete
    except DegreeMismatch as e:
        raise ValueError(str(e)) from e


# --- prolongation tables ---------------------------------------------------


def coend_table_to_json(tb: CoendTable) -> dict:
    witnesses = []
    for c in range(1, tb.space.total):
        n, a, y = tb.witness(c)
        witnesses.append({"degree": n, "label": a, "eval": list(y.table)})
    return {"classes": tb.space.total, "witnesses": witnesses}
