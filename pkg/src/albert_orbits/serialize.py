"""JSON documents for every serializable value.

Schema "albert-orbits/1".  Scalars are strings ("3/4", "-2" over the
rationals; decimal residues over F_p, with the modulus carried by the
document's field descriptor).  An octonion is an 8-array in the
documented basis order, a Jordan element is {"s": [...], "x": [[...]]},
a pair is {"x1": ..., "x2": ...}, a group element is a 27x27 matrix of
strings plus its multiplier, with the 2x2 block alongside.
"""

import json

from .albert import AlbertElement
from .fields import field_from_name
from .group import GElement, GroupElement
from .linalg import Mat
from .octonion import Octonion
from .pvs import PairElement

SCHEMA = "albert-orbits/1"


class ParseError(ValueError):
    pass


def scalar_out(field, a):
    return field.to_str(a)


def scalar_in(field, s):
    try:
        return field.from_str(s)
    except Exception as exc:
        raise ParseError(f"bad scalar {s!r}: {exc}") from exc


def octonion_out(o):
    return [scalar_out(o.field, c) for c in o.co]


def octonion_in(field, data):
    if not isinstance(data, list) or len(data) != 8:
        raise ParseError("octonion payload must be an 8-array")
    return Octonion(field, [scalar_in(field, c) for c in data])


def albert_out(X):
    return {
        "s": [scalar_out(X.field, a) for a in X.s],
        "x": [octonion_out(o) for o in X.x],
    }


def albert_in(field, data):
    try:
        s = [scalar_in(field, a) for a in data["s"]]
        x = [octonion_in(field, o) for o in data["x"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad Jordan element payload: {exc}") from exc
    if len(s) != 3 or len(x) != 3:
        raise ParseError("Jordan element needs 3 scalars and 3 octonions")
    return AlbertElement(field, s, x)


def pair_out(x):
    return {"x1": albert_out(x.x1), "x2": albert_out(x.x2)}


def pair_in(field, data):
    try:
        return PairElement(albert_in(field, data["x1"]), albert_in(field, data["x2"]))
    except KeyError as exc:
        raise ParseError(f"bad pair payload: {exc}") from exc


def mat_out(m):
    return [[scalar_out(m.field, a) for a in row] for row in m.data]


def mat_in(field, data, rows, cols):
    if not isinstance(data, list) or len(data) != rows:
        raise ParseError(f"expected a {rows}x{cols} matrix")
    out = []
    for row in data:
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"expected a {rows}x{cols} matrix")
        out.append([scalar_in(field, a) for a in row])
    return Mat(field, out)


def gelement_out(g):
    return {
        "g1": mat_out(g.g1.mat),
        "multiplier": scalar_out(g.field, g.g1.multiplier()),
        "g2": mat_out(g.g2),
    }


def gelement_in(field, data):
    g1 = GroupElement(mat_in(field, data["g1"], 27, 27), None)
    g2 = mat_in(field, data["g2"], 2, 2)
    return GElement(g1, g2)


_PAYLOADS = {
    "pair": (pair_out, pair_in),
    "albert": (albert_out, albert_in),
    "octonion": (octonion_out, octonion_in),
    "gelement": (gelement_out, gelement_in),
}


def document_out(field, kind, value):
    out_fn, _ = _PAYLOADS[kind]
    return {"schema": SCHEMA, "field": field.name, "type": kind, "payload": out_fn(value)}


def document_in(doc):
    """Parse a document dict; returns (field, kind, value)."""
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise ParseError(f"unsupported schema {doc.get('schema')!r}")
    try:
        field = field_from_name(doc["field"])
        kind = doc["type"]
        _, in_fn = _PAYLOADS[kind]
    except KeyError as exc:
        raise ParseError(f"missing or unknown document key: {exc}") from exc
    return field, kind, in_fn(field, doc["payload"])


def dumps(field, kind, value):
    return json.dumps(document_out(field, kind, value), indent=2, sort_keys=True)


def loads(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return document_in(doc)


def trace_out(trace):
    field = trace.input.field
    return {
        "schema": SCHEMA,
        "field": field.name,
        "type": "reduction-trace",
        "input": pair_out(trace.input),
        "output": pair_out(trace.output),
        "steps": [
            {
                "label": s.label,
                "params": s.params,
                "g1": mat_out(s.g.g1.mat),
                "g2": mat_out(s.g.g2),
                "multiplier": scalar_out(field, s.g.g1.multiplier()),
            }
            for s in trace.steps
        ],
        "accumulated": gelement_out(trace.accumulated),
    }
