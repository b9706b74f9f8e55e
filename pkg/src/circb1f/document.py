"""JSON documents holding one 1-factorisation.

Layout::

    {
      "order": 8,
      "connection_set": [1, 2],
      "factors": [
        [[0, 1], [2, 3], [4, 5], [6, 7]],
        ...
      ],
      "meta": {...}
    }

Edges are written smaller endpoint first and sorted within each factor.
Factor order is kept as given, so ``parse(emit(F))`` returns ``F``; call
``emit(F.canonical())`` for the order-independent form.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import DocumentError
from .graph import OneFactorisation, make_circulant, validate_factorisation


def to_dict(F: OneFactorisation, meta: dict | None = None) -> dict:
    return {
        "order": F.graph.order,
        "connection_set": list(F.graph.connections),
        "factors": [[list(e) for e in sorted(f.edges())] for f in F.factors],
        "meta": meta or {},
    }


def emit(F: OneFactorisation, meta: dict | None = None) -> str:
    """Serialise ``F``; one factor per line, byte-stable for equal input."""
    d = to_dict(F, meta)
    factors = ",\n".join("    " + json.dumps(f, separators=(", ", ": ")) for f in d["factors"])
    meta_text = json.dumps(d["meta"], sort_keys=True, indent=2).replace("\n", "\n  ")
    return (
        "{\n"
        f'  "order": {d["order"]},\n'
        f'  "connection_set": {json.dumps(d["connection_set"])},\n'
        f'  "factors": [\n{factors}\n  ],\n'
        f'  "meta": {meta_text}\n'
        "}\n"
    )


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return value


def from_dict(d: Any) -> tuple[OneFactorisation, dict]:
    if not isinstance(d, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("order", "connection_set", "factors"):
        if key not in d:
            raise DocumentError(f"missing field {key!r}")
    order = _int(d["order"], "order")
    conns = d["connection_set"]
    if not isinstance(conns, list):
        raise DocumentError("connection_set must be a list")
    conns = [_int(x, "connection_set entry") for x in conns]
    factors = d["factors"]
    if not isinstance(factors, list):
        raise DocumentError("factors must be a list")
    edge_lists = []
    for i, f in enumerate(factors):
        if not isinstance(f, list):
            raise DocumentError(f"factor {i} must be a list of edges")
        pairs = []
        for e in f:
            if not isinstance(e, list) or len(e) != 2:
                raise DocumentError(f"factor {i}: edge {e!r} is not a pair")
            pairs.append((_int(e[0], "vertex"), _int(e[1], "vertex")))
        edge_lists.append(pairs)
    meta = d.get("meta", {})
    if not isinstance(meta, dict):
        raise DocumentError("meta must be an object")
    g = make_circulant(order, conns)
    return validate_factorisation(g, edge_lists), meta


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None


def parse(text: str) -> tuple[OneFactorisation, dict]:
    return from_dict(load_json(text))
