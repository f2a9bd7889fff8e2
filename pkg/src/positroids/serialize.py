"""JSON wire format: one document per object, deterministic field order.

Deserialization goes through the normal constructors, so every domain
invariant is re-checked on the way in.
"""

from __future__ import annotations

import json

from .bijections import (
    DecoratedPermutation,
    GrassmannNecklace,
    LeDiagram,
    decorated_perm,
    le_diagram,
)
from .errors import ParseError, PositroidError
from .matroid import Matroid, make_matroid
from .noncrossing import NonCrossingPartition, WeightedNCPartition, make_nc
from .plabic import PlabicGraph
from .polytope import HDescription

VERSION = "1"


def to_document(obj) -> dict:
    if isinstance(obj, Matroid):
        return {
            "kind": "matroid",
            "version": VERSION,
            "n": obj.n,
            "bases": sorted(sorted(b) for b in obj.bases),
        }
    if isinstance(obj, GrassmannNecklace):
        return {
            "kind": "necklace",
            "version": VERSION,
            "n": obj.n,
            "d": obj.d,
            "rings": [sorted(r) for r in obj.rings],
        }
    if isinstance(obj, DecoratedPermutation):
        return {
            "kind": "perm",
            "version": VERSION,
            "n": obj.n,
            "map": [obj(j) for j in range(1, obj.n + 1)],
            "colors": {str(e): c for e, c in obj.colors},
        }
    if isinstance(obj, LeDiagram):
        rows = []
        for i, length in enumerate(obj.shape, start=1):
            rows.append("".join("+" if (i, j) in obj.plus else "0" for j in range(1, length + 1)))
        return {
            "kind": "le",
            "version": VERSION,
            "d": obj.d,
            "n": obj.n,
            "lambda": list(obj.shape),
            "fill": rows,
        }
    if isinstance(obj, PlabicGraph):
        vertices = [{"id": i, "color": "boundary"} for i in range(1, obj.n + 1)]
        vertices += [{"id": v, "color": c} for v, c in obj.colors]
        return {
            "kind": "plabic",
            "version": VERSION,
            "n": obj.n,
            "vertices": vertices,
            "edges": [list(e) for e in obj.edges],
            "rotation": {str(v): list(order) for v, order in obj.rotations},
        }
    if isinstance(obj, WeightedNCPartition):
        doc = to_document(obj.partition)
        doc["weights"] = list(obj.weights)
        return doc
    if isinstance(obj, NonCrossingPartition):
        return {
            "kind": "ncpartition",
            "version": VERSION,
            "n": obj.n,
            "blocks": [sorted(b) for b in obj.blocks],
        }
    if isinstance(obj, HDescription):
        return {
            "kind": "hdescription",
            "version": VERSION,
            "n": obj.n,
            "d": obj.d,
            "constraints": [
                {"interval": [i, j], "bound": bound} for (i, j), bound in obj.constraints
            ],
        }
    raise ParseError(f"cannot serialize object of type {type(obj).__name__}")


def from_document(doc: dict):
    try:
        kind = doc["kind"]
    except (TypeError, KeyError):
        raise ParseError("document has no 'kind' field")
    try:
        if kind == "matroid":
            return make_matroid(doc["n"], [frozenset(b) for b in doc["bases"]])
        if kind == "necklace":
            rings = tuple(frozenset(r) for r in doc["rings"])
            return GrassmannNecklace(doc["n"], doc["d"], rings)
        if kind == "perm":
            colors = {int(e): c for e, c in doc.get("colors", {}).items()}
            return decorated_perm(doc["map"], colors)
        if kind == "le":
            plus = []
            for i, row in enumerate(doc["fill"], start=1):
                for j, ch in enumerate(row, start=1):
                    if ch == "+":
                        plus.append((i, j))
                    elif ch != "0":
                        raise ParseError(f"bad fill character {ch!r}")
            return le_diagram(doc["d"], doc["n"], doc["lambda"], plus)
        if kind == "plabic":
            colors = tuple(
                (v["id"], v["color"]) for v in doc["vertices"] if v["color"] != "boundary"
            )
            rotations = tuple(
                sorted((int(v), tuple(order)) for v, order in doc["rotation"].items())
            )
            return PlabicGraph(
                doc["n"],
                tuple(sorted(colors)),
                tuple(tuple(e) for e in doc["edges"]),
                rotations,
            )
        if kind == "ncpartition":
            if "weights" in doc:
                nc = make_nc(doc["n"], doc["blocks"])
                ordered = sorted(
                    zip((frozenset(b) for b in doc["blocks"]), doc["weights"]),
                    key=lambda bw: min(bw[0]),
                )
                return WeightedNCPartition(nc, tuple(w for _, w in ordered))
            return make_nc(doc["n"], doc["blocks"])
        if kind == "hdescription":
            cons = tuple(
                ((c["interval"][0], c["interval"][1]), c["bound"]) for c in doc["constraints"]
            )
            return HDescription(doc["n"], doc["d"], cons)
    except ParseError:
        raise
    except PositroidError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"malformed {kind} document: {exc}") from exc
    raise ParseError(f"unknown document kind {kind!r}")


def dumps(obj) -> str:
    return json.dumps(to_document(obj), indent=2, sort_keys=False)


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_document(doc)
