"""Command-line interface: convert, check, decompose, polytope, verify.

Documents are UTF-8 JSON, one per file or stream.  Exit codes: 0 success,
1 predicate failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bj
from . import noncrossing as nc
from . import plabic as pl
from . import polytope as pt
from . import serialize as ser
from . import verify as vf
from .errors import BoundExceeded, NotAPositroid, ParseError, PositroidError
from .matroid import Matroid, standardize


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(doc, out: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# ---------------------------------------------------------------------------
# conversion


def _as_matroid(obj, envelope: bool) -> Matroid:
    if isinstance(obj, Matroid):
        return standardize(obj)
    if isinstance(obj, bj.GrassmannNecklace):
        return bj.positroid_of_necklace(obj)
    if isinstance(obj, bj.DecoratedPermutation):
        return bj.positroid_of_necklace(bj.necklace_of_perm(obj))
    if isinstance(obj, bj.LeDiagram):
        return _as_matroid(bj.perm_of_le(obj), envelope)
    if isinstance(obj, pl.PlabicGraph):
        return _as_matroid(pl.trip_perm(obj), envelope)
    raise ParseError(f"cannot interpret {type(obj).__name__} as a matroid")


def _as_positroid(obj, envelope: bool) -> Matroid:
    m = _as_matroid(obj, envelope)
    if not bj.is_positroid(m):
        if not envelope:
            raise NotAPositroid(
                "input matroid is not a positroid; pass --envelope to take its closure"
            )
        m = bj.envelope(m)
    return m


def convert(obj, target: str, envelope: bool):
    if target == "matroid":
        return _as_matroid(obj, envelope)
    m = _as_positroid(obj, envelope)
    neck = bj.necklace_of(m)
    if target == "necklace":
        return neck
    perm = bj.perm_of_necklace(neck)
    if target == "perm":
        return perm
    if target == "le":
        return bj.le_of_perm(perm)
    if target == "plabic":
        return pl.plabic_of_le(bj.le_of_perm(perm))
    raise ParseError(f"unknown conversion target {target!r}")


def cmd_convert(args) -> int:
    obj = ser.loads(_read_text(args.input))
    out = convert(obj, args.to, args.envelope)
    _emit(ser.to_document(out), args.output)
    return 0


# ---------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    try:
        raw = json.loads(_read_text(args.input))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    checks = []
    obj = None
    try:
        obj = ser.from_document(raw)
        checks.append({"name": "well-formed", "ok": True, "witness": ""})
    except ParseError:
        raise
    except PositroidError as exc:
        checks.append({"name": "well-formed", "ok": False, "witness": str(exc)})
    if obj is not None:
        if isinstance(obj, Matroid):
            checks.append({"name": "exchange axiom", "ok": True, "witness": ""})
            ok = bj.is_positroid(obj)
            checks.append(
                {
                    "name": "positroid",
                    "ok": ok,
                    "witness": "" if ok else "envelope is strictly larger",
                }
            )
        elif isinstance(obj, bj.GrassmannNecklace):
            checks.append({"name": "necklace condition", "ok": True, "witness": ""})
        elif isinstance(obj, bj.DecoratedPermutation):
            checks.append({"name": "bijection with colored fixed points", "ok": True, "witness": ""})
            checks.append(
                {"name": "stabilized-interval-free", "ok": nc.is_sif(obj), "witness": ""}
            )
        elif isinstance(obj, bj.LeDiagram):
            checks.append({"name": "corner (Le) property", "ok": True, "witness": ""})
        elif isinstance(obj, (nc.NonCrossingPartition, nc.WeightedNCPartition)):
            checks.append({"name": "non-crossing", "ok": True, "witness": ""})
    report = {"kind": "report", "ok": all(c["ok"] for c in checks), "checks": checks}
    _emit(report, args.output)
    return 0 if report["ok"] else 1


# ---------------------------------------------------------------------------
# decompose


def cmd_decompose(args) -> int:
    obj = ser.loads(_read_text(args.input))
    m = _as_positroid(obj, envelope=False)
    part = nc.nc_of_positroid(m)
    kw = nc.kreweras(part)
    star = pt.pi_star(m)
    factors = []
    from .matroid import restrict

    for block in part.blocks:
        factor = restrict(m, block)
        factors.append(
            {
                "block": sorted(block),
                "matroid": ser.to_document(standardize(factor)),
            }
        )
    doc = {
        "kind": "decomposition",
        "n": m.n,
        "partition": ser.to_document(part),
        "kreweras": ser.to_document(kw),
        "factors": factors,
        "pi_star_agrees": star.block_sets() == kw.block_sets(),
    }
    _emit(doc, args.output)
    return 0 if doc["pi_star_agrees"] else 1


# ---------------------------------------------------------------------------
# polytope


def cmd_polytope(args) -> int:
    obj = ser.loads(_read_text(args.input))
    m = _as_positroid(obj, envelope=False)
    desc = pt.h_description(bj.necklace_of(m))
    doc = ser.to_document(desc)
    if args.faces:
        poset = pt.face_poset(m)
        faces = []
        for node in poset.nodes:
            faces.append(
                {
                    "vertices": sorted(sorted(b) for b in node.vertices),
                    "label": None if node.is_empty else ser.to_document(node.label),
                    "dimension": -1
                    if node.is_empty
                    else pt.dimension(node.matroid),
                }
            )
        real = [nd for nd in poset.nodes if not nd.is_empty]
        labels = [(nd.label.partition.blocks, nd.label.weights) for nd in real]
        injective = len(set(labels)) == len(labels)
        order_ok = all(
            poset.leq(a, b) == nc.ncd_leq(a.label, b.label) for a in real for b in real
        )
        doc = {
            "kind": "polytope",
            "hdescription": doc,
            "faces": faces,
            "embedding": {"injective": injective, "order_preserving": order_ok},
        }
    _emit(doc, args.output)
    return 0


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    report = vf.run_suite(args.suite, args.bound)
    _emit(report.as_dict(), args.output)
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="positroids",
        description="Positroid representations, polytopes, and decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="input document path, or - for stdin")
        p.add_argument("-o", "--output", help="output path (default stdout)")
        p.add_argument("--format", choices=["json"], default="json")

    p = sub.add_parser("convert", help="convert between representations")
    common(p)
    p.add_argument("--to", required=True, choices=["matroid", "necklace", "perm", "le", "plabic"])
    p.add_argument("--envelope", action="store_true", help="replace a non-positroid by its positroid closure")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("check", help="validate a document and run its predicates")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="connected components, factors, Kreweras complement")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("polytope", help="H-description and optionally the face poset")
    common(p)
    p.add_argument("--faces", action="store_true")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--bound", type=int)
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotAPositroid, BoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PositroidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
