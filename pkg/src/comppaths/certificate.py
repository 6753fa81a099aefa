"""JSON certificates for cells of every dimension, and trace serialization.

A certificate records the claimed boundary next to the cell tree. Paths
and expressions are stored as s-expression strings; every other node is a
JSON object ``{"t": <constructor>, <field>: ...}``. Verification decodes
the tree, re-checks it from scratch and compares the recomputed boundary
with the claimed one.
"""

from __future__ import annotations

import dataclasses
import json

from . import derivation as dv
from . import tower
from .errors import BadBoundary, CompPathError, SExprSyntaxError
from .expr import App, Const, Lam, Var, show as show_expr
from .path import endpoints, is_path, show as show_path
from .sexpr import parse_expr, parse_path
from .trs import RuleId, StepWitness, Trace

FORMAT = "comppaths-certificate"
VERSION = 1


class CertificateError(CompPathError, ValueError):
    """The JSON does not describe a cell at all."""


_NODE_TYPES = {
    cls.__name__: cls
    for cls in (
        dv.DRefl, dv.DStep, dv.DInv, dv.DComp,
        *tower.CELL3_TYPES, *tower.META3_TYPES, *tower.CELLN_TYPES, *tower.META_N_TYPES,
    )
}


def encode(x):
    """Cell tree -> JSON-ready value."""
    if isinstance(x, (Var, Const, Lam, App)):
        return {"expr": show_expr(x)}
    if is_path(x):
        return {"path": show_path(x)}
    if isinstance(x, StepWitness):
        return {
            "t": "Step",
            "rule": x.rule.value,
            "pos": list(x.pos),
            "source": show_path(x.source),
            "target": show_path(x.target),
        }
    if type(x).__name__ in _NODE_TYPES:
        out = {"t": type(x).__name__}
        for f in dataclasses.fields(x):
            out[f.name] = encode(getattr(x, f.name))
        return out
    if isinstance(x, tuple):
        return [encode(v) for v in x]
    if isinstance(x, (int, str)):
        return x
    raise TypeError(f"cannot encode {type(x).__name__}")


def _path(text):
    if not isinstance(text, str):
        raise CertificateError("path must be an s-expression string")
    return parse_path(text, check=False)


def decode(obj):
    """Inverse of :func:`encode`; checks shape only, not well-formedness."""
    try:
        return _decode(obj)
    except SExprSyntaxError as err:
        raise CertificateError(f"bad s-expression in certificate: {err}") from None
    except (KeyError, TypeError) as err:
        raise CertificateError(f"malformed certificate node: {err!r}") from None


def _decode(obj):
    if isinstance(obj, list):
        return tuple(_decode(v) for v in obj)
    if not isinstance(obj, dict):
        if isinstance(obj, bool) or not isinstance(obj, (int, str)):
            raise CertificateError(f"unexpected value {obj!r}")
        return obj
    if "expr" in obj:
        return parse_expr(obj["expr"])
    if "path" in obj:
        return _path(obj["path"])
    tag = obj["t"]
    if tag == "Step":
        pos = obj["pos"]
        if not isinstance(pos, list) or not all(type(i) is int for i in pos):
            raise CertificateError("step position must be a list of integers")
        try:
            rule = RuleId(obj["rule"])
        except ValueError:
            raise CertificateError(f"unknown rule {obj['rule']!r}") from None
        return StepWitness(_path(obj["source"]), _path(obj["target"]), tuple(pos), rule)
    cls = _NODE_TYPES.get(tag)
    if cls is None:
        raise CertificateError(f"unknown constructor {tag!r}")
    kwargs = {f.name: _decode(obj[f.name]) for f in dataclasses.fields(cls)}
    return cls(**kwargs)


def _kind(k):
    return {1: "cell1", 2: "cell2", 3: "cell3"}.get(k, "cellN")


def make_certificate(cell, check=True):
    """Certificate dict for a cell of dimension >= 2 (a path gives a 1-cell certificate)."""
    if check:
        a, b = tower.verify_cell(cell)
    else:
        a, b = tower.boundary(cell)
    k = tower.dim(cell)
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": _kind(k),
        "dim": k,
        "src": encode(a),
        "tgt": encode(b),
        "tree": encode(cell),
    }


def verify_certificate(cert):
    """Re-check a certificate dict; returns the decoded cell or raises.

    Raises CertificateError for structural problems and an IllFormed
    subclass when a step, a composition or the claimed boundary is wrong.
    """
    if not isinstance(cert, dict) or cert.get("format") != FORMAT:
        raise CertificateError("not a comppaths certificate")
    if cert.get("version") != VERSION:
        raise CertificateError(f"unsupported certificate version {cert.get('version')!r}")
    for key in ("kind", "dim", "src", "tgt", "tree"):
        if key not in cert:
            raise CertificateError(f"missing field {key!r}")
    cell = decode(cert["tree"])
    try:
        k = tower.dim(cell)
    except TypeError:
        raise CertificateError("tree is not a cell") from None
    if k == 0:
        raise CertificateError("an expression is not a certificate")
    a, b = endpoints(cell) if k == 1 else tower.verify_cell(cell)
    if cert["dim"] != k or cert["kind"] != _kind(k):
        raise BadBoundary((), f"claimed dimension {cert['dim']} but the tree has dimension {k}")
    if decode(cert["src"]) != a:
        raise BadBoundary((), "claimed source does not match the cell")
    if decode(cert["tgt"]) != b:
        raise BadBoundary((), "claimed target does not match the cell")
    return cell


def dumps(cert):
    return json.dumps(cert, indent=1)


def loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise CertificateError(f"invalid JSON: {err}") from None


def trace_to_json(tr):
    return {
        "start": show_path(tr.start),
        "steps": [
            {"pos": list(s.pos), "rule": s.rule.value, "target": show_path(s.target)}
            for s in tr.steps
        ],
    }


def trace_from_json(obj):
    """Rebuild a Trace; sources are taken from the previous target."""
    try:
        start = cur = parse_path(obj["start"])
        steps = []
        for item in obj["steps"]:
            nxt = parse_path(item["target"], check=False)
            steps.append(StepWitness(cur, nxt, tuple(item["pos"]), RuleId(item["rule"])))
            cur = nxt
    except (KeyError, TypeError, ValueError) as err:
        raise CertificateError(f"malformed trace: {err}") from None
    return Trace(start, tuple(steps))


__all__ = [
    "FORMAT", "VERSION", "CertificateError", "encode", "decode", "make_certificate",
    "verify_certificate", "dumps", "loads", "trace_to_json", "trace_from_json",
]
