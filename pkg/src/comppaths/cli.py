"""Command-line interface: ``comppaths <command> ...``.

Inputs are inline s-expressions, files holding one, or certificate JSON
files. Exit status is 0 on success, 1 on a domain error (ill-formed
input, inequivalent paths, a rejected certificate) and 2 when the fuel
limit is hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import certificate as cert_mod
from . import confluence, tower
from . import derivation as dv
from .errors import CompPathError, FuelExhausted, NotEquivalent
from .path import is_path, show
from .sexpr import parse_any
from .trs import DEFAULT_FUEL, normalize, rules_for, rweq, use_rules

EXIT_OK, EXIT_DOMAIN, EXIT_FUEL = 0, 1, 2


def parse_input(text):
    """Expression, path or cell from an inline s-expression or a file.

    A file whose content starts with ``{`` is read as a certificate; the
    certificate is verified and its cell returned.
    """
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        return cert_mod.verify_certificate(cert_mod.loads(text))
    return parse_any(text)


def _path_arg(text):
    x = parse_input(text)
    if not is_path(x):
        raise CompPathError(f"expected a path, got {type(x).__name__}")
    return x


def _fmt_pos(pos):
    return "[" + ",".join(map(str, pos)) + "]"


def _emit(args, obj):
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=1)
            fh.write("\n")


def _describe(cell):
    a, b = tower.boundary(cell)
    k = tower.dim(cell)
    if k == 2:
        return f"2-cell\n  src: {show(a)}\n  tgt: {show(b)}"
    return f"{k}-cell over {k - 1}-cells"


def _emit_cell(args, cell, out):
    tower.verify_cell(cell)
    print(_describe(cell), file=out)
    _emit(args, cert_mod.make_certificate(cell, check=False))


# -- commands ----------------------------------------------------------------

def cmd_normalize(args, out):
    p = _path_arg(args.path)
    res = normalize(p, args.fuel)
    for s in res.trace.steps:
        print(f"{_fmt_pos(s.pos)}  {s.rule}  {show(s.target)}", file=out)
    print(f"nf: {show(res.nf)}  ({len(res.trace)} step(s))", file=out)
    _emit(args, {**cert_mod.trace_to_json(res.trace), "nf": show(res.nf)})
    return EXIT_OK


def cmd_equiv(args, out):
    p, q = _path_arg(args.p), _path_arg(args.q)
    same = rweq(p, q, args.fuel)
    print("equivalent" if same else "not equivalent", file=out)
    report = {"equivalent": same}
    if args.bound is not None:
        res = confluence.bfs_rweq(p, q, args.bound)
        if res.connected:
            print(f"search: connected at distance {res.distance}", file=out)
        else:
            print(f"search: nothing found within {args.bound} steps", file=out)
        report["search"] = {"bound": args.bound, "connected": res.connected, "distance": res.distance}
    _emit(args, report)
    return EXIT_OK if same else EXIT_DOMAIN


def cmd_canonical(args, out):
    p, q = _path_arg(args.p), _path_arg(args.q)
    d = dv.gamma(p, q, args.fuel)
    print(dv.pretty(d), file=out)
    _emit_cell(args, d, out)
    return EXIT_OK


def cmd_witness(args, out):
    cells = [parse_input(a) for a in args.args]
    if not cells:
        raise CompPathError("witness needs at least one argument")
    k = tower.dim(cells[0])
    if k == 0:
        raise CompPathError("witness takes paths or cells, not expressions")
    if any(tower.dim(c) != k for c in cells):
        raise CompPathError("witness arguments must all have the same dimension")
    if k == 1:
        cell = dv.witness2(args.kind, *cells)
    elif k == 2:
        cell = tower.witness3(args.kind, *cells)
    else:
        cell = tower.witnessN(k + 1, args.kind, *cells)
    _emit_cell(args, cell, out)
    return EXIT_OK


def cmd_contract(args, out):
    c1, c2 = parse_input(args.c1), parse_input(args.c2)
    if args.dim < 3:
        raise CompPathError("contract builds cells of dimension >= 3")
    if tower.dim(c1) != args.dim - 1 or tower.dim(c2) != args.dim - 1:
        raise CompPathError(f"contract {args.dim} takes two {args.dim - 1}-cells")
    cell = tower.chi(c1, c2)
    _emit_cell(args, cell, out)
    return EXIT_OK


_COHERENCE_ARITY = {"pentagon": 4, "triangle": 2, "interchange": 2}


def cmd_coherence(args, out):
    n = _COHERENCE_ARITY[args.kind]
    if len(args.args) != n:
        raise CompPathError(f"{args.kind} takes {n} arguments, got {len(args.args)}")
    cells = [parse_input(a) for a in args.args]
    cell = tower.coherence3(args.kind, *cells)
    _emit_cell(args, cell, out)
    return EXIT_OK


def cmd_verify(args, out):
    with open(args.file, encoding="utf-8") as fh:
        cell = cert_mod.verify_certificate(cert_mod.loads(fh.read()))
    print(f"ok: {_describe(cell)}" if tower.dim(cell) > 1 else "ok: path", file=out)
    return EXIT_OK


def cmd_globular(args, out):
    x = parse_input(args.file)
    ok = tower.globular_check(x)
    print("globular" if ok else "not globular", file=out)
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_fuzz(args, out):
    cfg = confluence.GenConfig(seed=args.seed, max_path_depth=args.depth)
    paths = confluence.gen_corpus(cfg, args.count)
    rep = confluence.check_corpus(paths, args.fuel, workers=args.workers)
    bad_paths = len({f["path"] for f in rep.failures})
    print(
        f"paths {rep.paths}  divergent pairs {rep.divergences}  joinable {rep.joinable}  "
        f"failing pairs {len(rep.failures)} (in {bad_paths} paths)  max steps {rep.max_steps}",
        file=out,
    )
    for p in list(dict.fromkeys(f["path"] for f in rep.failures))[: args.show]:
        print(f"  {show(p)}", file=out)
    _emit(args, {
        "corpus_seed": args.seed,
        "paths": rep.paths,
        "divergent_pairs": rep.divergences,
        "joinable": rep.joinable,
        "max_steps": rep.max_steps,
        "failures": [_failure_json(f) for f in rep.failures],
    })
    return EXIT_OK if not rep.failures else EXIT_DOMAIN


def _failure_json(f):
    out = {"path": show(f["path"])}
    for side in ("left", "right"):
        if side in f:
            pos, rule, nf = f[side]
            out[side] = {
                "pos": list(pos),
                "rule": str(rule),
                "nf": show(nf) if is_path(nf) else f"fuel exhausted after {nf.steps} steps",
            }
    if "fuel" in f:
        out["fuel"] = f["fuel"]
    return out


# -- argument parsing -------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="FILE", help="write a JSON result or certificate")
    common.add_argument("--fuel", type=int, default=DEFAULT_FUEL, help="rewrite step limit")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--depth", type=int, default=6)
    common.add_argument("--bound", type=int, default=None, help="search bound for the step graph")
    common.add_argument("--enable-rc", action="store_true", help="also use the RC_* rules")

    parser = argparse.ArgumentParser(prog="comppaths", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("normalize", cmd_normalize, "normalize a path and print the trace")
    sp.add_argument("path")
    sp = add("equiv", cmd_equiv, "decide rewrite equivalence of two paths")
    sp.add_argument("p")
    sp.add_argument("q")
    sp = add("canonical", cmd_canonical, "canonical derivation between equivalent paths")
    sp.add_argument("p")
    sp.add_argument("q")
    sp = add("witness", cmd_witness, "groupoid-law witness one dimension up")
    sp.add_argument("kind", choices=dv.WITNESS2_KINDS)
    sp.add_argument("args", nargs="+")
    sp = add("contract", cmd_contract, "contractibility cell between two parallel cells")
    sp.add_argument("dim", type=int)
    sp.add_argument("c1")
    sp.add_argument("c2")
    sp = add("coherence", cmd_coherence, "pentagon, triangle or interchange 3-cell")
    sp.add_argument("kind", choices=("pentagon", "triangle", "interchange"))
    sp.add_argument("args", nargs="+")
    sp = add("verify", cmd_verify, "re-check a certificate file")
    sp.add_argument("file")
    sp = add("fuzz-confluence", cmd_fuzz, "local-confluence check on random paths")
    sp.add_argument("--count", type=int, default=1000)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--show", type=int, default=5, help="counterexamples to print")
    sp = add("globular", cmd_globular, "check the globular identities of a cell")
    sp.add_argument("file")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        with use_rules(rules_for(args.enable_rc)):
            return args.func(args, out)
    except FuelExhausted as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FUEL
    except NotEquivalent:
        print("not equivalent", file=out)
        return EXIT_DOMAIN
    except (CompPathError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
