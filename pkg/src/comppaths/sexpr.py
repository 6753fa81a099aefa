"""Reader for the s-expression syntax of expressions and paths.

Expressions::

    (var x) | (const c) | (lam x E) | (app E E)

Paths::

    (refl E) | (symm P) | (trans P P) | (beta E) | (eta E)
    (xi x P) | (nu P E) | (mu E P)

Printing lives next to the data types (``expr.show`` / ``path.show``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import SExprSyntaxError
from .expr import IDENT, App, Const, Lam, Var
from .path import Beta, Eta, MuR, NuL, Refl, Symm, Trans, Xi, validate

_TOKEN = re.compile(r"\s+|\(|\)|[^\s()]+")


@dataclass
class _Atom:
    text: str
    line: int
    col: int


@dataclass
class _List:
    items: list
    line: int
    col: int


def _tokens(text):
    line, col = 1, 1
    for m in _TOKEN.finditer(text):
        tok = m.group()
        if not tok.isspace():
            yield tok, line, col
        nl = tok.count("\n")
        if nl:
            line += nl
            col = len(tok) - tok.rfind("\n")
        else:
            col += len(tok)


def read(text):
    """Parse one s-expression into a nested tree of _List/_Atom nodes."""
    stack = []
    result = None
    end = (1, 1)
    for tok, line, col in _tokens(text):
        end = (line, col)
        if result is not None:
            raise SExprSyntaxError(f"unexpected trailing input {tok!r}", line, col)
        if tok == "(":
            stack.append(_List([], line, col))
        elif tok == ")":
            if not stack:
                raise SExprSyntaxError("unbalanced ')'", line, col)
            node = stack.pop()
            if stack:
                stack[-1].items.append(node)
            else:
                result = node
        else:
            atom = _Atom(tok, line, col)
            if stack:
                stack[-1].items.append(atom)
            else:
                result = atom
    if stack:
        raise SExprSyntaxError("missing ')'", *end)
    if result is None:
        raise SExprSyntaxError("empty input", *end)
    return result


def _head(node, what):
    if not isinstance(node, _List) or not node.items or not isinstance(node.items[0], _Atom):
        raise SExprSyntaxError(f"expected ({what} ...)", node.line, node.col)
    return node.items[0].text, node.items[1:]


def _ident(node):
    if not isinstance(node, _Atom) or not IDENT.match(node.text):
        raise SExprSyntaxError("expected an identifier", node.line, node.col)
    return node.text


def _arity(node, args, n):
    if len(args) != n:
        raise SExprSyntaxError(
            f"'{node.items[0].text}' takes {n} argument(s), got {len(args)}", node.line, node.col
        )


def _expr(node):
    head, args = _head(node, "var|const|lam|app")
    match head:
        case "var":
            _arity(node, args, 1)
            return Var(_ident(args[0]))
        case "const":
            _arity(node, args, 1)
            return Const(_ident(args[0]))
        case "lam":
            _arity(node, args, 2)
            return Lam(_ident(args[0]), _expr(args[1]))
        case "app":
            _arity(node, args, 2)
            return App(_expr(args[0]), _expr(args[1]))
    raise SExprSyntaxError(f"unknown expression form {head!r}", node.line, node.col)


def _path(node):
    head, args = _head(node, "refl|symm|trans|beta|eta|xi|nu|mu")
    match head:
        case "refl":
            _arity(node, args, 1)
            return Refl(_expr(args[0]))
        case "symm":
            _arity(node, args, 1)
            return Symm(_path(args[0]))
        case "trans":
            _arity(node, args, 2)
            return Trans(_path(args[0]), _path(args[1]))
        case "beta":
            _arity(node, args, 1)
            return Beta(_expr(args[0]))
        case "eta":
            _arity(node, args, 1)
            return Eta(_expr(args[0]))
        case "xi":
            _arity(node, args, 2)
            return Xi(_ident(args[0]), _path(args[1]))
        case "nu":
            _arity(node, args, 2)
            return NuL(_path(args[0]), _expr(args[1]))
        case "mu":
            _arity(node, args, 2)
            return MuR(_expr(args[0]), _path(args[1]))
    raise SExprSyntaxError(f"unknown path form {head!r}", node.line, node.col)


def parse_expr(text):
    return _expr(read(text))


def parse_path(text, check=True):
    """Parse a path; with ``check`` on, ill-formed chaining raises IllFormed."""
    p = _path(read(text))
    if check:
        validate(p)
    return p


def parse_any(text):
    """Expression or path, decided by the head symbol."""
    node = read(text)
    head, _ = _head(node, "form")
    if head in ("var", "const", "lam", "app"):
        return _expr(node)
    p = _path(node)
    validate(p)
    return p
