"""Untyped lambda terms with constants.

These are the points (0-cells) that computational paths connect. Equality
and hashing of ``Expr`` values are alpha-equivalence: two terms compare
equal iff their de Bruijn forms coincide. Use :func:`same_syntax` when the
bound names matter too (printer round trips, for instance).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .errors import InvalidPosition, NotARedex

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_']*\Z")


def _check_ident(name):
    if not isinstance(name, str) or not name:
        raise ValueError(f"identifier must be a non-empty string, got {name!r}")
    if not IDENT.match(name):
        raise ValueError(f"bad identifier {name!r}")


class _Term:
    __slots__ = ()

    def __eq__(self, other):
        if not isinstance(other, _Term):
            return NotImplemented
        return self is other or self.key == other.key

    def __hash__(self):
        return self._hash

    @cached_property
    def _hash(self):
        return hash(self.key)

    def __str__(self):
        return show(self)


@dataclass(frozen=True, eq=False)
class Var(_Term):
    name: str

    def __post_init__(self):
        _check_ident(self.name)

    @cached_property
    def key(self):
        return ("f", self.name)

    @cached_property
    def free_vars(self):
        return frozenset((self.name,))


@dataclass(frozen=True, eq=False)
class Const(_Term):
    name: str

    def __post_init__(self):
        _check_ident(self.name)

    @cached_property
    def key(self):
        return ("c", self.name)

    @cached_property
    def free_vars(self):
        return frozenset()


@dataclass(frozen=True, eq=False)
class Lam(_Term):
    binder: str
    body: "Expr"

    def __post_init__(self):
        _check_ident(self.binder)

    @cached_property
    def key(self):
        return debruijn(self)

    @cached_property
    def free_vars(self):
        return self.body.free_vars - {self.binder}


@dataclass(frozen=True, eq=False)
class App(_Term):
    fun: "Expr"
    arg: "Expr"

    @cached_property
    def key(self):
        return ("a", self.fun.key, self.arg.key)

    @cached_property
    def free_vars(self):
        return self.fun.free_vars | self.arg.free_vars


Expr = Union[Var, Const, Lam, App]


def debruijn(e, env=()):
    """Nameless form of ``e``: bound variables become indices, free ones keep names."""
    match e:
        case Var(name):
            if name in env:
                return ("b", env.index(name))
            return ("f", name)
        case Const(name):
            return ("c", name)
        case Lam(x, body):
            return ("l", debruijn(body, (x,) + env))
        case App(f, a):
            return ("a", debruijn(f, env), debruijn(a, env))
    raise TypeError(f"not an expression: {e!r}")


def alpha_eq(a, b):
    return a.key == b.key


def same_syntax(a, b):
    """Exact syntactic identity, bound names included."""
    match a, b:
        case Var(x), Var(y):
            return x == y
        case Const(x), Const(y):
            return x == y
        case Lam(x, m), Lam(y, n):
            return x == y and same_syntax(m, n)
        case App(f, s), App(g, t):
            return same_syntax(f, g) and same_syntax(s, t)
    return False


def fresh(base, avoid):
    """First ``base<n>`` (n = 1, 2, ...) not in ``avoid``."""
    stem = base.rstrip("0123456789'") or "x"
    n = 1
    while f"{stem}{n}" in avoid:
        n += 1
    return f"{stem}{n}"


def all_names(e):
    match e:
        case Var(x) | Const(x):
            return {x}
        case Lam(x, body):
            return {x} | all_names(body)
        case App(f, a):
            return all_names(f) | all_names(a)


def subst(body, var, value):
    """Capture-avoiding ``body[value/var]``."""
    if var not in body.free_vars:
        return body
    match body:
        case Var(_):
            return value
        case App(f, a):
            return App(subst(f, var, value), subst(a, var, value))
        case Lam(y, inner):
            if y in value.free_vars:
                z = fresh(y, value.free_vars | inner.free_vars | {var})
                inner = subst(inner, y, Var(z))
                y = z
            return Lam(y, subst(inner, var, value))
    return body


def is_beta_redex(e):
    return isinstance(e, App) and isinstance(e.fun, Lam)


def is_eta_redex(e):
    return (
        isinstance(e, Lam)
        and isinstance(e.body, App)
        and isinstance(e.body.arg, Var)
        and e.body.arg.name == e.binder
        and e.binder not in e.body.fun.free_vars
    )


def beta_contract(e):
    if not is_beta_redex(e):
        raise NotARedex(f"not a beta-redex: {show(e)}")
    return subst(e.fun.body, e.fun.binder, e.arg)


def eta_contract(e):
    if not is_eta_redex(e):
        raise NotARedex(f"not an eta-redex: {show(e)}")
    return e.body.fun


# Positions inside expressions are tuples of "fun" / "arg" / "body".

def subexpr(e, pos):
    for i, sel in enumerate(pos):
        match sel, e:
            case "fun", App(f, _):
                e = f
            case "arg", App(_, a):
                e = a
            case "body", Lam(_, b):
                e = b
            case _:
                raise InvalidPosition(pos[: i + 1])
    return e


def replace_subexpr(e, pos, sub):
    if not pos:
        return sub
    head, rest = pos[0], pos[1:]
    match head, e:
        case "fun", App(f, a):
            return App(replace_subexpr(f, rest, sub), a)
        case "arg", App(f, a):
            return App(f, replace_subexpr(a, rest, sub))
        case "body", Lam(x, b):
            return Lam(x, replace_subexpr(b, rest, sub))
    raise InvalidPosition(pos)


def expr_positions(e, prefix=()):
    yield prefix
    match e:
        case App(f, a):
            yield from expr_positions(f, prefix + ("fun",))
            yield from expr_positions(a, prefix + ("arg",))
        case Lam(_, b):
            yield from expr_positions(b, prefix + ("body",))


def size(e):
    match e:
        case App(f, a):
            return 1 + size(f) + size(a)
        case Lam(_, b):
            return 1 + size(b)
    return 1


def show(e):
    """S-expression text, e.g. ``(app (lam x (var x)) (const v))``."""
    match e:
        case Var(x):
            return f"(var {x})"
        case Const(c):
            return f"(const {c})"
        case Lam(x, b):
            return f"(lam {x} {show(b)})"
        case App(f, a):
            return f"(app {show(f)} {show(a)})"
    raise TypeError(f"not an expression: {e!r}")


def pretty(e):
    """Conventional lambda notation; constants and variables print bare."""
    match e:
        case Var(x) | Const(x):
            return x
        case Lam(x, b):
            return f"λ{x}.{pretty(b)}"
        case App(f, a):
            left = f"({pretty(f)})" if isinstance(f, Lam) else pretty(f)
            right = pretty(a) if isinstance(a, (Var, Const)) else f"({pretty(a)})"
            return f"{left} {right}"
