"""Rewriting on path terms: rule schemas, single steps, normalization, RwEq.

The shipped rules: unit, inverse and involution laws for symm/trans,
associativity, distribution of symm over trans, and pushing each of the
three congruence constructors through trans and symm. The
congruence-of-refl collapses (``RC_*``) are defined but left out of
``DEFAULT_RULES``.

Functions taking ``rules=None`` use the active rule set, which is
``DEFAULT_RULES`` unless changed with :func:`use_rules`.
"""

from __future__ import annotations

import contextlib
import contextvars
import enum
from dataclasses import dataclass
from typing import NamedTuple

from .errors import FuelExhausted, InvalidPosition, NoMatch
from .expr import App, Lam
from .path import (
    NuL, MuR, Refl, Symm, Trans, Xi, children, endpoints, replace_at, src, subpath,
    tgt, with_children,
)

DEFAULT_FUEL = 10_000


class RuleId(enum.Enum):
    SR = "SR"
    SS = "SS"
    TR = "TR"
    TSR = "TSR"
    TRR = "TRR"
    TLR = "TLR"
    TT = "TT"
    STSS = "STSS"
    TC_NU = "TC_NU"
    TC_MU = "TC_MU"
    TC_XI = "TC_XI"
    SC_NU = "SC_NU"
    SC_MU = "SC_MU"
    SC_XI = "SC_XI"
    RC_NU = "RC_NU"
    RC_MU = "RC_MU"
    RC_XI = "RC_XI"

    def __str__(self):
        return self.value


ALL_RULES = tuple(RuleId)
DEFAULT_RULES = ALL_RULES[:14]
RC_RULES = ALL_RULES[14:]


def rules_for(enable_rc=False):
    return ALL_RULES if enable_rc else DEFAULT_RULES


_ACTIVE = contextvars.ContextVar("comppaths_rules", default=DEFAULT_RULES)


def active_rules():
    return _ACTIVE.get()


def resolve_rules(rules):
    return _ACTIVE.get() if rules is None else tuple(rules)


@contextlib.contextmanager
def use_rules(rules):
    """Temporarily change the rule set used wherever ``rules`` is left as None."""
    token = _ACTIVE.set(tuple(rules))
    try:
        yield
    finally:
        _ACTIVE.reset(token)


def rewrite_here(rule, p):
    """Right-hand side of ``rule`` instantiated at ``p``, or None if the left side does not match."""
    match rule, p:
        case RuleId.SR, Symm(Refl(e)):
            return Refl(e)
        case RuleId.SS, Symm(Symm(r)):
            return r
        case RuleId.TR, Trans(r, Symm(r2)) if r == r2:
            return Refl(src(r))
        case RuleId.TSR, Trans(Symm(r), r2) if r == r2:
            return Refl(tgt(r))
        case RuleId.TRR, Trans(r, Refl()):
            return r
        case RuleId.TLR, Trans(Refl(), r):
            return r
        case RuleId.TT, Trans(Trans(r, s), t):
            return Trans(r, Trans(s, t))
        case RuleId.STSS, Symm(Trans(r, s)):
            return Trans(Symm(s), Symm(r))
        case RuleId.TC_NU, NuL(Trans(a, b), n):
            return Trans(NuL(a, n), NuL(b, n))
        case RuleId.TC_MU, MuR(m, Trans(a, b)):
            return Trans(MuR(m, a), MuR(m, b))
        case RuleId.TC_XI, Xi(x, Trans(a, b)):
            return Trans(Xi(x, a), Xi(x, b))
        case RuleId.SC_NU, NuL(Symm(a), n):
            return Symm(NuL(a, n))
        case RuleId.SC_MU, MuR(m, Symm(a)):
            return Symm(MuR(m, a))
        case RuleId.SC_XI, Xi(x, Symm(a)):
            return Symm(Xi(x, a))
        case RuleId.RC_NU, NuL(Refl(a), n):
            return Refl(App(a, n))
        case RuleId.RC_MU, MuR(m, Refl(a)):
            return Refl(App(m, a))
        case RuleId.RC_XI, Xi(x, Refl(a)):
            return Refl(Lam(x, a))
    return None


@dataclass(frozen=True, eq=False)
class StepWitness:
    """One rule application. Two witnesses are equal iff their source and target are."""

    source: object
    target: object
    pos: tuple
    rule: RuleId

    def __eq__(self, other):
        if not isinstance(other, StepWitness):
            return NotImplemented
        return self.source == other.source and self.target == other.target

    def __hash__(self):
        return hash((self.source, self.target))


@dataclass(frozen=True)
class Trace:
    start: object
    steps: tuple = ()

    @property
    def end(self):
        return self.steps[-1].target if self.steps else self.start

    def __len__(self):
        return len(self.steps)


class Normalized(NamedTuple):
    nf: object
    trace: Trace


def apply_rule(p, pos, rule):
    pos = tuple(pos)
    sub = subpath(p, pos)
    new = rewrite_here(rule, sub)
    if new is None:
        raise NoMatch(f"{rule} does not match at {list(pos)}")
    return replace_at(p, pos, new, check=False)


def step(p, pos, rule):
    """Apply ``rule`` and package the result as a StepWitness."""
    return StepWitness(p, apply_rule(p, pos, rule), tuple(pos), rule)


def one_step_reducts(p, rules=None):
    """Every single-step reduct, ordered by pre-order position then rule order."""
    rules = resolve_rules(rules)
    out = []
    _collect(p, (), rules, out, p)
    return out


def _collect(node, pos, rules, out, root):
    for rule in rules:
        new = rewrite_here(rule, node)
        if new is not None:
            out.append((pos, rule, replace_at(root, pos, new, check=False)))
    for k, c in enumerate(children(node)):
        _collect(c, pos + (k,), rules, out, root)


def _first_redex(node, rules):
    """Leftmost-outermost match as (pos, rule, rewritten subterm)."""
    for rule in rules:
        new = rewrite_here(rule, node)
        if new is not None:
            return (), rule, new
    for k, c in enumerate(children(node)):
        hit = _first_redex(c, rules)
        if hit is not None:
            pos, rule, new = hit
            return (k,) + pos, rule, new
    return None


def _rebuild(node, pos, new):
    if not pos:
        return new
    kids = list(children(node))
    kids[pos[0]] = _rebuild(kids[pos[0]], pos[1:], new)
    return with_children(node, kids)


def is_normal(p, rules=None):
    rules = resolve_rules(rules)
    return _first_redex(p, rules) is None


def normalize(p, fuel=DEFAULT_FUEL, rules=None):
    """Leftmost-outermost normalization; returns (normal form, trace)."""
    rules = resolve_rules(rules)
    steps = []
    cur = p
    while True:
        hit = _first_redex(cur, rules)
        if hit is None:
            return Normalized(cur, Trace(p, tuple(steps)))
        if len(steps) >= fuel:
            raise FuelExhausted(len(steps))
        pos, rule, new = hit
        nxt = _rebuild(cur, pos, new)
        steps.append(StepWitness(cur, nxt, pos, rule))
        cur = nxt


def reduce_with(p, choose, fuel=DEFAULT_FUEL, rules=None):
    """Normalize under an arbitrary strategy: ``choose`` picks one entry of the reduct list."""
    rules = resolve_rules(rules)
    steps = []
    cur = p
    while True:
        options = one_step_reducts(cur, rules)
        if not options:
            return Normalized(cur, Trace(p, tuple(steps)))
        if len(steps) >= fuel:
            raise FuelExhausted(len(steps))
        pos, rule, nxt = choose(options)
        steps.append(StepWitness(cur, nxt, pos, rule))
        cur = nxt


def rweq(p, q, fuel=DEFAULT_FUEL, rules=None):
    if endpoints(p) != endpoints(q):
        return False
    return normalize(p, fuel, rules).nf == normalize(q, fuel, rules).nf


def check_step(s, rules=None):
    """True iff ``s.rule`` is enabled and rewrites ``s.source`` at ``s.pos`` into ``s.target``."""
    if s.rule not in resolve_rules(rules):
        return False
    try:
        return apply_rule(s.source, s.pos, s.rule) == s.target
    except (NoMatch, InvalidPosition):
        return False
