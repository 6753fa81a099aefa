"""Computational paths over untyped lambda terms.

Paths are explicit equality witnesses built from beta/eta steps, symmetry,
transitivity and congruences. A rewrite system on paths decides rewrite
equivalence through normal forms, and derivations between paths, cells
between derivations and so on up the tower carry the groupoid structure
as checkable data.

Submodules: ``expr``, ``path``, ``sexpr``, ``trs``, ``derivation``,
``tower``, ``confluence``, ``certificate``, ``cli``.
"""

from .errors import (
    BadBoundary, BadChain, BadStep, CompPathError, FuelExhausted, IllFormed, InvalidPosition,
    NoMatch, NotARedex, NotEquivalent, NotParallel, SExprSyntaxError,
)
from .expr import App, Const, Lam, Var, alpha_eq
from .path import Beta, Eta, MuR, NuL, Refl, Symm, Trans, Xi, endpoints, validate
from .sexpr import parse_expr, parse_path
from .trs import DEFAULT_RULES, RuleId, apply_rule, normalize, rweq, use_rules

__version__ = "0.1.0"

__all__ = [
    "App", "Const", "Lam", "Var", "alpha_eq",
    "Beta", "Eta", "MuR", "NuL", "Refl", "Symm", "Trans", "Xi", "endpoints", "validate",
    "parse_expr", "parse_path",
    "DEFAULT_RULES", "RuleId", "apply_rule", "normalize", "rweq", "use_rules",
    "CompPathError", "NotARedex", "IllFormed", "InvalidPosition", "NoMatch", "FuelExhausted",
    "NotEquivalent", "NotParallel", "BadStep", "BadChain", "BadBoundary", "SExprSyntaxError",
]
