"""
Paths between lambda terms, and their normal forms
==================================================

A path records which conversions turn one term into another. This script
builds a three-step path, reads off its endpoints, then normalizes a few
redundant paths and prints the rewrite trace.
"""

from comppaths import endpoints, normalize, parse_path
from comppaths.path import show
from comppaths.expr import show as show_expr

# eta inside the argument, then two beta steps: (lam x. (lam y. y x) (lam w. z w)) v ~> z v
text = """
(trans
  (nu (xi x (mu (lam y (app (var y) (var x))) (eta (lam w (app (const z) (var w)))))) (const v))
  (trans
    (beta (app (lam x (app (lam y (app (var y) (var x))) (const z))) (const v)))
    (beta (app (lam y (app (var y) (const v))) (const z)))))
"""
s = parse_path(text)
a, b = endpoints(s)
print("source:", show_expr(a))
print("target:", show_expr(b))

# Redundant paths shrink under rewriting. Each trace line is position, rule, result.
for raw in [
    "(symm (symm (beta (app (lam x (var x)) (const a)))))",
    "(trans (beta (app (lam x (var x)) (const a))) (symm (beta (app (lam x (var x)) (const a)))))",
    "(symm (trans (refl (app (lam x (var x)) (const a))) (beta (app (lam x (var x)) (const a)))))",
]:
    res = normalize(parse_path(raw))
    print()
    print(raw)
    for st in res.trace.steps:
        print("  ", list(st.pos), st.rule, show(st.target))
    print("   nf:", show(res.nf))
