"""
Cells above dimension two
=========================

Groupoid laws hold only up to a cell one dimension higher. Here we build
the associator, the pentagon and triangle 3-cells, and the contraction
cells that connect any two parallel cells from dimension 3 upward.
"""

from comppaths import parse_path, tower
from comppaths.path import show
from comppaths import derivation as dv

f = parse_path("(beta (app (lam x (var x)) (const a)))")
g = parse_path("(refl (const a))")
h = parse_path("(symm (beta (app (lam x (var x)) (const a))))")

alpha = dv.witness2("assoc", f, g, h)
src, tgt = dv.verify(alpha)
print("associator:", show(src), "=>", show(tgt))

for kind, args in [("pentagon", (f, g, h, f)), ("triangle", (f, h))]:
    cell = tower.coherence3(kind, *args)
    left, right = tower.verify3(cell)
    print(f"{kind}: sides of size {dv.size(left)} and {dv.size(right)}, globular {tower.globular_check(cell)}")

# Two different derivations from one path to its normal form, and the 3-cell joining them
p = parse_path("(trans (trans (refl (const a)) (refl (const a))) (refl (const a)))")
d1 = dv.delta(p)
assoc = dv.witness2("assoc", g, g, g)
d2 = dv.DComp(assoc, dv.delta(dv.d_tgt(assoc)))
c = tower.chi3(d1, d2)
print("chi3 boundary ok:", tower.verify3(c) == (d1, d2))

# and one level up, between c and a longer but parallel 3-cell
c2 = tower.compose(c, tower.identity(d2))
four = tower.chi(c, c2)
print("4-cell dimension", tower.dim(four), "globular", tower.globular_check(four))
