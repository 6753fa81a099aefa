"""
Probing the rewrite system for confluence
=========================================

Every divergence (two different one-step rewrites of the same path) should
rejoin at a common normal form. We check a random corpus with and without
the three RC_* rules, then show one peak that does not join.
"""

from comppaths.path import show
from comppaths.confluence import GenConfig, check_corpus, gen_corpus, local_confluence
from comppaths.sexpr import parse_path
from comppaths.trs import ALL_RULES, DEFAULT_RULES

corpus = gen_corpus(GenConfig(seed=1, max_path_depth=6), 2000)
for name, rules in [("shipped rules", DEFAULT_RULES), ("with RC rules", ALL_RULES)]:
    rep = check_corpus(corpus, rules=rules)
    bad = len({f["path"] for f in rep.failures})
    print(f"{name:14s} divergent pairs {rep.divergences:5d}  unjoined {len(rep.failures):4d}  "
          f"paths affected {bad}/{rep.paths}  longest normalization {rep.max_steps}")

# Congruence around a trivial path: SC_MU and SR lead apart.
p = parse_path("(mu (const f) (symm (refl (const a))))")
for fail in local_confluence(p).failures:
    for side in ("left", "right"):
        pos, rule, nf = fail[side]
        print(f"  {rule} at {list(pos)} -> {show(nf)}")
