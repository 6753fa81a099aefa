"""
Derivations between paths, shipped as certificates
===================================================

A derivation is a checked chain of rewrite steps between two parallel
paths. We build the canonical one, serialize it to JSON, tamper with it
and watch the checker refuse.
"""

import json

from comppaths import certificate, parse_path
from comppaths.path import show
from comppaths import derivation as dv
from comppaths.errors import IllFormed

p = parse_path("(trans (beta (app (lam x (var x)) (const a))) (refl (const a)))")
q = parse_path("(beta (app (lam x (var x)) (const a)))")

d = dv.gamma(p, q)
print(dv.pretty(d))
print("boundary:", *map(show, dv.verify(d)), sep="\n  ")

cert = certificate.make_certificate(d)
text = certificate.dumps(cert)
print(f"\ncertificate: {len(text)} bytes of JSON")
back = certificate.verify_certificate(json.loads(text))
print("re-verified:", back == d)

# claim a different source path
cert["src"] = {"path": "(symm " + cert["src"]["path"] + ")"}
try:
    certificate.verify_certificate(cert)
except IllFormed as err:
    print("tampered certificate rejected:", err)
