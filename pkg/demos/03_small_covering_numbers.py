#!/usr/bin/env python3
"""Covering numbers of small groups, solved exactly.

sigma0 covers the prime-power-order elements, sigma covers everything,
gamma0 covers the prime-power-order elements by whole conjugacy classes
of subgroups.  Cyclic p-groups admit no primary covering at all.
"""

from covernum.cover import gamma0_exact, sigma0_exact, sigma_exact
from covernum.families import PrimitiveCatalog
from covernum.permengine import load_corpus, symmetric_group, symmetric_maximal_subgroups

catalog = PrimitiveCatalog.default()
corpus = load_corpus()

print(f"{'group':8s} {'sigma0':>7s} {'sigma':>6s} {'gamma0':>7s}")
for name in ("S3", "S4", "A4", "D8", "D10", "D12", "Q8", "F20", "C6", "C12",
             "C3:C4", "S3xC3", "A5"):
    G = corpus[name]
    s0 = sigma0_exact(G)
    s = sigma_exact(G)
    g0 = gamma0_exact(G)
    fmt = lambda sol: "inf" if sol.is_infinite else str(sol.size)
    print(f"{name:8s} {fmt(s0):>7s} {fmt(s):>6s} {fmt(g0):>7s}")

print()
print("Symmetric groups, from the full maximal-subgroup lists:")
for n in (3, 4, 5, 6):
    G = symmetric_group(n)
    members = symmetric_maximal_subgroups(n, catalog=catalog)
    sol = sigma0_exact(G, maximal=members)
    print(f"  sigma0(S{n}) = {sol.size}  "
          f"(optimal, lower bound {sol.lower_bound}, {sol.nodes} nodes, "
          f"{len(members)} candidate subgroups)")
