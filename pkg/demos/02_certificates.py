#!/usr/bin/env python3
"""Unbeatability certificates for the set-stabilizer families.

For each admissible degree the stabilizers of n_2-sets partition the
designated odd class; the certificate compares every competing maximal
family against one of them, with exact counts where the formulas apply
and order bounds elsewhere.  Degrees 5 and 10 are genuinely beaten;
degree 7 is the curious tie.
"""

from covernum.families import PrimitiveCatalog, unbeatable_certificate

catalog = PrimitiveCatalog.default()

for n in (5, 7, 9, 10, 11, 13, 14, 18, 20, 40):
    cert = unbeatable_certificate(n, catalog=catalog)
    print(f"degree {n}: class {cert.target.parts}, "
          f"each stabilizer holds {cert.base_count}")
    for entry in sorted(cert.entries, key=lambda e: -e.ratio):
        if entry.count == 0:
            continue
        kind = "exact" if entry.exact else "bound"
        marker = ""
        if entry.ratio > 1 and entry.exact:
            marker = "  <-- beats the family"
        elif entry.ratio == 1 and entry.note != "same family":
            marker = "  <-- ties the family"
        print(f"    {entry.label:28s} {entry.count:>20} ({kind}){marker}")
    print(f"  verdict: {cert.verdict}"
          + (f" (by {cert.beaten_by})" if cert.beaten_by else "")
          + (f" (ties: {cert.tied_with})" if cert.tied_with else ""))
    if cert.assumed_inputs:
        print(f"  assumed: {sorted(set(cert.assumed_inputs))}")
    print()
