"""Batch command-line front end.

Subcommands: ``sigma0`` (covering numbers of a named group), ``verify``
(run one check or the whole battery), ``count`` (exact family-class
intersection counts), ``table`` (claimed values per degree).  All
numeric output is exact decimal text; machine formats never add
separators.  Exit codes: 0 all pass/skip, 1 at least one fail, 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .combinat import Partition, factorial
from . import cover, families, permengine, verify
from .cover import Budget
from .families import PrimitiveCatalog
from .permengine import load_corpus, symmetric_group, alternating_group

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def parse_budget(text):
    """``120s``/``10m``/``24h`` wall time, or a bare integer node count.

    The default is a small 60 s wall budget so the whole battery stays
    CI-friendly; heavy targets need an explicit budget.
    """
    if text is None:
        return Budget(max_seconds=60)
    text = text.strip()
    if text[-1:] in ("s", "m", "h"):
        mult = {"s": 1, "m": 60, "h": 3600}[text[-1]]
        return Budget(max_seconds=float(text[:-1]) * mult)
    return Budget(max_nodes=int(text))


def _group_by_ref(ref, corpus_path=None):
    ref = ref.strip()
    if ref[:1] in ("S", "A") and ref[1:].isdigit():
        n = int(ref[1:])
        if n > 8:
            raise ValueError(f"degree {n} too large for full enumeration")
        return symmetric_group(n) if ref[0] == "S" else alternating_group(n)
    corpus = load_corpus(corpus_path)
    if ref not in corpus:
        raise ValueError(f"unknown group {ref!r}; corpus has {sorted(corpus)}")
    return corpus[ref]


def _thousands(value, human):
    if human and isinstance(value, int):
        return f"{value:,}"
    return str(value)


def _emit(records, fmt, out):
    """records: list of dicts with identical keys (values already strings)."""
    if fmt == "jsonl":
        for rec in records:
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    elif fmt == "csv":
        if records:
            writer = csv.DictWriter(out, fieldnames=list(records[0]))
            writer.writeheader()
            writer.writerows(records)
    else:
        if not records:
            return
        keys = list(records[0])
        widths = [max(len(k), max(len(str(r[k])) for r in records)) for k in keys]
        out.write("  ".join(k.ljust(w) for k, w in zip(keys, widths)).rstrip() + "\n")
        for rec in records:
            out.write("  ".join(str(rec[k]).ljust(w)
                                for k, w in zip(keys, widths)).rstrip() + "\n")


def cmd_sigma0(args, out):
    budget = parse_budget(args.budget)
    budget.deterministic = args.det or budget.deterministic
    catalog = PrimitiveCatalog.from_file(args.catalog) if args.catalog \
        else PrimitiveCatalog.default()
    if args.cls:
        ref = args.group.strip()
        if not (ref[:1] == "S" and ref[1:].isdigit()):
            print("error: --class applies to full symmetric groups", file=sys.stderr)
            return EXIT_USAGE
        n = int(ref[1:])
        lam = Partition.parse(args.cls)
        if lam.n != n:
            print(f"error: class {args.cls} is not a partition of {n}",
                  file=sys.stderr)
            return EXIT_USAGE
        if n == 10 and lam.parts == (4, 4, 2):
            inst = verify.build_s10_instance(catalog)
            warm = [i for i, l in enumerate(inst.labels) if l == "X2"]
            sol = cover.solve_exact(inst, budget=budget, warm_start=warm)
        elif n <= 8:
            G = symmetric_group(n)
            members = permengine.symmetric_maximal_subgroups(n, catalog=catalog)
            universe = {t for t in G.elements
                        if permengine.Perm(t).cycle_type() == lam}
            inst = cover.build_group_instance(G, universe, maximal=members)
            sol = cover.solve_exact(inst, budget=budget)
        else:
            print("error: class covers are supported for degree <= 8 and "
                  "for 4,4,2 at degree 10", file=sys.stderr)
            return EXIT_USAGE
    else:
        try:
            G = _group_by_ref(args.group, args.corpus)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        mode = "catalog" if (factorial(G.degree) == G.order and G.degree >= 5) else "lattice"
        sol = (cover.sigma_exact if args.total else cover.sigma0_exact)(
            G, mode=mode, catalog=catalog, budget=budget)
    name = "sigma" if args.total else "sigma0"
    if sol.is_infinite:
        rec = {"group": args.group, name: "infinite", "status": sol.status}
    else:
        rec = {
            "group": args.group,
            name: str(sol.size),
            "status": sol.status,
            "lb": str(sol.lower_bound),
            "nodes": str(sol.nodes),
        }
    _emit([rec], args.format, out)
    return EXIT_OK


CHECK_RUNNERS = {
    "swap": lambda a, cat, corp, b: verify.check_lemma_swap(a.max or 40),
    "ab": lambda a, cat, corp, b: verify.check_lemma_ab(a.max or 60),
    "order-dominance": lambda a, cat, corp, b: verify.check_order_dominance(
        12, a.max or 60),
    "f-char": lambda a, cat, corp, b: verify.check_f_characterization(a.max or 500),
    "solvable": lambda a, cat, corp, b: verify.check_theorem_solvable(corp),
    "s5": lambda a, cat, corp, b: verify.check_s5(cat),
    "s6": lambda a, cat, corp, b: verify.check_s6(cat),
    "power2": lambda a, cat, corp, b: verify.check_power2(a.a or 3, cat),
    "unbeatable": lambda a, cat, corp, b: verify.check_unbeatable(a.n or 14, cat),
    "subsum": lambda a, cat, corp, b: verify.check_subsum(a.max or 6),
    "32a": lambda a, cat, corp, b: verify.check_32a(a.a or 2, catalog=cat),
    "s10": lambda a, cat, corp, b: verify.check_s10(budget=b, catalog=cat),
    "stirling": lambda a, cat, corp, b: verify.check_stirling(a.max or 200),
    "gamma0": lambda a, cat, corp, b: verify.check_gamma0(corp),
}


def cmd_verify(args, out):
    catalog = PrimitiveCatalog.from_file(args.catalog) if args.catalog \
        else PrimitiveCatalog.default()
    corpus = load_corpus(args.corpus)
    budget = parse_budget(args.budget)
    if args.check == "all":
        reports = verify.run_all(catalog=catalog, corpus=corpus,
                                 heavy=args.heavy, budget=budget)
    elif args.check in CHECK_RUNNERS:
        reports = [CHECK_RUNNERS[args.check](args, catalog, corpus, budget)]
    else:
        print(f"error: unknown check {args.check!r}; known: "
              f"{sorted(CHECK_RUNNERS) + ['all']}", file=sys.stderr)
        return EXIT_USAGE
    records = []
    for r in reports:
        obj = r.to_json_obj()
        if args.format == "jsonl":
            records.append(obj)
        else:
            records.append({
                "check": obj["check"],
                "params": json.dumps(obj["params"], sort_keys=True),
                "verdict": obj["verdict"],
                "reason": obj["reason"],
            })
    _emit(records, args.format, out)
    return EXIT_FAIL if any(r.verdict == "fail" for r in reports) else EXIT_OK


def cmd_count(args, out):
    lam = Partition.parse(args.cls)
    n = args.n or lam.n
    if lam.n != n:
        print(f"error: class {args.cls} is not a partition of {n}", file=sys.stderr)
        return EXIT_USAGE
    fam = args.family.strip()
    try:
        if fam.startswith("X"):
            value = families.intersect_setstab(lam, int(fam[1:]))
            rule = "set-stabilizer sub-multiset sum"
        elif fam.startswith("W"):
            d = int(fam[1:])
            if 2 * d == n:
                value = families.intersect_blockstab_half(lam)
                rule = "two-block swap formula"
            else:
                value = families.intersect_blockstab(lam, d)
                rule = "preserved-system double counting"
        elif fam in ("A", f"A{n}"):
            value = families.intersect_alt(lam)
            rule = "parity"
        else:
            print(f"error: unknown family {fam!r} (use Xm, Wd or A)", file=sys.stderr)
            return EXIT_USAGE
    except ValueError as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rec = {
        "n": str(n),
        "family": fam,
        "class": ",".join(str(p) for p in lam.parts),
        "count": _thousands(value, args.human and args.format == "table"),
        "rule": rule,
    }
    _emit([rec], args.format, out)
    return EXIT_OK


def cmd_table(args, out):
    n_max = args.max or 24
    try:
        rows = verify.reproduce_theorem_table(n_max)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    records = []
    human = args.human and args.format == "table"
    for row in rows:
        if row.kind == "exact":
            value = _thousands(row.value, human)
        else:
            c1, c2 = row.value
            value = f"[{_thousands(c1, human)}, {_thousands(c2, human)}]"
        records.append({
            "n": str(row.n),
            "kind": row.kind,
            "value": value,
            "certified_by": "+".join(row.certified_by),
        })
    _emit(records, args.format, out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="covernum",
        description="Exact covering numbers of finite groups and their checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--catalog", help="primitive catalog file")
        p.add_argument("--corpus", help="group corpus file")
        p.add_argument("--budget", help="wall time (60s/10m/24h) or node count")
        p.add_argument("--det", action="store_true", help="deterministic mode")
        p.add_argument("--format", choices=("table", "csv", "jsonl"),
                       default="table")
        p.add_argument("--human", action="store_true",
                       help="thousands separators in table output")

    p = sub.add_parser("sigma0", help="primary covering number of a group")
    p.add_argument("group", help="Sn, An, or a corpus name")
    p.add_argument("--total", action="store_true",
                   help="the plain covering number instead")
    p.add_argument("--class", dest="cls",
                   help="cover one conjugacy class only, e.g. 4,4,2")
    common(p)
    p.set_defaults(func=cmd_sigma0)

    p = sub.add_parser("verify", help="run one machine check or all")
    p.add_argument("check", help="check id or 'all'")
    p.add_argument("--max", type=int, help="range limit for scan checks")
    p.add_argument("--n", type=int, help="degree for unbeatable")
    p.add_argument("--a", type=int, help="exponent for power2/32a")
    p.add_argument("--heavy", action="store_true",
                   help="include element-level and solve-based targets")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="exact size of (family member) intersect (class)")
    p.add_argument("--n", type=int, help="degree (default: sum of the class)")
    p.add_argument("--family", required=True, help="Xm, Wd or A")
    p.add_argument("--class", dest="cls", required=True, help="e.g. 8,4,2")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="claimed values per degree")
    p.add_argument("--max", type=int, help="largest degree (<= 64)")
    common(p)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args, out)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
