"""Command line surface.

Every subcommand is a reproducible run: output depends only on the
arguments (and the seed, where sampling is involved), so identical
configurations produce byte-identical JSON.  Exit codes: 0 on success,
1 on an assertion failure (the failing witness is printed), 2 when a
resource cap is exceeded (a structured record is printed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import acceptance
from . import homology as hm
from . import labeling as lb
from . import partitions as pt
from . import straighten as st
from . import trees as tr
from .errors import ResourceCapError

DEFAULT_SEED = 20260823


def _dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def _check_max_elements(P, cap):
    if cap is not None and len(P.elements) > cap:
        raise ResourceCapError(f"poset with {len(P.elements)} elements", cap)


def _emit(args, text_fn, json_obj, csv_fn=None, dot_fn=None):
    if args.format == "json":
        print(_dumps(json_obj))
    elif args.format == "csv":
        if csv_fn is None:
            raise ValueError(f"csv output is not defined for this command")
        print(csv_fn(), end="")
    elif args.format == "dot":
        if dot_fn is None:
            raise ValueError(f"dot output is not defined for this command")
        print(dot_fn())
    else:
        text_fn()
    return 0


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_invariants(args):
    P = pt.build_poset(args.n, args.variant)
    _check_max_elements(P, args.max_elements)
    rep = pt.json_report(args.n, args.variant)

    def text():
        print(f"poset: n={args.n} variant={args.variant} "
              f"({len(P.elements)} elements)")
        print(f"rank sizes:      {rep['rank_sizes']}")
        print(f"mu poly:         {rep['mu_poly']}")
        print(f"char poly:       {pt.poly_str(rep['char_poly'])}"
              if rep["char_poly"] else "char poly:       (augmented: none)")
        print(f"whitney first:   {rep['whitney_first']}")
        print(f"whitney second:  {rep['whitney_second']}")

    return _emit(args, text, rep, dot_fn=lambda: pt.to_dot(P))


def cmd_el_verify(args):
    P = pt.build_poset(args.n, pt.AUGMENTED)
    _check_max_elements(P, args.max_elements)
    rep = lb.verify_el(args.n)
    if not rep["passed"]:
        print(f"EL verification failed at n={args.n}; first violations:")
        for v in rep["violations"][:5]:
            print(f"  {v}")
        return 1
    summary = {"n": args.n, "passed": True, "intervals": rep["intervals"]}

    def text():
        print(f"EL verification passed at n={args.n}: "
              f"{rep['intervals']} intervals checked")

    return _emit(args, text, summary,
                 csv_fn=lambda: lb.report_csv(args.n),
                 dot_fn=lambda: lb.labeled_dot(args.n))


def cmd_homology(args):
    if args.i is not None:
        host = hm.open_interval(args.n, args.i)
    else:
        host = hm.proper_part(args.n)
    if args.max_elements is not None and len(host.elements) > args.max_elements:
        raise ResourceCapError(
            f"open poset with {len(host.elements)} elements", args.max_elements)
    rep = hm.homology_report(host)
    rep.pop("runtime_ms", None)

    def text():
        print(f"poset: {rep['poset_id']}")
        print(f"chain counts by dim: {rep['dims']}")
        print(f"reduced Betti:       {rep['betti']}")
        torsion = {r: v for r, v in rep["torsion_top"].items() if v}
        print(f"torsion (top maps):  {torsion or 'none'}")

    def as_csv():
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["dim", "chains", "betti"])
        for r in sorted(rep["betti"], key=int):
            w.writerow([r, rep["dims"].get(r, 0), rep["betti"][r]])
        return buf.getvalue()

    return _emit(args, text, rep, csv_fn=as_csv)


def cmd_bases(args):
    if args.side == "full":
        rep = st.verify_bases(args.n, full=True)
        if not rep["passed"]:
            print(f"basis verification failed: {_dumps(rep)}")
            return 1
        return _emit(args, lambda: print(_dumps(rep)), rep)
    if args.i is None:
        raise ValueError("bases needs --i (or --side full)")
    if args.family == "tree":
        rep = st.verify_bases(args.n, args.i, liu_pairing=True)
        if not rep["passed"]:
            print(f"basis verification failed: {_dumps(rep)}")
            return 1
        return _emit(args, lambda: print(_dumps(rep)), rep)
    fam = tr.enumerate_family(args.family, args.n, args.i)
    vectors = [hm.chain_vector_of_tree(t) for t in fam]
    rank, betti = hm.rank_in_top_quotient(hm.open_interval(args.n, args.i),
                                          vectors)
    out = {"count": len(fam), "full_rank": rank == betti == len(fam)}
    if not out["full_rank"]:
        print(f"family {args.family} at n={args.n} i={args.i}: "
              f"rank {rank} of {len(fam)} vectors, Betti {betti}")
        return 1

    def text():
        print(f"family {args.family}, n={args.n} i={args.i}: "
              f"{out['count']} cochains, full rank {rank} = Betti {betti}")

    return _emit(args, text, out)


def cmd_straighten(args):
    rng = random.Random(args.seed)
    pool = tr.enumerate_bicolored(args.n, args.i)
    t = rng.choice(pool)
    trace = []
    out = (st.straighten_full_poset(t, trace=trace) if args.side == "full"
           else st.straighten(t, args.side, trace=trace))
    rep = {
        "n": args.n,
        "seed": args.seed,
        "side": args.side,
        "input": tr.tree_to_bracket(t),
        "terms": {tr.tree_to_bracket(c): x for c, x in out.terms.items()},
    }

    def text():
        print(f"input (seed {args.seed}): {rep['input']}")
        for line in trace:
            print(f"  {line}")
        print("output:")
        for b, x in rep["terms"].items():
            print(f"  {x:+d} * {b}")

    return _emit(args, text, rep)


def cmd_psi(args):
    rows = []
    for T in tr.enumerate_rooted_trees(range(1, args.n + 1), args.i):
        t = tr.psi(T)
        if tr.psi_inverse(t) != T:
            print(f"psi round trip failed on {T!r}")
            return 1
        rows.append({
            "root": T.root,
            "parent_map": " ".join(f"{c}>{p}" for c, p in T.parent),
            "descents": T.descent_count(),
            "psi": tr.tree_to_bracket(t),
        })
    rep = {"n": args.n, "i": args.i, "count": len(rows), "rows": rows}

    def text():
        for r in rows:
            print(f"root {r['root']}  [{r['parent_map']}]  "
                  f"descents {r['descents']}  ->  {r['psi']}")
        print(f"{len(rows)} trees, bijection verified")

    def as_csv():
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["root", "parent_map",
                                            "descents", "psi"])
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()

    return _emit(args, text, rep, csv_fn=as_csv)


def cmd_whitney(args):
    first, second = pt.whitney_numbers(args.n)
    ranks = hm.whitney_cohomology_ranks(args.n)
    rep = {"n": args.n, "whitney_first": first, "whitney_second": second,
           "cohomology_ranks": ranks, "cohomology_total": sum(ranks)}

    def text():
        print(f"whitney first:      {first}")
        print(f"whitney second:     {second}")
        print(f"cohomology ranks:   {ranks} (total {sum(ranks)})")

    return _emit(args, text, rep)


def _run_criterion(pair):
    k, nmax = pair
    return (k,) + acceptance.ALL_CRITERIA[k - 1](nmax)


def cmd_report_all(args):
    nmax = args.n
    ids = list(range(1, len(acceptance.ALL_CRITERIA) + 1))
    if args.jobs and args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            raw = list(pool.map(_run_criterion, [(k, nmax) for k in ids]))
        results = [{"criterion": k, "name": name, "ok": ok, "detail": detail}
                   for k, name, ok, detail in raw]
        ok_all = all(r["ok"] for r in results)
        if args.format != "json":
            for r in results:
                print(f"[{'PASS' if r['ok'] else 'FAIL'}] "
                      f"criterion {r['criterion']:2d}: {r['name']} "
                      f"({r['detail']})")
    else:
        emit = (lambda line: None) if args.format == "json" else print
        ok_all, results = acceptance.run_all(nmax, emit=emit)
    if args.format == "json":
        print(_dumps({"n": nmax, "passed": ok_all, "criteria": results}))
    elif not ok_all:
        print("FAILED")
    else:
        print(f"all {len(results)} criteria passed at n <= {nmax}")
    return 0 if ok_all else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="wpposet",
        description="Exact invariants, homology and bases of the weighted "
                    "partition poset.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--i", type=int, default=None)
        p.add_argument("--variant", default=pt.WEIGHTED,
                       choices=[pt.WEIGHTED, pt.POINTED, pt.AUGMENTED])
        p.add_argument("--family", default="comb",
                       choices=["comb", "lyndon", "liu", "tree"])
        p.add_argument("--side", default=st.COHOMOLOGY,
                       choices=[st.COHOMOLOGY, st.LIE2, "full"])
        p.add_argument("--format", default="text",
                       choices=["text", "json", "csv", "dot"])
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--max-elements", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(fn=fn)
        return p

    add("invariants", cmd_invariants,
        "rank sizes, Mobius, characteristic and Whitney invariants")
    add("el-verify", cmd_el_verify,
        "verify the edge labeling is an EL-labeling")
    add("homology", cmd_homology,
        "integral homology of (0,[n]^i), or of the proper part without --i")
    add("bases", cmd_bases,
        "cardinality / full-rank verification of a cochain family")
    add("straighten", cmd_straighten,
        "straighten a seeded random tree onto the comb basis")
    add("psi", cmd_psi,
        "the bijection from rooted trees to bicolored Lyndon-type trees")
    add("whitney", cmd_whitney,
        "Whitney numbers and Whitney cohomology ranks")
    add("report-all", cmd_report_all,
        "run the full acceptance suite with every size capped at n")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ResourceCapError as exc:
        print(_dumps({"error": "resource-cap", "what": exc.what,
                      "limit": exc.limit}))
        return 2
    except AssertionError as exc:
        print(f"assertion failed: {exc}")
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
