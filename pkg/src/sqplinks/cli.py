"""Command-line front end: analyze, obstruct, cyclic and tables."""

from __future__ import annotations

import argparse
import json
import sys

from .baskets import CyclicBasket, cyclic_congruence_check, cyclic_report, normalize_eps
from .braid_core import BraidSyntaxError, BraidWord, parse_braid, split_delta_power
from .invariants import (
    alexander_from_seifert,
    conway_from_seifert,
    is_definite_link,
    lspace_obstructed,
)
from .lattice import NotARootLattice, classify_root_lattice, definiteness, signature
from .seifert import DisconnectedSurfaceError, seifert_matrix, surface_data, symmetrize
from .tables import MAX_PQR, TABLE_NAMES, build_table
from .three_braids import classify_definite_3braid

EXIT_OK, EXIT_FLAGGED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _word(args) -> BraidWord:
    try:
        return parse_braid(args.word, args.strands)
    except (BraidSyntaxError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def analyze(w: BraidWord, max_n: int = 12) -> dict:
    data = surface_data(w)
    report: dict = {
        "input": {"strands": w.strands, "word": str(w)},
        "surface": {
            "letters": data.letter_count,
            "connected": data.connected,
            "betti": data.betti,
            "link_components": data.boundary_components,
        },
        "notes": [],
    }
    try:
        S = seifert_matrix(w)
    except DisconnectedSurfaceError as exc:
        report["notes"].append(f"no Seifert matrix: {exc}")
        return report
    form = symmetrize(S)
    delta_poly = alexander_from_seifert(S)
    quasipositive = w.is_positive() and split_delta_power(w, 1) is not None
    report["seifert_matrix"] = [list(r) for r in S.entries]
    report["surface_source"] = "quasipositive" if quasipositive else "diagram"
    report["alexander"] = delta_poly.format()
    try:
        report["conway"] = conway_from_seifert(S).format("z")
    except ArithmeticError:
        report["conway"] = None
    report["signature"] = signature(form)
    report["form"] = definiteness(form) if form.rank else "empty"
    report["definite_link"] = None
    report["lattice_class"] = None
    if w.is_positive() and data.connected:
        report["definite_link"] = is_definite_link(w)
    if report["form"] == "negative_definite" and quasipositive:
        try:
            report["lattice_class"] = str(classify_root_lattice(form))
        except NotARootLattice:
            report["notes"].append("definite, but the roots do not span the lattice")
    if w.strands == 3 and w.is_positive():
        try:
            verdict = classify_definite_3braid(w)
        except ValueError as exc:
            report["notes"].append(f"no 3-braid verdict: {exc}")
        else:
            report["three_braid_verdict"] = verdict.to_json()
            if report["lattice_class"] is None and verdict.lattice is not None:
                report["lattice_class"] = str(verdict.lattice)
    if delta_poly.is_zero():
        report["obstructions"] = None
        report["notes"].append("Alexander polynomial vanishes: root test does not apply")
    else:
        obs = [lspace_obstructed(delta_poly, n) for n in range(2, max_n + 1)]
        report["obstructions"] = {str(o.n): o.status for o in obs}
        report["least_obstructed_n"] = next((o.n for o in obs if o.obstructed), None)
    return report


def _print_analysis(r: dict):
    i = r["input"]
    s = r["surface"]
    print(f"braid        {i['word']} on {i['strands']} strands")
    print(f"surface      {s['letters']} bands, betti {s['betti']}, {s['link_components']} component(s)")
    if "alexander" in r:
        print(f"alexander    {r['alexander']}")
        print(f"conway       {r['conway'] if r['conway'] is not None else 'not computable'}")
        print(f"signature    {r['signature']}")
        print(f"form         {r['form']} ({r['surface_source']} surface)")
        if r["definite_link"] is not None:
            cls = f", {r['lattice_class']}" if r["lattice_class"] else ""
            print(f"definite     {'yes' if r['definite_link'] else 'no'}{cls}")
    if "three_braid_verdict" in r:
        v = r["three_braid_verdict"]
        rep = v["representative"]
        print(f"3-braid      {v['verdict']} (minimal rep k={rep['k']}, syllables {rep['syllables']}, tail {rep['tail']})")
    if r.get("obstructions") is not None:
        least = r["least_obstructed_n"]
        print("root test    " + ("never obstructed" if least is None else f"obstructed from n = {least}")
              + f" (n <= {max(map(int, r['obstructions']))})")
    for note in r["notes"]:
        print(f"note         {note}")


def cmd_analyze(args) -> int:
    w = _word(args)
    r = analyze(w, args.max_n)
    if args.json:
        print(json.dumps(r, indent=2))
    else:
        _print_analysis(r)
    return EXIT_OK


def cmd_obstruct(args) -> int:
    w = _word(args)
    if args.cover < 2:
        raise UsageError("--cover must be at least 2")
    try:
        o = lspace_obstructed(w, args.cover)
    except DisconnectedSurfaceError as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        print(json.dumps({"input": {"strands": w.strands, "word": str(w)}, **o.to_json()}, indent=2))
    else:
        line = f"n = {o.n}: {o.status.replace('_', ' ')}"
        print(line + (f" ({o.witness})" if o.witness else ""))
    return EXIT_FLAGGED if o.obstructed else EXIT_OK


def cmd_cyclic(args) -> int:
    try:
        if args.eps is not None:
            if args.m is not None or args.p is not None:
                raise UsageError("give either --eps or --m/--p")
            cb = CyclicBasket.parse(args.eps)
        else:
            if args.m is None or args.p is None:
                raise UsageError("need --m and --p, or --eps")
            cb = CyclicBasket.canonical(args.m, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = cyclic_report(cb.m, cb.p, args.max_n)
    out = rep.to_json()
    out["input"] = {"m": cb.m, "eps": str(cb), "normalized_eps": str(normalize_eps(cb))}
    out["congruence_check"] = cyclic_congruence_check(cb)
    if args.json:
        print(json.dumps(out, indent=2))
        return EXIT_OK
    print(f"basket       L(C_{cb.m}, {cb}) ~ eps {out['input']['normalized_eps']}, p = {rep.p}")
    print(f"lk           {rep.lk}")
    print(f"form         {rep.definiteness}" + (f", {rep.lattice_class}" if rep.lattice_class else ""))
    print(f"alexander    {rep.alexander.format()}")
    least = rep.obstructed_from_n
    print("root test    " + ("never obstructed" if least is None else f"obstructed from n = {least}")
          + f" (n <= {args.max_n})")
    print(f"congruence   -(S+S^T) ~ Q_{cb.m}: {'verified' if out['congruence_check'] else 'FAILED'}")
    for note in rep.notes:
        print(f"note         {note}")
    return EXIT_OK


def cmd_tables(args) -> int:
    names = TABLE_NAMES if args.name == "all" else (args.name,)
    if not 1 <= args.max_pqr <= MAX_PQR:
        raise UsageError(f"--max-pqr must lie in 1..{MAX_PQR} (the reference tables stop there)")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    results = [build_table(name, args.jobs, args.max_pqr) for name in names]
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        print("\n\n".join(r.format() for r in results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FLAGGED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqplinks", description="Invariants of strongly quasipositive braid closures."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_word(p):
        p.add_argument("word", help='braid word, e.g. "D^2 s1 a(1,3)^2"')
        p.add_argument("--strands", "-n", type=int, required=True)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("analyze", help="surface, polynomials, signature, form and root test")
    add_word(p)
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("obstruct", help="root-arc test for one cyclic branched cover")
    add_word(p)
    p.add_argument("--cover", type=int, required=True)
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("cyclic", help="cyclic basket report")
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--eps", help='sign string such as "+--"')
    p.add_argument("--max-n", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_cyclic)

    p = sub.add_parser("tables", help="regenerate a reference table and diff it")
    p.add_argument("name", choices=(*TABLE_NAMES, "all"))
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the b(p,q,r) tables")
    p.add_argument("--max-pqr", type=int, default=MAX_PQR, help="largest p, q, r in the b(p,q,r) tables")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_n", 2) < 2:
        parser.error("--max-n must be at least 2")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sqplinks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
