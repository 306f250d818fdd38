"""Command-line entry point.

Every subcommand prints JSON on stdout (or SVG when asked); --pretty swaps
in the bottom-justified pile and tableau layouts.  Exit status: 0 on
success, 1 on invalid input, 2 on usage errors (argparse's own code).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence

from . import enumeration as en
from . import games, geometry, patience, patterns, tableaux
from .config import VerifyConfig
from .lis import lis_length, lis_table, row_bump_trace
from .perm_core import CapError, ParseError, format_permutation, parse_permutation
from .verify import run_verify


class InputError(ValueError):
    pass


def _dump(obj) -> str:
    return json.dumps(obj)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"bad JSON: {e}") from None


# -- subcommands -----------------------------------------------------------

def cmd_lis(args) -> str:
    p = parse_permutation(args.perm)
    word, pos = row_bump_trace(p)
    out = {"perm": format_permutation(p), "table": lis_table(p), "length": lis_length(p),
           "bump_word": word, "positions": pos}
    if args.pretty:
        return "\n".join([f"perm   {out['perm']}", "L      " + " ".join(map(str, out["table"])),
                          f"length {out['length']}"])
    return _dump(out)


def cmd_sort(args) -> str:
    p = parse_permutation(args.perm)
    R = patience.patience_sort(p)
    if args.pretty:
        return R.pretty()
    return _dump({"piles": R.to_json(), "rpw": list(patience.rpw(R)),
                  "shape": list(patience.shape(R).parts)})


def _pair_from_json(obj) -> patience.StablePair:
    if not isinstance(obj, dict) or "R" not in obj or "S" not in obj:
        raise InputError('expected {"R": [...], "S": [...]}')
    pair = patience.StablePair(patience.PileConfiguration.of(obj["R"]),
                               patience.RecordingPiles.of(obj["S"]))
    pair.validate()
    return pair


def cmd_xps(args) -> str:
    if args.inverse is not None:
        p = patience.xps_inverse(_pair_from_json(_load_json(args.inverse)))
        return _dump({"perm": format_permutation(p)})
    if args.perm is None:
        raise InputError("give a permutation or --inverse JSON")
    pair = patience.extended_patience_sort(parse_permutation(args.perm))
    if args.pretty:
        return f"R\n{pair.R.pretty()}\n\nS\n{pair.S.pretty()}"
    return _dump(pair.to_json())


def _tableau(obj) -> tableaux.StandardYoungTableau:
    rows = obj["rows"] if isinstance(obj, dict) else obj
    return tableaux.StandardYoungTableau.of(rows)


def cmd_rsk(args) -> str:
    if args.inverse is not None:
        obj = _load_json(args.inverse)
        if not isinstance(obj, dict) or "P" not in obj or "Q" not in obj:
            raise InputError('expected {"P": [[...]], "Q": [[...]]}')
        p = tableaux.rsk_inverse(_tableau(obj["P"]), _tableau(obj["Q"]))
        return _dump({"perm": format_permutation(p)})
    if args.perm is None:
        raise InputError("give a permutation or --inverse JSON")
    P, Q = tableaux.rsk(parse_permutation(args.perm))
    if args.pretty:
        return f"P\n{P.pretty()}\n\nQ\n{Q.pretty()}"
    return _dump({"P": P.to_json()["rows"], "Q": Q.to_json()["rows"], "shape": list(P.shape)})


def cmd_avoid(args) -> str:
    specs = patterns.parse_pattern_list(args.patterns)
    names = [s.text() for s in specs]
    if args.perm is not None:
        p = parse_permutation(args.perm)
        return _dump({"perm": format_permutation(p), "patterns": names, "avoids": patterns.avoids(p, specs)})
    if args.n is None:
        raise InputError("give --n or --perm")
    found = sorted(patterns.avoidance_set(args.n, specs, allow_large=args.allow_large))
    out = {"n": args.n, "patterns": names, "count": len(found)}
    if not args.count:
        out["perms"] = [format_permutation(p) for p in found]
    return _dump(out)


def cmd_enumerate(args) -> str:
    n, t = args.n, args.table
    if n < 0:
        raise InputError("--n must be non-negative")
    if t == "f":
        rows = en.f_sequence(n)
    elif t == "bell":
        rows = [en.bell(k) for k in range(n + 1)]
    elif t == "fib":
        rows = [en.fib(k) for k in range(n + 1)]
    elif t == "matrix":
        rows = en.matrix_A(n + 1)
    elif t == "inverse":
        rows = en.neumann_inverse(en.matrix_A(n + 1))
    else:
        tab = en.f_table(n)
        rows = [tab.row(k) for k in range(n + 1)]
    if args.pretty:
        if rows and isinstance(rows[0], list):
            return "\n".join(" ".join(map(str, r)) for r in rows)
        return ",".join(map(str, rows))
    return _dump({"table": t, "n": n, "rows": rows})


def cmd_geometry(args) -> str:
    p = parse_permutation(args.perm)
    diagrams = geometry.ne_iterates(p) if args.kind == "ne" else geometry.sw_iterates(p)
    if args.iterates != "all":
        try:
            k = int(args.iterates)
        except ValueError:
            raise InputError("--iterates takes 'all' or an integer") from None
        if not 0 <= k < len(diagrams):
            raise InputError(f"iterate {k} out of range 0..{len(diagrams) - 1}")
        diagrams = diagrams[k:k + 1]
    if args.svg:
        marks = [q for d in diagrams for q in d.salient_points()]
        svg = geometry.render_svg(diagrams, marks)
        if args.svg == "-":
            return svg
        with open(args.svg, "w") as fh:
            fh.write(svg)
    out = {"perm": format_permutation(p), "kind": args.kind}
    if args.report == "crossings":
        if args.kind != "sw":
            raise InputError("crossings are reported for sw diagrams only")
        keep = {d.iterate for d in diagrams}
        recs = [r for r in geometry.classify_crossings(p).records if r.iterate in keep]
        out["crossings"] = [r.__dict__.copy() for r in recs]
    elif args.report == "salient":
        out["salient"] = [{"iterate": d.iterate, "points": [list(q) for q in d.salient_points()]}
                          for d in diagrams]
    else:
        out["diagrams"] = [d.to_json() for d in diagrams]
    if args.kind == "ne" and args.iterates == "all":
        P, Q = geometry.geometric_rsk(p)
        out["P"], out["Q"] = P.to_json()["rows"], Q.to_json()["rows"]
    elif args.kind == "sw" and args.iterates == "all":
        out.update(geometry.geometric_ps(p).to_json())
    return _dump(out)


def _token_piles(piles) -> List[List[str]]:
    return [[games.format_token(t) for t in pile] for pile in piles]


def _pretty_columns(piles) -> str:
    # same layout as PileConfiguration.pretty, for string tokens
    w = max((len(t) for p in piles for t in p), default=1)
    h = max((len(p) for p in piles), default=0)
    return "\n".join(" ".join(p[r].rjust(w) if len(p) > r else " " * w for p in piles).rstrip()
                     for r in range(h - 1, -1, -1))


def cmd_game(args) -> str:
    tcps = args.strategy in games.TCPS_STRATEGIES
    play = games.TCPS_STRATEGIES[args.strategy] if tcps else games.STRATEGIES[args.strategy]
    if args.deck is not None:
        if tcps:
            w = games.parse_two_permutation(args.deck)
            tr = play(w)
            if args.pretty:
                return _pretty_columns(_token_piles(tr.piles))
            return _dump({"strategy": args.strategy, "piles": _token_piles(tr.piles),
                          "count": tr.pile_count,
                          "lower_bound": games.weakly_increasing_lis([t[0] for t in w])})
        p = parse_permutation(args.deck)
        tr = play(p)
        if args.pretty:
            return patience.PileConfiguration(tuple(tuple(x) for x in tr.piles)).pretty()
        return _dump({"strategy": args.strategy, "piles": tr.piles, "count": tr.pile_count,
                      "lis": lis_length(p)})
    if args.random is None:
        raise InputError("give --deck or --random")
    if args.random < 0 or args.trials < 1:
        raise InputError("--random must be >= 0 and --trials >= 1")
    rng = random.Random(args.seed)
    counts = []
    matched = 0
    for _ in range(args.trials):
        if tcps:
            w = games.random_two_permutation(args.random, rng)
            c = play(w).pile_count
            matched += c == games.weakly_increasing_lis([t[0] for t in w])
        else:
            d = list(range(1, args.random + 1))
            rng.shuffle(d)
            c = play(d).pile_count
            matched += c == lis_length(d)
        counts.append(c)
    key = "equals_lower_bound" if tcps else "equals_lis"
    return _dump({"strategy": args.strategy, "n": args.random, "trials": args.trials, "seed": args.seed,
                  "min": min(counts), "max": max(counts), "mean": sum(counts) / len(counts), key: matched})


def cmd_verify(args) -> int:
    cfg = VerifyConfig(max_n=args.max_n, seed=args.seed)
    report = run_verify(cfg, workers=args.workers)
    if args.pretty:
        for r in report.records:
            line = f"{r.status.upper():4}  {r.name:24} {r.n_range:12} checked={r.checked:<8} {r.elapsed:.2f}s"
            print(line + (f"  {r.detail}" if r.detail else ""))
    else:
        print(_dump(report.to_json()))
    return 0 if report.ok else 1


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="patiencesort", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--pretty", action="store_true", help="human-readable layout")
        return sp

    sp = add("lis", "longest increasing subsequence table and length")
    sp.add_argument("perm")
    sp = add("sort", "Patience Sorting piles")
    sp.add_argument("perm")
    sp = add("xps", "Extended Patience Sorting (or its inverse)")
    sp.add_argument("perm", nargs="?")
    sp.add_argument("--inverse", metavar="JSON", help='stable pair {"R": ..., "S": ...}')
    sp = add("rsk", "RSK tableaux (or the inverse map)")
    sp.add_argument("perm", nargs="?")
    sp.add_argument("--inverse", metavar="JSON", help='tableau pair {"P": ..., "Q": ...}')
    sp = add("avoid", "pattern avoidance")
    sp.add_argument("--patterns", required=True, help='comma-separated, e.g. "3-~1-42,3-~1-24"')
    sp.add_argument("--n", type=int)
    sp.add_argument("--perm")
    sp.add_argument("--count", action="store_true", help="only report the count")
    sp.add_argument("--allow-large", action="store_true", help="lift the n <= 12 cap")
    sp = add("enumerate", "counting tables")
    sp.add_argument("--table", choices=["f", "bell", "fib", "matrix", "inverse", "ftable"], required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = add("geometry", "shadow diagrams")
    sp.add_argument("--perm", required=True)
    sp.add_argument("--kind", choices=["sw", "ne"], default="sw")
    sp.add_argument("--iterates", default="all", help="'all' or an iterate index")
    sp.add_argument("--svg", metavar="PATH", help="write SVG there ('-' for stdout)")
    sp.add_argument("--report", choices=["crossings", "salient", "diagrams"], default="diagrams")
    sp = add("game", "Floyd's Game and Two-color Patience Sorting")
    sp.add_argument("--strategy", choices=sorted(games.STRATEGIES) + sorted(games.TCPS_STRATEGIES),
                    default="greedy")
    sp.add_argument("--deck")
    sp.add_argument("--random", type=int, metavar="N")
    sp.add_argument("--trials", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("verify", "run the exhaustive checks")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    return ap


COMMANDS = {
    "lis": cmd_lis, "sort": cmd_sort, "xps": cmd_xps, "rsk": cmd_rsk, "avoid": cmd_avoid,
    "enumerate": cmd_enumerate, "geometry": cmd_geometry, "game": cmd_game, "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = COMMANDS[args.command](args)
    except (ParseError, CapError, patience.PileError, tableaux.TableauError, InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if isinstance(out, int):
        return out
    if out:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
