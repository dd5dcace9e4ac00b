"""Command line front end: ``braidsig <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import PRINTED, VOLUMES, BoundsError, thm1_bounds, thm2_bounds, thm3_check
from .braid import BraidParseError, normalize_far_commutation, parse_braid, syllables
from .certificates import best_class, extract_subwords, place_dots, string_classes
from .inertia import inertia
from .report import invariant_report
from .seifert import seifert_matrix
from .sweep import EnumerationSpec, FamilyTooLargeError, emit, enumerate_words, random_words, verify_sweep

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            a, b = text.split("-", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A-B, got {text!r}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _word(args):
    strands = None
    if args.strands is not None:
        lo, hi = args.strands
        if lo != hi:
            raise UsageError("a single word needs a single strand count")
        strands = lo
    return parse_braid(args.word, strands)


def _grid(m) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in m)


def _write(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_invariants(args) -> int:
    rep = invariant_report(_word(args), exhaustive_twist=args.exhaustive_twist)
    if args.json:
        _write(json.dumps(rep.as_dict(), indent=2) + "\n", args.out)
        return EXIT_OK
    d = rep.as_dict()
    lines = [f"{k}: {d[k]}" for k in ("word", "strands", "letters", "components", "b1", "sigma",
                                       "delta_sigma", "genus", "twist")]
    lines.append("flags: " + ", ".join(f"{k}={v}" for k, v in d["flags"].items()))
    for key in ("thm1", "thm2"):
        iv = d[key]
        lines.append(f"{key}: " + (f"[{iv['lo']:.4f}, {iv['hi']:.4f})" if iv else "n/a"))
    lines.append(f"thm3_ok: {d['thm3_ok']}")
    lines.append("cut: " + ", ".join(f"{k}={v}" for k, v in d["cut"].items()))
    c = rep.certificate
    lines.append(f"certificate: dots={c.dots} subwords={c.count} 21*count>=t:{c.ok_lower} 2*count<=defect:{c.ok_defect}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    V = seifert_matrix(_word(args))
    S = V.symmetrized()
    if args.json:
        d = V.as_dict()
        if args.inertia:
            d["inertia"] = list(inertia(V.reported_form()).as_tuple())
        _write(json.dumps(d) + "\n", args.out)
        return EXIT_OK
    parts = [f"V ({V.size}x{V.size})", _grid(V.entries), "V + V^T", _grid(S)]
    if args.inertia:
        p, q, z = inertia(V.reported_form()).as_tuple()
        parts.append(f"inertia (reported orientation): ({p}, {q}, {z})")
    _write("\n".join(x for x in parts) + "\n", args.out)
    return EXIT_OK


def cmd_extract(args) -> int:
    w = _word(args)
    s = normalize_far_commutation(syllables(w, cyclic=True))
    dots = place_dots(s)
    classes = string_classes(dots, s.strands)
    best = best_class(dots, s.strands)
    cert = extract_subwords(s, best, strict=args.strict)
    data = {
        "syllables": [list(p) for p in s.syllables],
        "dots": [{"between": list(d.between), "string": d.string} for d in dots],
        "classes": [{"j": c.j, "strings": list(c.strings), "dots": c.dots} for c in classes],
        "chosen": best.j,
        "occurrences": [
            {"central": o.central, "columns": list(o.columns),
             "groups": [list(g) for g in o.groups], "exponents": list(o.exponents)}
            for o in cert.occurrences
        ],
        "count": cert.count,
    }
    if args.json:
        _write(json.dumps(data, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [f"normal form: {s}"]
    lines.append(f"dots ({len(dots)}): " + ", ".join(f"{d.between}@{d.string}" for d in dots))
    for c in classes:
        mark = "*" if c.j == best.j else " "
        lines.append(f"{mark} class {c.j}: strings {list(c.strings)} dots {c.dots}")
    for o in cert.occurrences:
        lines.append(f"  run on string {o.central}: columns {o.columns} syllables {o.groups}")
    lines.append(f"count: {cert.count}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.word is not None:
        rep = invariant_report(_word(args), exhaustive_twist=args.exhaustive_twist)
        ds, t = rep.delta_sigma, rep.twist
    elif args.delta_sigma is not None and args.twist is not None:
        ds, t = args.delta_sigma, args.twist
    else:
        raise UsageError("give a word or both --delta-sigma and --twist")
    k = PRINTED if args.printed_constants else VOLUMES
    out = {"delta_sigma": ds, "twist": t, "thm3_ok": thm3_check(ds, t)}
    for key, fn, arg in (("thm1", thm1_bounds, ds), ("thm2", thm2_bounds, t)):
        try:
            out[key] = fn(arg, k).as_dict()
        except BoundsError as exc:
            out[key] = None
            out[key + "_error"] = str(exc)
    if args.json:
        _write(json.dumps(out, indent=2) + "\n", args.out)
    else:
        _write("\n".join(f"{k_}: {v}" for k_, v in out.items()) + "\n", args.out)
    return EXIT_OK


def _family(args):
    spec = EnumerationSpec(
        strands=args.strands or (3, 3),
        syllable_counts=args.syllables,
        exponents=args.exponents,
        cyclic_dedup=not args.no_dedup,
        require_sufficiently_complicated=not args.unfiltered,
        require_hyperbolicity=not args.unfiltered,
        limit=args.limit,
    )
    if args.random:
        return random_words(spec, args.random, args.seed)
    return list(enumerate_words(spec))


def cmd_verify(args) -> int:
    rep = verify_sweep(_family(args), jobs=args.jobs, exhaustive_twist=args.exhaustive_twist)
    text = emit(rep, "json" if args.json else "csv", args.out)
    if not args.out:
        sys.stdout.write(text)
    print(rep.summary(), file=sys.stderr)
    return rep.exit_code


def cmd_enumerate(args) -> int:
    words = _family(args)
    if args.json:
        text = json.dumps([{"strands": s.strands, "word": str(s)} for s in words], indent=2) + "\n"
    else:
        text = "".join(f"{s.strands}\t{s}\n" for s in words)
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--strands", type=_range, help="strand count N, or a range A-B for families")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--seed", type=int, default=0, help="seed for --random families")
    common.add_argument("--exhaustive-twist", action="store_true",
                        help="minimise twist number over rotations and far commutations")

    parser = argparse.ArgumentParser(prog="braidsig", description="Invariants of positive braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="all invariants of one word")
    p.add_argument("word")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("matrix", parents=[common], help="Seifert matrix over the brick basis")
    p.add_argument("word")
    p.add_argument("--inertia", action="store_true", help="also print (p, q, z) of the symmetrised form")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("extract", parents=[common], help="dots, string classes and alternating runs")
    p.add_argument("word")
    p.add_argument("--strict", action="store_true", help="let columns i-1, i+2 break runs")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("bounds", parents=[common], help="volume intervals and the twist inequality")
    p.add_argument("word", nargs="?")
    p.add_argument("--delta-sigma", type=int)
    p.add_argument("--twist", type=int)
    p.add_argument("--printed-constants", action="store_true", help="use v3 = 1.0149, v8 = 3.6638")
    p.set_defaults(func=cmd_bounds)

    for name, func, help_ in (("verify", cmd_verify, "check all inequalities over a family"),
                              ("enumerate", cmd_enumerate, "list a family of words")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--syllables", type=_range, default=(4, 6), help="syllable count range A-B")
        p.add_argument("--exponents", type=_ints, default=(3, 4), help="comma separated exponents")
        p.add_argument("--no-dedup", action="store_true", help="keep all cyclic rotations")
        p.add_argument("--unfiltered", action="store_true",
                       help="keep words outside the hypotheses (reported, not asserted)")
        p.add_argument("--limit", type=int)
        p.add_argument("--random", type=int, metavar="N", help="N random words instead of the full family")
        if name == "verify":
            p.add_argument("--jobs", type=int, default=1)
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BraidParseError, UsageError, FamilyTooLargeError, ValueError) as exc:
        print(f"braidsig: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
