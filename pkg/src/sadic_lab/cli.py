"""sadic-lab: recognizability analysis of substitutions and S-adic sequences.

Exit codes: 0 success, 1 a counterexample was found, 2 input error,
3 a language horizon was too short.
"""

import argparse
import json
import random
import sys

from . import presets
from .bratteli import (build_diagram, equivariance_check, export_dot, length_tables,
                       minimal_path)
from .errors import HorizonError, InputError
from .formats import parse_directive, parse_morphism
from .injectivity import (full_recognizability_check, injective_on_left_infinite,
                          injective_on_right_infinite, injective_on_two_sided)
from .language import substitutive_factors
from .matrix import integer_rank
from .morphism import (Alphabet, Morphism, incidence_matrix, is_primitive, is_proper, permutativity,
                       total_length)
from .mosse import mosse_search
from .recognizer import brute_window_parses, infection_threshold, window_parses
from .sadic import (analyze_levels, enumerate_limit_words, eventual_bound,
                    is_everywhere_growing, language_count_bound)

OK, FOUND, BAD_INPUT, HORIZON = 0, 1, 2, 3


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _load_morphism(args):
    if args.preset:
        return presets.morphism(args.preset)
    if not args.input:
        raise InputError("give an input file or --preset")
    return parse_morphism(_read(args.input))


def _load_sequence(args):
    if args.preset:
        return presets.sequence(args.preset)
    if not args.input:
        raise InputError("give an input file or --preset")
    return parse_directive(_read(args.input))


def _emit(args, report, text):
    if args.format == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------- analyze

def analyze_report(m, mosse=False, lang_horizon=64, ell_max=16):
    M = incidence_matrix(m)
    report = {
        "morphism": m.to_json(),
        "incidence_matrix": M.to_rows(),
        "rank": integer_rank(M),
        "total_length": total_length(m),
        "permutativity": permutativity(m),
        "proper": is_proper(m),
        "injective": {
            "right_infinite": injective_on_right_infinite(m).injective,
            "left_infinite": injective_on_left_infinite(m).injective,
            "two_sided": injective_on_two_sided(m),
        },
        "certificate": full_recognizability_check(m).to_json(),
    }
    if m.is_substitution():
        verdict, n = is_primitive(m)
        report["primitive"] = {"verdict": verdict, "power": n}
    if mosse:
        if not m.is_substitution():
            raise InputError("--mosse needs a substitution")
        lang = substitutive_factors(m, lang_horizon)
        out = mosse_search(m, lang, ell_max)
        report["mosse"] = out.to_json()
        report["mosse"]["lang_horizon"] = lang_horizon
    return report


def _analyze_text(m, r):
    lines = [f"morphism: {m.show()}",
             "incidence matrix:"]
    lines += ["  " + " ".join(f"{x:3d}" for x in row) for row in r["incidence_matrix"]]
    lines += [f"rank: {r['rank']} of {m.domain.size}",
              f"total length: {r['total_length']}",
              f"permutativity: {r['permutativity']}",
              f"proper: {r['proper']}"]
    if "primitive" in r:
        p = r["primitive"]
        lines.append(f"primitive: {p['verdict']}" + (f" (power {p['power']})" if p["power"] else ""))
    inj = r["injective"]
    lines.append(f"injective: right-infinite {inj['right_infinite']}, "
                 f"left-infinite {inj['left_infinite']}, two-sided {inj['two_sided']}")
    c = r["certificate"]
    lines.append(f"certificate: {c['verdict']}" + (f" [{', '.join(c['reasons'])}]" if c["reasons"] else ""))
    if "mosse" in r:
        o = r["mosse"]
        extra = f"ell={o['ell']}" if "ell" in o else f"ell_tried={o.get('ell_tried')}"
        lines.append(f"mosse search: {o['kind']} ({extra}, lang-horizon {o['lang_horizon']})")
    return "\n".join(lines)


def cmd_analyze(args):
    m = _load_morphism(args)
    r = analyze_report(m, args.mosse, args.lang_horizon, args.ell_max)
    _emit(args, r, _analyze_text(m, r))
    return FOUND if r.get("mosse", {}).get("kind") == "counterexample" else OK


# ---------------------------------------------------------------- sadic

def sadic_report(D, max_level, lang_horizon, ell_max):
    K = D.max_alphabet()
    levels = analyze_levels(D, max_level, lang_horizon, ell_max)
    growing = is_everywhere_growing(D)
    report = {
        "prefix_length": D.p,
        "cycle_length": D.c,
        "K": K,
        "everywhere_growing": "undetermined" if growing is None else growing,
        "lang_horizon": lang_horizon,
        "levels": [lv.to_json() for lv in levels],
        "bounds": {
            "infection_threshold": infection_threshold(K),
            "language_count_bound": language_count_bound(K),
            "eventual_bound": eventual_bound(K, language_count_bound(K)) if K >= 2 else None,
        },
    }
    if growing:
        words = enumerate_limit_words(D)
        report["limit_words"] = {"count": len(words), "cap": K * K,
                                 "words": [w.to_json() for w in words]}
    return report


def _sadic_text(r):
    lines = [f"prefix length {r['prefix_length']}, cycle length {r['cycle_length']}, K = {r['K']}",
             f"everywhere growing: {r['everywhere_growing']}"]
    for lv in r["levels"]:
        tag = " (periodic point)" if lv["periodic"] else ""
        rep = f" [{lv['represents']}]" if lv["represents"] else ""
        lines.append(f"level {lv['level']}: {lv['verdict']} via {lv['method']}{tag}{rep}")
    b = r["bounds"]
    lines.append(f"infection threshold: {b['infection_threshold']}")
    lines.append(f"language count bound: {b['language_count_bound']}")
    lines.append(f"levels of non-recognizability bound: {b['eventual_bound']}")
    if "limit_words" in r:
        lw = r["limit_words"]
        lines.append(f"limit words: {lw['count']} (cap {lw['cap']})")
    return "\n".join(lines)


def cmd_sadic(args):
    D = _load_sequence(args)
    max_level = args.depth if args.depth is not None else D.p + max(D.c, 1) - 1
    r = sadic_report(D, max_level, args.lang_horizon, args.ell_max)
    _emit(args, r, _sadic_text(r))
    return FOUND if any(lv["verdict"] == "not_recognizable" for lv in r["levels"]) else OK


# ---------------------------------------------------------------- bratteli

def _orbit(D, depth, steps):
    """Equivariance along the orbit of a minimal path, deepened until it fits."""
    d = max(1, depth - 1)
    while True:
        if not D.addressable(d - 1):
            break
        if length_tables(D, d)[d][0] > steps or d > 64:
            break
        d += 1
    if not D.addressable(d - 1):
        d -= 1
    B = build_diagram(D, d + 1)
    p = minimal_path(B, 0, d)
    out = equivariance_check(D, p, steps)
    out["path_depth"] = d
    return out


def cmd_bratteli(args):
    D = _load_sequence(args)
    depth = args.depth if args.depth is not None else 3
    B = build_diagram(D, depth)
    orbit = _orbit(D, depth, args.orbit) if args.orbit else None
    if args.format == "dot":
        payload = export_dot(B)
    else:
        data = B.to_json()
        if orbit is not None:
            data["orbit"] = orbit
        payload = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if args.format == "text":
        payload = "\n".join(
            [f"levels: {list(B.levels)}"]
            + [f"level {n + 1} vertex {v}: sources {list(s)}"
               for n, level in enumerate(B.edges) for v, s in enumerate(level)]) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if orbit is not None:
        verdict = "verified" if orbit["ok"] else f"failed at step {orbit.get('failure')}"
        print(f"equivariance over {orbit['steps']} steps (path depth {orbit['path_depth']}): "
              f"{verdict}", file=sys.stderr if args.format != "text" else sys.stdout)
        if not orbit["ok"]:
            return FOUND
    return OK


# ---------------------------------------------------------------- sweep

def cmd_sweep(args):
    """Randomized comparison of the window parser with brute force."""
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        k = rng.randint(1, 3)
        imgs = [tuple(rng.randrange(k) for _ in range(rng.randint(1, 3))) for _ in range(k)]
        m = Morphism(Alphabet(k), Alphabet(k), tuple(imgs))
        w = tuple(rng.randrange(k) for _ in range(rng.randint(1, 8)))
        got = sorted((p.offset_k, tuple(p.preimage)) for p in window_parses(w, m))
        if got != brute_window_parses(w, m):
            bad += 1
    report = {"seed": args.seed, "cases": args.count, "discrepancies": bad}
    _emit(args, report, f"{args.count} random cases, {bad} discrepancies (seed {args.seed})")
    return FOUND if bad else OK


# ---------------------------------------------------------------- main

def build_parser():
    ap = argparse.ArgumentParser(prog="sadic-lab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "json")):
        p.add_argument("input", nargs="?", help="morphism or directive file")
        p.add_argument("--preset", help=f"built-in input: {', '.join(presets.names())}")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--lang-horizon", type=int, default=64)
        p.add_argument("--ell-max", type=int, default=16)
        p.add_argument("--depth", type=int)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("analyze", help="structural checks and recognizability certificate")
    common(p)
    p.add_argument("--mosse", action="store_true", help="also run the local-radius search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sadic", help="per-level analysis of a directive sequence")
    common(p)
    p.set_defaults(func=cmd_sadic)

    p = sub.add_parser("bratteli", help="ordered Bratteli diagram and Vershik orbit check")
    common(p, ("dot", "json", "text"))
    p.add_argument("--orbit", type=int, default=0, help="successor steps to check")
    p.add_argument("--out", help="write the diagram here instead of stdout")
    p.set_defaults(func=cmd_bratteli)

    p = sub.add_parser("sweep", help="randomized parser-versus-brute-force comparison")
    common(p)
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return BAD_INPUT if e.code not in (0, None) else OK
    for name in ("lang_horizon", "ell_max"):
        if getattr(args, name) < 1:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return BAD_INPUT
    if args.depth is not None and args.depth < 1:
        print("error: --depth must be positive", file=sys.stderr)
        return BAD_INPUT
    try:
        return args.func(args)
    except HorizonError as e:
        need = f" (needed: {e.needed})" if e.needed else ""
        print(f"horizon exhausted: {e}{need}", file=sys.stderr)
        return HORIZON
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
