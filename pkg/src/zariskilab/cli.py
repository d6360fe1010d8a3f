"""Command-line frontend.

Exit codes: 0 pass, 1 I/O failure, 2 invalid input or violated precondition,
3 a check returned false (or a separation report is unverified).
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from .cores import (check_image_bound, homogeneity_violation, mobile_core_witnesses,
                    relative_orbit, shrinking_endomorphism)
from .errors import LabError
from .relstruct import Structure, gen_complete, gen_core_C, gen_G, gen_Kmm
from .search import automorphisms, endomorphisms
from .separation import non_hausdorff_witness, random_family, separate
from .serialize import (check_report, dumps, map_to_json, structure_from_json,
                        structure_to_json, wordpair_from_json, wordpair_to_json)
from .wreath import check_wreath_characterization

EXIT_OK, EXIT_IO, EXIT_INPUT, EXIT_FALSE = 0, 1, 2, 3


class _IOFailure(Exception):
    pass


def _read_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path} is not valid JSON: {exc}") from exc


def _emit(payload, out: str | None):
    text = dumps(payload)
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise _IOFailure(f"cannot write {out}: {exc}") from exc


def _g_parameters(A: Structure) -> tuple[int, int] | None:
    """``(n, m)`` such that ``A`` has the content of ``gen_G(n, m)``, if any."""
    N = A.domain_size
    if N == 0 or N % 2:
        return None
    half = N // 2
    for m in range(1, half + 1):
        if half % m == 0 and A.same_content(gen_G(half // m, m)):
            return half // m, m
    return None


def cmd_gen(args) -> int:
    if args.kind == "kmm":
        A = gen_Kmm(args.m)
    elif args.kind == "g":
        A = gen_G(args.n, args.m)
    elif args.kind == "core":
        A = gen_core_C(args.n)
    else:
        A = gen_complete(args.n, args.loops)
    _emit(structure_to_json(A), args.out)
    return EXIT_OK


def _run_check(check: str, A: Structure, args) -> dict:
    if check == "core":
        shrink = shrinking_endomorphism(A)
        return check_report(check, A, shrink is None, shrink)
    if check == "mobile":
        missing = [a for a, g in mobile_core_witnesses(A).items() if g is None]
        return check_report(check, A, not missing, missing or None)
    if check == "transitive":
        if A.domain_size == 0:
            raise ValueError("transitivity of the empty structure is undefined")
        orbit = relative_orbit(A, 0)
        return check_report(check, A, len(orbit) == A.domain_size, orbit)
    if check == "homogeneous":
        bad = homogeneity_violation(A, args.cap)
        return check_report(check, A, bad is None, sorted(bad.items()) if bad else None)
    if check == "image-bound":
        bound = check_image_bound(A, guard=args.limit)
        report = check_report(check, A, bound.holds)
        report["min_image_size"], report["core_size"] = bound.min_image_size, bound.core_size
        return report
    params = _g_parameters(A)
    if params is None:
        raise ValueError(f"{A.name} is not a copies-of-K_m,m structure")
    return check_report(check, A, check_wreath_characterization(*params, guard=args.limit))


def cmd_check(args) -> int:
    A = structure_from_json(_read_json(args.input))
    report = _run_check(args.check, A, args)
    _emit(report, args.out)
    return EXIT_OK if report["result"] else EXIT_FALSE


def _load_pairs(data, m_flag):
    if isinstance(data, list):
        data = {"pairs": data}
    if not isinstance(data, dict):
        raise ValueError("expected a list of word pairs or an object with a 'pairs' list")
    plus = [wordpair_from_json(p) for p in data.get("pairs", [])]
    minus = [wordpair_from_json(p) for p in data.get("pairs_minus", [])]
    m = data.get("m", m_flag)
    if m is None:
        raise ValueError("part size unknown: give 'm' in the input or pass --m")
    m = int(m)
    if "n" in data:
        n = int(data["n"])
    elif plus or minus:
        size = (plus or minus)[0].size
        if size % (2 * m):
            raise ValueError(f"pairs act on {size} points, not a multiple of {2 * m}")
        n = size // (2 * m)
    else:
        n = 1
    return plus, minus, n, m


def cmd_separate(args) -> int:
    if args.input is None:
        rng = random.Random(args.seed)
        plus = random_family(rng, args.n, args.m)
        minus, n, m = [], args.n, args.m
    else:
        plus, minus, n, m = _load_pairs(_read_json(args.input), args.m)
    if minus:
        report = non_hausdorff_witness(plus, minus, n, m, allow_enlarge=args.allow_enlarge)
    else:
        report = separate(plus, n, m, allow_enlarge=args.allow_enlarge)
    payload = report.to_json()
    if args.input is None:
        payload["input"] = {"n": n, "m": m, "seed": args.seed,
                            "pairs": [wordpair_to_json(p) for p in plus]}
    _emit(payload, args.out)
    return EXIT_OK if report.verified else EXIT_FALSE


def cmd_end_count(args) -> int:
    A = structure_from_json(_read_json(args.input))
    limit = args.limit
    ends = endomorphisms(A, limit=limit + 1)
    auts = automorphisms(A, limit=limit + 1)
    if len(ends) > limit:
        raise ValueError(f"End({A.name}) has more than {limit} elements; raise --limit")
    payload = {"structure": A.name, "end": len(ends), "aut": len(auts)}
    if args.witnesses:
        payload["automorphisms"] = [map_to_json(f) for f in auts]
    _emit(payload, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zariskilab", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized drivers")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--in", dest="input", required=True, help="input JSON path")
        p.add_argument("--out", help="output path (stdout when omitted)")

    g = sub.add_parser("gen", help="write a generated structure as JSON")
    g.add_argument("kind", choices=["kmm", "g", "core", "complete"])
    g.add_argument("--n", type=int, default=1)
    g.add_argument("--m", type=int, default=1)
    g.add_argument("--loops", action="store_true", help="add loops (complete only)")
    common(g, needs_input=False)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="run a structural check on a structure JSON")
    c.add_argument("check", choices=["core", "mobile", "transitive", "homogeneous",
                                     "image-bound", "wreath"])
    c.add_argument("--cap", type=int, default=2, help="partial-isomorphism size cap")
    c.add_argument("--limit", type=int, default=200_000, help="enumeration guard")
    common(c)
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("separate", help="synthesize a separating copy permutation")
    s.add_argument("--in", dest="input", help="word-pair JSON; a seeded random family when omitted")
    s.add_argument("--n", type=int, default=2, help="copies for the random family")
    s.add_argument("--m", type=int, default=None, help="part size when the input omits it")
    s.add_argument("--allow-enlarge", action="store_true",
                   help="grow the copy window when the construction needs headroom")
    s.add_argument("--out", help="output path (stdout when omitted)")
    s.set_defaults(func=cmd_separate)

    e = sub.add_parser("end-count", help="count endomorphisms and automorphisms")
    e.add_argument("--limit", type=int, default=100_000, help="enumeration guard")
    e.add_argument("--witnesses", action="store_true", help="also list the automorphisms")
    common(e)
    e.set_defaults(func=cmd_end_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.command == "separate" and args.input is None and args.m is None:
        args.m = 1
    try:
        return args.func(args)
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (LabError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
