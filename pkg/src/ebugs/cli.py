"""Command-line surface.

Exit codes: 0 success, 1 malformed input or file, 2 verification or
decoding negative, 3 construction precondition unmet, 4 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lfsr, necklace, oracle
from .errors import BudgetExceeded, EbugsError, NotFound
from .files import ColouringFile, dumps, read_colouring, write_colouring
from .words import (ALPHABET, Colouring, build_decoder, debruijn_count, decode,
                    is_valid, is_valid_identification, lll_lower_bound, moreau,
                    necklace_count, upper_bound)

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_NEGATIVE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


def _parse_coeffs(s):
    if s is None:
        return None
    return tuple(int(x) for x in s.split(","))


def _emit(cf: ColouringFile, out, fixture: bool):
    if not fixture:
        cf = ColouringFile(cf.colouring.canonicalized(), cf.mode)
    # self-check before writing
    check = is_valid_identification if cf.mode == "walks" else is_valid
    if not check(cf.colouring).valid:
        raise EbugsError("generated colouring failed self-verification")
    if out:
        write_colouring(out, cf)
    else:
        sys.stdout.write(dumps(cf))


def _add_gen(sub):
    p = sub.add_parser("gen", help="generate a colouring file")
    gsub = p.add_subparsers(dest="generator", required=True)

    def common(sp, k=False, t=False, coeffs=True):
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--l", type=int, required=True)
        if k:
            sp.add_argument("--k", type=int, required=True)
        if t:
            sp.add_argument("--t", type=int, required=True)
        if coeffs:
            sp.add_argument("--coeffs", type=str, default=None,
                            help="feedback coefficients p0,p1,...")
        sp.add_argument("-o", "--out", type=str, default=None)
        sp.add_argument("--fixture", action="store_true",
                        help="keep generation-order rotations")

    common(gsub.add_parser("lfsr-db"))
    common(gsub.add_parser("lfsr-translate"))
    common(gsub.add_parser("lfsr-split"), k=True)
    common(gsub.add_parser("nonprimitive"), k=True)
    common(gsub.add_parser("fkm"), coeffs=False)
    common(gsub.add_parser("concat"), t=True, coeffs=False)
    common(gsub.add_parser("walks"), k=True, coeffs=False)

    lk = gsub.add_parser("list-k", help="usable cycle lengths for nonprimitive")
    lk.add_argument("--q", type=int, required=True)
    lk.add_argument("--l", type=int, required=True)


def _run_gen(args):
    if args.generator == "list-k":
        for k in lfsr.zsigmondy_ks(args.q, args.l):
            print(k)
        return EXIT_OK
    mode = None
    if args.generator == "lfsr-db":
        word = lfsr.lfsr_debruijn(args.q, args.l, _parse_coeffs(args.coeffs))
        c = Colouring(args.q, len(word), args.l, [word])
    elif args.generator == "lfsr-translate":
        c = lfsr.lfsr_translate(args.q, args.l, _parse_coeffs(args.coeffs))
    elif args.generator == "lfsr-split":
        c = lfsr.lfsr_split(args.q, args.l, args.k, _parse_coeffs(args.coeffs))
    elif args.generator == "nonprimitive":
        c = lfsr.nonprimitive_cycles(args.q, args.l, args.k, _parse_coeffs(args.coeffs))
    elif args.generator == "fkm":
        word = necklace.fkm_debruijn(args.q, args.l)
        c = Colouring(args.q, len(word), args.l, [word])
    elif args.generator == "concat":
        c = necklace.concat_partition(args.q, args.l, args.t)
    elif args.generator == "walks":
        c = necklace.closed_walks(args.q, args.k, args.l)
        mode = "walks"
    else:  # pragma: no cover
        raise ValueError(args.generator)
    _emit(ColouringFile(c, mode), args.out, args.fixture)
    return EXIT_OK


def _run_combine(args):
    if args.combiner == "product":
        a = read_colouring(args.a).colouring
        b = read_colouring(args.b).colouring
        c = necklace.product(a, b)
    elif args.combiner == "interleave":
        c = necklace.interleave(read_colouring(args.infile).colouring, args.t)
    else:
        c = necklace.interleave_pair_odd(read_colouring(args.infile).colouring)
    _emit(ColouringFile(c), args.out, args.fixture)
    return EXIT_OK


def _conflict_json(conflict):
    if conflict is None:
        return None
    win, (i1, r1), (i2, r2) = conflict
    return {"window": "".join(ALPHABET[s] for s in win),
            "a": [i1, r1], "b": [i2, r2]}


def _run_verify(args):
    cf = read_colouring(args.file)
    check = is_valid_identification if cf.mode == "walks" else is_valid
    report = check(cf.colouring)
    c = cf.colouring
    if args.json:
        payload = {"valid": report.valid, "q": c.q, "k": c.k, "l": c.l,
                   "n": c.n, "window_count": report.window_count}
        if report.first_conflict is not None:
            payload["conflict"] = _conflict_json(report.first_conflict)
        print(json.dumps(payload))
    else:
        print(f"valid={str(report.valid).lower()} n={c.n} "
              f"window_count={report.window_count}")
        if report.first_conflict is not None:
            cj = _conflict_json(report.first_conflict)
            print(f"conflict window={cj['window']} a={cj['a']} b={cj['b']}")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def _run_decode(args):
    cf = read_colouring(args.file)
    table = build_decoder(cf.colouring)
    i, r = decode(table, args.window)
    print(f"ebug={i} rotation={r}")
    return EXIT_OK


def _run_count(args):
    if args.what == "necklaces":
        print(necklace_count(args.q, args.l))
    elif args.what == "moreau":
        print(moreau(args.q, args.t if args.t is not None else args.l))
    else:
        print(debruijn_count(args.q, args.l))
    return EXIT_OK


def _run_search(args):
    try:
        res = oracle.max_k_cycles(args.q, args.k, args.l, args.budget)
        code = EXIT_OK
    except BudgetExceeded as exc:
        res = exc.result
        code = EXIT_BUDGET
    if args.json:
        print(json.dumps({
            "best_count": res.best_count, "exhausted": res.exhausted,
            "nodes_expanded": res.nodes_expanded, "elapsed": res.elapsed,
            "witness": [str(w) for w in res.witness.words]}))
    else:
        print(f"best_count={res.best_count} exhausted={str(res.exhausted).lower()} "
              f"nodes={res.nodes_expanded} elapsed={res.elapsed:.3f}s")
        for w in res.witness.words:
            print(str(w))
    return code


def _dot_debruijn(q, l):
    n = q ** l
    shift = n // q
    lines = ["digraph dB {"]

    def label(v):
        digits = []
        for _ in range(l):
            digits.append(ALPHABET[v % q])
            v //= q
        return "".join(reversed(digits))

    for v in range(n):
        lines.append(f'  "{label(v)}";')
    for v in range(n):
        for a in range(q):
            lines.append(f'  "{label(v)}" -> "{label((v % shift) * q + a)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_necklace(q, l):
    g = necklace.necklace_graph(q, l)
    lines = ["graph N {"]
    for w in g.vertices:
        lines.append(f'  "{w}";')
    for edge in sorted(tuple(sorted(e)) for e in g.edges):
        u, v = edge
        su = "".join(ALPHABET[s] for s in u)
        sv = "".join(ALPHABET[s] for s in v)
        lines.append(f'  "{su}" -- "{sv}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _run_export(args):
    text = _dot_debruijn(args.q, args.l) if args.what == "dot" \
        else _dot_necklace(args.q, args.l)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ebugs",
        description="Cycle partitions of de Bruijn graphs for robot "
                    "identification colourings")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_gen(sub)

    p = sub.add_parser("combine", help="combine colouring files")
    csub = p.add_subparsers(dest="combiner", required=True)
    pp = csub.add_parser("product")
    pp.add_argument("--a", required=True)
    pp.add_argument("--b", required=True)
    pi = csub.add_parser("interleave")
    pi.add_argument("--in", dest="infile", required=True)
    pi.add_argument("--t", type=int, required=True)
    p2 = csub.add_parser("interleave2")
    p2.add_argument("--in", dest="infile", required=True)
    for sp in (pp, pi, p2):
        sp.add_argument("-o", "--out", default=None)
        sp.add_argument("--fixture", action="store_true")

    p = sub.add_parser("verify", help="check l-validity of a colouring file")
    p.add_argument("--file", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("bound", help="upper and lower bounds on the eBug number")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("count", help="counting formulas")
    p.add_argument("what", choices=["necklaces", "moreau", "debruijn"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--t", type=int, default=None)

    p = sub.add_parser("decode", help="window to (ebug, rotation)")
    p.add_argument("--file", required=True)
    p.add_argument("--window", required=True)

    p = sub.add_parser("search", help="exhaustive max k-cycle packing")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("export", help="DOT graph export")
    p.add_argument("what", choices=["dot", "dot-necklace"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("-o", "--out", default=None)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _run_gen(args)
        if args.command == "combine":
            return _run_combine(args)
        if args.command == "verify":
            return _run_verify(args)
        if args.command == "bound":
            print(f"upper {upper_bound(args.q, args.k, args.l)}")
            print(f"lower {lll_lower_bound(args.q, args.k, args.l)}")
            return EXIT_OK
        if args.command == "count":
            return _run_count(args)
        if args.command == "decode":
            return _run_decode(args)
        if args.command == "search":
            return _run_search(args)
        if args.command == "export":
            return _run_export(args)
        parser.error(f"unknown command {args.command}")
    except NotFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EbugsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
