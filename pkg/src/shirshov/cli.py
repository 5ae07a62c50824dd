"""Command-line entry point: ``shirshov <subcommand> ...``.

Reports go to stdout, diagnostics to stderr. Exit status is 0 on success
(a none-found analysis is a success), 1 when ``verify`` rejects its input and
2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import avoidance, certificate as cons, morphic, witness
from .errors import WordError
from .identity import DEFAULT_SEED, amitsur_levitzski_check
from .words import infer_alphabet, parse_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
AUTO_PROBE_LENGTH = 8192

EXAMPLES = {
    "analyze": "example:\n  shirshov analyze --word abab --p 2 --q 2",
    "bound": "example:\n  shirshov bound --m 2 --p 2 --q 9 --threads 2 --trace",
    "gen": "example:\n  shirshov gen --gen thue-morse --length 16",
    "complexity": "example:\n  shirshov complexity --gen fibonacci --length 500 --n-max 20",
    "recur": "example:\n  shirshov recur --gen thue-morse --length 1024 --pattern abba",
    "construct": "example:\n  shirshov construct --gen thue-morse --q 3 > cert.json",
    "verify": "example:\n  shirshov verify cert.json",
    "identity": "example:\n  shirshov identity --n 2 --trials 100 --seed 42",
}


class UsageError(Exception):
    pass


def _read_words(path):
    text = Path(path).read_text()
    return [line.strip() for line in text.splitlines() if line.strip()]


def _word_texts(args):
    if args.word is not None and args.word_file is not None:
        raise UsageError("give either --word or --word-file, not both")
    if args.word is not None:
        return [args.word]
    if args.word_file is not None:
        words = _read_words(args.word_file)
        if not words:
            raise UsageError(f"{args.word_file} holds no words")
        return words
    return None


def _alphabet(args, text):
    return infer_alphabet(text) if args.m is None else args.m


def _single_word(args):
    texts = _word_texts(args)
    if texts is None:
        return None
    if len(texts) != 1:
        raise UsageError("this subcommand takes exactly one word")
    return parse_word(texts[0], _alphabet(args, texts[0]))


def _generator(args):
    if args.gen_config is not None:
        gens = morphic.load_generators(Path(args.gen_config).read_text())
        if args.gen not in gens:
            raise UsageError(f"generator {args.gen!r} not defined in {args.gen_config}")
        return gens[args.gen]
    return morphic.builtin(args.gen)


def _source_word(args, allow_auto=False):
    w = _single_word(args) if hasattr(args, "word") else None
    if w is not None:
        if args.gen is not None:
            raise UsageError("give either a word or --gen, not both")
        return w
    if args.gen is None:
        raise UsageError("a word (--word/--word-file) or a generator (--gen) is required")
    if args.length is None:
        if allow_auto:
            return None
        raise UsageError("--gen needs --length")
    return _generator(args).prefix(args.length)


def _emit(obj, fmt, text=None):
    if fmt == "text" and text is not None:
        sys.stdout.write(text.rstrip("\n") + "\n")
    else:
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")


# -- subcommands ------------------------------------------------------------


def cmd_analyze(args):
    texts = _word_texts(args)
    if texts is None:
        raise UsageError("analyze needs --word or --word-file")
    reports = []
    for text in texts:
        w = parse_word(text, _alphabet(args, text))
        reports.append(
            witness.analyze(
                w, args.p, args.q, args.mode, exhaustive=args.exhaustive, max_length=args.max_length
            ).to_dict()
        )
    lines = [f"{r['word']}: {r['outcome']['kind']}" for r in reports]
    _emit(reports[0] if len(reports) == 1 else reports, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_bound(args):
    budget = avoidance.SearchBudget(args.max_depth, args.max_nodes)
    report = avoidance.longest_witness_free(
        args.m,
        args.p,
        args.q,
        args.mode,
        budget,
        threads=args.threads,
        trace=sys.stderr if args.trace else None,
    )
    d = report.to_dict()
    text = f"longest={d['longest_witness_free_length']} bound={d['empirical_bound']} ({d['claim']})"
    _emit(d, args.format, text)
    return EXIT_OK


def cmd_gen(args):
    gen = _generator(args)
    w = gen.prefix(args.length)
    if args.format == "json":
        _emit({"generator": gen.describe(), "length": len(w), "word": str(w)}, "json")
    else:
        sys.stdout.write(str(w) + "\n")
    return EXIT_OK


def cmd_complexity(args):
    w = _source_word(args)
    n_max = args.n_max if args.n_max is not None else min(len(w), 20)
    profile = morphic.complexity(w, n_max)
    d = profile.to_dict()
    if args.max_period:
        found = morphic.eventually_periodic_check(w, args.max_period)
        d["eventually_periodic"] = None if found is None else {"preperiod": found[0], "period": found[1]}
    text = "\n".join(f"{n} {c}" for n, c in profile.values)
    _emit(d, args.format, text)
    return EXIT_OK


def cmd_recur(args):
    w = _source_word(args)
    v = parse_word(args.pattern, w.m)
    profile = morphic.recurrence(w, v)
    d = profile.to_dict()
    _emit(d, args.format, f"max_gap={d['max_gap']} window_constant={d['window_constant']}")
    return EXIT_OK


def cmd_construct(args):
    w = _source_word(args, allow_auto=True)
    if w is None:
        gen = _generator(args)
        probe = gen.prefix(AUTO_PROBE_LENGTH)
        N, markers = cons.select_markers(probe, args.q)
        L = cons.estimate_L(probe, markers)
        w = gen.prefix(cons.required_length(args.q, L, N))
    cert = cons.construct(w, args.q)
    d = cert.to_dict()
    _emit(d, args.format, f"q={cert.q} N={cert.N} L={cert.L} positions={cert.positions}")
    return EXIT_OK


def _verify_payload(d):
    """Return (kind, first violated clause or None)."""
    if d.get("kind") == "strong_decomposition_certificate":
        cert = cons.StrongDecompCertificate.from_dict(d)
        return "certificate", cons.first_violation(cert)
    if "empirical_bound" in d:
        report = avoidance.BoundReport.from_dict(d)
        ok = avoidance.verify_frontier(report)
        return "bound", None if ok else "frontier re-check failed"
    if "outcome" in d:
        w = parse_word(d["word"], d["m"])
        for item in d.get("witnesses", []) + (
            [d["outcome"]] if d["outcome"]["kind"] in ("power", "decomposition") else []
        ):
            if not witness.verify_witness(w, witness.witness_from_dict(item, d["m"])):
                return "analysis", f"{item['kind']} witness at {item['position']} does not verify"
        return "analysis", None
    raise UsageError("unrecognised JSON document (expected a certificate, bound or analysis report)")


def cmd_verify(args):
    try:
        d = json.loads(Path(args.file).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    try:
        kind, problem = _verify_payload(d)
    except (KeyError, TypeError, WordError) as exc:
        kind, problem = "document", f"malformed document: {exc}"
    status = "PASS" if problem is None else "FAIL"
    if args.format == "json":
        _emit({"kind": kind, "status": status, "violation": problem}, "json")
    else:
        sys.stdout.write(status + ("" if problem is None else f": {problem}") + "\n")
    return EXIT_OK if problem is None else EXIT_FAIL


def cmd_identity(args):
    report = amitsur_levitzski_check(args.n, args.trials, args.seed)
    d = report.to_dict()
    _emit(d, args.format, f"s_{d['degree']} vanished on all {d['trials']} trials: {d['all_vanished']}")
    return EXIT_OK


# -- parser -----------------------------------------------------------------


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shirshov",
        description="Shirshov-style word combinatorics and standard identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(
            name,
            help=help_text,
            description=help_text,
            epilog=EXAMPLES[name],
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        p.add_argument("--format", choices=("json", "text"), default="json")
        return p

    def word_options(p):
        p.add_argument("--word", help="word in text form, e.g. abba")
        p.add_argument("--word-file", help="file with one word per line")
        p.add_argument("--m", type=_positive, help="alphabet size (default: inferred from the word)")

    def gen_options(p):
        p.add_argument("--gen", help="thue-morse, fibonacci, tribonacci, period-k, or a name from --gen-config")
        p.add_argument("--gen-config", help="generator config file ('name: a->ab, b->ba, seed=a')")
        p.add_argument("--length", type=_positive, help="prefix length")

    p = add("analyze", "Find a p-power or a (strongly) q-decomposable subword.")
    word_options(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mode", choices=(witness.PLAIN, witness.STRONG), default=witness.PLAIN)
    p.add_argument("--exhaustive", action="store_true", help="run both searches and list every witness")
    p.add_argument("--max-length", type=_positive, default=witness.DEFAULT_MAX_LENGTH)
    p.set_defaults(func=cmd_analyze)

    p = add("bound", "Longest witness-free words by depth-first search.")
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--mode", choices=(witness.PLAIN, witness.STRONG), default=witness.PLAIN)
    p.add_argument("--max-depth", type=_positive, default=avoidance.DEFAULT_MAX_DEPTH)
    p.add_argument("--max-nodes", type=_positive, default=avoidance.DEFAULT_MAX_NODES)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--trace", action="store_true", help="print visited nodes per depth to stderr")
    p.set_defaults(func=cmd_bound)

    p = add("gen", "Print a prefix of a generated infinite word.")
    gen_options(p)
    p.set_defaults(func=cmd_gen, format="text")

    p = add("complexity", "Distinct-factor counts of a word or prefix.")
    word_options(p)
    gen_options(p)
    p.add_argument("--n-max", type=_positive)
    p.add_argument("--max-period", type=_positive, help="also test for eventual periodicity")
    p.set_defaults(func=cmd_complexity)

    p = add("recur", "Recurrence gaps and window constant of a pattern.")
    word_options(p)
    gen_options(p)
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_recur)

    p = add("construct", "Build a certified strongly q-decomposable subword.")
    word_options(p)
    gen_options(p)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = add("verify", "Re-verify a certificate, bound report or analysis report.")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify, format="text")

    p = add("identity", "Check s_2n on n x n matrices and find an s_(2n-1) witness.")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_identity)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, WordError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
