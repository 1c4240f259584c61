"""Command-line interface.

    combclass count R --n 7
    combclass enumerate windmill --n 3
    combclass enumerate op --n 3 | combclass map ltos | combclass map stol
    combclass eval "Set(Cyc(Set(X)+))" --order 8
    combclass lyndon ababbababaaababa
    combclass verify --suite all --max-n 5

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Iterable, Iterator

from . import egf, jsonio, partitions, seqcyc, trees, verify
from .classexpr import ClassExprError, eval_class_expr
from .egf import CountSeq
from .lyndon import cfl_factorize

DEFAULT_MAX_N = 6


class UsageError(Exception):
    pass


def _class_counts(name: str, n: int) -> CountSeq:
    if name == "r":
        return egf.solve_catalan_class(n)
    if name == "windmill":
        return egf.solve_windmill(n)
    if name == "nested":
        return egf.solve_npt(n)
    if name in ("sp", "op", "cp", "soc"):
        atom = CountSeq.sets(n).positive()  # nonempty blocks
    else:
        atom = egf.point(egf.solve_catalan_class(n))  # fully labelled trees
    if name == "sp":
        return egf.egf_exp(atom)
    if name in ("op", "forest"):
        return egf.egf_seq(atom)
    if name in ("cp", "necklace"):
        return egf.egf_log(atom)
    if name in ("soc", "jewellery"):
        return egf.egf_exp(egf.egf_log(atom))
    return atom  # rr


ENUMERATORS: dict[str, Callable[[int], Iterable]] = {
    "sp": partitions.enumerate_set_partitions,
    "op": partitions.enumerate_ordered_partitions,
    "cp": partitions.enumerate_cyclic_partitions,
    "soc": partitions.enumerate_sets_of_cycles,
    "r": trees.enumerate_R,
    "rr": trees.enumerate_Rr,
    "forest": trees.enumerate_forest,
    "necklace": trees.enumerate_necklace,
    "jewellery": trees.enumerate_jewellery,
    "windmill": trees.enumerate_windmill,
    "nested": trees.enumerate_nested,
}
CLASSES = tuple(ENUMERATORS)

# bijection -> (input kind, function)
BIJECTIONS: dict[str, tuple[str, Callable]] = {
    "stol": ("soc", partitions.stol),
    "ltos": ("op", partitions.ltos),
    "jtoseq": ("jewellery", seqcyc.jtoseq),
    "seqtoj": ("seq", seqcyc.seqtoj),
    "rtof": ("r", trees.rtof),
    "ftor": ("forest", trees.ftor),
    "jtof": ("jewellery", trees.jtof),
    "ftoj": ("forest", trees.ftoj),
}


def _class_name(text: str) -> str:
    name = text.lower()
    if name not in ENUMERATORS:
        raise argparse.ArgumentTypeError(f"unknown class {text!r} (choose from {', '.join(CLASSES)})")
    return name


def _max_n() -> int:
    raw = os.environ.get("COMBCLASS_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"COMBCLASS_MAX_N must be an integer, got {raw!r}") from None


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def cmd_count(args, out) -> int:
    counts = _class_counts(args.cls, args.n)
    if args.format == "plain":
        print(counts[args.n], file=out)
    else:
        print(json.dumps(counts.to_json()), file=out)
    return 0


def cmd_enumerate(args, out) -> int:
    cap = _max_n()
    if args.n > cap and not args.force:
        raise UsageError(f"n={args.n} exceeds the enumeration cap {cap}; pass --force or set COMBCLASS_MAX_N")
    items = ENUMERATORS[args.cls](args.n)
    if args.format == "json":
        print(json.dumps([jsonio.to_json(x) for x in items], separators=(",", ":")), file=out)
    else:
        for x in items:
            print(jsonio.dumps(x), file=out)
    return 0


def _read_lines(stream) -> Iterator[tuple[int, str]]:
    for lineno, line in enumerate(stream, start=1):
        if line.strip():
            yield lineno, line


def cmd_map(args, out, stdin) -> int:
    kind, fn = BIJECTIONS[args.bijection]
    for lineno, line in _read_lines(stdin):
        try:
            obj = jsonio.loads(kind, line)
        except (ValueError, TypeError, KeyError) as e:
            raise UsageError(f"line {lineno}: cannot read {kind}: {e}") from None
        print(jsonio.dumps(fn(obj)), file=out)
    return 0


def cmd_eval(args, out) -> int:
    counts = eval_class_expr(args.expr, args.order)
    if args.format == "plain":
        print(" ".join(str(c) for c in counts), file=out)
    else:
        print(json.dumps(counts.to_json()), file=out)
    return 0


def cmd_lyndon(args, out) -> int:
    text = args.word
    if text.lstrip().startswith("["):
        try:
            word = json.loads(text)
        except json.JSONDecodeError as e:
            raise UsageError(f"malformed JSON word: {e}") from None
        if not isinstance(word, list):
            raise UsageError("a JSON word must be an array")
        factors = cfl_factorize(word)
        print(json.dumps(factors, separators=(",", ":")), file=out)
        return 0
    factors = cfl_factorize(text)
    if args.format == "json":
        print(json.dumps([list(f) for f in factors]), file=out)
    else:
        print(".".join(factors), file=out)
    return 0


def cmd_verify(args, out) -> int:
    checks = verify.run(args.suite, args.max_n, args.seed)
    for c in checks:
        print(c.line(), file=out)
    failed = [c for c in checks if not c.ok]
    notes = sum(c.known_issue for c in checks)
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed, {notes} known issue(s)", file=out)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="combclass", description="Exact toolkit for labelled combinatorial classes.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="number of objects of degree n")
    c.add_argument("cls", type=_class_name, metavar="CLASS")
    c.add_argument("--n", type=_non_negative, required=True)
    c.add_argument("--format", choices=("plain", "json"), default="plain")

    e = sub.add_parser("enumerate", help="list every object of degree n as JSONL")
    e.add_argument("cls", type=_class_name, metavar="CLASS")
    e.add_argument("--n", type=_non_negative, required=True)
    e.add_argument("--format", choices=("jsonl", "json"), default="jsonl")
    e.add_argument("--force", action="store_true", help="lift the size cap")

    m = sub.add_parser("map", help="apply a bijection to a JSONL stream on stdin")
    m.add_argument("bijection", choices=tuple(BIJECTIONS))

    v = sub.add_parser("eval", help="counts of a class expression such as 'Set(Set(X)+)'")
    v.add_argument("expr")
    v.add_argument("--order", type=_non_negative, default=10)
    v.add_argument("--format", choices=("json", "plain"), default="json")

    ly = sub.add_parser("lyndon", help="Chen-Fox-Lyndon factorization of a word")
    ly.add_argument("word", help="letters as a string, or a JSON array")
    ly.add_argument("--format", choices=("plain", "json"), default="plain")

    vf = sub.add_parser("verify", help="run the brute-force verification suites")
    vf.add_argument("--suite", choices=("all",) + tuple(verify.SUITES), default="all")
    vf.add_argument("--max-n", type=_non_negative, default=5)
    vf.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None, stdout=None, stdin=None) -> int:
    out = stdout or sys.stdout
    stdin = stdin or sys.stdin
    for stream in (out, stdin):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        if args.command == "map":
            return cmd_map(args, out, stdin)
        handler = {
            "count": cmd_count,
            "enumerate": cmd_enumerate,
            "eval": cmd_eval,
            "lyndon": cmd_lyndon,
            "verify": cmd_verify,
        }[args.command]
        return handler(args, out)
    except (UsageError, ClassExprError) as e:
        print(f"combclass: error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
