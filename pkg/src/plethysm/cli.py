"""Command line front end.

Subcommands:

* decompose: list the constituents of S^k(S^m) or Λ^k(S^m) with their words.
* hwv: the words (optionally expanded to polynomials) for one weight.
* kostka: one Kostka number.
* verify: run the named self-check suite; exits 1 if anything fails.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import hwv, oracle, tableaux, verify


def _parse_ints(text: str, label: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"{label} must be comma-separated integers")
    return parts


def _partition_arg(text: str) -> tuple[int, ...]:
    parts = _parse_ints(text, "shape")
    try:
        tableaux.normalize_partition(parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return parts


def _content_arg(text: str) -> tuple[int, ...]:
    parts = _parse_ints(text, "content")
    if any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError("content entries must be nonnegative")
    return parts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plethysm",
        description="Exact decompositions of S^k(S^m(C^n)) and Λ^k(S^m(C^n)), k <= 3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_k: bool = True) -> None:
        if with_k:
            p.add_argument("--k", type=int, choices=(2, 3), default=3,
                           help="outer power (default 3)")
        p.add_argument("--m", type=int, required=True, help="inner symmetric power")
        p.add_argument("--variant", choices=("sym", "alt"), default="sym",
                       help="symmetric or alternating outer power")
        p.add_argument("--n", type=int, default=4,
                       help="ambient rank, only bounds validity (default 4)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--expand", action="store_true",
                       help="include expanded polynomials")
        p.add_argument("--output", help="write to this file instead of stdout")

    p_dec = sub.add_parser("decompose", help="full constituent list with words")
    common(p_dec)

    p_hwv = sub.add_parser("hwv", help="highest weight words for one weight")
    common(p_hwv)
    p_hwv.add_argument("--shape", type=_partition_arg, required=True,
                       help="target highest weight, e.g. 9,6")

    p_kostka = sub.add_parser("kostka", help="number of semistandard tableaux")
    p_kostka.add_argument("--shape", type=_partition_arg, required=True)
    p_kostka.add_argument("--content", type=_content_arg, required=True)
    p_kostka.add_argument("--output", help="write to this file instead of stdout")

    p_verify = sub.add_parser("verify", help="run the self-check suite")
    p_verify.add_argument("--m", type=int, default=3,
                          help="depth of the heavier checks (default 3)")
    p_verify.add_argument("--n", type=int, default=3,
                          help="ambient rank for oracle checks (default 3)")
    p_verify.add_argument("--max-dim", type=int, default=None,
                          help="kernel size bound (default PLETHYSM_MAX_DIM or 2000)")
    p_verify.add_argument("--force-printed-discriminant", action="store_true",
                          help="assert the gamma1 form of the discriminant "
                               "identity instead, which fails")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--output", help="write to this file instead of stdout")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _validate_common(parser: argparse.ArgumentParser, args) -> None:
    if args.m < 0:
        parser.error("--m must be nonnegative")
    if args.variant == "alt" and args.m < 1:
        parser.error("the alternating component needs --m >= 1")
    if args.n < args.k:
        parser.error(f"--n must be at least k = {args.k}")


def cmd_decompose(parser: argparse.ArgumentParser, args) -> int:
    _validate_common(parser, args)
    report = hwv.decompose(args.k, args.m, args.variant)
    if args.format == "json":
        obj = report.to_json_obj()
        if args.expand:
            for entry, enc in zip(report.entries, obj["entries"]):
                for word, wenc in zip(entry.words, enc["words"]):
                    wenc["polynomial"] = word.expand().to_json_obj()
        _emit(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", args.output)
    else:
        _emit(report.to_text(expand=args.expand) + "\n", args.output)
    return 0


def cmd_hwv(parser: argparse.ArgumentParser, args) -> int:
    _validate_common(parser, args)
    shape = tableaux.normalize_partition(args.shape)
    if len(shape) > args.k:
        parser.error(f"--shape has more than k = {args.k} rows; no words exist")
    if sum(shape) != args.k * args.m:
        parser.error(f"|shape| must equal k*m = {args.k * args.m}")
    if args.k == 3:
        words = hwv.words_for_weight(args.m, shape, args.variant)
    else:
        words = [
            w for w in hwv.enumerate_basis_k2(args.m, args.variant)
            if w.diagram() == shape
        ]
    if args.format == "json":
        obj = {
            "k": args.k,
            "m": args.m,
            "variant": args.variant,
            "shape": list(shape),
            "words": [w.to_json_obj() for w in words],
        }
        if args.expand:
            for word, wenc in zip(words, obj["words"]):
                wenc["polynomial"] = word.expand().to_json_obj()
        _emit(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", args.output)
    else:
        lines = []
        for word in words:
            lines.append(f"{word}  grade={word.grade()}  "
                         f"weight=({','.join(map(str, word.weight()))})")
            if args.expand:
                lines.append(f"  = {word.expand()}")
        _emit("".join(line + "\n" for line in lines), args.output)
    return 0


def cmd_kostka(parser: argparse.ArgumentParser, args) -> int:
    value = tableaux.kostka(args.shape, args.content)
    _emit(f"{value}\n", args.output)
    return 0


def cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    if args.m < 0:
        parser.error("--m must be nonnegative")
    if args.n < 3:
        parser.error("--n must be at least 3")
    max_dim = args.max_dim
    if max_dim is None:
        max_dim = int(os.environ.get("PLETHYSM_MAX_DIM", "2000"))
    results = verify.run_verification(
        m_max=args.m, n=args.n, max_dim=max_dim,
        force_gamma1_variant=args.force_printed_discriminant,
    )
    ok = all(r.passed for r in results)
    if args.format == "json":
        obj = {
            "passed": ok,
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        _emit(json.dumps(obj, indent=2, ensure_ascii=False) + "\n", args.output)
    else:
        lines = [
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
        ]
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
        _emit("".join(line + "\n" for line in lines), args.output)
    return 0 if ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "decompose": cmd_decompose,
        "hwv": cmd_hwv,
        "kostka": cmd_kostka,
        "verify": cmd_verify,
    }
    return handlers[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
