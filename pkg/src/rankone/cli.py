"""Command-line surface.

Exit codes: 0 all verdicts determined, 1 input error, 2 some verdict
undetermined, 3 internal inconsistency (a dichotomy violation, which must
never occur on sound inputs).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import Budgets, classify
from .codes import apply_code, load_code
from .construction import (
    build_vn,
    dump_params,
    load_params,
    scan_decomposition,
    telescope,
)
from .errors import InternalInconsistencyError, NoParseError, RankOneError
from .experiment import ExperimentAbort, config_from_dict, run_experiment
from .words import Word

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNDETERMINED = 2
EXIT_INCONSISTENT = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None


def _load_params(path: str):
    try:
        return load_params(_read(path))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise ValueError(f"{path}: {exc}") from None


def _load_code(path: str):
    try:
        return load_code(_read(path))
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise ValueError(f"{path}: {exc}") from None


def cmd_build(args) -> int:
    params = _load_params(args.params)
    word = build_vn(params, args.n)
    if args.json:
        print(json.dumps({"n": args.n, "word": word.to_string(), "length": len(word)}))
    else:
        print(word.to_string())
        print(len(word))
    return EXIT_OK


def cmd_telescope(args) -> int:
    params = _load_params(args.params)
    try:
        indices = [int(part) for part in args.indices.split(",")]
    except ValueError:
        raise ValueError(f"indices must be a comma-separated integer list, got {args.indices!r}")
    result = telescope(params, indices)
    sys.stdout.write(dump_params(result))
    return EXIT_OK


def cmd_code_apply(args) -> int:
    code = _load_code(args.code)
    if args.word is not None:
        word = Word.from_string(args.word)
    elif args.params is not None and args.n is not None:
        word = build_vn(_load_params(args.params), args.n)
    else:
        raise ValueError("code-apply needs either --word or both --params and --n")
    image = apply_code(code, word)
    if args.json:
        print(json.dumps({"word": image.to_string(), "length": len(image)}))
    else:
        print(image.to_string())
        print(len(image))
    return EXIT_OK


def cmd_parse(args) -> int:
    params = _load_params(args.params)
    word = Word.from_string(args.word)
    try:
        parses = scan_decomposition(params, args.level, word)
    except NoParseError as exc:
        if args.json:
            print(json.dumps({"level": args.level, "parses": []}))
        else:
            print(f"no parse: {exc}")
        return EXIT_OK
    if args.json:
        print(
            json.dumps(
                {
                    "level": args.level,
                    "parses": [
                        {"starts": list(d.starts), "spacers": list(d.spacers)} for d in parses
                    ],
                }
            )
        )
    else:
        for d in parses:
            print(f"starts {list(d.starts)} spacers {list(d.spacers)}")
    return EXIT_OK


def _budgets_from_args(args) -> Budgets:
    k_lo, _, k_hi = args.budget_k_range.partition(":")
    return Budgets(
        n_max=args.budget_n_max,
        p_max=args.budget_p_max,
        M_max=args.budget_m_max,
        probe_length=args.budget_probe_length,
        K_range=(int(k_lo), int(k_hi)),
    )


def cmd_classify(args) -> int:
    params = _load_params(args.params)
    code = _load_code(args.code)
    result = classify(code, params, _budgets_from_args(args))
    if args.json:
        print(json.dumps(result.to_dict(), sort_keys=True))
    else:
        if result.verdict == "finite":
            print(f"Finite period={result.period}")
        elif result.verdict == "trivial":
            print("Trivial")
        elif result.verdict == "isomorphic":
            print(f"Isomorphic margin={result.margin} probe_length={result.probe_length}")
        else:
            print(f"Undetermined: {result.reason}")
    return EXIT_UNDETERMINED if result.verdict == "undetermined" else EXIT_OK


def cmd_experiment(args) -> int:
    base = Path(args.config).parent
    try:
        doc = json.loads(_read(args.config))
        config = config_from_dict(doc, read_file=lambda rel: (base / rel).read_text())
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise ValueError(f"{args.config}: {exc}") from None
    if args.seed is not None:
        doc["master_seed"] = args.seed
        config = config_from_dict(doc, read_file=lambda rel: (base / rel).read_text())
    try:
        report = run_experiment(config, jobs=args.jobs)
    except ExperimentAbort as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        sys.stderr.write(json.dumps(exc.bundle, sort_keys=True, indent=2) + "\n")
        return EXIT_INCONSISTENT
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"report written to {args.out}")
    else:
        sys.stdout.write(text)
    print(f"body sha256/16: {report['body_hash']}", file=sys.stderr)
    counts = report["body"]["counts"]
    return EXIT_UNDETERMINED if counts["undetermined"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rankone",
        description="Construct rank-one subshift words, apply sliding block codes, classify factors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="print the stage-n word")
    p.add_argument("--params", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("telescope", help="compose stages along an index subsequence")
    p.add_argument("--params", required=True)
    p.add_argument("--indices", required=True, help="comma-separated, starting at 0")
    p.set_defaults(func=cmd_telescope)

    p = sub.add_parser("code-apply", help="apply a sliding block code to a word")
    p.add_argument("--code", required=True)
    p.add_argument("--word")
    p.add_argument("--params")
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_code_apply)

    p = sub.add_parser("parse", help="decompose a window into level-n blocks and 1-runs")
    p.add_argument("--params", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("classify", help="classify the factor induced by a code")
    p.add_argument("--params", required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--budget-n-max", type=int, default=6)
    p.add_argument("--budget-p-max", type=int, default=None)
    p.add_argument("--budget-m-max", type=int, default=8)
    p.add_argument("--budget-probe-length", type=int, default=None)
    p.add_argument("--budget-k-range", default="-3:3", help="lo:hi")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("experiment", help="run a seeded batch of classifications")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=None, help="override the master seed")
    p.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistencyError as exc:
        sys.stderr.write(f"internal inconsistency: {exc}\n")
        return EXIT_INCONSISTENT
    except (RankOneError, ValueError, IndexError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
