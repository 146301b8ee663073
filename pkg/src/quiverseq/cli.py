"""Command line front end.

    quiverseq coeffs --rank-file r.json --path HHH
    quiverseq factor-seqs --rank-file r.json --path HHH --filling canonical
    quiverseq verify-conj1 --rank-file r.json
    quiverseq verify-conj1 --exhaustive 3 --max-rank 3
    quiverseq fuzz-conj2 --trials 1000 --max-rows 5 --max-dim 2 --seed 42
    quiverseq involution --pair-file pair.json --trace

Exit codes: 0 success, 1 mismatch or counterexample, 2 bad rank
conditions or input file, 3 bad path, 4 pair outside the involution's domain.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from typing import Any, TextIO

from .diagrams import (InvalidPath, InvalidRankConditions, RankConditions, RectDiagram,
                       compute_P, normalize_path, rect_diagram_of, top_path, validate_path,
                       validate_rect_diagram)
from .factor import TableauDiagram, enumerate_factor_sequences, shape_census, validate_filling
from .fomin import NotInPa, fomin_involution, s_pair
from .tableau import tableau
from .verify import (DEFAULT_ATTEMPTS, make_filling, fuzz_conj2, run_trial, summarize,
                     verify_conj1, verify_conj1_exhaustive)

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_PATH = 3
EXIT_DOMAIN = 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def dump(obj: Any, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


@contextmanager
def output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as fh:
            yield fh


def _load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_INPUT, f"{path} is not valid JSON: {exc}") from exc


def load_rect_diagram(args) -> RectDiagram:
    if bool(args.rank_file) == bool(args.rect_file):
        raise CliError(EXIT_INPUT, "give exactly one of --rank-file and --rect-file")
    try:
        if args.rank_file:
            data = _load_json(args.rank_file)
            rc = RankConditions.from_rows(data) if isinstance(data, list) else RankConditions.from_json(data)
            return rect_diagram_of(rc)
        rd = RectDiagram.from_json(_load_json(args.rect_file))
    except (InvalidRankConditions, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CliError):
            raise
        raise CliError(EXIT_INPUT, f"invalid diagram input: {exc}") from exc
    if not validate_rect_diagram(rd):
        raise CliError(EXIT_INPUT, "rectangle diagram violates the monotonicity conditions")
    return rd


def load_filling(spec: str, rd: RectDiagram, seed: int) -> TableauDiagram:
    if spec.startswith("file:"):
        try:
            data = _load_json(spec[5:])
            td = TableauDiagram.from_json(data.get("filling", data))
        except (AttributeError, KeyError, TypeError, ValueError) as exc:
            raise CliError(EXIT_INPUT, f"invalid filling file: {exc}") from exc
        if td.rect_diagram != rd:
            raise CliError(EXIT_INPUT, "filling does not match the rectangle diagram")
        if not validate_filling(td):
            raise CliError(EXIT_INPUT, "filling is not a tableau diagram")
        return td
    try:
        return make_filling(rd, spec, seed)
    except ValueError as exc:
        raise CliError(EXIT_INPUT, str(exc)) from exc


def get_path(args, rd: RectDiagram) -> str:
    word = normalize_path(args.path) if args.path is not None else top_path(rd.n)
    try:
        validate_path(word, rd.n)
    except InvalidPath as exc:
        raise CliError(EXIT_PATH, str(exc)) from exc
    return word


# --- commands ----------------------------------------------------------------

def cmd_coeffs(args) -> int:
    rd = load_rect_diagram(args)
    word = get_path(args, rd)
    with output(args.out) as out:
        dump({"path": word, "terms": compute_P(word, rd).to_json()}, out)
    return 0


def cmd_factor_seqs(args) -> int:
    rd = load_rect_diagram(args)
    word = get_path(args, rd)
    td = load_filling(args.filling, rd, args.seed)
    seqs = enumerate_factor_sequences(word, td)
    census = shape_census(seqs)
    rows = sorted(fs.to_json()["labels"] for fs in seqs)
    with output(args.out) as out:
        dump({"path": word, "filling": td.to_json(), "count": len(rows), "sequences": rows,
              "census": [{"shapes": [list(p) for p in k], "count": c} for k, c in sorted(census.items())]},
             out)
    return 0


def cmd_verify_conj1(args) -> int:
    if args.exhaustive is not None:
        res = verify_conj1_exhaustive(args.exhaustive, args.max_rank)
        with output(args.out) as out:
            dump(res, out)
        return EXIT_MISMATCH if res["mismatches"] else 0
    rd = load_rect_diagram(args)
    word = get_path(args, rd)
    td = load_filling(args.filling, rd, args.seed)
    report = verify_conj1(word, td)
    with output(args.out) as out:
        dump(report.to_json(), out)
    return 0 if report.match else EXIT_MISMATCH


def cmd_fuzz_conj2(args) -> int:
    if args.trials < 1:
        raise CliError(EXIT_INPUT, "--trials must be at least 1")
    if args.replay is not None:
        reports = [run_trial(args.replay, args.max_rows, args.max_dim, None, args.attempts)]
    else:
        reports = fuzz_conj2(args.trials, args.max_rows, args.max_dim, args.seed,
                             workers=args.workers, attempts=args.attempts)
    seen = []
    with output(args.out) as out:
        for r in reports:
            dump(r, out)
            seen.append({"verdict": r["verdict"], "checks": r.get("checks", 0), "reason": r.get("reason")})
        summary = summarize(seen)
        dump({"summary": summary}, out)
    if args.out:
        dump({"summary": summary}, sys.stdout)
    return EXIT_MISMATCH if summary["counterexamples"] else 0


def cmd_involution(args) -> int:
    data = _load_json(args.pair_file)
    try:
        q, p, a = tableau(data["q"]), tableau(data["p"]), int(data["a"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"invalid pair file: {exc}") from exc
    trace: list | None = [] if args.trace else None
    try:
        q2, p2 = fomin_involution(q, p, a, trace)
    except NotInPa as exc:
        raise CliError(EXIT_DOMAIN, f"pair is not in P_{a}: {exc.reason}") from exc
    res: dict[str, Any] = {
        "q": [list(r) for r in q2], "p": [list(r) for r in p2], "a": a,
        "S_before": s_pair(q, p, a).to_json(), "S_after": s_pair(q2, p2, a).to_json(),
    }
    if trace is not None:
        res["trace"] = [[list(r) for r in d] for d in trace]
        res["exchanges"] = len(trace) - 1
    with output(args.out) as out:
        dump(res, out)
    return 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverseq", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_opts(p):
        p.add_argument("--rank-file", help="rank conditions as JSON {\"n\", \"rows\"} or a list of rows")
        p.add_argument("--rect-file", help="rectangle diagram as JSON {\"n\", \"rects\"}")
        p.add_argument("--path", help="path word over D, U, H (F also means H; default: top path)")
        p.add_argument("--out", help="write JSON here instead of standard output")

    def filling_opts(p):
        p.add_argument("--filling", default="canonical", help="canonical, random or file:F")
        p.add_argument("--seed", type=int, default=0, help="seed for --filling random")

    p = sub.add_parser("coeffs", help="coefficients of P for a path")
    diagram_opts(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("factor-seqs", help="list factor sequences and their shape census")
    diagram_opts(p)
    filling_opts(p)
    p.set_defaults(func=cmd_factor_seqs)

    p = sub.add_parser("verify-conj1", help="compare coefficients with factor sequence counts")
    diagram_opts(p)
    filling_opts(p)
    p.add_argument("--exhaustive", type=int, metavar="N",
                   help="check the top path for every rank condition with n <= N")
    p.add_argument("--max-rank", type=int, default=3, help="rank bound for --exhaustive")
    p.set_defaults(func=cmd_verify_conj1)

    p = sub.add_parser("fuzz-conj2", help="random trials of the involution on factor sequences")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-rows", type=int, default=5)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--attempts", type=int, default=DEFAULT_ATTEMPTS,
                   help="draws of (path, valley, sequence) per diagram")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--replay", type=int, metavar="TRIAL_SEED",
                   help="rerun the single trial recorded with this seed")
    p.add_argument("--out", help="write JSONL here; the summary also goes to standard output")
    p.set_defaults(func=cmd_fuzz_conj2)

    p = sub.add_parser("involution", help="apply the involution to a pair (q, p)")
    p.add_argument("--pair-file", required=True, help="JSON {\"q\": rows, \"p\": rows, \"a\": int}")
    p.add_argument("--trace", action="store_true", help="include every intermediate diagram")
    p.add_argument("--out")
    p.set_defaults(func=cmd_involution)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
