"""Checks on factor sequences: exact comparison of
coefficients with factor-sequence counts, and randomized trials of the
involution on factor sequences."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Iterator

from .diagrams import (RankConditions, RectDiagram, compute_P, flat_rect, low_path, random_path,
                       random_rect_diagram, rect_diagram_of, validate_rank_conditions)
from .factor import (FactorSequence, TableauDiagram, canonical_filling,
                     enumerate_factor_sequences, is_factor_sequence, random_filling,
                     sample_factor_sequence, shape_census)
from .fomin import NotInPa, attach_S, involute_around_rect
from .tableau import fits_around, multiply

RNG_ALGORITHM = "python-random-mt19937"
DEFAULT_ATTEMPTS = 25


def _key_json(key) -> list[list[int]]:
    return [list(p) for p in key]


@dataclass
class Conj1Report:
    instance: dict
    coefficients: dict
    census: dict
    discrepancies: list = field(default_factory=list)

    @property
    def match(self) -> bool:
        return not self.discrepancies

    def to_json(self) -> dict:
        return {
            "instance": self.instance,
            "coefficients": [{"shapes": _key_json(k), "coeff": c} for k, c in sorted(self.coefficients.items())],
            "census": [{"shapes": _key_json(k), "count": c} for k, c in sorted(self.census.items())],
            "match": self.match,
            "discrepancies": self.discrepancies,
        }


def verify_conj1(word: str, td: TableauDiagram) -> Conj1Report:
    """Compare the coefficients of P_gamma with the shape census of the
    factor sequences for ``word``."""
    rd = td.rect_diagram
    coeffs = compute_P(word, rd).terms
    census = shape_census(enumerate_factor_sequences(word, td))
    bad = []
    for key in sorted(set(coeffs) | set(census)):
        c, m = coeffs.get(key, 0), census.get(key, 0)
        if c != m:
            bad.append({"shapes": _key_json(key), "coeff": c, "count": m})
    return Conj1Report({"path": word, "diagram": rd.to_json()}, coeffs, census, bad)


def all_rank_conditions(n: int, max_rank: int) -> Iterator[RankConditions]:
    """Every set of rank conditions for ``n + 1`` bundles with ranks at most
    ``max_rank`` that can occur."""
    def rec(cells, k, r):
        if k == len(cells):
            yield RankConditions(n, dict(r))
            return
        i, j = cells[k]
        if i == j:
            lo, hi = 0, max_rank
        else:
            hi = min(r[(i, j - 1)], r[(i + 1, j)])
            lo = 0
            if j - i >= 2:
                lo = max(0, r[(i, j - 1)] + r[(i + 1, j)] - r[(i + 1, j - 1)])
        for v in range(lo, hi + 1):
            r[(i, j)] = v
            yield from rec(cells, k + 1, r)
        r.pop((i, j), None)

    cells = [(i, i + d) for d in range(n + 1) for i in range(n + 1 - d)]
    for rc in rec(cells, 0, {}):
        assert validate_rank_conditions(rc)
        yield rc


def verify_conj1_exhaustive(max_n: int, max_rank: int) -> dict[str, Any]:
    """Top-path check for every rank condition; instances sharing a
    rectangle diagram share one computation."""
    seen: dict[RectDiagram, Conj1Report] = {}
    total = failures = 0
    failed = []
    for n in range(1, max_n + 1):
        for rc in all_rank_conditions(n, max_rank):
            rd = rect_diagram_of(rc)
            if rd not in seen:
                seen[rd] = verify_conj1("H" * n, canonical_filling(rd))
            total += 1
            if not seen[rd].match:
                failures += 1
                failed.append(rc.to_json())
    return {"rank_conditions": total, "diagrams": len(seen), "mismatches": failures,
            "failed": failed[:20]}


# --- randomized trials -----------------------------------------------------

def has_rect_strictly_below(rd: RectDiagram, i: int, j: int) -> bool:
    return any(rd.rows(k, l) and rd.cols(k, l)
               for k in range(i) for l in range(j + 1, rd.n + 1))


def trial_seed(seed: int, index: int) -> int:
    return seed * 1_000_003 + index


def _check_once(rng: random.Random, td: TableauDiagram) -> dict[str, Any]:
    """Draw a path with a valley, a factor sequence for it, and apply the
    involution at the valley if its hypotheses hold."""
    n = td.n
    rd = td.rect_diagram
    if n >= 3 and rng.random() < 0.5:
        i = rng.randint(1, n - 2)
        word = low_path(n, i, rng.randint(i, n - 2))
    else:
        word = random_path(n, rng, need_valley=True)
    valleys = [k for k in range(len(word) - 1) if word[k:k + 2] == "DU"]
    # a valley with nothing strictly below always fits, so prefer the others
    live = [k for k in valleys if has_rect_strictly_below(rd, *flat_rect(word, k))]
    k = rng.choice(live or valleys)
    fs = sample_factor_sequence(word, td, rng)
    t = td.fill[flat_rect(word, k)]
    x, y = fs.labels[k], fs.labels[k + 1]
    out: dict[str, Any] = {"path": word, "valley": k}
    if len(y) > t.a:
        out["skip"] = "Y has more rows than the rectangle"
    elif fits_around(x, y, t):
        out["skip"] = "pair fits around the rectangle"
    elif attach_S(t, x, y).is_zero:
        out["skip"] = "S vanishes"
    if "skip" in out:
        return out
    out["sequence"] = fs.to_json()
    try:
        x2, y2 = involute_around_rect(t, x, y)
    except NotInPa as exc:
        out["problems"] = [f"involution undefined: {exc.reason}"]
        return out
    new = FactorSequence(word, fs.labels[:k] + (x2, y2) + fs.labels[k + 2:])
    out["involuted"] = new.to_json()
    problems = []
    if multiply(x2, t.body, y2) != multiply(x, t.body, y):
        problems.append("product x*T*y changed")
    if attach_S(t, x2, y2) != -attach_S(t, x, y):
        problems.append("S did not change sign")
    if not is_factor_sequence(new, td):
        problems.append("result is not a factor sequence")
    out["problems"] = problems
    return out


def run_trial(seed: int, max_rows: int, max_dim: int, index: int | None = None,
              attempts: int = DEFAULT_ATTEMPTS) -> dict[str, Any]:
    """One random tableau diagram, checked with up to ``attempts`` random
    (path, valley, factor sequence) draws. Everything comes from
    ``random.Random(seed)``, so the seed alone replays the trial."""
    rng = random.Random(seed)
    n = rng.randint(min(2, max_rows), max_rows)
    rd = random_rect_diagram(n, max_dim, rng)
    td = random_filling(rd, rng)
    report: dict[str, Any] = {
        "trial": index, "seed": seed, "rng": RNG_ALGORITHM,
        "n": n, "dims": rd.to_json()["rects"], "attempts": attempts,
    }
    checks = 0
    reasons: dict[str, int] = {}
    last_path = None
    for _ in range(attempts):
        res = _check_once(rng, td)
        last_path = res["path"]
        if "skip" in res:
            reasons[res["skip"]] = reasons.get(res["skip"], 0) + 1
            continue
        checks += 1
        if res["problems"]:
            report.update(
                verdict="counterexample", path=res["path"], valley=res["valley"], checks=checks,
                reason="; ".join(res["problems"]),
                witness={"diagram": rd.to_json(), "filling": td.to_json(),
                         "sequence": res["sequence"], "involuted": res.get("involuted")},
            )
            return report
        last_path = res["path"]
    report["checks"] = checks
    report["path"] = last_path
    if checks:
        report["verdict"] = "ok"
    else:
        report.update(verdict="skipped-precondition",
                      reason=max(sorted(reasons), key=reasons.get))
    return report


def _trial_args(args):
    return run_trial(*args)


def fuzz_conj2(trials: int, max_rows: int, max_dim: int, seed: int,
               workers: int = 1, attempts: int = DEFAULT_ATTEMPTS) -> Iterator[dict[str, Any]]:
    """Yield trial reports in trial order."""
    jobs = [(trial_seed(seed, t), max_rows, max_dim, t, attempts) for t in range(trials)]
    if workers <= 1:
        for job in jobs:
            yield run_trial(*job)
        return
    from multiprocessing import Pool

    with Pool(workers) as pool:
        yield from pool.imap(_trial_args, jobs, chunksize=16)


def summarize(reports) -> dict[str, Any]:
    counts = {"ok": 0, "skipped": 0, "counterexamples": 0, "checks": 0}
    reasons: dict[str, int] = {}
    for r in reports:
        counts["checks"] += r.get("checks", 0)
        v = r["verdict"]
        if v == "ok":
            counts["ok"] += 1
        elif v == "counterexample":
            counts["counterexamples"] += 1
        else:
            counts["skipped"] += 1
            reasons[r["reason"]] = reasons.get(r["reason"], 0) + 1
    counts["skip_reasons"] = dict(sorted(reasons.items()))
    return counts


def make_filling(rd: RectDiagram, mode: str, seed: int = 0) -> TableauDiagram:
    if mode == "canonical":
        return canonical_filling(rd)
    if mode == "random":
        return random_filling(rd, random.Random(seed))
    raise ValueError(f"unknown filling mode {mode!r}")
