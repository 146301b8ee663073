"""Tableau diagrams and factor sequences for paths through the rank diagram.

Enumeration, membership and sampling all lower a path with the same rule as
:func:`quiverseq.diagrams.compute_P` (leftmost reducible step by default).
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .diagrams import (Cell, RectDiagram, flat_rect, lower, lowest_path, reducible,
                       reduction_chain, validate_path)
from .schur import Partition
from .tableau import (EMPTY, RectTableau, Tableau, all_factorizations, canonical_factorization,
                      contains_rectangle, entries, multiply, product, shape, tableau)

Labels = tuple[Tableau, ...]


@dataclass(frozen=True)
class TableauDiagram:
    n: int
    fill: Mapping[Cell, RectTableau] = field(hash=False)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.fill.items(), key=lambda kv: kv[0]))))

    def __eq__(self, other):
        if not isinstance(other, TableauDiagram):
            return NotImplemented
        return self.n == other.n and dict(self.fill) == dict(other.fill)

    @property
    def rect_diagram(self) -> RectDiagram:
        return RectDiagram(self.n, {c: (t.a, t.b) for c, t in self.fill.items()})

    def to_json(self) -> dict:
        return {"n": self.n, "fill": {f"{i},{j}": t.to_json() for (i, j), t in sorted(self.fill.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "TableauDiagram":
        fill = {}
        for key, v in data["fill"].items():
            i, j = (int(s) for s in key.split(","))
            fill[(i, j)] = RectTableau.from_json(v)
        return cls(int(data["n"]), fill)


def above(i: int, j: int) -> Iterable[Cell]:
    """Rectangles above ``R_ij`` within the 45 degree cone."""
    for k in range(i, j):
        for l in range(k + 1, j + 1):
            if (k, l) != (i, j):
                yield (k, l)


def validate_filling(td: TableauDiagram) -> bool:
    rd = td.rect_diagram
    if set(td.fill) != set(rd.dims):
        return False
    for (i, j), t in td.fill.items():
        low = min(entries(t.body), default=None)
        if low is None:
            continue
        for c in above(i, j):
            if max(entries(td.fill[c].body), default=0) >= low:
                return False
    return True


def canonical_filling(rd: RectDiagram) -> TableauDiagram:
    """Row ``t`` of each rectangle is constant ``m + t``, where ``m`` is one
    more than the largest entry in the cone above it."""
    fill: dict[Cell, RectTableau] = {}
    for i, j in rd.cells():
        m = 1 + max((fill[c].max_entry for c in above(i, j)), default=0)
        a, b = rd.dims[(i, j)]
        body = tuple((m + t,) * b for t in range(a)) if b else EMPTY
        fill[(i, j)] = RectTableau(a, b, body)
    return TableauDiagram(rd.n, fill)


def random_filling(rd: RectDiagram, rng: random.Random, slack: int = 2) -> TableauDiagram:
    """Like :func:`canonical_filling` but each rectangle is a random
    semistandard filling using values ``m .. m + a - 1 + slack``."""
    fill: dict[Cell, RectTableau] = {}
    for i, j in rd.cells():
        m = 1 + max((fill[c].max_entry for c in above(i, j)), default=0)
        a, b = rd.dims[(i, j)]
        top = m + a - 1 + rng.randint(0, slack)
        rows: list[tuple[int, ...]] = []
        if b:
            for t in range(a):
                hi = top - (a - 1 - t)
                row: list[int] = []
                for c in range(b):
                    lo = max(row[-1] if row else m, rows[-1][c] + 1 if rows else m)
                    row.append(rng.randint(lo, hi))
                rows.append(tuple(row))
        fill[(i, j)] = RectTableau(a, b, tuple(rows))
    return TableauDiagram(rd.n, fill)


@dataclass(frozen=True)
class FactorSequence:
    path: str
    labels: Labels

    def __post_init__(self):
        if len(self.labels) != len(self.path):
            raise ValueError(f"{len(self.labels)} labels for a path of length {len(self.path)}")

    @property
    def shapes(self) -> tuple[Partition, ...]:
        return tuple(shape(w) for w in self.labels)

    def to_json(self) -> dict:
        return {"path": self.path, "labels": [[list(r) for r in w] for w in self.labels]}

    @classmethod
    def from_json(cls, data: dict) -> "FactorSequence":
        return cls(data["path"], tuple(tableau(w) for w in data["labels"]))


def _merge(labels: Labels, k: int, t: RectTableau) -> Labels:
    q, p = labels[k], labels[k + 1]
    return labels[:k] + (multiply(q, t.body, p),) + labels[k + 2:]


def enumerate_factor_sequences(word: str, td: TableauDiagram, order: str = "leftmost") -> set[FactorSequence]:
    validate_path(word, td.n)
    memo: dict[str, set[Labels]] = {}

    def rec(w: str) -> set[Labels]:
        if w in memo:
            return memo[w]
        step = reducible(w, order)
        if step is None:
            out = {(EMPTY,) * len(w)}
        else:
            k, kind = step
            below = rec(lower(w, k, kind))
            out = set()
            if kind == "peak":
                for labels in below:
                    for p, q in all_factorizations(labels[k]):
                        out.add(labels[:k] + (p, q) + labels[k + 1:])
            else:
                t = td.fill[flat_rect(w, k)]
                out = {_merge(labels, k, t) for labels in below}
        memo[w] = out
        return out

    return {FactorSequence(word, labels) for labels in rec(word)}


def is_factor_sequence(fs: FactorSequence, td: TableauDiagram) -> bool:
    """Membership by undoing the construction one step at a time, using the
    canonical factorization at every flat step."""
    validate_path(fs.path, td.n)
    word, labels = fs.path, fs.labels
    while True:
        step = reducible(word)
        if step is None:
            return all(w == EMPTY for w in labels)
        k, kind = step
        if kind == "peak":
            labels = labels[:k] + (product(labels[k], labels[k + 1]),) + labels[k + 2:]
        else:
            t = td.fill[flat_rect(word, k)]
            if not contains_rectangle(labels[k], t):
                return False
            q, p = canonical_factorization(labels[k], t)
            labels = labels[:k] + (q, p) + labels[k + 1:]
        word = lower(word, k, kind)


def sample_factor_sequence(word: str, td: TableauDiagram, seed: int | random.Random) -> FactorSequence:
    """Build one factor sequence from the lowest path upwards, choosing each
    factorization uniformly at random."""
    validate_path(word, td.n)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    labels: Labels = (EMPTY,) * len(lowest_path(td.n))
    for w, k, kind in reversed(reduction_chain(word)):
        if kind == "peak":
            p, q = rng.choice(all_factorizations(labels[k]))
            labels = labels[:k] + (p, q) + labels[k + 1:]
        else:
            labels = _merge(labels, k, td.fill[flat_rect(w, k)])
    return FactorSequence(word, labels)


def shape_census(seqs: Iterable[FactorSequence]) -> dict[tuple[Partition, ...], int]:
    return dict(Counter(fs.shapes for fs in seqs))
