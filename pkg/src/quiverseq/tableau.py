"""Semistandard tableaux in English notation and the plactic product.

A tableau is a tuple of rows (top row first), each row a tuple of positive
ints. The empty tableau is ``()``. Rows are never empty.
"""

from __future__ import annotations

from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .schur import Partition

Tableau = tuple[tuple[int, ...], ...]

EMPTY: Tableau = ()


def tableau(rows: Iterable[Iterable[int]]) -> Tableau:
    """Build a tableau from nested iterables, dropping empty rows."""
    t = tuple(tuple(r) for r in rows)
    t = tuple(r for r in t if r)
    if not is_tableau(t):
        raise ValueError(f"not a semistandard tableau: {format_tableau(t)}")
    return t


def is_tableau(rows: Sequence[Sequence[int]]) -> bool:
    """Weakly increasing rows, strictly increasing columns, partition shape.

    Empty rows are only allowed at the bottom.
    """
    prev = None
    for row in rows:
        if any(x < 1 for x in row):
            return False
        if any(row[k] > row[k + 1] for k in range(len(row) - 1)):
            return False
        if prev is not None:
            if len(row) > len(prev):
                return False
            if any(prev[k] >= row[k] for k in range(len(row))):
                return False
        prev = row
    return True


def shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def size(t: Tableau) -> int:
    return sum(len(r) for r in t)


def content(t: Tableau) -> Counter:
    return Counter(x for r in t for x in r)


def entries(t: Tableau) -> Iterator[int]:
    for r in t:
        yield from r


def reading_word(t: Tableau) -> tuple[int, ...]:
    """Rows left to right, bottom row first."""
    return tuple(x for r in reversed(t) for x in r)


def format_tableau(t) -> str:
    return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in t) + "]"


def row_insert(t: Tableau, x: int) -> Tableau:
    rows = [list(r) for r in t]
    for r in rows:
        k = bisect_right(r, x)
        if k == len(r):
            r.append(x)
            return tuple(tuple(r) for r in rows)
        r[k], x = x, r[k]
    rows.append([x])
    return tuple(tuple(r) for r in rows)


@lru_cache(maxsize=1 << 16)
def product(t: Tableau, u: Tableau) -> Tableau:
    """The plactic product ``t*u``: row insert the reading word of ``u`` into ``t``."""
    for x in reading_word(u):
        t = row_insert(t, x)
    return t


def multiply(*factors: Tableau) -> Tableau:
    return reduce(product, factors, EMPTY)


def horizontal_cut(t: Tableau, a: int) -> tuple[Tableau, Tableau]:
    """Split ``t`` after row ``a`` into ``(bottom, top)`` with ``t = bottom*top``."""
    return t[a:], t[:a]


def vertical_cut(t: Tableau, b: int) -> tuple[Tableau, Tableau]:
    """Split ``t`` after column ``b`` into ``(left, right)`` with ``t = left*right``."""
    left = tuple(r[:b] for r in t if b > 0)
    right = tuple(r[b:] for r in t if len(r) > b)
    return left, right


def column(t: Tableau, c: int) -> tuple[int, ...]:
    return tuple(r[c] for r in t if len(r) > c)


@dataclass(frozen=True)
class RectTableau:
    """A tableau of rectangular shape ``(b)^a``.

    ``a`` is kept even when ``b == 0``, since cuts depend on it.
    """

    a: int
    b: int
    body: Tableau = EMPTY

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("rectangle sides must be nonnegative")
        want = (self.b,) * self.a if self.b else ()
        if shape(self.body) != want:
            raise ValueError(f"body {format_tableau(self.body)} is not a {self.a}x{self.b} rectangle")
        if not is_tableau(self.body):
            raise ValueError("rectangle body is not semistandard")

    @property
    def max_entry(self) -> int:
        return max(entries(self.body), default=0)

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, "body": [list(r) for r in self.body]}

    @classmethod
    def from_json(cls, data: dict) -> "RectTableau":
        return cls(int(data["a"]), int(data["b"]), tableau(data.get("body", [])))


class NotContained(ValueError):
    pass


def contains_rectangle(w: Tableau, t: RectTableau) -> bool:
    """Whether ``w`` has ``t.body`` in its upper-left ``a x b`` corner."""
    if t.b == 0 or t.a == 0:
        return True
    if len(w) < t.a:
        return False
    return all(w[r][: t.b] == t.body[r] for r in range(t.a))


def canonical_factorization(w: Tableau, t: RectTableau) -> tuple[Tableau, Tableau]:
    """``(q, p)`` with ``w = q*t*p``: horizontal cut after row a, then a
    vertical cut of the top part after column b."""
    if not contains_rectangle(w, t):
        raise NotContained(f"{format_tableau(w)} does not contain {format_tableau(t.body)}")
    bottom, top = horizontal_cut(w, t.a)
    _, right = vertical_cut(top, t.b)
    return bottom, right


def attach(t: RectTableau, x: Tableau, y: Tableau) -> list[tuple[int, ...]]:
    """Rows of the diagram with ``t.body`` extended by ``y`` in the top ``a``
    rows and ``x`` below; top rows may be empty when ``b == 0``."""
    if len(y) > t.a:
        raise ValueError("y has more rows than the rectangle")
    top = []
    for r in range(t.a):
        left = t.body[r] if t.body else ()
        top.append(left + (y[r] if r < len(y) else ()))
    return top + [tuple(r) for r in x]


def fits_around(q: Tableau, p: Tableau, t: RectTableau) -> bool:
    if len(p) > t.a:
        return False
    rows = attach(t, q, p)
    while rows and not rows[-1]:
        rows.pop()
    if any(not r for r in rows):
        return False
    return is_tableau(rows)


# --- enumeration -------------------------------------------------------------

def _strips(t: Tableau) -> Iterator[tuple[tuple[int, int], ...]]:
    """Nonempty horizontal strips removable from shape(t), listed as cells in
    right-to-left order."""
    lam = shape(t)
    choices = []
    for r, length in enumerate(lam):
        below = lam[r + 1] if r + 1 < len(lam) else 0
        choices.append(range(length - below + 1))

    def rec(r: int) -> Iterator[list[int]]:
        if r == len(lam):
            yield []
            return
        for k in choices[r]:
            for rest in rec(r + 1):
                yield [k] + rest

    for ks in rec(0):
        if not any(ks):
            continue
        cells = []
        for r, k in enumerate(ks):
            for c in range(lam[r] - 1, lam[r] - 1 - k, -1):
                cells.append((r, c))
        cells.sort(key=lambda rc: -rc[1])
        yield tuple(cells)


def _reverse_bump(rows: list[list[int]], r: int) -> int:
    """Remove the last box of row ``r`` and bump it up to the top row."""
    x = rows[r].pop()
    for s in range(r - 1, -1, -1):
        row = rows[s]
        # largest entry strictly less than x
        k = max(i for i, y in enumerate(row) if y < x)
        row[k], x = x, row[k]
    while rows and not rows[-1]:
        rows.pop()
    return x


def _unstrip(t: Tableau, cells) -> tuple[Tableau, tuple[int, ...]] | None:
    rows = [list(r) for r in t]
    out = []
    for r, _ in cells:
        out.append(_reverse_bump(rows, r))
    word = tuple(reversed(out))
    if any(word[k] > word[k + 1] for k in range(len(word) - 1)):
        return None
    return tuple(tuple(r) for r in rows), word


@lru_cache(maxsize=1 << 14)
def all_factorizations(w: Tableau) -> tuple[tuple[Tableau, Tableau], ...]:
    """Every pair ``(p, q)`` with ``p*q = w``.

    ``w = p * q_k * ... * q_1`` where ``q_1`` is the top row of ``q``; each
    row insertion adds a horizontal strip, so peel strips off ``w`` by
    reverse bumping and keep the sequences whose rows stack into a tableau.
    """
    out: list[tuple[Tableau, Tableau]] = []

    def rec(cur: Tableau, qrows: tuple[tuple[int, ...], ...]) -> None:
        out.append((cur, qrows))
        for cells in _strips(cur):
            if qrows:
                last = qrows[-1]
                if len(cells) > len(last):
                    continue
            res = _unstrip(cur, cells)
            if res is None:
                continue
            rest, row = res
            if qrows and any(last[c] >= row[c] for c in range(len(row))):
                continue
            rec(rest, qrows + (row,))

    rec(w, ())
    return tuple(out)


def factorizations(w: Tableau, sigma: Partition, tau: Partition) -> set[tuple[Tableau, Tableau]]:
    """Pairs ``(p, q)`` with ``p*q = w``, shape(p) = sigma, shape(q) = tau."""
    sigma, tau = tuple(sigma), tuple(tau)
    return {(p, q) for p, q in all_factorizations(w) if shape(p) == sigma and shape(q) == tau}


def ssyt(lam: Partition, alphabet: Sequence[int]) -> Iterator[Tableau]:
    """All semistandard tableaux of shape ``lam`` with entries from ``alphabet``."""
    letters = sorted(set(alphabet))

    def rec(r: int, above: tuple[int, ...] | None) -> Iterator[tuple[tuple[int, ...], ...]]:
        if r == len(lam):
            yield ()
            return
        for row in combinations_with_replacement(letters, lam[r]):
            if above is not None and any(above[c] >= row[c] for c in range(len(row))):
                continue
            for rest in rec(r + 1, row):
                yield (row,) + rest

    yield from rec(0, None)


def factorizations_brute(w: Tableau, sigma: Partition, tau: Partition) -> set[tuple[Tableau, Tableau]]:
    """Reference enumeration: try every q of shape tau on the content of w and
    every p of shape sigma on the complementary content."""
    cw = content(w)
    found = set()
    for q in ssyt(tau, list(cw)):
        cq = content(q)
        if cq - cw:
            continue
        rest = cw - cq
        for p in ssyt(sigma, list(rest)):
            if content(p) == rest and product(p, q) == w:
                found.add((p, q))
    return found


def simple_decomposition(w: Tableau, t: RectTableau) -> tuple[Tableau, Tableau, Tableau]:
    """``(q0, z, p0)``: q0 is the part of w below the rectangle, p0 the part to
    its right, z the part south-east of it (below p0, right of q0)."""
    if not contains_rectangle(w, t):
        raise NotContained(f"{format_tableau(w)} does not contain {format_tableau(t.body)}")
    bottom, top = horizontal_cut(w, t.a)
    q0, z = vertical_cut(bottom, t.b)
    _, p0 = vertical_cut(top, t.b)
    return q0, z, p0


def simple_factorizations(w: Tableau, t: RectTableau) -> set[tuple[Tableau, Tableau]]:
    """All ``(q, p)`` with ``q = q0*zq``, ``p = zp*p0`` for a factorization
    ``z = zq*zp``."""
    q0, z, p0 = simple_decomposition(w, t)
    return {(product(q0, zq), product(zp, p0)) for zq, zp in all_factorizations(z)}


def models_pairs(x: Tableau, y: Tableau, t: RectTableau) -> set[tuple[Tableau, Tableau]]:
    """Pairs reachable from ``(x, y)`` in one move around ``t``: a factor of
    the part of x beyond column b moves onto y, or a factor of the part of y
    below row a moves onto x."""
    top = t.max_entry
    if any(v <= top for v in entries(x)) or any(v <= top for v in entries(y)):
        raise ValueError("entries of x and y must exceed the rectangle's entries")
    x0, xt = vertical_cut(x, t.b)
    yt, y0 = horizontal_cut(y, t.a)
    out = set()
    for m, n in all_factorizations(xt):
        out.add((product(x0, m), product(n, y)))
    for m, n in all_factorizations(yt):
        out.add((product(x, m), product(n, y0)))
    return out
