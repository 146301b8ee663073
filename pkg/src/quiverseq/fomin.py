"""Diagrams with weakly increasing rows, exchange operations, and the
sign-reversing involution on pairs of tableaux.

Rows and columns of violations are 1-indexed, as in the literature.
"""

from __future__ import annotations

from functools import reduce
from typing import NamedTuple, Sequence

from .schur import ZERO, SignedSchur, straighten
from .tableau import (EMPTY, RectTableau, Tableau, attach, entries, fits_around, product,
                      shape, vertical_cut)

Row = tuple[int, ...]
Diagram = tuple[Row, ...]

MAX_EXCHANGES = 10**6


class Violation(NamedTuple):
    row: int
    col: int

    def order_key(self) -> tuple[int, int]:
        return (self.col - self.row, self.row)


class NoViolation(ValueError):
    pass


class NotInPa(ValueError):
    """The pair is outside the domain of the involution; ``reason`` says why."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def weak_row_diagram(rows: Sequence[Sequence[int]]) -> Diagram:
    d = tuple(tuple(r) for r in rows)
    for r in d:
        if any(x < 1 for x in r) or any(r[k] > r[k + 1] for k in range(len(r) - 1)):
            raise ValueError(f"row {list(r)} is not weakly increasing")
    return d


def rect_of(d: Sequence[Sequence[int]]) -> Tableau:
    """Multiply the rows together, bottom row first."""
    return reduce(lambda acc, row: product(acc, (tuple(row),) if row else EMPTY), reversed(d), EMPTY)


def s_of(d: Sequence[Sequence[int]]) -> SignedSchur:
    return straighten([len(r) for r in d])


def violations(d: Sequence[Sequence[int]]) -> list[Violation]:
    out = []
    for r in range(1, len(d)):
        up, row = d[r - 1], d[r]
        for c, x in enumerate(row):
            if c >= len(up) or up[c] >= x:
                out.append(Violation(r + 1, c + 1))
    out.sort(key=Violation.order_key)
    return out


def two_row_exchange(top: Sequence[int], bottom: Sequence[int]) -> tuple[Row, Row]:
    """The unique two-row diagram with the same rect and opposite S.

    Peels a horizontal strip of ``len(bottom) - 1`` boxes containing the whole
    second row off ``rect`` by inverse row bumping, right to left.
    """
    top, bottom = tuple(top), tuple(bottom)
    if not violations((top, bottom)):
        raise NoViolation(f"no violation in the second row of {[list(top), list(bottom)]}")
    p, q = len(top), len(bottom)
    rect = rect_of((top, bottom))
    first = list(rect[0])
    second = list(rect[1]) if len(rect) > 1 else []
    if len(rect) > 2 or len(second) > q - 1:
        raise AssertionError("rect of a two-row diagram with a violation has the wrong shape")
    bumped = [first.pop() for _ in range(q - 1 - len(second))]
    while second:
        x = second.pop()
        k = max(i for i, y in enumerate(first) if y < x)
        first[k], x = x, first[k]
        bumped.append(x)
    new_top, new_bottom = tuple(reversed(bumped)), tuple(first)
    assert len(new_top) == q - 1 and len(new_bottom) == p + 1
    return new_top, new_bottom


def exchange(d: Diagram, row: int) -> Diagram:
    """Exchange operation between rows ``row - 1`` and ``row`` (1-indexed)."""
    top, bottom = two_row_exchange(d[row - 2], d[row - 1])
    return d[: row - 2] + (top, bottom) + d[row:]


def pair_diagram(q: Tableau, p: Tableau, a: int) -> Diagram:
    """``p`` padded with empty rows to exactly ``a`` rows, then ``q``."""
    return tuple(p) + ((),) * (a - len(p)) + tuple(q)


def s_pair(q: Tableau, p: Tableau, a: int) -> SignedSchur:
    if len(p) > a:
        return ZERO
    return s_of(pair_diagram(q, p, a))


def check_pa(q: Tableau, p: Tableau, a: int) -> None:
    if a < 1:
        raise NotInPa("a must be positive")
    if len(p) > a:
        raise NotInPa(f"P has {len(p)} rows, more than a = {a}")
    d = pair_diagram(q, p, a)
    if s_of(d).is_zero:
        raise NotInPa("S vanishes")
    if not violations(d):
        raise NotInPa("P and Q fit together as a tableau")


def fomin_involution(q: Tableau, p: Tableau, a: int,
                     trace: list[Diagram] | None = None) -> tuple[Tableau, Tableau]:
    """Map ``(q, p)`` to ``(q', p')`` with ``q'*p' = q*p``, opposite S and the
    same first column of q.

    Exchange rows ``a, a+1``; while a violation remains outside row ``a+1``,
    exchange at the row of the smallest such violation and then at ``a, a+1``
    again. If ``trace`` is given, every diagram (the initial one included) is
    appended to it.
    """
    check_pa(q, p, a)
    d = pair_diagram(q, p, a)
    if trace is not None:
        trace.append(d)
    d = exchange(d, a + 1)
    steps = 1
    if trace is not None:
        trace.append(d)
    while True:
        outside = [v for v in violations(d) if v.row != a + 1]
        if not outside:
            break
        if steps + 2 > MAX_EXCHANGES:
            raise RuntimeError(f"no fixed point after {MAX_EXCHANGES} exchange operations")
        for row in (outside[0].row, a + 1):
            d = exchange(d, row)
            steps += 1
            if trace is not None:
                trace.append(d)
    new_p = tuple(r for r in d[:a] if r)
    new_q = tuple(r for r in d[a:] if r)
    return new_q, new_p


def attach_S(t: RectTableau, x: Tableau, y: Tableau) -> SignedSchur:
    """S of the diagram with ``t.body`` extended by ``y`` on top and ``x`` below."""
    if len(y) > t.a:
        raise ValueError(f"y has {len(y)} rows, more than a = {t.a}")
    top = t.max_entry
    if any(v <= top for v in entries(x)) or any(v <= top for v in entries(y)):
        raise ValueError("entries of x and y must exceed the rectangle's entries")
    ys = shape(y)
    return straighten([t.b + (ys[r] if r < len(ys) else 0) for r in range(t.a)] + list(shape(x)))


def involute_around_rect(t: RectTableau, x: Tableau, y: Tableau) -> tuple[Tableau, Tableau]:
    """Apply the involution to the part of ``x`` right of column ``b`` and to
    ``y``; the left ``b`` columns of ``x`` stay put."""
    if attach_S(t, x, y).is_zero:
        raise NotInPa("S vanishes")
    if fits_around(x, y, t):
        raise NotInPa("pair fits around the rectangle")
    x0, xt = vertical_cut(x, t.b)
    xt2, y2 = fomin_involution(xt, y, t.a)
    return product(x0, xt2), y2


def attach_rows(t: RectTableau, x: Tableau, y: Tableau) -> Diagram:
    return tuple(attach(t, x, y))
