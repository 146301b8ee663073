import random
from collections import Counter
from itertools import combinations_with_replacement, product as cartesian

import pytest
from hypothesis import given, strategies as st

from quiverseq.fomin import (NotInPa, NoViolation, Violation, attach_S, check_pa, exchange,
                             fomin_involution, involute_around_rect, rect_of, s_of, s_pair,
                             two_row_exchange, violations, weak_row_diagram)
from quiverseq.schur import ZERO, SignedSchur, straighten
from quiverseq.tableau import EMPTY, RectTableau, column, fits_around, multiply, product
from strategies import random_tableau

Q = ((3, 5, 6, 7), (4,))
P = ((1, 3, 7, 8), (2, 4))
EXAMPLE_TRACE = [
    ((1, 3, 7, 8), (2, 4), (3, 5, 6, 7), (4,)),
    ((1, 3, 7, 8), (2, 4, 7), (3, 5, 6), (4,)),
    ((1, 3), (2, 4, 7, 7, 8), (3, 5, 6), (4,)),
    ((1, 3), (2, 4), (3, 5, 6, 7, 7, 8), (4,)),
]


def test_rect_and_s_examples():
    assert rect_of([[1, 3, 7, 8], [2, 4]]) == ((1, 3, 7, 8), (2, 4))
    assert rect_of([[2, 4], [3, 5, 6, 7]]) == ((2, 4, 6, 7), (3, 5))
    assert rect_of([[]]) == EMPTY and rect_of([]) == EMPTY
    assert s_of(EXAMPLE_TRACE[0]) == SignedSchur(-1, (4, 3, 3, 1))
    assert s_of(((1, 2), (3,))) == SignedSchur(1, (2, 1))
    assert s_of(((), (1,))) == ZERO
    with pytest.raises(ValueError):
        weak_row_diagram([[2, 1]])


def test_violation_examples():
    assert violations(EXAMPLE_TRACE[0]) == [Violation(3, 3), Violation(3, 4)]
    assert violations(((1, 2), (3,))) == []
    assert violations(EXAMPLE_TRACE[1])[:2] == [Violation(3, 3), Violation(2, 3)]


def test_two_row_exchange_examples():
    assert two_row_exchange((2, 4), (3, 5, 6, 7)) == ((2, 4, 7), (3, 5, 6))
    assert two_row_exchange((1, 3, 7, 8), (2, 4, 7)) == ((1, 3), (2, 4, 7, 7, 8))
    assert two_row_exchange((2, 4, 7, 7, 8), (3, 5, 6)) == ((2, 4), (3, 5, 6, 7, 7, 8))
    with pytest.raises(NoViolation):
        two_row_exchange((1, 2), (3,))


def _weak_rows(letters, length):
    return combinations_with_replacement(letters, length)


def _two_row_diagrams(max_boxes, max_entry):
    letters = range(1, max_entry + 1)
    for p in range(max_boxes):
        for q in range(1, max_boxes - p + 1):
            for top in _weak_rows(letters, p):
                for bottom in _weak_rows(letters, q):
                    if violations((top, bottom)):
                        yield top, bottom


def test_two_row_exchange_unique_solution():
    checked = 0
    for top, bottom in _two_row_diagrams(9, 3):
        p, q = len(top), len(bottom)
        target = rect_of((top, bottom))
        letters = Counter(top + bottom)
        found = []
        for new_top in set(_weak_rows(sorted(letters.elements()), q - 1)):
            rest = letters - Counter(new_top)
            if sum(rest.values()) != p + 1:
                continue
            new_bottom = tuple(sorted(rest.elements()))
            if rect_of((new_top, new_bottom)) == target:
                found.append((new_top, new_bottom))
        assert s_of((top, bottom)) == -straighten((q - 1, p + 1))
        assert found == [two_row_exchange(top, bottom)], (top, bottom)
        checked += 1
    assert checked > 1000


@given(st.lists(st.integers(1, 6), max_size=5), st.lists(st.integers(1, 6), min_size=1, max_size=5))
def test_two_row_exchange_properties(top, bottom):
    top, bottom = tuple(sorted(top)), tuple(sorted(bottom))
    vs = violations((top, bottom))
    if not vs:
        return
    new_top, new_bottom = two_row_exchange(top, bottom)
    assert rect_of((new_top, new_bottom)) == rect_of((top, bottom))
    assert s_of((new_top, new_bottom)) == -s_of((top, bottom))
    assert two_row_exchange(new_top, new_bottom) == (top, bottom)
    first = min(vs, key=lambda v: v.col)
    c = first.col - 1
    first2 = min(violations((new_top, new_bottom)), key=lambda v: v.col)
    assert first2.col == first.col and new_bottom[c] == bottom[c]
    assert new_top[:c] == top[:c] and new_bottom[:c] == bottom[:c]


def test_example_involution():
    trace = []
    q2, p2 = fomin_involution(Q, P, 2, trace)
    assert (q2, p2) == (((3, 5, 6, 7, 7, 8), (4,)), ((1, 3), (2, 4)))
    assert trace == EXAMPLE_TRACE
    assert len(trace) - 1 == 3
    assert product(Q, P) == product(q2, p2) == ((1, 3, 6, 7, 7, 8), (2, 4), (3, 5), (4,))
    assert s_pair(Q, P, 2) == SignedSchur(-1, (4, 3, 3, 1))
    assert s_pair(q2, p2, 2) == SignedSchur(1, (4, 3, 3, 1))
    assert fomin_involution(q2, p2, 2) == (Q, P)


def test_domain_errors():
    with pytest.raises(NotInPa, match="fit together"):
        fomin_involution(((3,),), ((1,), (2,)), 2)
    with pytest.raises(NotInPa, match="S vanishes"):
        fomin_involution(((2, 3),), ((1,),), 1)
    with pytest.raises(NotInPa, match="rows"):
        fomin_involution(((3,),), ((1,), (2,)), 1)


def random_pa_pairs(count, seed=2024, max_boxes=12, max_a=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        budget = rng.randint(1, max_boxes)
        p = random_tableau(rng, rng.randint(0, budget), 7)
        q = random_tableau(rng, budget - sum(map(len, p)), 7)
        if len(p) > max_a:
            continue
        a = rng.randint(max(1, len(p)), max_a)
        try:
            check_pa(q, p, a)
        except NotInPa:
            continue
        out.append((q, p, a))
    return out


def test_fomin_properties_on_random_pairs():
    pairs = random_pa_pairs(1000)
    assert len(set(pairs)) > 500
    for q, p, a in pairs:
        q2, p2 = fomin_involution(q, p, a)
        assert product(q2, p2) == product(q, p)
        assert s_pair(q2, p2, a) == -s_pair(q, p, a)
        assert column(q2, 0) == column(q, 0)
        check_pa(q2, p2, a)
        assert fomin_involution(q2, p2, a) == (q, p)


def test_attach_s_examples():
    t = RectTableau(1, 2, ((1, 1),))
    assert attach_S(t, ((3,),), ((2,),)) == SignedSchur(1, (3, 1))
    assert attach_S(RectTableau(1, 1, ((1,),)), EMPTY, EMPTY) == SignedSchur(1, (1,))
    assert attach_S(RectTableau(3, 0), ((1,),), EMPTY).is_zero
    with pytest.raises(ValueError):
        attach_S(t, ((1,),), EMPTY)


def test_involute_around_rect():
    # width zero reduces to the plain involution
    t0 = RectTableau(2, 0)
    assert involute_around_rect(t0, Q, P) == fomin_involution(Q, P, 2)
    rng = random.Random(77)
    done = 0
    for _ in range(4000):
        a, b = rng.randint(1, 2), rng.randint(0, 2)
        body = tuple(tuple(r + 1 for _ in range(b)) for r in range(a)) if b else EMPTY
        t = RectTableau(a, b, body)
        lo = t.max_entry + 1
        x = random_tableau(rng, 6, lo + 5, lo)
        y = random_tableau(rng, 4, lo + 5, lo)
        if len(y) > a or fits_around(x, y, t) or attach_S(t, x, y).is_zero:
            continue
        x2, y2 = involute_around_rect(t, x, y)
        assert multiply(x2, t.body, y2) == multiply(x, t.body, y)
        assert attach_S(t, x2, y2) == -attach_S(t, x, y)
        assert involute_around_rect(t, x2, y2) == (x, y)
        done += 1
    assert done > 200
