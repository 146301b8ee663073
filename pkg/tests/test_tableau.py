import random

import pytest
from hypothesis import given, strategies as st

from quiverseq.schur import lr_coeff, partitions_of, subpartitions
from quiverseq.tableau import (EMPTY, NotContained, RectTableau, all_factorizations,
                               canonical_factorization, column, contains_rectangle,
                               factorizations, factorizations_brute, fits_around,
                               horizontal_cut, is_tableau, models_pairs, multiply, product,
                               shape, simple_factorizations, ssyt, tableau, vertical_cut)
from strategies import random_tableau, tableaux

T12 = RectTableau(1, 2, ((1, 1),))


def test_tableau_validation():
    assert is_tableau(())
    assert tableau([[1, 2], [3]]) == ((1, 2), (3,))
    with pytest.raises(ValueError):
        tableau([[2, 1]])
    with pytest.raises(ValueError):
        tableau([[1, 2], [1]])
    with pytest.raises(ValueError):
        tableau([[1], [2, 3]])


def test_product_examples():
    q, p = ((3, 5, 6, 7), (4,)), ((1, 3, 7, 8), (2, 4))
    assert product(q, p) == ((1, 3, 6, 7, 7, 8), (2, 4), (3, 5), (4,))
    assert product(((3, 5, 6, 7, 7, 8), (4,)), ((1, 3), (2, 4))) == product(q, p)
    assert product(q, EMPTY) == q and product(EMPTY, q) == q
    assert multiply(((3,),), ((1, 1),), ((2,),)) == ((1, 1, 2), (3,))


@given(tableaux(5), tableaux(5), tableaux(5))
def test_product_associative(a, b, c):
    assert product(product(a, b), c) == product(a, product(b, c))


@given(tableaux(6), tableaux(6))
def test_product_shape_and_content(a, b):
    ab = product(a, b)
    assert is_tableau(ab)
    assert sorted(x for r in ab for x in r) == sorted([x for r in a for x in r] + [x for r in b for x in r])


def test_cut_examples():
    assert horizontal_cut(((1, 1, 2), (3,)), 1) == (((3,),), ((1, 1, 2),))
    w = ((1, 3, 6, 7, 7, 8), (2, 4), (3, 5), (4,))
    assert horizontal_cut(w, 2) == (((3, 5), (4,)), ((1, 3, 6, 7, 7, 8), (2, 4)))
    assert horizontal_cut(w, 0) == (w, EMPTY)
    assert vertical_cut(((1, 1, 2), (3,)), 2) == (((1, 1), (3,)), ((2,),))
    assert vertical_cut(w, 0) == (EMPTY, w)
    assert vertical_cut(((1, 3), (2, 4)), 1) == (((1,), (2,)), ((3,), (4,)))


@given(tableaux(10), st.integers(0, 4))
def test_cuts_recompose(t, k):
    bottom, top = horizontal_cut(t, k)
    assert product(bottom, top) == t
    left, right = vertical_cut(t, k)
    assert product(left, right) == t


@given(tableaux(8), tableaux(8))
def test_horizontal_cut_criterion(p, q):
    # a factorization is the horizontal cut after len(q) rows iff the top
    # rows of the product have the row lengths of q
    w = product(p, q)
    a = len(q)
    is_cut = horizontal_cut(w, a) == (p, q)
    same_rows = all(len(w[i]) == len(q[i]) for i in range(a)) if len(w) >= a else False
    assert is_cut == same_rows


def test_not_right_cancellative():
    # two left factors of the same shape with the same right factor and the
    # same product; this is why factorization counts can exceed one
    q = ((1, 1), (2,))
    w = ((1, 1, 1), (2, 2), (3,))
    lefts = {p for p, q2 in all_factorizations(w) if q2 == q and shape(p) == (2, 1)}
    assert lefts == {((1, 2), (3,)), ((1, 3), (2,))}
    assert lr_coeff((2, 1), (2, 1), (3, 2, 1)) == 2


@given(tableaux(8, 4), tableaux(8, 4))
def test_product_pair_is_listed(a, b):
    assert (a, b) in all_factorizations(product(a, b))


def test_rectangle_examples():
    assert contains_rectangle(((1, 1, 2), (3,)), T12)
    assert not contains_rectangle(((1, 2),), RectTableau(2, 1, ((1,), (2,))))
    assert contains_rectangle(((5,),), RectTableau(3, 0))
    assert canonical_factorization(((1, 1, 2), (3,)), T12) == (((3,),), ((2,),))
    assert canonical_factorization(((1,), (2,)), RectTableau(1, 0)) == (((2,),), ((1,),))
    assert canonical_factorization(((1, 1),), T12) == (EMPTY, EMPTY)
    with pytest.raises(NotContained):
        canonical_factorization(((2, 2),), T12)
    with pytest.raises(ValueError):
        RectTableau(2, 2, ((1, 1),))


def test_fits_around_examples():
    assert fits_around(((3,),), ((2,),), T12)
    assert fits_around(EMPTY, EMPTY, T12)
    # the a-th row of p is shorter than the top row of q
    assert not fits_around(((3, 5, 6, 7), (4,)), ((1, 3, 7, 8), (2, 4)), RectTableau(2, 0))


def test_factorization_examples():
    assert factorizations(((2,), (3,)), (1,), (1,)) == {(((3,),), ((2,),))}
    assert factorizations(((2,), (3,)), (), (1, 1)) == {(EMPTY, ((2,), (3,)))}
    assert factorizations(((1, 2),), (1,), (1,)) == {(((1,),), ((2,),))}


def _factorization_count_holds(w):
    mu = shape(w)
    for sigma in subpartitions(mu):
        for tau in partitions_of(sum(mu) - sum(sigma)):
            assert len(factorizations(w, sigma, tau)) == lr_coeff(sigma, tau, mu), (w, sigma, tau)


def test_factorization_count_equals_lr():
    rng = random.Random(11)
    for n in range(9):
        for mu in partitions_of(n):
            # the row-constant tableau and a few random fillings of each shape
            _factorization_count_holds(tuple((r + 1,) * m for r, m in enumerate(mu)))
            for _ in range(3):
                w = next(t for t in iter(lambda: random_tableau(rng, n, 6), None) if shape(t) == mu) \
                    if n <= 5 else None
                if w is not None:
                    _factorization_count_holds(w)


@given(tableaux(8, 6))
def test_factorization_count_random(w):
    _factorization_count_holds(w)


@given(tableaux(5, 4))
def test_factorizations_match_brute_force(w):
    mu = shape(w)
    for sigma in subpartitions(mu):
        for tau in partitions_of(sum(mu) - sum(sigma)):
            assert factorizations(w, sigma, tau) == factorizations_brute(w, sigma, tau)


def test_ssyt_counts():
    assert len(list(ssyt((2, 1), [1, 2, 3]))) == 8
    assert len(list(ssyt((2, 2), [1, 2]))) == 1


def test_simple_factorization_examples():
    assert simple_factorizations(((1, 1, 2), (3,)), T12) == {(((3,),), ((2,),))}
    assert simple_factorizations(((1, 1),), T12) == {(EMPTY, EMPTY)}
    # nothing south-east of the rectangle, so only the canonical factorization
    assert simple_factorizations(((1, 1, 3), (2, 2)), T12) == {(((2, 2),), ((3,),))}
    t = RectTableau(1, 1, ((1,),))
    w = ((1, 2, 3), (2, 4), (5,))
    got = simple_factorizations(w, t)
    assert canonical_factorization(w, t) in got and len(got) == 2
    for q, p in got:
        assert multiply(q, t.body, p) == w


def _rect_words(rng, t, max_boxes):
    lo = t.max_entry + 1
    for _ in range(200):
        x = random_tableau(rng, max_boxes, lo + 4, lo)
        y = random_tableau(rng, max_boxes, lo + 4, lo)
        yield x, y, multiply(x, t.body, y)


def test_simple_factorizations_recompose_and_are_reachable():
    rng = random.Random(5)
    for t in (T12, RectTableau(2, 1, ((1,), (2,))), RectTableau(1, 0), RectTableau(2, 2, ((1, 1), (2, 2)))):
        for x, y, w in _rect_words(rng, t, 5):
            if not contains_rectangle(w, t):
                continue
            simple = simple_factorizations(w, t)
            for q, p in simple:
                assert multiply(q, t.body, p) == w
            # every factorization reaches a simple one through single moves
            seen, frontier = {(x, y)}, [(x, y)]
            while frontier:
                nxt = []
                for pair in frontier:
                    for new in models_pairs(*pair, t):
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
                frontier = nxt
            assert seen & simple


def test_models_pairs_examples():
    assert models_pairs(EMPTY, EMPTY, T12) == {(EMPTY, EMPTY)}
    x, y = ((3, 5, 6), (4,)), ((2, 3), (4,))
    t = RectTableau(1, 1, ((1,),))
    out = models_pairs(x, y, t)
    assert (x, y) in out
    for x2, y2 in out:
        assert multiply(x2, t.body, y2) == multiply(x, t.body, y)
    assert len(out) > 1
    with pytest.raises(ValueError):
        models_pairs(((1,),), EMPTY, T12)


def test_column():
    assert column(((1, 2), (3,)), 0) == (1, 3)
    assert column(((1, 2), (3,)), 1) == (2,)
