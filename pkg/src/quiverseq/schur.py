"""Partitions, straightening of integer sequences, Littlewood-Richardson
coefficients and sparse elements of tensor powers of the symmetric-function
ring.

Partitions are plain tuples of positive ints, weakly decreasing, with no
trailing zeros. ``()`` is the empty partition.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Partition = tuple[int, ...]

INT64_MAX = 2**63 - 1


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` to a partition, dropping trailing zeros.

    Raises ValueError if the parts are not weakly decreasing or negative.
    """
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    for k, x in enumerate(p):
        if x < 0:
            raise ValueError(f"negative part in {p}")
        if k and x > p[k - 1]:
            raise ValueError(f"{p} is not weakly decreasing")
    return tuple(p)


def weight(lam: Sequence[int]) -> int:
    return sum(lam)


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of ``n``, optionally with parts bounded by ``max_part``."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every partition contained in ``lam`` (including ``()`` and ``lam``)."""

    def rec(k: int, bound: int) -> Iterator[tuple[int, ...]]:
        if k == len(lam):
            yield ()
            return
        for x in range(min(bound, lam[k]), -1, -1):
            if x == 0:
                yield ()
            else:
                for rest in rec(k + 1, x):
                    yield (x,) + rest

    yield from rec(0, lam[0] if lam else 0)


class SignedSchur(NamedTuple):
    """``sign * s_shape``; the zero function has sign 0 and empty shape."""

    sign: int
    shape: Partition

    def __neg__(self) -> "SignedSchur":
        return SignedSchur(-self.sign, self.shape)

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    def to_json(self):
        if self.is_zero:
            return 0
        return {"sign": self.sign, "shape": list(self.shape)}


ZERO = SignedSchur(0, ())


def straighten(seq: Sequence[int]) -> SignedSchur:
    """Rewrite the Jacobi-Trudi determinant ``s_I`` as ``0`` or ``±s_lambda``.

    Row ``k`` of the determinant only depends on ``a_k - k``; sorting those
    values permutes the rows, and coinciding values give equal rows.
    """
    shifted = [a - k for k, a in enumerate(seq, start=1)]
    if len(set(shifted)) != len(shifted):
        return ZERO
    order = sorted(range(len(shifted)), key=lambda k: -shifted[k])
    lam = [shifted[w] + k for k, w in enumerate(order, start=1)]
    if lam and lam[-1] < 0:
        return ZERO
    return SignedSchur(_perm_sign(order), partition(lam))


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@lru_cache(maxsize=None)
def _lr_contents(outer: Partition, inner: Partition) -> Counter:
    """Count LR skew tableaux of shape ``outer/inner`` by content.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left) so the lattice condition can be checked on the fly.
    """
    cells = []
    for r, o in enumerate(outer):
        i = inner[r] if r < len(inner) else 0
        for c in range(o - 1, i - 1, -1):
            cells.append((r, c))
    result: Counter = Counter()
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(outer) + 2)

    def rec(k: int) -> None:
        if k == len(cells):
            content = tuple(x for x in counts[1:] if x)
            result[content] += 1
            return
        r, c = cells[k]
        hi = filling.get((r, c + 1), r + 1)
        lo = filling.get((r - 1, c), 0) + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            rec(k + 1)
            counts[v] -= 1
        filling.pop((r, c), None)

    rec(0)
    return result


def lr_coeff(sigma: Partition, tau: Partition, mu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^mu_{sigma tau}."""
    if weight(sigma) + weight(tau) != weight(mu) or not contains(mu, sigma):
        return 0
    return _lr_contents(tuple(mu), tuple(sigma)).get(tuple(tau), 0)


@lru_cache(maxsize=None)
def _coproduct(mu: Partition) -> tuple[tuple[tuple[Partition, Partition], int], ...]:
    out = []
    for sigma in subpartitions(mu):
        for tau, c in sorted(_lr_contents(mu, sigma).items()):
            out.append(((sigma, tau), c))
    return tuple(out)


def coproduct(mu: Partition) -> dict[tuple[Partition, Partition], int]:
    """All ``(sigma, tau)`` with ``c^mu_{sigma tau} > 0``."""
    return dict(_coproduct(tuple(mu)))


# --- polynomials, used as a test oracle -------------------------------------

Poly = dict[tuple[int, ...], int]


@lru_cache(maxsize=None)
def _schur_poly(lam: Partition, k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    # branching rule: strip off the entries equal to k, a horizontal strip
    if not lam:
        return (((0,) * k, 1),)
    if len(lam) > k:
        return ()
    out: Counter = Counter()
    for mu in _interlacing(lam):
        if len(mu) > k - 1:
            continue
        extra = weight(lam) - weight(mu)
        for mono, c in _schur_poly(mu, k - 1):
            out[mono + (extra,)] += c
    return tuple(sorted(out.items()))


def _interlacing(lam: Partition) -> Iterator[Partition]:
    # mu with lam_{i+1} <= mu_i <= lam_i
    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for x in range(lam[i], lo - 1, -1):
            for rest in rec(i + 1):
                yield (x,) + rest

    for mu in rec(0):
        yield partition(mu)


def schur_eval(lam: Partition, k: int) -> Poly:
    """The Schur polynomial ``s_lam(x_1..x_k)`` as {exponent tuple: coeff}."""
    if k < 1:
        raise ValueError("need at least one variable")
    return dict(_schur_poly(tuple(lam), k))


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Counter = Counter()
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            out[tuple(x + y for x, y in zip(m1, m2))] += c1 * c2
    return {m: c for m, c in out.items() if c}


def poly_add(f: Poly, g: Poly, scale: int = 1) -> Poly:
    out = dict(f)
    for m, c in g.items():
        out[m] = out.get(m, 0) + scale * c
    return {m: c for m, c in out.items() if c}


# --- tensor elements ---------------------------------------------------------

Key = tuple[Partition, ...]


class MissingExpansion(KeyError):
    pass


class Tensor:
    """A sparse integer combination of ``s_{mu_1} (x) ... (x) s_{mu_arity}``."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Key, int] | None = None):
        self.arity = arity
        clean = {}
        for key, c in (terms or {}).items():
            if len(key) != arity:
                raise ValueError(f"key {key} does not have arity {arity}")
            _check_overflow(c)
            if c:
                clean[tuple(tuple(p) for p in key)] = c
        self.terms: dict[Key, int] = clean

    @classmethod
    def basis(cls, key: Key, coeff: int = 1) -> "Tensor":
        return cls(len(key), {key: coeff})

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __add__(self, other: "Tensor") -> "Tensor":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return Tensor(self.arity, terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"Tensor({self.arity}, 0)"
        parts = [f"{c}*{list(map(list, k))}" for k, c in sorted(self.terms.items())]
        return f"Tensor({self.arity}, " + " + ".join(parts) + ")"

    def coefficient(self, key: Key) -> int:
        if len(key) != self.arity:
            raise ValueError(f"expected {self.arity} shapes, got {len(key)}")
        return self.terms.get(tuple(tuple(p) for p in key), 0)

    def to_json(self) -> list[dict]:
        return [
            {"shapes": [list(p) for p in key], "coeff": c}
            for key, c in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, data: list[dict], arity: int | None = None) -> "Tensor":
        terms: dict[Key, int] = {}
        for item in data:
            key = tuple(partition(p) for p in item["shapes"])
            terms[key] = terms.get(key, 0) + int(item["coeff"])
        if arity is None:
            if not terms:
                raise ValueError("cannot infer arity of an empty tensor")
            arity = len(next(iter(terms)))
        return cls(arity, terms)


def _check_overflow(c: int) -> None:
    # coefficients are reported as signed 64-bit values
    if not -INT64_MAX - 1 <= c <= INT64_MAX:
        raise OverflowError(f"coefficient {c} exceeds 64-bit range")


def tensor_substitute(e: Tensor, position: int, expansion: Mapping[Partition, Tensor]) -> Tensor:
    """Replace the factor at ``position`` of every basis element linearly.

    ``expansion[mu]`` has some arity ``m``; its keys are spliced in place of
    the single factor, so the result has arity ``e.arity - 1 + m``.
    """
    if not 0 <= position < e.arity:
        raise IndexError(position)
    width = None
    terms: dict[Key, int] = {}
    for key, c in e.terms.items():
        mu = key[position]
        if mu not in expansion:
            raise MissingExpansion(f"no expansion given for partition {list(mu)}")
        sub = expansion[mu]
        if width is None:
            width = sub.arity
        elif sub.arity != width:
            raise ValueError("expansions have inconsistent arities")
        for skey, sc in sub.terms.items():
            new = key[:position] + skey + key[position + 1:]
            terms[new] = terms.get(new, 0) + c * sc
    if width is None:
        width = max((t.arity for t in expansion.values()), default=1)
    return Tensor(e.arity - 1 + width, terms)
