"""Rank conditions, rectangle diagrams, paths through the rank diagram, and
the recursive computation of the coefficients c_mu(gamma).

Vertices of the rank diagram are pairs ``(i, j)`` with ``0 <= i <= j <= n``.
A path is a word over ``D`` (``(i,j) -> (i,j+1)``), ``U`` (``(i,j) ->
(i+1,j)``) and ``H`` (``(i,j) -> (i+1,j+1)``) from ``(0,0)`` to ``(n,n)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .schur import Partition, Tensor, coproduct, straighten, tensor_substitute

Cell = tuple[int, int]


class InvalidRankConditions(ValueError):
    pass


class InvalidPath(ValueError):
    pass


@dataclass(frozen=True)
class RankConditions:
    n: int
    r: Mapping[Cell, int]

    @classmethod
    def from_rows(cls, rows: list[list[int]]) -> "RankConditions":
        """Rows of the triangular display, top row ``r_00 .. r_nn`` first."""
        n = len(rows) - 1
        if n < 1:
            raise InvalidRankConditions("need at least two bundles")
        r = {}
        for d, row in enumerate(rows):
            if len(row) != n + 1 - d:
                raise InvalidRankConditions(f"row {d} should have {n + 1 - d} entries, got {len(row)}")
            for i, v in enumerate(row):
                if not isinstance(v, int) or v < 0:
                    raise InvalidRankConditions(f"rank {v!r} is not a nonnegative integer")
                r[(i, i + d)] = v
        return cls(n, r)

    def rows(self) -> list[list[int]]:
        return [[self.r[(i, i + d)] for i in range(self.n + 1 - d)] for d in range(self.n + 1)]

    def to_json(self) -> dict:
        return {"n": self.n, "rows": self.rows()}

    @classmethod
    def from_json(cls, data: dict) -> "RankConditions":
        rc = cls.from_rows(data["rows"])
        if "n" in data and data["n"] != rc.n:
            raise InvalidRankConditions(f"n={data['n']} does not match {rc.n + 1} rows")
        return rc


def validate_rank_conditions(rc: RankConditions) -> bool:
    r = rc.r
    for i in range(rc.n + 1):
        for j in range(i + 1, rc.n + 1):
            if r[(i, j)] > min(r[(i, j - 1)], r[(i + 1, j)]):
                return False
            if j - i >= 2 and r[(i, j)] - r[(i, j - 1)] - r[(i + 1, j)] + r[(i + 1, j - 1)] < 0:
                return False
    return True


@dataclass(frozen=True)
class RectDiagram:
    """``dims[(i, j)] = (rows, cols)`` of rectangle ``R_ij`` for ``i < j``."""

    n: int
    dims: Mapping[Cell, tuple[int, int]] = field(hash=False)

    def __post_init__(self):
        want = {(i, j) for i in range(self.n) for j in range(i + 1, self.n + 1)}
        if set(self.dims) != want:
            raise ValueError("rectangle diagram must have a rectangle for every i < j")

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.dims.items()))))

    def __eq__(self, other):
        if not isinstance(other, RectDiagram):
            return NotImplemented
        return self.n == other.n and dict(self.dims) == dict(other.dims)

    def rows(self, i: int, j: int) -> int:
        return self.dims[(i, j)][0]

    def cols(self, i: int, j: int) -> int:
        return self.dims[(i, j)][1]

    def cells(self) -> Iterator[Cell]:
        """Rectangle indices, top row of the diagram first."""
        for d in range(1, self.n + 1):
            for i in range(self.n + 1 - d):
                yield (i, i + d)

    def sub(self) -> "RectDiagram":
        """The diagram formed by the bottom ``n - 1`` rows."""
        if self.n < 2:
            raise ValueError("no sub-diagram for n < 2")
        return RectDiagram(self.n - 1, {(i, j - 1): self.dims[(i, j)]
                                        for (i, j) in self.dims if j - i >= 2})

    def to_json(self) -> dict:
        return {"n": self.n, "rects": {f"{i},{j}": {"rows": a, "cols": b}
                                       for (i, j), (a, b) in sorted(self.dims.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "RectDiagram":
        dims = {}
        for key, v in data["rects"].items():
            i, j = (int(s) for s in key.split(","))
            dims[(i, j)] = (int(v["rows"]), int(v["cols"]))
        return cls(int(data["n"]), dims)


def rect_diagram_of(rc: RankConditions) -> RectDiagram:
    if not validate_rank_conditions(rc):
        raise InvalidRankConditions("these rank conditions cannot occur")
    r = rc.r
    return RectDiagram(rc.n, {(i, j): (r[(i + 1, j)] - r[(i, j)], r[(i, j - 1)] - r[(i, j)])
                              for i in range(rc.n) for j in range(i + 1, rc.n + 1)})


def validate_rect_diagram(rd: RectDiagram, transposed: bool = False) -> bool:
    """Rows weakly decrease going south-east (``R_ij`` to ``R_i,j+1``) and
    columns weakly decrease going south-west (``R_ij`` to ``R_i-1,j``).

    ``transposed=True`` checks the mirrored pair of relations instead; rank
    derived diagrams need not satisfy it.
    """
    for (i, j), (a, b) in rd.dims.items():
        if a < 0 or b < 0:
            return False
        if transposed:
            if i >= 1 and rd.rows(i - 1, j) > a:
                return False
            if j < rd.n and rd.cols(i, j + 1) > b:
                return False
        else:
            if j < rd.n and rd.rows(i, j + 1) > a:
                return False
            if i >= 1 and rd.cols(i - 1, j) > b:
                return False
    return True


def expected_codim(rd: RectDiagram) -> int:
    return sum(a * b for a, b in rd.dims.values())


def random_rect_diagram(n: int, max_dim: int, seed: int | random.Random) -> RectDiagram:
    """A random valid diagram with sides at most ``max_dim``.

    Built either top row first, each side uniform up to the bound set by
    the neighbours above, or bottom row first, each side uniform from the
    bound set by the neighbours below up to ``max_dim``. The second way
    yields large rectangles deep in the diagram.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    dims: dict[Cell, tuple[int, int]] = {}
    if rng.random() < 0.5:
        for d in range(1, n + 1):
            for i in range(n + 1 - d):
                j = i + d
                row_cap = max_dim if d == 1 else dims[(i, j - 1)][0]
                col_cap = max_dim if d == 1 else dims[(i + 1, j)][1]
                dims[(i, j)] = (rng.randint(0, row_cap), rng.randint(0, col_cap))
    else:
        for d in range(n, 0, -1):
            for i in range(n + 1 - d):
                j = i + d
                row_min = dims[(i, j + 1)][0] if j < n else 0
                col_min = dims[(i - 1, j)][1] if i >= 1 else 0
                dims[(i, j)] = (rng.randint(row_min, max_dim), rng.randint(col_min, max_dim))
    return RectDiagram(n, dims)


# --- paths -------------------------------------------------------------------

STEP = {"D": (0, 1), "U": (1, 0), "H": (1, 1)}


def lowest_path(n: int) -> str:
    return "D" * n + "U" * n


def top_path(n: int) -> str:
    return "H" * n


def vertices(word: str) -> list[Cell]:
    """Start vertex of every step, followed by the end vertex."""
    out = [(0, 0)]
    i = j = 0
    for s in word:
        di, dj = STEP[s]
        i, j = i + di, j + dj
        out.append((i, j))
    return out


def normalize_path(word: str) -> str:
    """Upper-case the word and accept ``F`` (flat) as a synonym for ``H``."""
    return word.strip().upper().replace("F", "H")


def validate_path(word: str, n: int) -> None:
    if any(s not in STEP for s in word):
        raise InvalidPath(f"path {word!r} has letters outside U, D, H")
    for i, j in vertices(word):
        if not 0 <= i <= j <= n:
            raise InvalidPath(f"path {word!r} leaves the rank diagram at ({i},{j})")
    if vertices(word)[-1] != (n, n):
        raise InvalidPath(f"path {word!r} does not end at ({n},{n})")


def flat_rect(word: str, k: int) -> Cell:
    """Index of the rectangle under the ``H`` step at position ``k``."""
    i, j = vertices(word)[k]
    return (i, j + 1)


def reducible(word: str, order: str = "leftmost") -> tuple[int, str] | None:
    """Position and kind (``"peak"`` for ``UD``, ``"flat"`` for ``H``) of the
    step to lower next, or None for the lowest path."""
    positions = range(len(word)) if order == "leftmost" else range(len(word) - 1, -1, -1)
    for k in positions:
        if word[k] == "H":
            return k, "flat"
        if word[k] == "U" and k + 1 < len(word) and word[k + 1] == "D":
            return k, "peak"
    return None


def lower(word: str, k: int, kind: str) -> str:
    if kind == "peak":
        return word[:k] + "H" + word[k + 2:]
    return word[:k] + "DU" + word[k + 1:]


def reduction_chain(word: str, order: str = "leftmost") -> list[tuple[str, int, str]]:
    """``(path, position, kind)`` for each lowering step, starting at ``word``."""
    chain = []
    while True:
        step = reducible(word, order)
        if step is None:
            return chain
        k, kind = step
        chain.append((word, k, kind))
        word = lower(word, k, kind)


def side_segments(word: str, n: int) -> list[int]:
    """Positions of steps that lie on the lowest path."""
    out = []
    for k, ((i, j), s) in enumerate(zip(vertices(word), word)):
        if (s == "D" and i == 0) or (s == "U" and j == n):
            out.append(k)
    return out


def random_path(n: int, rng: random.Random, need_valley: bool = False) -> str:
    while True:
        i = j = 0
        word = []
        while (i, j) != (n, n):
            moves = []
            if j < n:
                moves += ["D", "H"]
            if i < j:
                moves.append("U")
            s = rng.choice(moves)
            word.append(s)
            di, dj = STEP[s]
            i, j = i + di, j + dj
        w = "".join(word)
        if not need_valley or "DU" in w:
            return w


def low_path(n: int, i: int, j: int) -> str:
    """The lowest path that turns down at ``(i, j)`` and up at ``(i, j+1)``."""
    if not 0 <= i <= j < n:
        raise InvalidPath(f"no valley at ({i},{j})")
    return "D" * j + "U" * i + "DU" + "D" * (n - j - 1) + "U" * (n - i - 1)


# --- P_gamma -----------------------------------------------------------------

def _peak_expansion(mus) -> dict[Partition, Tensor]:
    return {mu: Tensor(2, {(s, t): c for (s, t), c in coproduct(mu).items()}) for mu in mus}


def compute_P(word: str, rd: RectDiagram, order: str = "leftmost") -> Tensor:
    """The element P_gamma as a tensor with one factor per step of ``word``."""
    validate_path(word, rd.n)
    memo: dict[str, Tensor] = {}

    def rec(w: str) -> Tensor:
        if w in memo:
            return memo[w]
        step = reducible(w, order)
        if step is None:
            res = Tensor.basis(((),) * len(w))
        else:
            k, kind = step
            below = rec(lower(w, k, kind))
            if kind == "peak":
                mus = {key[k] for key in below.terms}
                res = tensor_substitute(below, k, _peak_expansion(mus))
            else:
                a, b = rd.dims[flat_rect(w, k)]
                terms: dict = {}
                for key, c in below.terms.items():
                    tau, sigma = key[k], key[k + 1]
                    if len(sigma) > a:
                        continue
                    seq = [b + (sigma[r] if r < len(sigma) else 0) for r in range(a)] + list(tau)
                    s = straighten(seq)
                    if s.is_zero:
                        continue
                    new = key[:k] + (s.shape,) + key[k + 2:]
                    terms[new] = terms.get(new, 0) + s.sign * c
                res = Tensor(len(w), terms)
        memo[w] = res
        return res

    return rec(word)


def coefficient(word: str, rd: RectDiagram, shapes) -> int:
    if len(shapes) != len(word):
        raise ValueError(f"path has {len(word)} segments but {len(shapes)} shapes were given")
    return compute_P(word, rd).coefficient(tuple(tuple(s) for s in shapes))
