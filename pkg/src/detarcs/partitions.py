"""Pre-partitions of bounded length and the orders between them.

A pre-partition is stored as a fixed-length tuple of ``r`` terms, each a
non-negative ``int`` or :data:`INF`, non-increasing, with trailing zeros kept
explicitly.  Row indices in the public API are 1-based (row 1 is the largest
term), infinite rows sit on top.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering
from math import comb
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

__all__ = [
    "INF",
    "ExtNat",
    "PrePartition",
    "MoveError",
    "SingleRemoval",
    "InfiniteRemoval",
    "Slip",
    "Fall",
    "AdjacencyMove",
    "conjugate",
    "dominates",
    "codominates",
    "contains",
    "duality_check",
    "apply_move",
    "applicable_moves",
    "covers_via_moves",
    "enumerate_partitions",
    "enumerate_prepartitions",
    "truncate",
    "parse_prepartition",
    "universe_size",
    "hasse_diagram",
]


@total_ordering
class _Infinity:
    """The extra point of the extended naturals.  Absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("detarcs.INF")

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __add__(self, other):
        if other is self or isinstance(other, int):
            return self
        return NotImplemented

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ExtNat = Union[int, _Infinity]


def _check_term(x) -> ExtNat:
    if x is INF:
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"pre-partition terms must be int or INF, got {x!r}")
    if x < 0:
        raise ValueError(f"pre-partition terms must be non-negative, got {x}")
    return x


def _key(x: ExtNat):
    # sort key placing INF above every integer
    return (1, 0) if x is INF else (0, x)


@dataclass(frozen=True)
class PrePartition:
    """Non-increasing sequence of ``r`` extended naturals.

    >>> PrePartition.of([3, 1], r=4)
    PrePartition(3, 1, 0, 0)
    """

    terms: tuple

    def __post_init__(self):
        terms = tuple(_check_term(x) for x in self.terms)
        for i in range(len(terms) - 1):
            if terms[i] < terms[i + 1]:
                raise ValueError(f"terms must be non-increasing: {terms}")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def of(cls, terms: Iterable, r: int | None = None) -> "PrePartition":
        """Build from ``terms``, padding with zeros up to ambient length ``r``."""
        terms = tuple(terms)
        if r is None:
            r = len(terms)
        if len(terms) > r:
            extra = terms[r:]
            if any(x != 0 for x in extra):
                raise ValueError(f"{terms} has more than {r} non-zero terms")
            terms = terms[:r]
        return cls(terms + (0,) * (r - len(terms)))

    @property
    def r(self) -> int:
        return len(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def row(self, i: int) -> ExtNat:
        """1-based row access with the boundary conventions row 0 = INF, row r+1 = 0."""
        if i <= 0:
            return INF
        if i > self.r:
            return 0
        return self.terms[i - 1]

    @property
    def length(self) -> int:
        for i in range(self.r, 0, -1):
            if self.terms[i - 1] != 0:
                return i
        return 0

    @property
    def colength(self) -> ExtNat:
        return self.terms[0] if self.terms else 0

    @property
    def is_partition(self) -> bool:
        return all(x is not INF for x in self.terms)

    @property
    def num_infinite(self) -> int:
        return sum(1 for x in self.terms if x is INF)

    def size(self) -> ExtNat:
        return sum(self.terms, 0)

    def tail_sums(self) -> tuple:
        """``(λ_i + ... + λ_r)`` for ``i = 1..r``."""
        out = []
        acc: ExtNat = 0
        for x in reversed(self.terms):
            acc = acc + x
            out.append(acc)
        return tuple(reversed(out))

    def padded(self, r: int) -> "PrePartition":
        return PrePartition.of(self.terms, r)

    def compact(self) -> tuple:
        """Terms without trailing zeros."""
        return self.terms[: self.length]

    def sort_key(self):
        return tuple(_key(x) for x in self.terms)

    def __repr__(self):
        return "PrePartition(" + ", ".join(repr(x) for x in self.terms) + ")"

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.terms) + ")"


def parse_prepartition(text: str, r: int | None = None) -> PrePartition:
    """Parse ``"inf,3,1"`` style input.  An empty string is the empty partition."""
    text = text.strip()
    terms = []
    if text:
        for tok in text.split(","):
            tok = tok.strip().lower()
            if tok in ("inf", "infinity", "∞"):
                terms.append(INF)
            else:
                terms.append(int(tok))
    return PrePartition.of(terms, r)


def _common(a: PrePartition, b: PrePartition) -> tuple[PrePartition, PrePartition]:
    r = max(a.r, b.r)
    return a.padded(r), b.padded(r)


def conjugate(lam: PrePartition, length: int | None = None) -> PrePartition:
    """Conjugate partition, ``λ*_i = #{j : λ_j ≥ i}``.

    The result has ambient length ``length`` (default ``max(colength, r)``).
    Pre-partitions with infinite terms are rejected, their conjugate would
    have infinite length.
    """
    if not lam.is_partition:
        raise ValueError(
            "conjugate of a pre-partition with infinite terms has infinite length; not representable"
        )
    c = lam.colength
    if length is None:
        length = max(c, lam.r)
    if length < c:
        raise ValueError(f"ambient length {length} is below the co-length {c}")
    terms = [sum(1 for x in lam.terms if x >= i) for i in range(1, length + 1)]
    return PrePartition(tuple(terms))


def dominates(lam: PrePartition, mu: PrePartition) -> bool:
    """True iff ``μ`` dominates ``λ``: every partial sum of ``λ`` is at most that of ``μ``."""
    if not (lam.is_partition and mu.is_partition):
        raise ValueError("domination needs finite co-length")
    lam, mu = _common(lam, mu)
    return all(a <= b for a, b in zip(itertools.accumulate(lam.terms), itertools.accumulate(mu.terms)))


def codominates(lam: PrePartition, mu: PrePartition) -> bool:
    """True iff ``μ`` co-dominates ``λ`` (``λ ◁ μ``): every tail sum of ``λ`` is at most that of ``μ``."""
    lam, mu = _common(lam, mu)
    return all(a <= b for a, b in zip(lam.tail_sums(), mu.tail_sums()))


def contains(lam: PrePartition, mu: PrePartition) -> bool:
    lam, mu = _common(lam, mu)
    return all(a <= b for a, b in zip(lam.terms, mu.terms))


def duality_check(lam: PrePartition, mu: PrePartition) -> bool:
    """``λ ≤ μ`` iff ``λ* ◁ μ*``.  Always true; kept as a self-test."""
    c = max(lam.colength, mu.colength, 1)
    return dominates(lam, mu) == codominates(conjugate(lam, c), conjugate(mu, c))


# -- adjacency moves ---------------------------------------------------------


class MoveError(ValueError):
    """Raised when a move is not applicable to a pre-partition."""


@dataclass(frozen=True)
class SingleRemoval:
    """Remove one box from the first finite row."""

    def __str__(self):
        return "removal"


@dataclass(frozen=True)
class InfiniteRemoval:
    """Replace the last infinite row by the finite value ``target``."""

    target: int

    def __str__(self):
        return f"infinite-removal({self.target})"


@dataclass(frozen=True)
class Slip:
    """Move a box from row ``j+1`` up to row ``j``."""

    j: int

    def __str__(self):
        return f"slip({self.j})"


@dataclass(frozen=True)
class Fall:
    """Move a box from row ``k`` up to row ``j`` across the equal rows ``j..k``."""

    j: int
    k: int

    def __str__(self):
        return f"fall({self.j},{self.k})"


AdjacencyMove = Union[SingleRemoval, InfiniteRemoval, Slip, Fall]


def apply_move(mu: PrePartition, move: AdjacencyMove) -> PrePartition:
    """Apply an adjacency move; the result is strictly co-dominated by ``mu``."""
    r = mu.r
    row = mu.row
    terms = list(mu.terms)

    if isinstance(move, SingleRemoval):
        finite = [i for i in range(1, r + 1) if row(i) is not INF]
        if not finite:
            raise MoveError("single removal: no finite row")
        j = finite[0]
        if not row(j + 1) < row(j):
            raise MoveError(f"single removal: need mu_{j + 1} < mu_{j}")
        terms[j - 1] -= 1

    elif isinstance(move, InfiniteRemoval):
        infinite = [i for i in range(1, r + 1) if row(i) is INF]
        if not infinite:
            raise MoveError("infinite removal: no infinite row")
        j = infinite[-1]
        v = move.target
        if v is INF or not isinstance(v, int) or v < 0:
            raise MoveError(f"infinite removal: target must be a finite natural, got {v!r}")
        if v < row(j + 1):
            raise MoveError(f"infinite removal: target {v} below mu_{j + 1} = {row(j + 1)}")
        terms[j - 1] = v

    elif isinstance(move, Slip):
        j = move.j
        if not 1 <= j < r:
            raise MoveError(f"slip: row index {j} out of range 1..{r - 1}")
        if not row(j + 2) < row(j + 1):
            raise MoveError(f"slip: need mu_{j + 2} < mu_{j + 1}")
        if not row(j) < row(j - 1):
            raise MoveError(f"slip: need mu_{j} < mu_{j - 1}")
        if not row(j + 1) >= 1:
            raise MoveError(f"slip: row {j + 1} is empty")
        terms[j - 1] += 1
        terms[j] -= 1

    elif isinstance(move, Fall):
        j, k = move.j, move.k
        if not 1 <= j < k <= r:
            raise MoveError(f"fall: need 1 <= j < k <= {r}, got ({j},{k})")
        if not row(k + 1) < row(k):
            raise MoveError(f"fall: need mu_{k + 1} < mu_{k}")
        if not row(j) < row(j - 1):
            raise MoveError(f"fall: need mu_{j} < mu_{j - 1}")
        if any(row(i) != row(j) for i in range(j, k + 1)):
            raise MoveError(f"fall: rows {j}..{k} must be equal")
        terms[j - 1] += 1
        terms[k - 1] -= 1

    else:
        raise TypeError(f"unknown move {move!r}")

    return PrePartition(tuple(terms))


def applicable_moves(mu: PrePartition, bound: int) -> Iterator[AdjacencyMove]:
    """All moves applicable to ``mu``; infinite-removal targets are capped at ``bound``."""
    r = mu.r
    row = mu.row
    finite = [i for i in range(1, r + 1) if row(i) is not INF]
    if finite and row(finite[0] + 1) < row(finite[0]):
        yield SingleRemoval()
    infinite = [i for i in range(1, r + 1) if row(i) is INF]
    if infinite:
        j = infinite[-1]
        for v in range(row(j + 1), bound + 1):
            yield InfiniteRemoval(v)
    for j in range(1, r):
        if row(j + 2) < row(j + 1) and row(j) < row(j - 1) and row(j + 1) >= 1:
            yield Slip(j)
    for j in range(1, r):
        if not row(j) < row(j - 1):
            continue
        k = j + 1
        while k <= r and row(k) == row(j):
            if row(k + 1) < row(k):
                yield Fall(j, k)
            k += 1


def covers_via_moves(mu: PrePartition, bound: int) -> list[PrePartition]:
    """Distinct results of one move on ``mu``, sorted descending."""
    out = {apply_move(mu, m) for m in applicable_moves(mu, bound)}
    return sorted(out, key=PrePartition.sort_key, reverse=True)


# -- enumeration -------------------------------------------------------------


def _nonincreasing(values: Sequence, r: int) -> Iterator[tuple]:
    # values sorted descending; yields tuples in lexicographically descending order
    if r == 0:
        yield ()
        return
    for idx, v in enumerate(values):
        for rest in _nonincreasing(values[idx:], r - 1):
            yield (v,) + rest


def enumerate_partitions(r: int, c: int) -> list[PrePartition]:
    """Partitions with at most ``r`` rows and terms at most ``c``, descending.

    There are ``binomial(r + c, r)`` of them.
    """
    values = list(range(c, -1, -1))
    return [PrePartition(t) for t in _nonincreasing(values, r)]


def enumerate_prepartitions(r: int, bound: int) -> list[PrePartition]:
    """The universe ``U(r, bound)``: terms in ``{0..bound} ∪ {INF}``, descending."""
    values = [INF] + list(range(bound, -1, -1))
    return [PrePartition(t) for t in _nonincreasing(values, r)]


def truncate(lam: PrePartition, n: int) -> PrePartition:
    """Replace each term by ``min(term, n)``."""
    if n is INF or n < 0:
        raise ValueError(f"truncation level must be a finite natural, got {n!r}")
    return PrePartition(tuple(n if x is INF or x > n else x for x in lam.terms))


def universe_size(r: int, bound: int) -> int:
    """``|U(r, bound)| = binomial(r + bound + 1, r)``."""
    return comb(r + bound + 1, r)


def hasse_diagram(r: int, bound: int) -> tuple[list[PrePartition], list[tuple[int, int]]]:
    """Cover relation of co-domination restricted to ``U(r, bound)``.

    Returns the nodes (descending) and edges ``(i, j)`` meaning
    ``nodes[j] ◁ nodes[i]`` with nothing of the universe strictly between.
    """
    nodes = enumerate_prepartitions(r, bound)
    # INF tail sums become a value above every finite one
    big = r * bound + 1
    tails = np.array(
        [[big if t is INF else t for t in lam.tail_sums()] for lam in nodes], dtype=np.int64
    ).reshape(len(nodes), r)
    edges = []
    for i in range(len(nodes)):
        lower = np.flatnonzero((tails <= tails[i]).all(axis=1))
        lower = lower[lower != i]
        if lower.size == 0:
            continue
        sub = tails[lower]
        # dominated[a, b]: sub[a] strictly below sub[b]
        dominated = (sub[:, None, :] <= sub[None, :, :]).all(axis=2)
        np.fill_diagonal(dominated, False)
        covers = lower[~dominated.any(axis=1)]
        edges.extend((i, int(j)) for j in covers)
    return nodes, edges
