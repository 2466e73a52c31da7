"""Brute-force oracles.

Everything here is checked against the closed forms elsewhere in the package
and deliberately shares no code path with them beyond the partition type.

* Smith normal form over ``F_p[t]/(t^(n+1))`` and exhaustive counting of jet
  matrices by Smith type.
* Minimal elements of contact conditions by exhaustive search.
* Reachability under adjacency moves.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter, deque
from functools import lru_cache

import numpy as np

from .partitions import (
    PrePartition,
    covers_via_moves,
    enumerate_partitions,
    enumerate_prepartitions,
)

__all__ = [
    "TruncRing",
    "GuardExceeded",
    "ENUMERATION_GUARD",
    "smith_type",
    "matmul",
    "random_invertible",
    "count_jet_orbits",
    "count_by_rank",
    "brute_force_contact_components",
    "poset_closure_oracle",
]

ENUMERATION_GUARD = 10**8


class GuardExceeded(ValueError):
    pass


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


class TruncRing:
    """The ring ``F_p[t]/(t^(n+1))`` with table-driven arithmetic.

    Elements are encoded as integers ``0 <= x < p^(n+1)`` whose base-``p``
    digits are the coefficients ``c_0, c_1, ..., c_n``.
    """

    def __init__(self, p: int, n: int):
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        self.p = p
        self.n = n
        self.size = p ** (n + 1)
        if self.size > 4096:
            raise ValueError(f"ring of size {self.size} is too large for table arithmetic")
        size = self.size
        digits = [self.to_coeffs(x) for x in range(size)]
        self._digits = digits
        self.add = [[self.from_coeffs([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(size)] for x in range(size)]
        self.neg = [self.from_coeffs([(-a) % p for a in digits[x]]) for x in range(size)]
        self.mul = [[0] * size for _ in range(size)]
        for x in range(size):
            for y in range(x, size):
                c = [0] * (n + 1)
                for i, a in enumerate(digits[x]):
                    if a:
                        for j in range(n + 1 - i):
                            c[i + j] += a * digits[y][j]
                z = self.from_coeffs([v % p for v in c])
                self.mul[x][y] = self.mul[y][x] = z
        self.order = [next((i for i, a in enumerate(digits[x]) if a), n + 1) for x in range(size)]
        self.inv = [None] * size
        for x in range(size):
            if self.order[x] == 0:
                self.inv[x] = next(y for y in range(size) if self.mul[x][y] == 1)
        # shift_down[o][x] = x / t^o, keeping the low digits from position o
        self.shift_down = [[self.from_coeffs(digits[x][o:] + [0] * o) for x in range(size)] for o in range(n + 1)]

    def to_coeffs(self, x: int) -> list[int]:
        out = []
        for _ in range(self.n + 1):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def from_coeffs(self, coeffs) -> int:
        x = 0
        for c in reversed(list(coeffs)):
            x = x * self.p + c % self.p
        return x

    def t_power(self, e: int) -> int:
        """Encoding of ``t^e`` (zero when ``e > n``)."""
        return self.p**e if e <= self.n else 0

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]


@lru_cache(maxsize=None)
def _ring(p: int, n: int) -> TruncRing:
    return TruncRing(p, n)


def smith_type(matrix, ring: TruncRing) -> PrePartition:
    """Orders of the elementary divisors of a jet matrix, non-increasing.

    ``matrix`` is an ``r x s`` nested sequence of ring encodings with
    ``r <= s``.  A zero elementary divisor is reported as ``n + 1``.  Pivots
    are the first minimal-order entry in row-major order; in a local ring such
    an entry divides every other entry after scaling by a unit.
    """
    m = [list(row) for row in matrix]
    r = len(m)
    s = len(m[0]) if r else 0
    if r > s:
        raise ValueError("expected r <= s")
    order, mul, add, neg = ring.order, ring.mul, ring.add, ring.neg
    top = ring.n + 1
    orders = []
    for k in range(r):
        # earlier pivots bound the remaining orders from below
        floor = orders[-1] if orders else 0
        best, bi, bj = top, -1, -1
        for i in range(k, r):
            row = m[i]
            for j in range(k, s):
                o = order[row[j]]
                if o < best:
                    best, bi, bj = o, i, j
                    if o == floor:
                        break
            if best == floor:
                break
        if bi < 0:
            orders.extend([top] * (r - k))
            break
        m[k], m[bi] = m[bi], m[k]
        if bj != k:
            for row in m:
                row[k], row[bj] = row[bj], row[k]
        pivot_row = m[k]
        shift = ring.shift_down[best]
        uinv = ring.inv[shift[pivot_row[k]]]
        for i in range(k + 1, r):
            a = m[i][k]
            if a:
                f = neg[mul[shift[a]][uinv]]
                row = m[i]
                for j in range(k, s):
                    if pivot_row[j]:
                        row[j] = add[row[j]][mul[f][pivot_row[j]]]
        # row operations left row k intact; clearing it by column operations
        # only touches row k because column k is now zero below the pivot
        orders.append(best)
    return PrePartition(tuple(sorted(orders, reverse=True)))


def matmul(a, b, ring: TruncRing):
    mul, add = ring.mul, ring.add
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = 0
            for k in range(inner):
                acc = add[acc][mul[a[i][k]][b[k][j]]]
            row.append(acc)
        out.append(row)
    return out


def _rank_mod_p(rows, p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c] * inv % p
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def random_invertible(size: int, ring: TruncRing, rng: random.Random):
    """Uniformly random invertible matrix: invertible exactly when its constant part is."""
    p = ring.p
    while True:
        m = [[rng.randrange(ring.size) for _ in range(size)] for _ in range(size)]
        constant = [[x % p for x in row] for row in m]
        if _rank_mod_p(constant, p) == size:
            return m


def _check_guard(total: int):
    if total > ENUMERATION_GUARD:
        raise GuardExceeded(
            f"enumeration of {total} matrices exceeds the guard {ENUMERATION_GUARD}; "
            "use smaller parameters or method='stratified'"
        )


def count_by_rank(r: int, s: int, q: int) -> Counter:
    """Number of ``r x s`` matrices over ``F_q`` of each rank, by enumeration."""
    _check_guard(q ** (r * s))
    counts: Counter = Counter()
    for flat in itertools.product(range(q), repeat=r * s):
        rows = [flat[i * s : (i + 1) * s] for i in range(r)]
        counts[_rank_mod_p(rows, q)] += 1
    return counts


def count_jet_orbits(r: int, s: int, n: int, q: int, method: str = "exhaustive") -> Counter:
    """Count all ``r x s`` matrices over ``F_q[t]/(t^(n+1))`` by Smith type.

    ``method="exhaustive"`` runs Smith reduction on every one of the
    ``q^((n+1)rs)`` matrices.  ``method="stratified"`` groups matrices by the
    rank ``ρ`` of their constant term: a constant change of basis brings the
    constant term to ``diag(1^ρ, 0)`` and acts bijectively on the higher
    coefficients, so each stratum is counted once at that representative and
    weighted by the number of rank-``ρ`` matrices over ``F_q``.
    """
    if r > s:
        raise ValueError("expected r <= s")
    ring = _ring(q, n)
    keys = enumerate_partitions(r, n + 1)
    counts: Counter = Counter({lam: 0 for lam in keys})

    if method == "exhaustive":
        _check_guard(ring.size ** (r * s))
        for flat in itertools.product(range(ring.size), repeat=r * s):
            rows = [flat[i * s : (i + 1) * s] for i in range(r)]
            counts[smith_type(rows, ring)] += 1
        return counts

    if method != "stratified":
        raise ValueError(f"unknown method {method!r}")
    high = q**n  # coefficient vectors of t^1..t^n
    _check_guard(q ** (r * s) + (r + 1) * high ** (r * s))
    by_rank = count_by_rank(r, s, q)
    for rho, weight in sorted(by_rank.items()):
        base = [[1 if i == j and i < rho else 0 for j in range(s)] for i in range(r)]
        for flat in itertools.product(range(high), repeat=r * s):
            rows = [[base[i][j] + q * flat[i * s + j] for j in range(s)] for i in range(r)]
            counts[smith_type(rows, ring)] += weight
    return counts


def brute_force_contact_components(r: int, s: int, k: int, p: int, term_bound: int | None = None) -> list[PrePartition]:
    """Minimal partitions (under co-domination) with contact order ``>= p`` along the rank-``k`` locus.

    Searches all partitions with at most ``r`` rows and terms ``<= term_bound``.
    ``s`` does not enter the combinatorics; it is accepted for symmetry with the
    rest of the API.
    """
    if term_bound is None:
        term_bound = p
    if term_bound < p:
        raise ValueError("term_bound must be >= p")
    if not 0 <= k <= r - 1 or r > s:
        raise ValueError("need 0 <= k <= r-1 and r <= s")
    cands = [lam for lam in enumerate_partitions(r, term_bound) if sum(lam.terms[r - k - 1 :]) >= p]
    if not cands:
        return []
    tails = np.array([lam.tail_sums() for lam in cands], dtype=np.int64)
    # below[a, b]: cands[a] co-dominated by cands[b]
    below = (tails[:, None, :] <= tails[None, :, :]).all(axis=2)
    np.fill_diagonal(below, False)
    return [lam for lam, has_lower in zip(cands, below.any(axis=0)) if not has_lower]


def poset_closure_oracle(r: int, bound: int) -> frozenset:
    """Pairs ``(mu, lam)`` of ``U(r, bound)`` with ``lam`` reachable from ``mu`` by moves.

    Reachability is computed without capping finite terms (slips and falls may
    pass through rows longer than ``bound``); infinite-removal targets are
    capped at ``bound``.  The relation is then restricted to ``U(r, bound)``.
    """
    universe = enumerate_prepartitions(r, bound)
    inside = set(universe)
    succ: dict = {}

    def neighbours(mu):
        if mu not in succ:
            succ[mu] = covers_via_moves(mu, bound)
        return succ[mu]

    pairs = set()
    for mu in universe:
        seen = {mu}
        queue = deque([mu])
        while queue:
            cur = queue.popleft()
            for nxt in neighbours(cur):
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        pairs.update((mu, lam) for lam in seen if lam in inside)
    return frozenset(pairs)
