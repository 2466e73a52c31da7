"""Codimensions of orbits, log discrepancies and log canonical thresholds."""
from __future__ import annotations

from fractions import Fraction

from .orbits import MatrixShape, contact_order
from .partitions import INF, ExtNat, PrePartition, enumerate_partitions

__all__ = [
    "orbit_codimension",
    "codimension_weights",
    "stabilizer_codimension",
    "log_discrepancy",
    "lct",
    "lct_vertex_values",
    "lct_bruteforce",
]


def codimension_weights(shape: MatrixShape) -> list[int]:
    """Weight ``s - r + 2i - 1`` of row ``i`` in the codimension formula."""
    r, s = shape.r, shape.s
    return [s - r + 2 * i - 1 for i in range(1, r + 1)]


def _check(lam: PrePartition, shape: MatrixShape):
    if lam.r != shape.r:
        raise ValueError(f"{lam} does not index an orbit of {shape.r}x{shape.s} matrices")


def orbit_codimension(lam: PrePartition, shape: MatrixShape) -> ExtNat:
    """Codimension of the orbit in the arc space; ``INF`` for thin orbits."""
    _check(lam, shape)
    if not lam.is_partition:
        return INF
    return sum(x * w for x, w in zip(lam.terms, codimension_weights(shape)))


def stabilizer_codimension(lam: PrePartition, shape: MatrixShape, n: int) -> int:
    """Codimension of the stabilizer of the diagonal representative in the ``n``-jet group."""
    _check(lam, shape)
    if not lam.is_partition:
        raise ValueError("stabilizer codimension needs a partition (finite terms)")
    if n < lam.colength:
        raise ValueError(f"jet level below co-length: n={n} < {lam.colength}")
    return (n + 1) * shape.r * shape.s - orbit_codimension(lam, shape)


def log_discrepancy(lam: PrePartition, shape: MatrixShape) -> int:
    """Mather log discrepancy of the invariant valuation induced by the orbit.

    The ambient space is smooth, so this is the codimension of the orbit.
    """
    if not lam.is_partition:
        raise ValueError("log discrepancy is defined for partitions only")
    return orbit_codimension(lam, shape)


def _check_rank(shape: MatrixShape, k: int):
    if not 0 <= k <= shape.r - 1:
        raise ValueError(f"rank bound k={k} outside 0..{shape.r - 1}")


def lct_vertex_values(shape: MatrixShape, k: int) -> list[Fraction]:
    """Values ``(r-i)(s-i)/(k+1-i)``, ``i = 0..k``, at the vertices of the minimization simplex."""
    _check_rank(shape, k)
    r, s = shape.r, shape.s
    return [Fraction((r - i) * (s - i), k + 1 - i) for i in range(k + 1)]


def lct(shape: MatrixShape, k: int) -> Fraction:
    """Log canonical threshold of the pair (matrices, rank <= k locus)."""
    return min(lct_vertex_values(shape, k))


def lct_bruteforce(shape: MatrixShape, k: int, p_max: int | None = None) -> Fraction:
    """Minimize ``codim(Cont^p) / p`` over ``1 <= p <= p_max`` by exhaustive search.

    For each ``p`` every partition with terms ``<= p`` and contact order ``>= p``
    is scanned.  Minimal elements of the contact condition have ``λ_1 <= p``
    and codimension only drops along the closure order, so the bound loses
    nothing.  ``p_max >= k+1`` suffices; the default is ``3(k+1)``.
    """
    _check_rank(shape, k)
    if p_max is None:
        p_max = 3 * (k + 1)
    if p_max < 1:
        raise ValueError("p_max must be >= 1")
    best = None
    for p in range(1, p_max + 1):
        for lam in enumerate_partitions(shape.r, p):
            if contact_order(lam, k) < p:
                continue
            value = Fraction(orbit_codimension(lam, shape), p)
            if best is None or value < best:
                best = value
    return best
