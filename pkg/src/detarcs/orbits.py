"""Orbits of the arc group on the space of r x s matrices.

An orbit is identified with its indexing pre-partition: the orbit of the
diagonal matrix ``diag(t^λ_1, ..., t^λ_r)``.  Nothing here materializes a
matrix; see :mod:`detarcs.oracle` for the brute-force side.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import INF, PrePartition, codominates, truncate

__all__ = [
    "MatrixShape",
    "Orbit",
    "ContactSpec",
    "orbit_in_determinantal",
    "contact_order",
    "orbit_in_contact_locus",
    "orbit_closure_contains",
    "minimal_contact_orbits",
    "count_contact_components",
    "count_jet_components",
    "truncate_orbit",
]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class MatrixShape:
    r: int
    s: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1:
            raise ValueError(f"matrix shape must be positive, got {self.r}x{self.s}")
        if self.r > self.s:
            raise ValueError(f"expected r <= s, got {self.r}x{self.s}")

    @property
    def is_square(self) -> bool:
        return self.r == self.s


@dataclass(frozen=True)
class Orbit:
    shape: MatrixShape
    index: PrePartition

    def __post_init__(self):
        if self.index.r != self.shape.r:
            raise ValueError(
                f"orbit index {self.index} has ambient length {self.index.r}, expected {self.shape.r}"
            )

    @classmethod
    def of(cls, shape: MatrixShape, terms) -> "Orbit":
        if isinstance(terms, PrePartition):
            terms = terms.terms
        return cls(shape, PrePartition.of(terms, shape.r))


@dataclass(frozen=True)
class ContactSpec:
    """The contact locus of arcs meeting the rank-``k`` locus with order at least ``p``."""

    shape: MatrixShape
    k: int
    p: int

    def __post_init__(self):
        if not 0 <= self.k <= self.shape.r - 1:
            raise ValueError(f"rank bound k={self.k} outside 0..{self.shape.r - 1}")
        if self.p < 1:
            raise ValueError(f"contact order must be >= 1, got {self.p}")


def orbit_in_determinantal(orbit: Orbit, k: int) -> bool:
    """Whether the orbit lies in the arc space of matrices of rank at most ``k``."""
    r = orbit.shape.r
    if not 0 <= k <= r:
        raise ValueError(f"rank bound k={k} outside 0..{r}")
    return all(x is INF for x in orbit.index.terms[: r - k])


def contact_order(index: PrePartition, k: int):
    """Order of the ``(k+1)``-minors along the orbit: the sum of the last ``k+1`` terms."""
    r = index.r
    return sum(index.terms[r - k - 1 :], 0)


def orbit_in_contact_locus(orbit: Orbit, contact: ContactSpec) -> bool:
    if orbit.shape != contact.shape:
        raise ValueError("orbit and contact locus live on different matrix spaces")
    return contact_order(orbit.index, contact.k) >= contact.p


def orbit_closure_contains(a: Orbit, b: Orbit) -> bool:
    """Whether ``b`` lies in the closure of ``a``.  Reverses co-domination."""
    if a.shape != b.shape:
        raise ValueError("orbits live on different matrix spaces")
    return codominates(a.index, b.index)


def minimal_contact_orbits(contact: ContactSpec) -> list[PrePartition]:
    """Indices of the dense orbits of the irreducible components of a contact locus.

    For ``0 < k < r-1`` these are the partitions ``(d^(a+r-k), e)`` with
    ``p = (a+1)d + e``, ``0 <= e < d`` and at most ``r`` rows, listed by ``d``
    descending.  For ``k = 0`` or ``k = r-1`` the locus is irreducible with dense
    orbit ``(p^(r-k))``.
    """
    r, k, p = contact.shape.r, contact.k, contact.p
    if k == 0 or k == r - 1:
        return [PrePartition.of([p] * (r - k), r)]
    out = []
    for d in range(p, 0, -1):
        a, e = divmod(p, d)
        a -= 1
        if e == 0:
            ok = 0 <= a <= k
        else:
            ok = 0 <= a < k
        terms = [d] * (a + r - k) + ([e] if e else [])
        if ok and len(terms) <= r:
            out.append(PrePartition.of(terms, r))
    return out


def count_contact_components(contact: ContactSpec) -> int:
    r, k, p = contact.shape.r, contact.k, contact.p
    if k == 0 or k == r - 1:
        return 1
    return p + 1 - _ceil_div(p, k + 1)


def count_jet_components(shape: MatrixShape, k: int, n: int) -> int:
    """Number of irreducible components of the ``n``-th jet scheme of the rank-``k`` locus."""
    if not 0 <= k <= shape.r - 1:
        raise ValueError(f"rank bound k={k} outside 0..{shape.r - 1}")
    if n < 0:
        raise ValueError(f"jet level must be >= 0, got {n}")
    if k == 0 or k == shape.r - 1:
        return 1
    return n + 2 - _ceil_div(n + 1, k + 1)


def truncate_orbit(orbit: Orbit, n: int) -> PrePartition:
    """Index of the image of the orbit in the ``n``-jet scheme."""
    if n < 0:
        raise ValueError(f"jet level must be >= 0, got {n}")
    return truncate(orbit.index, n + 1)
