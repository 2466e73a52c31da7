"""Classes in the Grothendieck ring as Laurent polynomials in ``L``.

Every class needed for orbit volumes of square matrices (general linear
groups, Grassmannians, partial flag varieties, Levi factors, shifted by a
power of ``L``) lives in ``Z[L, 1/L]``, so that is all we model.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from .partitions import PrePartition

__all__ = [
    "LaurentPoly",
    "L",
    "ONE",
    "ParabolicData",
    "OrbitVolume",
    "class_gl",
    "class_grassmannian",
    "parabolic_data",
    "class_flag_quotient",
    "class_levi",
    "orbit_volume",
    "jet_orbit_class",
    "expand_at_one",
]

Number = Union[int, Fraction]


class LaurentPoly:
    """Laurent polynomial in ``L`` with integer coefficients.

    Immutable; stored as a sorted tuple of ``(exponent, coefficient)`` pairs
    with no zero coefficients.
    """

    __slots__ = ("_terms",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        items = []
        for e, c in sorted((coeffs or {}).items()):
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            if c:
                items.append((e, c))
        self._terms = tuple(items)

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def from_coefficients(cls, coeffs) -> "LaurentPoly":
        """From ascending coefficients ``[c_0, c_1, ...]`` of an ordinary polynomial."""
        return cls({i: c for i, c in enumerate(coeffs)})

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return self._terms[-1][0]

    @property
    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no low degree")
        return self._terms[0][0]

    def coefficient(self, e: int) -> int:
        return self.as_dict().get(e, 0)

    def coefficients(self) -> list[int]:
        """Ascending coefficient list of an ordinary polynomial (no negative exponents)."""
        if not self._terms:
            return []
        if self.low_degree < 0:
            raise ValueError("has negative exponents")
        d = self.as_dict()
        return [d.get(i, 0) for i in range(self.degree + 1)]

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.as_dict()
        for e, c in other._terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly(d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials are invertible")
            (e, c), = self._terms
            return LaurentPoly({e * n: c ** (-n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``L**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms})

    def divmod(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Polynomial long division; both operands must be ordinary polynomials
        and the divisor must have leading coefficient +-1."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if (self._terms and self.low_degree < 0) or other.low_degree < 0:
            raise ValueError("divmod needs ordinary polynomials")
        lead_e, lead_c = other._terms[-1]
        if abs(lead_c) != 1:
            raise ValueError("divisor must have leading coefficient +-1")
        rem = self
        quot: dict[int, int] = {}
        while not rem.is_zero() and rem.degree >= lead_e:
            e, c = rem._terms[-1]
            term = LaurentPoly({e - lead_e: c * lead_c})
            quot[e - lead_e] = c * lead_c
            rem = rem - other * term
        return LaurentPoly(quot), rem

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in ``Z[L, 1/L]``; raises if ``other`` does not divide."""
        if self.is_zero():
            return self
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a, b = self.low_degree, other.low_degree
        q, rem = self.shift(-a).divmod(other.shift(-b))
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {other}")
        return q.shift(a - b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __call__(self, x: Number) -> Number:
        """Evaluate at an exact number (``int`` or ``Fraction``)."""
        total: Number = 0
        for e, c in self._terms:
            if e >= 0:
                total += c * x**e
            else:
                total += c * Fraction(1, 1) / Fraction(x) ** (-e)
        return total

    def __repr__(self):
        return f"LaurentPoly({self.as_dict()})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms):
            if e == 0:
                mono = str(abs(c))
            else:
                base = "L" if e == 1 else f"L^{e}"
                mono = base if abs(c) == 1 else f"{abs(c)}*{base}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out


ONE = LaurentPoly.const(1)
L = LaurentPoly.monomial(1)


def class_gl(d: int) -> LaurentPoly:
    """``[GL_d] = prod_{i<d} (L^d - L^i)``."""
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
    out = ONE
    for i in range(d):
        out = out * (L**d - L**i)
    return out


def class_grassmannian(u: int, v: int) -> LaurentPoly:
    """Gaussian binomial ``[v choose u]_L``, the class of ``u``-planes in ``v``-space."""
    if not 0 <= u <= v:
        raise ValueError(f"need 0 <= u <= v, got u={u}, v={v}")
    num = ONE
    den = ONE
    for i in range(u):
        num = num * (L ** (v - i) - 1)
        den = den * (L ** (i + 1) - 1)
    return num.exact_div(den)


@dataclass(frozen=True)
class ParabolicData:
    """Signature ``0 < i_1 < ... < i_l = r`` of the flag fixed by a parabolic subgroup."""

    signature: tuple

    def __post_init__(self):
        sig = tuple(self.signature)
        if not sig or any(b <= a for a, b in zip((0,) + sig, sig)):
            raise ValueError(f"signature must be strictly increasing positive integers, got {sig}")
        object.__setattr__(self, "signature", sig)

    @property
    def r(self) -> int:
        return self.signature[-1]

    @property
    def blocks(self) -> tuple:
        sig = self.signature
        return tuple(b - a for a, b in zip((0,) + sig[:-1], sig))


def parabolic_data(lam: PrePartition, r: int | None = None) -> ParabolicData:
    """Jump set of ``λ`` (positions ``i < r`` with ``λ_i > λ_{i+1}``), closed with ``r``."""
    if r is None:
        r = lam.r
    lam = lam.padded(r)
    if not lam.is_partition:
        raise ValueError("parabolic data needs a partition")
    jumps = [i for i in range(1, r) if lam[i - 1] > lam[i]]
    return ParabolicData(tuple(jumps) + (r,))


def class_flag_quotient(pd: ParabolicData) -> LaurentPoly:
    """``[GL_r / P] = prod_j [G(i_j - i_{j-1}, i_j)]``."""
    out = ONE
    for d, i in zip(pd.blocks, pd.signature):
        out = out * class_grassmannian(d, i)
    return out


def class_levi(pd: ParabolicData) -> LaurentPoly:
    out = ONE
    for d in pd.blocks:
        out = out * class_gl(d)
    return out


@dataclass(frozen=True)
class OrbitVolume:
    """Motivic volume ``L^(-b) * cls`` of an orbit of square matrices."""

    cls: LaurentPoly
    b: int

    @property
    def volume(self) -> LaurentPoly:
        return self.cls.shift(-self.b)

    def evaluate(self, q: Number) -> Number:
        return self.volume(q)


def orbit_volume(lam: PrePartition, r: int | None = None) -> OrbitVolume:
    """Volume of the orbit of ``λ`` in the arc space of ``r x r`` matrices."""
    if r is None:
        r = lam.r
    lam = lam.padded(r)
    if not lam.is_partition:
        raise ValueError("thin orbits (infinite terms) have volume zero; pass a partition")
    pd = parabolic_data(lam, r)
    flag = class_flag_quotient(pd)
    b = sum(x * (2 * i - 1) for i, x in enumerate(lam.terms, start=1))
    return OrbitVolume(flag * flag * class_levi(pd), b)


def jet_orbit_class(lam: PrePartition, r: int, n: int) -> LaurentPoly:
    """Class of the orbit of ``λ`` in the ``n``-jets of ``r x r`` matrices, for ``n >= λ_1``."""
    lam = lam.padded(r)
    if not lam.is_partition:
        raise ValueError("jet orbit classes are defined for partitions")
    if n < lam.colength:
        raise ValueError(f"jet level below co-length: n={n} < {lam.colength}")
    vol = orbit_volume(lam, r)
    return vol.cls.shift(r * r * n - vol.b)


def _binom_general(e: int, j: int) -> int:
    # binomial(e, j) for any integer e, j >= 0
    num = 1
    for i in range(j):
        num *= e - i
    den = 1
    for i in range(1, j + 1):
        den *= i
    return num // den


def expand_at_one(f: LaurentPoly, order: int) -> list[int]:
    """Coefficients ``[c_0, ..., c_{order-1}]`` of ``f(1 + u)`` as a power series in ``u``."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    out = [0] * order
    for e, c in f.as_dict().items():
        for j in range(order):
            out[j] += c * _binom_general(e, j)
    return out
