"""Motivic and topological zeta functions of determinantal varieties (square case).

The motivic zeta function is kept as a finite structured sum over subsets
``I`` of ``{1, ..., r-1}``; each term is

    eta(I) * L^psi_r * prod_{i not in I} 1 / (L^psi_i - 1)

with ``psi_i = i^2 + s * max(0, k+1+i-r)``.  Numeric specialization
(``L -> q``, ``s -> s0``) and the ``L -> 1`` specialization both work on that
structure directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .grothendieck import LaurentPoly, ONE, class_gl, class_grassmannian, expand_at_one, orbit_volume
from .partitions import PrePartition, enumerate_partitions

__all__ = [
    "LinearForm",
    "MotivicZetaTerm",
    "RationalFunction",
    "psi_exponents",
    "eta_class",
    "motivic_zeta_terms",
    "evaluate_motivic_zeta",
    "series_zeta_oracle",
    "topological_zeta",
    "zeta_poles",
    "term_u_valuation",
    "specialize_to_topological",
]

Rational = Union[int, Fraction]


def _check(r: int, k: int):
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if not 0 <= k <= r - 1:
        raise ValueError(f"rank bound k={k} outside 0..{r - 1}")


@dataclass(frozen=True)
class LinearForm:
    """``a*s + b`` in the formal variable ``s``."""

    a: int
    b: int

    def __call__(self, s0: Rational) -> Rational:
        return self.a * s0 + self.b

    def __str__(self):
        if self.a == 0:
            return str(self.b)
        s_part = "s" if self.a == 1 else f"{self.a}*s"
        return f"{self.b} + {s_part}" if self.b else s_part


def psi_exponents(r: int, k: int) -> list[LinearForm]:
    """``psi_i = i^2 + s*max(0, k+1+i-r)`` for ``i = 1..r``."""
    _check(r, k)
    return [LinearForm(max(0, k + 1 + i - r), i * i) for i in range(1, r + 1)]


def _complement(subset, r: int) -> list[int]:
    chosen = set(subset)
    return [i for i in range(1, r + 1) if i not in chosen]


def eta_class(subset: Sequence[int], r: int) -> LaurentPoly:
    """``prod_{i not in I} [G(d, i)]^2 [GL_d]`` with ``d`` the gap to the previous non-member."""
    subset = tuple(sorted(subset))
    if any(not 1 <= i <= r - 1 for i in subset) or len(set(subset)) != len(subset):
        raise ValueError(f"subset must consist of distinct elements of 1..{r - 1}, got {subset}")
    out = ONE
    prev = 0
    for i in _complement(subset, r):
        d = i - prev
        g = class_grassmannian(d, i)
        out = out * g * g * class_gl(d)
        prev = i
    return out


@dataclass(frozen=True)
class MotivicZetaTerm:
    """``eta * L^prefactor * prod 1/(L^psi - 1)`` over ``denominators``."""

    subset: tuple
    eta: LaurentPoly
    denominators: tuple
    prefactor: LinearForm


def motivic_zeta_terms(r: int, k: int) -> list[MotivicZetaTerm]:
    """One term per subset of ``{1..r-1}``, ordered by bitmask ascending."""
    _check(r, k)
    psi = psi_exponents(r, k)
    terms = []
    for mask in range(1 << (r - 1)):
        subset = tuple(i for i in range(1, r) if mask >> (i - 1) & 1)
        dens = tuple(psi[i - 1] for i in _complement(subset, r))
        terms.append(MotivicZetaTerm(subset, eta_class(subset, r), dens, psi[r - 1]))
    return terms


def _integer_exponent(form: LinearForm, s0: Rational) -> int:
    value = Fraction(form(s0))
    if value.denominator != 1:
        raise ValueError(f"exponent {form} at s={s0} is not an integer")
    return int(value)


def evaluate_motivic_zeta(terms: Sequence[MotivicZetaTerm], q: Rational, s0: Rational) -> Fraction:
    """Exact value of the structured sum at ``L = q``, ``s = s0``."""
    q = Fraction(q)
    if q <= 1:
        raise ValueError(f"need q > 1, got {q}")
    if s0 < 0:
        raise ValueError(f"need s0 >= 0, got {s0}")
    total = Fraction(0)
    for term in terms:
        value = Fraction(term.eta(q)) * q ** _integer_exponent(term.prefactor, s0)
        for psi in term.denominators:
            value /= q ** _integer_exponent(psi, s0) - 1
        total += value
    return total


def series_zeta_oracle(r: int, k: int, q: Rational, s0: int, head_bound: int) -> tuple[Fraction, Fraction]:
    """Rigorous enclosure of the zeta function by summing orbit volumes directly.

    The head sums ``vol(O_λ)(q) * q^(-s0 * contact order)`` over partitions with
    ``λ_1 <= head_bound``.  Every summand is positive and bounded by
    ``C * q^(-sum i^2 a_i)`` where ``a`` are the successive differences of ``λ``
    and ``C`` is the largest orbit class value, so the tail is at most
    ``C * (prod_i 1/(1 - q^(-i^2)) - head of that product)``.
    """
    _check(r, k)
    q = Fraction(q)
    if q <= 1:
        raise ValueError(f"need q > 1, got {q}")
    if s0 < 0 or int(s0) != s0:
        raise ValueError(f"need a non-negative integer s0, got {s0}")
    if head_bound < 0:
        raise ValueError("head_bound must be >= 0")

    head = Fraction(0)
    weight_head = Fraction(0)
    for lam in enumerate_partitions(r, head_bound):
        vol = orbit_volume(lam, r)
        contact = sum(lam.terms[r - k - 1 :])
        head += Fraction(vol.evaluate(q)) * q ** (-s0 * contact)
        weight_head += q ** (-vol.b)

    # one representative per jump set covers every orbit class
    c_max = Fraction(0)
    for mask in range(1 << (r - 1)):
        diffs = [(mask >> i) & 1 for i in range(r - 1)] + [0]
        lam = PrePartition(tuple(sum(diffs[i:]) for i in range(r)))
        c_max = max(c_max, Fraction(orbit_volume(lam, r).cls(q)))

    weight_total = Fraction(1)
    for i in range(1, r + 1):
        weight_total /= 1 - q ** (-i * i)
    tail = c_max * (weight_total - weight_head)
    return head, head + tail


# -- rational functions in s -------------------------------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(Fraction(c) for c in p)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _pdivmod(a, b):
    a, b = list(_trim(a)), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        a = list(_trim(a))
    return _trim(quot), _trim(a)


def _pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pdivmod(a, b)[1]
    return a


def _peval(p, x):
    total = Fraction(0)
    for c in reversed(p):
        total = total * x + c
    return total


def _pstr(p, var="s"):
    if not p:
        return "0"
    parts = []
    for e in range(len(p) - 1, -1, -1):
        c = p[e]
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            mono = str(mag)
        else:
            base = var if e == 1 else f"{var}^{e}"
            mono = base if mag == 1 else f"{mag}*{base}"
        parts.append(("-" if c < 0 else "+", mono))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, mono in parts[1:]:
        out += sign + mono
    return out


class RationalFunction:
    """Reduced quotient of polynomials in ``s`` over the rationals; monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Sequence[Rational], denominator: Sequence[Rational]):
        num, den = _trim(numerator), _trim(denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = _pgcd(num, den) if num else den
        num, den = _pdivmod(num, g)[0], _pdivmod(den, g)[0]
        lead = den[-1]
        self.numerator = tuple(c / lead for c in num)
        self.denominator = tuple(c / lead for c in den)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(_pmul(self.numerator, other.numerator), _pmul(self.denominator, other.denominator))

    def __call__(self, s0: Rational) -> Fraction:
        return _peval(self.numerator, Fraction(s0)) / _peval(self.denominator, Fraction(s0))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        num = _pstr(self.numerator)
        if self.denominator == (1,):
            return num
        if len(self.numerator) > 1:
            num = f"({num})"
        return f"{num}/({_pstr(self.denominator)})"

    def __repr__(self):
        return f"RationalFunction({self})"


def topological_zeta(r: int, k: int) -> RationalFunction:
    """``prod_{j=0..k} 1 / (1 + s (k+1-j)/(r-j)^2)``."""
    _check(r, k)
    out = RationalFunction((1,), (1,))
    for j in range(k + 1):
        out = out * RationalFunction((1,), (1, Fraction(k + 1 - j, (r - j) ** 2)))
    return out


def zeta_poles(r: int, k: int) -> list[Fraction]:
    """Poles ``-(r-j)^2/(k+1-j)``, ``j = 0..k``, ascending."""
    _check(r, k)
    return sorted(Fraction(-((r - j) ** 2), k + 1 - j) for j in range(k + 1))


def _u_valuation(f: LaurentPoly) -> tuple[int, int]:
    """``(v, c)`` with ``f(1+u) = c u^v + O(u^(v+1))``, ``c != 0``."""
    if f.is_zero():
        raise ValueError("zero class has no valuation")
    order = 4
    while True:
        coeffs = expand_at_one(f, order)
        for v, c in enumerate(coeffs):
            if c:
                return v, c
        order *= 2


def term_u_valuation(term: MotivicZetaTerm) -> int:
    """Order of vanishing at ``L = 1``; each ``1/(L^psi - 1)`` contributes ``-1``."""
    return _u_valuation(term.eta)[0] - len(term.denominators)


def specialize_to_topological(terms: Sequence[MotivicZetaTerm], s0: Rational) -> Fraction:
    """Value at ``s = s0`` of the ``L -> 1`` specialization of the structured sum.

    ``L^psi - 1 = psi*(L-1) + O((L-1)^2)`` and ``L^psi = 1 + O(L-1)``, so a term
    of valuation zero contributes ``(leading coefficient of eta) / prod psi(s0)``
    and terms of positive valuation vanish.
    """
    s0 = Fraction(s0)
    if s0 < 0:
        raise ValueError(f"need s0 >= 0, got {s0}")
    total = Fraction(0)
    for term in terms:
        v, lead = _u_valuation(term.eta)
        val = v - len(term.denominators)
        if val < 0:
            raise ArithmeticError(f"specialization undefined: term {term.subset} has u-valuation {val}")
        if val > 0:
            continue
        value = Fraction(lead)
        for psi in term.denominators:
            value /= psi(s0)
        total += value
    return total
