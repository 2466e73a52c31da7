"""Oracle suites behind ``detarcs verify``.

Each suite is a list of checks.  A check returns ``None`` on success or a
string describing the first counterexample it met.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Callable

from .grothendieck import class_flag_quotient, class_gl, class_grassmannian, expand_at_one, jet_orbit_class, parabolic_data
from .invariants import lct, lct_bruteforce, lct_vertex_values, orbit_codimension
from .oracle import (
    _ring,
    brute_force_contact_components,
    count_jet_orbits,
    matmul,
    poset_closure_oracle,
    random_invertible,
    smith_type,
)
from .orbits import ContactSpec, MatrixShape, count_contact_components, count_jet_components, minimal_contact_orbits
from .partitions import PrePartition, codominates, duality_check, enumerate_partitions, enumerate_prepartitions
from .zeta import (
    evaluate_motivic_zeta,
    motivic_zeta_terms,
    series_zeta_oracle,
    specialize_to_topological,
    topological_zeta,
    zeta_poles,
)

__all__ = ["Check", "CheckResult", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[random.Random], "str | None"]


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    counterexample: "str | None"
    seconds: float

    @property
    def passed(self) -> bool:
        return self.counterexample is None


# -- poset -------------------------------------------------------------------


def _moves_generate_codomination(rng) -> "str | None":
    for r in range(1, 4):
        for bound in range(0, 5):
            universe = enumerate_prepartitions(r, bound)
            closure = poset_closure_oracle(r, bound)
            for mu in universe:
                for lam in universe:
                    if ((mu, lam) in closure) != codominates(lam, mu):
                        return f"U({r},{bound}): mu={mu}, lam={lam}, reachable={(mu, lam) in closure}"
    return None


def _codomination_is_partial_order(rng) -> "str | None":
    universe = enumerate_prepartitions(3, 3)
    for a in universe:
        for b in universe:
            if a != b and codominates(a, b) and codominates(b, a):
                return f"antisymmetry fails for {a}, {b}"
            if codominates(a, b):
                for c in universe:
                    if codominates(b, c) and not codominates(a, c):
                        return f"transitivity fails for {a}, {b}, {c}"
    return None


def _conjugation_duality(rng) -> "str | None":
    for r in range(1, 5):
        parts = enumerate_partitions(r, 4)
        for a in parts:
            for b in parts:
                if not duality_check(a, b):
                    return f"duality fails for {a}, {b}"
    return None


# -- components --------------------------------------------------------------


_GOLDEN = {
    (8, 6, 5): [(5, 5), (4, 4, 1), (3, 3, 2), (2, 2, 2, 1), (1, 1, 1, 1, 1, 1)],
    (5, 3, 5): [(5, 5), (4, 4, 1), (3, 3, 2), (2, 2, 2, 1)],
}


def _golden_minimal_orbits(rng) -> "str | None":
    for (r, k, p), want in _GOLDEN.items():
        got = [lam.compact() for lam in minimal_contact_orbits(ContactSpec(MatrixShape(r, r), k, p))]
        if got != want:
            return f"r={r}, k={k}, p={p}: got {got}"
    return None


def _component_counts(rng) -> "str | None":
    for r in range(1, 6):
        for s in range(r, 7):
            for k in range(r):
                for p in range(1, 9):
                    contact = ContactSpec(MatrixShape(r, s), k, p)
                    formula = 1 if k in (0, r - 1) else p + 1 - -(-p // (k + 1))
                    brute = brute_force_contact_components(r, s, k, p)
                    closed = minimal_contact_orbits(contact)
                    if not (count_contact_components(contact) == len(brute) == formula) or set(closed) != set(brute):
                        return f"r={r}, s={s}, k={k}, p={p}: brute={[str(x) for x in brute]}"
                    if count_jet_components(contact.shape, k, p - 1) != formula:
                        return f"jet count mismatch at r={r}, k={k}, n={p - 1}"
    return None


# -- counting ----------------------------------------------------------------


_SQUARE_CASES = [(2, 1, 2), (2, 1, 3), (2, 2, 2), (2, 2, 3)]


def _square_counts(rng) -> "str | None":
    for r, n, q in _SQUARE_CASES:
        counts = count_jet_orbits(r, r, n, q)
        if sum(counts.values()) != q ** ((n + 1) * r * r):
            return f"r={r}, n={n}, q={q}: total {sum(counts.values())}"
        shape = MatrixShape(r, r)
        for lam, c in counts.items():
            if lam.colength > n:
                continue
            cls = jet_orbit_class(lam, r, n)
            if cls(q) != c:
                return f"r={r}, n={n}, q={q}, {lam}: count {c} vs class {cls(q)}"
            if cls.degree != (n + 1) * r * r - orbit_codimension(lam, shape):
                return f"degree mismatch at {lam}"
    return None


def _rectangular_degrees(rng) -> "str | None":
    r, s, n = 2, 3, 1
    shape = MatrixShape(r, s)
    qs = (2, 3, 5)
    tables = {q: count_jet_orbits(r, s, n, q, method="stratified") for q in qs}
    for q in (2, 3):
        if count_jet_orbits(r, s, n, q) != tables[q]:
            return f"stratified and exhaustive counts differ at q={q}"
    for q, counts in tables.items():
        if sum(counts.values()) != q ** ((n + 1) * r * s):
            return f"total mismatch at q={q}"
    for lam in enumerate_partitions(r, n):
        d = (n + 1) * r * s - orbit_codimension(lam, shape)
        for q in qs:
            c = tables[q][lam]
            if not q ** (d - 1) < c < q ** (d + 1):
                return f"{lam}: count {c} at q={q} outside (q^{d - 1}, q^{d + 1})"
        if round(math.log(tables[5][lam], 5)) != d:
            return f"{lam}: leading degree at q=5 is not {d}"
    return None


def _smith_invariance(rng) -> "str | None":
    for r, s, n, p in [(2, 2, 2, 3), (2, 3, 1, 2), (3, 3, 1, 2)]:
        ring = _ring(p, n)
        for _ in range(50):
            m = [[rng.randrange(ring.size) for _ in range(s)] for _ in range(r)]
            g = random_invertible(r, ring, rng)
            h = random_invertible(s, ring, rng)
            a, b = smith_type(m, ring), smith_type(matmul(matmul(g, m, ring), h, ring), ring)
            if a != b:
                return f"{m} has type {a} but a conjugate has type {b}"
    return None


def _grothendieck_sanity(rng) -> "str | None":
    for d in range(5):
        for q in (2, 3):
            want = math.prod(q**d - q**i for i in range(d))
            if class_gl(d)(q) != want:
                return f"[GL_{d}]({q}) = {class_gl(d)(q)}, expected {want}"
    for v in range(9):
        for u in range(v + 1):
            g = class_grassmannian(u, v)
            if g != class_grassmannian(v - u, v) or g(1) != math.comb(v, u):
                return f"Gaussian binomial ({v} choose {u}) fails duality or L=1 value"
    for r in range(1, 5):
        for lam in [PrePartition(tuple(range(r, 0, -1)))]:
            val = expand_at_one(class_flag_quotient(parabolic_data(lam, r)), 1)[0]
            if val != math.factorial(r):
                return f"full flag class of GL_{r} at L=1 is {val}"
    return None


# -- lct ---------------------------------------------------------------------


def _lct_closed_form(rng) -> "str | None":
    for r in range(1, 5):
        for s in range(r, 6):
            shape = MatrixShape(r, s)
            for k in range(r):
                a, b, c = lct(shape, k), lct_bruteforce(shape, k), min(lct_vertex_values(shape, k))
                if not a == b == c:
                    return f"r={r}, s={s}, k={k}: closed {a}, brute force {b}, vertices {c}"
    return None


# -- zeta --------------------------------------------------------------------


def _topological_specialization(rng) -> "str | None":
    for r in range(1, 5):
        for k in range(r):
            terms = motivic_zeta_terms(r, k)
            z = topological_zeta(r, k)
            for s0 in range(4):
                if specialize_to_topological(terms, s0) != z(s0):
                    return f"r={r}, k={k}, s0={s0}: {specialize_to_topological(terms, s0)} vs {z(s0)}"
            poles = zeta_poles(r, k)
            nearest = max(poles)
            if nearest != -lct(MatrixShape(r, r), k):
                return f"r={r}, k={k}: nearest pole {nearest}"
            for pole in poles:
                if z.denominator and sum(c * pole**i for i, c in enumerate(z.denominator)) != 0:
                    return f"r={r}, k={k}: {pole} is not a root of the denominator"
    return None


def _motivic_enclosure(rng) -> "str | None":
    for r in range(1, 4):
        for k in range(r):
            terms = motivic_zeta_terms(r, k)
            for q in (r + 1, r + 2):
                for s0 in (1, 2):
                    value = evaluate_motivic_zeta(terms, q, s0)
                    lo, hi = series_zeta_oracle(r, k, q, s0, 8)
                    if not lo <= value <= hi:
                        return f"r={r}, k={k}, q={q}, s0={s0}: {value} outside [{float(lo)}, {float(hi)}]"
    return None


SUITES: dict[str, list[Check]] = {
    "poset": [
        Check("moves generate co-domination on U(r<=3, N<=4)", _moves_generate_codomination),
        Check("co-domination is a partial order on U(3,3)", _codomination_is_partial_order),
        Check("conjugation swaps dominance and co-domination", _conjugation_duality),
    ],
    "components": [
        Check("minimal orbits of the worked contact loci", _golden_minimal_orbits),
        Check("component counts vs exhaustive minimality", _component_counts),
    ],
    "counting": [
        Check("square jet counts equal orbit classes", _square_counts),
        Check("rectangular jet counts have the codimension degree", _rectangular_degrees),
        Check("Smith type is invariant under GL x GL", _smith_invariance),
        Check("Grothendieck class sanity", _grothendieck_sanity),
    ],
    "lct": [
        Check("lct closed form vs brute force", _lct_closed_form),
    ],
    "zeta": [
        Check("L -> 1 specialization equals topological zeta", _topological_specialization),
        Check("motivic zeta inside the series enclosure", _motivic_enclosure),
    ],
}


def run_suite(name: str, seed: int = 0) -> list[CheckResult]:
    """Run one suite (or ``"all"``) and return per-check results in order."""
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise ValueError(f"unknown suite {name!r}")
    results = []
    for suite in names:
        for check in SUITES[suite]:
            rng = random.Random(seed)
            start = time.perf_counter()
            outcome = check.run(rng)
            results.append(CheckResult(suite, check.name, outcome, time.perf_counter() - start))
    return results
