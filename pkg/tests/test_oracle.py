import random

import pytest

from detarcs.grothendieck import jet_orbit_class
from detarcs.oracle import (
    GuardExceeded,
    TruncRing,
    brute_force_contact_components,
    count_by_rank,
    count_jet_orbits,
    matmul,
    poset_closure_oracle,
    random_invertible,
    smith_type,
)
from detarcs.partitions import INF, PrePartition, codominates, enumerate_partitions


def P(*terms):
    return PrePartition(terms)


class TestRing:
    def test_arithmetic(self):
        R = TruncRing(3, 2)
        t = R.t_power(1)
        assert R.mul[t][t] == R.t_power(2)
        assert R.mul[t][R.t_power(2)] == 0
        assert R.t_power(3) == 0
        assert R.add[1][R.neg[1]] == 0
        assert R.sub(t, t) == 0
        unit = R.from_coeffs([2, 1, 0])
        assert R.mul[unit][R.inv[unit]] == 1
        assert R.order[t] == 1 and R.order[0] == 3

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            TruncRing(4, 1)
        with pytest.raises(ValueError):
            TruncRing(2, -1)
        with pytest.raises(ValueError):
            TruncRing(2, 12)


class TestSmith:
    def test_examples(self):
        R = TruncRing(2, 1)
        t = R.t_power(1)
        assert smith_type([[t, 0], [0, 1]], R) == P(1, 0)
        assert smith_type([[0, 0], [0, 0]], R) == P(2, 2)
        assert smith_type([[t, t], [t, t]], R) == P(2, 1)

    def test_rectangular(self):
        R = TruncRing(2, 2)
        t = R.t_power(1)
        assert smith_type([[0, t, 0], [R.t_power(2), 0, 0]], R) == P(2, 1)
        with pytest.raises(ValueError):
            smith_type([[1], [0]], R)

    def test_invariance(self):
        rng = random.Random(7)
        R = TruncRing(3, 1)
        for _ in range(100):
            m = [[rng.randrange(R.size) for _ in range(3)] for _ in range(2)]
            g, h = random_invertible(2, R, rng), random_invertible(3, R, rng)
            assert smith_type(matmul(matmul(g, m, R), h, R), R) == smith_type(m, R)

    def test_diagonal_recovers_index(self):
        R = TruncRing(2, 3)
        for lam in enumerate_partitions(3, 4):
            m = [[R.t_power(lam[i]) if i == j else 0 for j in range(3)] for i in range(3)]
            assert smith_type(m, R) == lam


class TestCounting:
    def test_one_by_one(self):
        assert count_jet_orbits(1, 1, 1, 2) == {P(0): 2, P(1): 1, P(2): 1}

    def test_two_by_two_matches_classes(self):
        counts = count_jet_orbits(2, 2, 1, 2)
        assert sum(counts.values()) == 256
        assert counts[P(0, 0)] == jet_orbit_class(P(0, 0), 2, 1)(2) == 96

    def test_stratified_agrees(self):
        for r, s, n, q in [(1, 2, 2, 2), (2, 2, 1, 3), (2, 3, 1, 2)]:
            assert count_jet_orbits(r, s, n, q, "stratified") == count_jet_orbits(r, s, n, q)

    def test_rank_counts(self):
        assert count_by_rank(2, 2, 2) == {0: 1, 1: 9, 2: 6}

    def test_guard(self):
        with pytest.raises(GuardExceeded, match="smaller parameters"):
            count_jet_orbits(3, 3, 2, 3)
        with pytest.raises(ValueError):
            count_jet_orbits(2, 2, 1, 2, method="magic")


class TestContactOracle:
    def test_examples(self):
        got = brute_force_contact_components(8, 8, 6, 5)
        assert {lam.compact() for lam in got} == {(5, 5), (4, 4, 1), (3, 3, 2), (2, 2, 2, 1), (1,) * 6}
        got = brute_force_contact_components(5, 6, 3, 5)
        assert {lam.compact() for lam in got} == {(5, 5), (4, 4, 1), (3, 3, 2), (2, 2, 2, 1)}
        assert brute_force_contact_components(2, 2, 0, 3) == [P(3, 3)]

    def test_widening_the_search_changes_nothing(self):
        for r in range(1, 5):
            for k in range(r):
                for p in range(1, 6):
                    narrow = set(brute_force_contact_components(r, r, k, p))
                    assert narrow == set(brute_force_contact_components(r, r, k, p, term_bound=2 * p))


class TestPosetOracle:
    def test_chain(self):
        rel = poset_closure_oracle(1, 2)
        chain = [P(INF), P(2), P(1), P(0)]
        for i, a in enumerate(chain):
            for j, b in enumerate(chain):
                assert ((a, b) in rel) == (i <= j)

    def test_matches_codomination(self):
        from detarcs.partitions import enumerate_prepartitions

        universe = enumerate_prepartitions(2, 3)
        rel = poset_closure_oracle(2, 3)
        for mu in universe:
            for lam in universe:
                assert ((mu, lam) in rel) == codominates(lam, mu)
