"""
Exit criteria for the package. Each test carries a `criterion` mark; the
conftest prints one PASS/FAIL line per criterion at the end of the run.
"""
import time
from fractions import Fraction as F

import pytest

from baxter import counting
from baxter.automaton import build_automaton, is_accepting, label, symbol_str
from baxter.brute_force import brute_count
from baxter.counting import (count_from_skeletons, dp_count, dp_counts, eventual_polynomial,
                             extra_polynomials, interpolated_polynomial, skeleton_polynomial)
from baxter.polynomial import Polynomial
from baxter.verify import (acceptance_equivalence, check_depth_monotonicity,
                           check_edge_extra_bound, check_knuth_bound, check_self_arrows)


def _desc(*coeffs):
    """Polynomial from coefficients listed highest degree first."""
    return Polynomial(list(reversed(coeffs)))


def _fresh():
    for fn in (counting.automaton_for, counting.skeleton_profile,
               counting.eventual_polynomial, counting.extra_polynomials):
        fn.cache_clear()


@pytest.mark.criterion(1, "published counting polynomials r=2..6 with thresholds, in time")
def test_table_reproduction():
    _fresh()
    t0 = time.perf_counter()
    assert eventual_polynomial(2) == _desc(1, 3, -4)
    assert eventual_polynomial(3) == _desc(F(1, 3), 3, F(-16, 3), 2, 3)
    assert eventual_polynomial(4) == _desc(F(1, 18), F(21, 20), F(-5, 18), F(-151, 12),
                                           F(443, 9), F(-1012, 15), 28)
    p5 = eventual_polynomial(5)
    assert p5.degree == 8
    assert p5.leading(3) == [F(23, 4032), F(937, 5040), F(853, 1440)]
    small = time.perf_counter() - t0
    assert [eventual_polynomial(r).threshold for r in range(2, 6)] == [2, 3, 4, 5]
    assert small < 60, f"r <= 5 took {small:.1f}s"

    t1 = time.perf_counter()
    p6 = eventual_polynomial(6)
    big = time.perf_counter() - t1
    assert p6.degree == 10
    assert p6.leading(3) == [F(361, 907200), F(403, 20160), F(5177, 30240)]
    assert p6.threshold == 6
    assert big < 600, f"r = 6 took {big:.1f}s"


@pytest.mark.criterion(2, "extra-ones tables r=3 and r=4, coefficient for coefficient")
def test_extra_ones_tables():
    assert extra_polynomials(3) == {
        0: _desc(F(1, 3), -1, F(2, 3), 0, 0),
        1: _desc(4, -12, 15, -8),
        2: _desc(6, -13, 11),
    }
    assert extra_polynomials(4) == {
        0: _desc(F(1, 18), F(-3, 10), F(2, 9), F(3, 2), F(-77, 18), F(24, 5), -2),
        1: _desc(F(27, 20), F(-47, 6), F(235, 12), F(-157, 6), F(226, 15), 0),
        2: _desc(F(22, 3), F(-121, 3), F(335, 3), F(-500, 3), 106),
        3: _desc(F(20, 3), -32, F(238, 3), -76),
    }
    for r in (3, 4):
        assert all(p.threshold <= r for p in extra_polynomials(r).values())


POINTS = [(2, 2, 6), (2, 3, 14), (3, 3, 69), (3, 4, 203), (4, 4, 972)]


@pytest.mark.criterion(3, "point counts by DP and by brute force")
@pytest.mark.parametrize("r, k, expected", POINTS)
def test_point_counts(r, k, expected):
    assert dp_count(r, k) == expected
    t = time.perf_counter()
    assert brute_count(r, k) == expected
    assert time.perf_counter() - t < 300


@pytest.mark.criterion(4, "A_2 matches the published drawing")
def test_automaton_fidelity():
    A = build_automaton(2)
    names = A.labels()
    assert len(A.states) - 1 == 7
    assert len(A.edges) == 17
    assert {label(s) for s in A.states if is_accepting(s)} == {"11", "14", "41", "13", "31"}
    assert {names[n] for n in A.self_loop_states()} == {"12", "21", "14", "41", "13", "31"}
    assert ("S", "10", "12") in {(names[a], symbol_str(c), names[b]) for a, c, b in A.edges}


EQUIV_SHAPES = [(r, k) for r in range(1, 17) for k in range(1, 17) if r * k <= 16]


@pytest.mark.criterion(5, "automaton acceptance == pinwheel definition for all r*k <= 16")
@pytest.mark.parametrize("r, k", EQUIV_SHAPES)
def test_oracle_equivalence(r, k):
    assert acceptance_equivalence(r, k)


@pytest.mark.criterion(6, "structural checks and the extra-ones bound, r=1..6")
@pytest.mark.parametrize("r", range(1, 7))
def test_structural_suite(r):
    for rep in (check_depth_monotonicity(r), check_self_arrows(r), check_edge_extra_bound(r)):
        assert rep.ok, rep.to_text()
    rep = check_knuth_bound(r)
    assert rep.ok
    assert rep.details == [f"max extra 1's = {r - 1} (bound {r - 1})"]


@pytest.mark.criterion(7, "skeleton counts == DP counts; skeleton polynomial == interpolant")
@pytest.mark.parametrize("r", range(1, 6))
def test_method_agreement(r):
    dp = dp_counts(r, 3 * r)
    for k in range(0, 3 * r + 1):
        assert count_from_skeletons(r, k) == dp[k]
    assert skeleton_polynomial(r) == interpolated_polynomial(r)


SYM_SHAPES = [(r, k) for r in range(1, 6) for k in range(1, 6) if r * k <= 24 and r < k]


@pytest.mark.criterion(8, "brute_count(r, k) == brute_count(k, r)")
@pytest.mark.parametrize("r, k", SYM_SHAPES)
def test_transpose_symmetry(r, k):
    assert brute_count(r, k) == brute_count(k, r)
