import json

import pytest

from baxter import verify
from baxter.automaton import Automaton, build_automaton


def corrupted(r=2):
    """A_r with the edge 11 -10-> 13 redirected back to 12, which lowers depth."""
    A = build_automaton(r)
    names = A.labels()
    edges = []
    for a, c, b in A.edges:
        if names[a] == "11" and c == (1, 0):
            b = names.index("12")
        edges.append((a, c, b))
    return Automaton(A.rows, A.states, edges)


@pytest.mark.parametrize("r", range(1, 6))
def test_structural_checks_pass(r):
    for rep in verify.structural_checks(r):
        assert rep.ok, rep.to_text()


def test_depth_monotonicity_negative_control():
    rep = verify.check_depth_monotonicity(2, corrupted())
    assert rep.status == "FAIL"
    assert rep.details == ["11 -10-> 12 (depth 2 -> 1)"]


def test_self_arrow_negative_control():
    A = build_automaton(2)
    n11 = A.labels().index("11")
    bad = Automaton(2, A.states, A.edges + [(n11, (1, 1), n11)])
    rep = verify.check_self_arrows(2, bad)
    assert rep.status == "FAIL" and rep.details == ["11 -11-> 11"]


def test_self_arrow_states():
    assert "['12', '13', '14', '21', '31', '41']" in verify.check_self_arrows(2).details[0]
    assert verify.check_self_arrows(1).details == ["self arrows at ['1']"]


def test_edge_extra_bound_examples():
    assert verify.check_edge_extra_bound(3).ok
    rep = verify.check_edge_extra_bound(2, corrupted())
    assert not rep.ok


@pytest.mark.parametrize("r", range(1, 6))
def test_knuth_bound(r):
    rep = verify.check_knuth_bound(r)
    assert rep.ok and rep.details == [f"max extra 1's = {r - 1} (bound {r - 1})"]


@pytest.mark.parametrize("r, kmax", [(2, 8), (3, 5), (4, 4)])
def test_cross_validate(r, kmax):
    rep = verify.cross_validate(r, kmax)
    assert rep.ok, rep.to_text()
    assert rep.details[-1].startswith(f"k={kmax}: ")
    if (r, kmax) == (4, 4):
        assert rep.details[-1] == "k=4: 972 (brute)"


def test_reproduce_tables():
    rep = verify.reproduce_tables()
    assert rep.ok, rep.to_text()
    assert any("k^2 + 3k - 4" in d for d in rep.details)
    assert any("361/907200" in d for d in rep.details)


def test_report_json():
    reps = verify.structural_checks(2)
    doc = json.loads(verify.reports_json(reps))
    assert [set(d) for d in doc] == [{"check", "r", "status", "details"}] * 3
