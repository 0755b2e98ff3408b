"""
Instance checks of the structural facts about A_r, plus cross-validation of
the automaton and the counting code against the brute-force oracle and the
published tables.

Every check returns a Report; status is "PASS" or "FAIL" and `details`
carries either the offending items or a summary of what was measured.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from . import published
from .automaton import (ONE, START, Automaton, depth, label, previous_column,
                        run_many, run_many_lazy, symbol_str)
from .brute_force import DEFAULT_BUDGET, baxter_codes, brute_count
from .counting import (automaton_for, count_from_skeletons, dp_counts,
                       eventual_polynomial, extra_polynomials, skeleton_profile)

EQUIVALENCE_CELLS = 16
FULL_BUILD_ROWS = 6


@dataclass
class Report:
    check: str
    r: int | None
    status: str
    details: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "PASS"

    def to_json(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        head = f"{self.status}  {self.check}" + (f" r={self.r}" if self.r is not None else "")
        return "\n".join([head] + [f"      {d}" for d in self.details])


def _report(check, r, failures, summary=()) -> Report:
    return Report(check, r, "FAIL" if failures else "PASS", list(failures) or list(summary))


def _edge_str(A: Automaton, a, c, b) -> str:
    return f"{label(A.states[a])} -{symbol_str(c)}-> {label(A.states[b])}"


def check_depth_monotonicity(r: int, A: Automaton | None = None) -> Report:
    A = A or automaton_for(r)
    bad = []
    for a, c, b in A.edges:
        s, t = A.states[a], A.states[b]
        if a == b:
            continue
        if s == START:
            if depth(t) < 1:
                bad.append(_edge_str(A, a, c, b))
        elif depth(t) <= depth(s):
            bad.append(_edge_str(A, a, c, b) + f" (depth {depth(s)} -> {depth(t)})")
    return _report("depth_monotonicity", r, bad, [f"{len(A.edges)} edges checked"])


def check_self_arrows(r: int, A: Automaton | None = None) -> Report:
    A = A or automaton_for(r)
    bad, homes = [], set()
    for a, c, b in A.edges:
        if a != b:
            continue
        s = A.states[a]
        homes.add(label(s))
        if s == START or list(s).count(ONE) != 1 or tuple(c) != previous_column(s):
            bad.append(_edge_str(A, a, c, b))
    return _report("self_arrows", r, bad,
                   [f"self arrows at {sorted(homes, key=lambda x: (len(x), x))}"])


def check_edge_extra_bound(r: int, A: Automaton | None = None) -> Report:
    A = A or automaton_for(r)
    bad = []
    for a, c, b in A.edges:
        s, t = A.states[a], A.states[b]
        if s == START:
            continue
        lhs = (sum(previous_column(s)) - 1) + (sum(c) - 1)
        rise = depth(t) - depth(s)
        if lhs > rise:
            bad.append(_edge_str(A, a, c, b) + f" (extra {lhs} > depth rise {rise})")
    return _report("edge_extra_bound", r, bad, [f"{len(A.edges)} edges checked"])


def check_knuth_bound(r: int) -> Report:
    extras = [e for (_, _, e) in skeleton_profile(r)]
    top = max(extras)
    bad = [f"skeleton with {top} extra 1's, bound is {r - 1}"] if top > r - 1 else []
    return _report("knuth_bound", r, bad, [f"max extra 1's = {top} (bound {r - 1})"])


def _symbol_words(r: int, k: int, codes: np.ndarray) -> np.ndarray:
    """Column symbol indices (row 1 most significant) of matrices given by cell codes."""
    n = r * k
    words = np.zeros((codes.size, k), dtype=np.int64)
    for j in range(k):
        for i in range(r):
            bit = (codes >> np.uint64(n - 1 - (i * k + j))) & np.uint64(1)
            words[:, j] |= bit.astype(np.int64) << (r - 1 - i)
    return words


def acceptance_equivalence(r: int, k: int) -> bool:
    """Automaton acceptance equals the pinwheel definition on all 2^(r*k) matrices."""
    codes = np.arange(1 << (r * k), dtype=np.uint64)
    words = _symbol_words(r, k, codes)
    if r <= FULL_BUILD_ROWS:
        accepted = codes[run_many(automaton_for(r), words)]
    else:
        accepted = codes[run_many_lazy(r, words)]
    definition = np.concatenate(list(baxter_codes(r, k)))
    return np.array_equal(accepted, definition)


def cross_validate(r: int, kmax: int, budget: int = DEFAULT_BUDGET) -> Report:
    bad, seen = [], []
    dp = dp_counts(r, kmax)
    for k in range(1, kmax + 1):
        sk = count_from_skeletons(r, k)
        if sk != dp[k]:
            bad.append(f"k={k}: dp {dp[k]} != skeletons {sk}")
        if r * k <= budget:
            bf = brute_count(r, k, budget=budget)
            if bf != dp[k]:
                bad.append(f"k={k}: brute {bf} != dp {dp[k]}")
        if r * k <= EQUIVALENCE_CELLS and not acceptance_equivalence(r, k):
            bad.append(f"k={k}: automaton acceptance differs from the definition")
        seen.append(f"k={k}: {dp[k]}" + (" (brute)" if r * k <= budget else ""))
    return _report("cross_validate", r, bad, seen)


def reproduce_tables() -> Report:
    bad, good = [], []
    for r, row in published.POLYNOMIALS.items():
        p = eventual_polynomial(r)
        mine = list(reversed(p.coefficients))
        if mine != row["coefficients"] or p.threshold != row["threshold"]:
            bad.append(f"r={r}: got {p} (k >= {p.threshold}), expected {row['text']}"
                       f" (k >= {row['threshold']})")
        else:
            good.append(f"r={r}: {p} (k >= {p.threshold}) matches")
    for r, row in published.LEADING.items():
        p = eventual_polynomial(r)
        lead = p.leading(len(row["coefficients"]))
        want = row["coefficients"]
        if lead != want or p.degree != row["degree"] or p.threshold != row["threshold"]:
            bad.append(f"r={r}: leading {list(map(str, lead))} degree {p.degree}"
                       f" threshold {p.threshold}; expected {list(map(str, want))}")
        else:
            good.append(f"r={r}: leading {', '.join(map(str, lead))} matches")
    for r, table in published.EXTRA_POLYNOMIALS.items():
        mine = extra_polynomials(r)
        if sorted(mine) != sorted(table):
            bad.append(f"r={r}: extra classes {sorted(mine)} != {sorted(table)}")
            continue
        for e, coeffs in table.items():
            p = mine[e]
            if list(reversed(p.coefficients)) != _strip_leading_zeros(coeffs) or p.threshold > r:
                bad.append(f"r={r} extra={e}: got {p} (k >= {p.threshold})")
            else:
                good.append(f"r={r} extra={e}: {p} matches")
    return _report("reproduce_tables", None, bad, good)


def _strip_leading_zeros(coeffs):
    out = list(coeffs)
    while out and out[0] == 0:
        out.pop(0)
    return out


def structural_checks(r: int, A: Automaton | None = None) -> list[Report]:
    return [check_depth_monotonicity(r, A), check_self_arrows(r, A),
            check_edge_extra_bound(r, A)]


def run_all(rmax: int = 5, max_k: int | None = None, budget: int = DEFAULT_BUDGET,
            include_tables: bool = True) -> list[Report]:
    reports = []
    for r in range(1, rmax + 1):
        reports += structural_checks(r)
        reports.append(check_knuth_bound(r))
        kmax = max_k if max_k is not None else 3 * r
        reports.append(cross_validate(r, kmax, budget))
    if include_tables:
        reports.append(reproduce_tables())
    return reports


def reports_json(reports: list[Report]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=1)
