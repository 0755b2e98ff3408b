"""
Exact counts of r x k Baxter matrices.

Three independent routes are provided and checked against each other:

* dynamic programming over A_r (walks of length k from START to an accept state);
* skeletons: accepting walks with the self loops deleted. Non-loop edges strictly
  raise depth, so there are finitely many skeletons, and a skeleton with l edges
  and m loop-bearing states stands for C(k - l + m - 1, m - 1) walks of length k;
* interpolation of the DP counts, giving the eventual polynomial a second time.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

from .automaton import (Automaton, START, StateVector, ColumnSymbol,
                        build_automaton, depth, is_accepting)
from .polynomial import Polynomial, binomial_in_k, interpolate


class ConsistencyError(RuntimeError):
    """Two counting routes disagreed; results are never returned in that case."""


@lru_cache(maxsize=None)
def automaton_for(r: int) -> Automaton:
    return build_automaton(r)


def _weighted_edges(A: Automaton, by_extra: bool = False):
    tally: Counter = Counter()
    for a, c, b in A.edges:
        key = (a, b, sum(c) - 1) if by_extra else (a, b)
        tally[key] += 1
    return sorted(tally.items())


def dp_counts(r: int, kmax: int) -> list[int]:
    """[count(r, 0), count(r, 1), ..., count(r, kmax)]."""
    A = automaton_for(r)
    edges = _weighted_edges(A)
    accept = [n for n, ok in enumerate(A.accept) if ok]
    vec = [0] * len(A.states)
    vec[A.start] = 1
    out = [0]  # no accepting walk of length 0
    for _ in range(kmax):
        nxt = [0] * len(vec)
        for (a, b), w in edges:
            if vec[a]:
                nxt[b] += w * vec[a]
        vec = nxt
        out.append(sum(vec[n] for n in accept))
    return out


def dp_count(r: int, k: int) -> int:
    return dp_counts(r, k)[k]


def dp_counts_by_extra(r: int, kmax: int) -> list[dict[int, int]]:
    A = automaton_for(r)
    edges = _weighted_edges(A, by_extra=True)
    accept = A.accept
    vec: dict = {(A.start, 0): 1}
    out: list[dict[int, int]] = [{}]
    for _ in range(kmax):
        nxt: defaultdict = defaultdict(int)
        by_source = defaultdict(list)
        for (a, e), n in vec.items():
            by_source[a].append((e, n))
        for (a, b, de), w in edges:
            for e, n in by_source.get(a, ()):
                nxt[b, e + de] += w * n
        vec = dict(nxt)
        split: Counter = Counter()
        for (s, e), n in vec.items():
            if accept[s]:
                split[e] += n
        out.append(dict(sorted(split.items())))
    return out


def dp_count_by_extra(r: int, k: int) -> dict[int, int]:
    return dp_counts_by_extra(r, k)[k]


@dataclass(frozen=True)
class SkeletonPath:
    states: tuple[StateVector, ...]
    symbols: tuple[ColumnSymbol, ...]
    loop_nodes: tuple[int, ...]  # positions 1..l in `states` carrying a self loop
    extra: int
    accepting: bool

    @property
    def l(self) -> int:
        return len(self.symbols)

    @property
    def m(self) -> int:
        return len(self.loop_nodes)


def _skeleton_graph(A: Automaton):
    loops = A.self_loop_states()
    out = defaultdict(list)
    for a, c, b in A.edges:
        if a == b:
            continue
        if b <= a:
            # states are depth-major, so this means a non-loop edge failed to raise depth
            raise ConsistencyError(
                f"edge {a}->{b} does not raise depth; skeletons would not be finite")
        out[a].append((c, b))
    return loops, out


def skeleton_paths(r: int, accepting_only: bool = True) -> Iterator[SkeletonPath]:
    """Depth-first enumeration of loop-free walks from START."""
    A = automaton_for(r)
    loops, out = _skeleton_graph(A)
    path = [A.start]
    syms: list = []

    def emit():
        loop_pos = tuple(i for i in range(1, len(path)) if path[i] in loops)
        return SkeletonPath(tuple(A.states[n] for n in path), tuple(syms), loop_pos,
                            sum(sum(c) - 1 for c in syms), A.accept[path[-1]])

    def walk(n):
        if len(path) > 1 and (A.accept[n] or not accepting_only):
            yield emit()
        for c, b in out[n]:
            path.append(b)
            syms.append(c)
            yield from walk(b)
            path.pop()
            syms.pop()

    yield from walk(A.start)


@lru_cache(maxsize=None)
def skeleton_profile(r: int) -> dict[tuple[int, int, int], int]:
    """
    Number of accepting skeletons for each (l, m, extra). Same information as
    skeleton_paths aggregated, but computed by a pass over the depth order so
    it stays cheap when there are millions of skeletons.
    """
    A = automaton_for(r)
    loops, out = _skeleton_graph(A)
    prof: list[Counter] = [Counter() for _ in A.states]
    prof[A.start][0, 0, 0] = 1
    for a in range(len(A.states)):
        for c, b in out[a]:
            dm, de = int(b in loops), sum(c) - 1
            for (l, m, e), n in prof[a].items():
                prof[b][l + 1, m + dm, e + de] += n
    total: Counter = Counter()
    for s, ok in enumerate(A.accept):
        if ok:
            total.update(prof[s])
    return dict(sorted(total.items()))


def composition_count(l: int, m: int, k: int) -> int:
    """Ways to spread k - l loop repetitions over m loop states (parts may be 0)."""
    if k < l:
        return 0
    if m == 0:
        return int(k == l)
    return comb(k - l + m - 1, m - 1)


def count_from_skeletons(r: int, k: int, extra: int | None = None) -> int:
    return sum(n * composition_count(l, m, k)
               for (l, m, e), n in skeleton_profile(r).items()
               if extra is None or e == extra)


def _skeleton_polynomial(r: int, extra: int | None = None) -> tuple[Polynomial, int]:
    """Sum of the skeletons' binomials, and the k from which it is exact by construction."""
    p = Polynomial()
    exact_from = 1
    for (l, m, e), n in skeleton_profile(r).items():
        if extra is not None and e != extra:
            continue
        if m == 0:
            exact_from = max(exact_from, l + 1)
            continue
        p = p + binomial_in_k(l, m).scale(n)
        # C(k-l+m-1, m-1) agrees with the count once k - l >= -(m-1)
        exact_from = max(exact_from, l - m + 1)
    return p, exact_from


def _threshold(p: Polynomial, counts: list[int], upto: int) -> int:
    bad = [k for k in range(1, upto + 1) if p(k) != counts[k]]
    return bad[-1] + 1 if bad else 1


def skeleton_polynomial(r: int, extra: int | None = None) -> Polynomial:
    return _skeleton_polynomial(r, extra)[0]


def interpolated_polynomial(r: int, counts: list[int] | None = None, k0: int | None = None,
                            what: str = "") -> Polynomial:
    """
    Interpolate counts at k0..k0+2r-2 (default k0 = r) and confirm the result on
    the next 2r+2 values of k. `counts[k]` defaults to dp_counts(r, ...).
    """
    deg = 2 * r - 2
    k0 = r if k0 is None else k0
    top = k0 + 4 * r
    if counts is None:
        counts = dp_counts(r, top)
    xs = list(range(k0, k0 + deg + 1))
    interp = interpolate(xs, [counts[k] for k in xs])
    for k in range(k0 + deg + 1, top + 1):
        if interp(k) != counts[k]:
            raise ConsistencyError(
                f"{what or f'r={r}'}: interpolant through k={k0}..{k0 + deg}"
                f" misses the count at k={k}")
    return interp


def _fit(r: int, counts: list[int], skel: Polynomial, exact_from: int, what: str) -> Polynomial:
    interp = interpolated_polynomial(r, counts, what=what)
    if interp != skel:
        raise ConsistencyError(f"{what}: skeleton polynomial {skel} != interpolant {interp}")
    if skel.degree > 2 * r - 2:
        raise ConsistencyError(f"{what}: degree {skel.degree} exceeds {2 * r - 2}")
    t = _threshold(skel, counts, max(exact_from, r + 4 * r))
    for k in range(t, t + 4 * r + 1):
        if skel(k) != counts[k]:
            raise ConsistencyError(f"{what}: polynomial fails at k={k} above threshold {t}")
    return skel.with_threshold(t)


def _kmax(r: int, exact_from: int) -> int:
    return max(exact_from, r + 4 * r) + 4 * r + 1


@lru_cache(maxsize=None)
def eventual_polynomial(r: int) -> Polynomial:
    if r < 1:
        raise ValueError("need at least one row")
    skel, exact_from = _skeleton_polynomial(r)
    counts = dp_counts(r, _kmax(r, exact_from))
    return _fit(r, counts, skel, exact_from, f"r={r}")


@lru_cache(maxsize=None)
def extra_polynomials(r: int) -> dict[int, Polynomial]:
    extras = sorted({e for (_, _, e) in skeleton_profile(r)})
    fits = {e: _skeleton_polynomial(r, e) for e in extras}
    kmax = max(_kmax(r, ef) for _, ef in fits.values())
    split = dp_counts_by_extra(r, kmax)
    out = {}
    for e, (skel, exact_from) in fits.items():
        counts = [row.get(e, 0) for row in split]
        out[e] = _fit(r, counts, skel, exact_from, f"r={r}, extra={e}")
    total = Polynomial()
    for p in out.values():
        total = total + p
    if total != eventual_polynomial(r):
        raise ConsistencyError(f"r={r}: extra-ones polynomials do not sum to the total")
    return out


@dataclass
class CountTable:
    rows: int
    counts: dict[int, int]
    by_extra: dict[int, dict[int, int]] | None = None

    def to_json(self) -> dict:
        doc = {"rows": self.rows, "counts": {str(k): n for k, n in self.counts.items()}}
        if self.by_extra is not None:
            doc["by_extra"] = {str(k): {str(e): n for e, n in split.items()}
                               for k, split in self.by_extra.items()}
        return doc

    def to_text(self) -> str:
        if self.by_extra is None:
            width = max(len(str(n)) for n in self.counts.values())
            return "\n".join(f"k={k:<3} {n:>{width}}" for k, n in self.counts.items())
        lines = [f"{'k':>3} {'extra':>5} {'weight':>6} count"]
        for k, split in self.by_extra.items():
            for e, n in split.items():
                lines.append(f"{k:>3} {e:>5} {k + e:>6} {n}")
        return "\n".join(lines)


def count_table(r: int, ks, by_extra: bool = False) -> CountTable:
    ks = sorted(ks)
    totals = dp_counts(r, ks[-1])
    split = dp_counts_by_extra(r, ks[-1]) if by_extra else None
    return CountTable(r, {k: totals[k] for k in ks},
                      {k: split[k] for k in ks} if split is not None else None)
