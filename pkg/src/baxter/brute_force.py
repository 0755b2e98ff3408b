"""
Exhaustive enumeration of r x k Baxter matrices.

This is the ground truth the automaton and the counting code are checked
against, so it is deliberately simple. Two modes:

paranoid
    scan every one of the 2^(r*k) matrices, testing the pinwheel definition
    on bitmasks built from matrix_core's arm geometry. No automaton involved.
pruned
    walk column sequences depth-first, cut any prefix the automaton's step
    function rejects, and test each complete matrix with matrix_core.is_baxter.

The two must agree; the test suite checks that on every shape with r*k <= 12.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator

import numpy as np

from .matrix_core import (BinaryMatrix, BudgetExceeded, arms_for_shape,
                          extra_ones, is_baxter, pinwheels)

DEFAULT_BUDGET = 24
_CHUNK = 1 << 20


def _check_budget(r: int, k: int, budget: int) -> None:
    if r < 1 or k < 1:
        raise ValueError("shape must be at least 1x1")
    if r * k > budget:
        raise BudgetExceeded(
            f"{r}x{k} needs a budget of {r * k} cells (2^{r * k} matrices); "
            f"current budget is {budget}; pass a larger budget to override")


def _cell_bit(r: int, k: int, i: int, j: int) -> int:
    # 1-based (i, j); cell (1,1) is the most significant bit so integer order
    # is lexicographic row-major cell order
    return 1 << (r * k - 1 - ((i - 1) * k + (j - 1)))


def _mask(r: int, k: int, cells) -> int:
    m = 0
    for i, j in cells:
        m |= _cell_bit(r, k, i, j)
    return m


def _definition_masks(r: int, k: int):
    lines = [_mask(r, k, [(i, j) for j in range(1, k + 1)]) for i in range(1, r + 1)]
    lines += [_mask(r, k, [(i, j) for i in range(1, r + 1)]) for j in range(1, k + 1)]
    wheels = [[_mask(r, k, arm) for arm in arms_for_shape(r, k, p)] for p in pinwheels(r, k)]
    return lines, wheels


def baxter_codes(r: int, k: int) -> Iterator[np.ndarray]:
    """Integer codes of all Baxter matrices, ascending, in chunks."""
    n = r * k
    lines, wheels = _definition_masks(r, k)
    total = 1 << n
    for lo in range(0, total, _CHUNK):
        x = np.arange(lo, min(total, lo + _CHUNK), dtype=np.uint64)
        ok = np.ones(x.shape, dtype=bool)
        for m in lines:
            ok &= (x & np.uint64(m)) != 0
        for arms in wheels:
            some_zero = np.zeros(x.shape, dtype=bool)
            for m in arms:
                some_zero |= (x & np.uint64(m)) == 0
            ok &= some_zero
        yield x[ok]


def _decode(r: int, k: int, code: int) -> BinaryMatrix:
    bits = format(int(code), f"0{r * k}b")
    return BinaryMatrix(tuple(tuple(int(b) for b in bits[i * k:(i + 1) * k]) for i in range(r)))


def _pruned_matrices(r: int, k: int) -> Iterator[BinaryMatrix]:
    from itertools import product

    from .automaton import Reject, START, step

    alphabet = [c for c in product((0, 1), repeat=r) if any(c)]
    prefix: list[tuple[int, ...]] = []

    def walk(state, depth):
        if depth == k:
            M = BinaryMatrix.from_columns(prefix)
            if is_baxter(M):
                yield M
            return
        for c in alphabet:
            t = step(state, c)
            if isinstance(t, Reject):
                continue
            prefix.append(c)
            yield from walk(t, depth + 1)
            prefix.pop()

    yield from walk(START, 0)


def _resolve_mode(r: int, mode: str) -> str:
    if mode == "auto":
        # the vectorised definition scan beats Python-level pruning at every
        # shape inside the default budget
        return "paranoid"
    if mode not in ("pruned", "paranoid"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def enumerate_baxter(r: int, k: int, budget: int = DEFAULT_BUDGET,
                     mode: str = "auto") -> Iterator[BinaryMatrix]:
    """Yield every r x k Baxter matrix in lexicographic (row-major) cell order."""
    _check_budget(r, k, budget)
    if _resolve_mode(r, mode) == "paranoid":
        for codes in baxter_codes(r, k):
            for code in codes:
                yield _decode(r, k, code)
    else:
        yield from sorted(_pruned_matrices(r, k), key=lambda M: M.cells)


def brute_count(r: int, k: int, budget: int = DEFAULT_BUDGET, mode: str = "auto") -> int:
    _check_budget(r, k, budget)
    if _resolve_mode(r, mode) == "paranoid":
        return sum(int(codes.size) for codes in baxter_codes(r, k))
    return sum(1 for _ in _pruned_matrices(r, k))


def brute_count_by_extra(r: int, k: int, budget: int = DEFAULT_BUDGET,
                         mode: str = "auto") -> dict[int, int]:
    _check_budget(r, k, budget)
    tally: Counter = Counter()
    if _resolve_mode(r, mode) == "paranoid":
        for codes in baxter_codes(r, k):
            extras = np.bitwise_count(codes).astype(np.int64) - k
            for e, n in zip(*np.unique(extras, return_counts=True)):
                tally[int(e)] += int(n)
    else:
        for M in _pruned_matrices(r, k):
            tally[extra_ones(M)] += 1
    return dict(sorted(tally.items()))
