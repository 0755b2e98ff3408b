"""
The column-reading automaton A_r for Baxter matrices with r rows.

A state records one rowstate per row:

    1  the row has a 1 in the most recent column
    2  the row is all zeros so far
    3  the row is frozen: a pinwheel needs it to be zero from here on
    4  the row's latest entry is 0, but it is neither 2 nor 3

The most recent column is exactly the set of rows in rowstate 1, so every
pinwheel centred between that column and the next one can be decided from
the state and the incoming column, except for the arm running to the right,
which is deferred by freezing the row.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import IntEnum
from itertools import product
from typing import NamedTuple, Sequence

import numpy as np

from .matrix_core import BudgetExceeded


class RowState(IntEnum):
    ONE = 1
    TWO = 2
    THREE = 3
    FOUR = 4


ONE, TWO, THREE, FOUR = RowState.ONE, RowState.TWO, RowState.THREE, RowState.FOUR

StateVector = tuple  # tuple[RowState, ...]; the empty tuple is START
ColumnSymbol = tuple  # tuple[int, ...], row 1 first

START: StateVector = ()

DEFAULT_MAX_ROWS = 8


class Reject(NamedTuple):
    reason: str  # zero-column | frozen-row-write | unsatisfiable-pinwheel | all-zero-row-doomed
    detail: object = None


def depth(s: StateVector) -> int:
    return sum(2 if x == THREE else 1 if x in (ONE, FOUR) else 0 for x in s)


def label(s: StateVector) -> str:
    return "S" if s == START else "".join(str(int(x)) for x in s)


def symbol_str(c: ColumnSymbol) -> str:
    return "".join(map(str, c))


def parse_state(text: str) -> StateVector:
    return START if text == "S" else tuple(RowState(int(ch)) for ch in text)


def symbols(r: int) -> list[ColumnSymbol]:
    """Nonzero columns of height r, in increasing binary order (row 1 most significant)."""
    return [c for c in product((0, 1), repeat=r) if any(c)]


def symbol_index(c: ColumnSymbol) -> int:
    return int(symbol_str(c), 2)


def previous_column(s: StateVector) -> ColumnSymbol:
    return tuple(int(x == ONE) for x in s)


def step(s: StateVector, c: ColumnSymbol):
    """Successor of state s on column c, or a Reject explaining why there is none."""
    r = len(c)
    if not any(c):
        return Reject("zero-column")
    if s == START:
        return tuple(ONE if b else TWO for b in c)
    if len(s) != r:
        raise ValueError(f"column height {r} does not match state {label(s)}")
    for i in range(r):
        if s[i] == THREE and c[i]:
            return Reject("frozen-row-write", i + 1)

    p = previous_column(s)
    # any 1 in rows 0..i of c / p, and any 1 in rows i..r-1
    c_above = [any(c[:i + 1]) for i in range(r)]
    p_above = [any(p[:i + 1]) for i in range(r)]
    c_below = [any(c[i:]) for i in range(r)]
    p_below = [any(p[i:]) for i in range(r)]

    forced: dict[int, tuple[str, int]] = {}
    for i in range(r - 1):
        # centre between rows i and i+1 (0-based), reported 1-based as i+1
        if not (s[i] == TWO or not c_above[i] or not p_below[i + 1]):
            forced.setdefault(i + 1, ("clockwise", i + 1))
        if not (s[i + 1] == TWO or not p_above[i] or not c_below[i + 1]):
            forced.setdefault(i, ("counterclockwise", i + 1))

    for f in sorted(forced):
        if c[f]:
            return Reject("unsatisfiable-pinwheel", forced[f])
        if s[f] == TWO:
            return Reject("all-zero-row-doomed", f + 1)

    new = []
    for i in range(r):
        if c[i]:
            new.append(ONE)
        elif i in forced or s[i] == THREE:
            new.append(THREE)
        elif s[i] == TWO:
            new.append(TWO)
        else:
            new.append(FOUR)
    return tuple(new)


def is_accepting(s: StateVector) -> bool:
    return s != START and TWO not in s


def run(r: int, columns: Sequence[ColumnSymbol]) -> bool:
    s = START
    for c in columns:
        if len(c) != r:
            return False
        s = step(s, tuple(c))
        if isinstance(s, Reject):
            return False
    return is_accepting(s)


def _state_key(s: StateVector):
    return (depth(s), tuple(int(x) for x in s)) if s != START else (-1, ())


@dataclass
class Automaton:
    rows: int
    states: list[StateVector]
    edges: list[tuple[int, ColumnSymbol, int]]
    start: int = 0
    index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {s: n for n, s in enumerate(self.states)}

    @property
    def accept(self) -> list[bool]:
        return [is_accepting(s) for s in self.states]

    @property
    def theoretical_state_count(self) -> int:
        return 4 ** self.rows - 3 ** self.rows

    def labels(self) -> list[str]:
        return [label(s) for s in self.states]

    def self_loop_states(self) -> set[int]:
        return {a for a, _, b in self.edges if a == b}

    def successors(self, n: int):
        return [(c, b) for a, c, b in self.edges if a == n]

    def transition_table(self) -> np.ndarray:
        """table[state, symbol_index] = successor index, -1 where rejected."""
        table = np.full((len(self.states), 2 ** self.rows), -1, dtype=np.int64)
        for a, c, b in self.edges:
            table[a, symbol_index(c)] = b
        return table


def build_automaton(r: int, max_rows: int = DEFAULT_MAX_ROWS) -> Automaton:
    if r < 1:
        raise ValueError("need at least one row")
    if r > max_rows:
        raise BudgetExceeded(f"r={r} exceeds the automaton budget of {max_rows} rows")
    alphabet = symbols(r)
    seen = {START}
    queue = deque([START])
    raw_edges = []
    while queue:
        s = queue.popleft()
        for c in alphabet:
            t = step(s, c)
            if isinstance(t, Reject):
                continue
            raw_edges.append((s, c, t))
            if t not in seen:
                seen.add(t)
                queue.append(t)
    states = sorted(seen, key=_state_key)
    index = {s: n for n, s in enumerate(states)}
    edges = sorted((index[s], c, index[t]) for s, c, t in raw_edges)
    return Automaton(r, states, edges)


def run_many(A: Automaton, words: np.ndarray) -> np.ndarray:
    """
    Run A on many inputs at once. `words` has shape (N, k) holding symbol
    indices (any value in 0..2^r-1, including the zero column). Returns a
    boolean acceptance array of length N.
    """
    table = A.transition_table()
    # absorbing reject state appended at the end
    dead = table.shape[0]
    table = np.vstack([table, np.full((1, table.shape[1]), -1, dtype=np.int64)])
    table[table < 0] = dead
    state = np.full(words.shape[0], A.start, dtype=np.int64)
    for j in range(words.shape[1]):
        state = table[state, words[:, j]]
    accept = np.array(A.accept + [False])
    if words.shape[1] == 0:
        return np.zeros(words.shape[0], dtype=bool)
    return accept[state]


def run_many_lazy(r: int, words: np.ndarray) -> np.ndarray:
    """
    Same as run_many, but explores A_r only as far as the inputs reach, so it
    works for row counts where building the whole automaton is out of reach.
    """
    ids = {START: 0}
    states = [START]
    memo: dict[tuple[int, int], int] = {}
    dead = -1
    state = np.zeros(words.shape[0], dtype=np.int64)
    for j in range(words.shape[1]):
        keys = state * (1 << r) + words[:, j]
        uniq, inverse = np.unique(keys, return_inverse=True)
        nxt = np.empty(uniq.size, dtype=np.int64)
        for n, key in enumerate(uniq.tolist()):
            s_id, sym = divmod(key, 1 << r)
            if (s_id, sym) not in memo:
                if s_id == dead:
                    t = Reject("dead")
                else:
                    t = step(states[s_id], tuple((sym >> (r - 1 - i)) & 1 for i in range(r)))
                if isinstance(t, Reject):
                    memo[s_id, sym] = dead
                else:
                    if t not in ids:
                        ids[t] = len(states)
                        states.append(t)
                    memo[s_id, sym] = ids[t]
            nxt[n] = memo[s_id, sym]
        state = nxt[inverse]
    if words.shape[1] == 0:
        return np.zeros(words.shape[0], dtype=bool)
    accept = np.array([is_accepting(s) for s in states] + [False])
    return accept[state]


def export_json(A: Automaton) -> str:
    doc = {
        "rows": A.rows,
        "states": [{"id": n, "rowstates": label(s), "depth": depth(s),
                    "accept": is_accepting(s)} for n, s in enumerate(A.states)],
        "start": A.start,
        "edges": [{"from": a, "symbol": symbol_str(c), "to": b} for a, c, b in A.edges],
    }
    return json.dumps(doc, indent=1)


def load_json(text: str) -> Automaton:
    doc = json.loads(text)
    states = [parse_state(st["rowstates"]) for st in sorted(doc["states"], key=lambda d: d["id"])]
    edges = [(e["from"], tuple(int(ch) for ch in e["symbol"]), e["to"]) for e in doc["edges"]]
    return Automaton(doc["rows"], states, edges, start=doc["start"])


def export_dot(A: Automaton) -> str:
    lines = [f"digraph A{A.rows} {{", "  rankdir=TB;", "  node [shape=circle];"]
    for n, s in enumerate(A.states):
        periph = 2 if is_accepting(s) else 1
        lines.append(f'  n{n} [label="{label(s)}", peripheries={periph}];')
    for a, c, b in A.edges:
        lines.append(f'  n{a} -> n{b} [label="{symbol_str(c)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
