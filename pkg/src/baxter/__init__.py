"""Exact enumeration and checking of Baxter matrices with a fixed number of rows."""
from .automaton import Automaton, RowState, build_automaton, depth, run, step
from .brute_force import brute_count, brute_count_by_extra, enumerate_baxter
from .counting import (count_from_skeletons, dp_count, dp_count_by_extra,
                       eventual_polynomial, extra_polynomials, skeleton_paths)
from .matrix_core import BinaryMatrix, extra_ones, is_baxter, parse_matrix, violations
from .polynomial import Polynomial

__version__ = "0.1.0"
