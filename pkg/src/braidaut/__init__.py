"""Braid groups acting on free groups: representations, word problem, order, invariants."""

from .braids import BraidWord, parse_braid_word
from .dehornoy import Order, Verdict, compare, handle_reduce, solve_word_problem
from .distinguish import distinguish
from .endo import FreeEndo, apply, compose
from .freegroup import FreeWord, parse_free_word
from .magnus import determinant_invariant, magnus_matrix
from .reps import ARTIN, WADA2, WADA3, RepKind, parse_rep, represent, wada1

__version__ = "0.1.0"
