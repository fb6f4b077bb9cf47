"""Permutiples: numbers that are an integer multiple of a permutation of their digits."""

from .digitnum import (
    DigitTuple,
    Perm,
    apply_perm,
    compose,
    conjugate,
    cycle_shift,
    from_integer,
    inverse,
    order,
    parse_perm,
    parse_tuple,
    reversal,
    to_integer,
)
from .theorems import CarryVector, PermutipleWitness, multiply_with_carries, verify
from .classify import enumerate_fixed_digits
from .oracle import enumerate_all

__version__ = "0.1.0"

__all__ = [
    "CarryVector",
    "DigitTuple",
    "Perm",
    "PermutipleWitness",
    "apply_perm",
    "compose",
    "conjugate",
    "cycle_shift",
    "enumerate_all",
    "enumerate_fixed_digits",
    "from_integer",
    "inverse",
    "multiply_with_carries",
    "order",
    "parse_perm",
    "parse_tuple",
    "reversal",
    "to_integer",
    "verify",
]
