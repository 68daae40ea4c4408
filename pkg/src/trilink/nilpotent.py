"""The quotient of a rank-3 free group's commutator subgroup mod depth 3.

F_2/F_3 is free abelian on the basic commutators, ordered here as
([x1,x2], [x1,x3], [x2,x3]); an element is its integer coordinate
triple, and mu-bar(123) of a longitude is the first coordinate.  The
class of a commutator is bilinear in the exponent sums of its
arguments, which gives an arithmetic route entirely independent of the
Magnus expansion and is used to cross-check it.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import PreconditionError
from .magnus import phi
from .words import FreeWord, exponent_sum


class CommutatorClass(NamedTuple):
    """Exponents of [x1,x2], [x1,x3], [x2,x3], in that order."""

    n1: int
    n2: int
    n3: int


def commutator_class(w1: FreeWord, w2: FreeWord) -> CommutatorClass:
    """Class of [w1, w2] from exponent sums alone.

    Antisymmetric in its arguments and biadditive under word products.
    """
    if w1.rank != 3 or w2.rank != 3:
        raise ValueError(f"rank-3 words required, got {w1.rank} and {w2.rank}")
    n = [exponent_sum(w1, i) for i in (1, 2, 3)]
    m = [exponent_sum(w2, i) for i in (1, 2, 3)]
    return CommutatorClass(
        n[0] * m[1] - n[1] * m[0],
        n[0] * m[2] - n[2] * m[0],
        n[1] * m[2] - n[2] * m[1],
    )


def class_of(w: FreeWord) -> CommutatorClass:
    """Coordinates of a commutator-subgroup element, read off degree 2.

    Requires all exponent sums zero (exactly membership in the
    commutator subgroup, since that is the abelianization kernel).
    """
    if w.rank != 3:
        raise ValueError(f"rank-3 word required, got {w.rank}")
    for index in (1, 2, 3):
        if exponent_sum(w, index) != 0:
            raise PreconditionError(f"nonzero exponent sum for generator {index}")
    series = phi(w, 2)
    return CommutatorClass(
        series.coefficient((1, 2)),
        series.coefficient((1, 3)),
        series.coefficient((2, 3)),
    )


def mu_from_class(c: CommutatorClass) -> int:
    """mu-bar(123) is the [x1,x2] coordinate."""
    return c.n1
