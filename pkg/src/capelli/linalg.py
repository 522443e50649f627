"""Exact rational linear algebra on top of sympy's dense domain matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = ["rank", "solve", "InconsistentSystem"]


class InconsistentSystem(ValueError):
    """The right-hand side is not in the column span."""


def _qq(c) -> object:
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def _matrix(rows: Sequence[Sequence]) -> DomainMatrix:
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix([[_qq(c) for c in row] for row in rows], (len(rows), ncols), QQ)


def rank(rows: Sequence[Sequence]) -> int:
    if not rows or not rows[0]:
        return 0
    return _matrix(rows).rank()


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[list[Fraction], int]:
    """Solve rows·c = rhs exactly. Returns one solution (free unknowns set to
    zero) and the rank of the coefficient matrix. Raises InconsistentSystem."""
    nunk = len(rows[0]) if rows else 0
    if nunk == 0:
        if any(rhs):
            raise InconsistentSystem("nonzero right-hand side with no unknowns")
        return [], 0
    aug = _matrix([list(r) + [b] for r, b in zip(rows, rhs)])
    red, pivots = aug.rref()
    if nunk in pivots:
        raise InconsistentSystem("right-hand side outside the column span")
    table = red.to_list()
    sol = [Fraction(0)] * nunk
    for i, col in enumerate(pivots):
        v = table[i][nunk]
        sol[col] = Fraction(int(v.numerator), int(v.denominator))
    return sol, len(pivots)
