"""Supersymmetric coordinate ring in the variables (a|j) and its polarization operators.

A symbol is a letter of one of four kinds. Positive virtual letters (written
``a1, a2, ...``) are even, negative virtual letters (``b1, ...``) and proper
letters (``x1, ...``) are odd, and the auxiliary letter ``g`` is even. Places
are odd, so the variable (a|j) is odd exactly when a is even, and the odd
variables anticommute and square to zero.

A monomial is stored as a sorted tuple of variables ``(place, kind, index)``.
The stored coefficient is the coefficient of the product taken in that order.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

__all__ = [
    "POSITIVE",
    "NEGATIVE",
    "PROPER",
    "AUXILIARY",
    "Symbol",
    "alpha",
    "beta",
    "x",
    "GAMMA",
    "parse_symbol",
    "variable_parity",
    "SuperPolynomial",
    "Polarization",
    "polarize",
    "apply_word",
]

POSITIVE, NEGATIVE, PROPER, AUXILIARY = 0, 1, 2, 3
_PREFIX = {POSITIVE: "a", NEGATIVE: "b", PROPER: "x", AUXILIARY: "g"}
_KIND = {v: k for k, v in _PREFIX.items()}
# kinds whose variables (a|j) are odd
_ODD_KINDS = frozenset((POSITIVE, AUXILIARY))

Coeff = Union[int, Fraction]
Variable = tuple  # (place, kind, index)
Monomial = tuple  # sorted tuple of Variable


class Symbol(NamedTuple):
    kind: int
    index: int

    @property
    def lie_parity(self) -> int:
        return 1 if self.kind in (NEGATIVE, PROPER) else 0

    @property
    def is_virtual(self) -> bool:
        return self.kind in (POSITIVE, NEGATIVE)

    @property
    def is_proper(self) -> bool:
        return self.kind == PROPER

    def __str__(self) -> str:
        if self.kind == AUXILIARY and self.index == 0:
            return "g"
        return f"{_PREFIX[self.kind]}{self.index}"

    def __repr__(self) -> str:
        return f"Symbol({self})"


def alpha(i: int) -> Symbol:
    return Symbol(POSITIVE, i)


def beta(i: int) -> Symbol:
    return Symbol(NEGATIVE, i)


def x(i: int) -> Symbol:
    return Symbol(PROPER, i)


GAMMA = Symbol(AUXILIARY, 0)


def parse_symbol(text: str) -> Symbol:
    text = text.strip()
    if text == "g":
        return GAMMA
    if not text or text[0] not in _KIND or not text[1:].isdigit():
        raise ValueError(f"bad symbol {text!r}")
    return Symbol(_KIND[text[0]], int(text[1:]))


def variable_parity(var: Variable) -> int:
    return 1 if var[1] in _ODD_KINDS else 0


def _format_variable(var: Variable) -> str:
    return f"({Symbol(var[1], var[2])}|{var[0]})"


def _normalize(factors: Sequence[Variable]) -> tuple[int, Monomial]:
    """Sort a product of variables into canonical order; returns (sign, monomial),
    sign 0 when an odd variable repeats."""
    sign = 1
    odd_seen: list[Variable] = []
    for v in factors:
        if v[1] in _ODD_KINDS:
            pos = bisect_left(odd_seen, v)
            if pos < len(odd_seen) and odd_seen[pos] == v:
                return 0, ()
            if (len(odd_seen) - pos) & 1:
                sign = -sign
            odd_seen.insert(pos, v)
    return sign, tuple(sorted(factors))


def _monomial_product(m1: Monomial, m2: Monomial) -> tuple[int, Monomial]:
    odd1 = [v for v in m1 if v[1] in _ODD_KINDS]
    swaps = 0
    for v in m2:
        if v[1] in _ODD_KINDS:
            pos = bisect_left(odd1, v)
            if pos < len(odd1) and odd1[pos] == v:
                return 0, ()
            swaps += len(odd1) - pos
    merged = tuple(sorted(m1 + m2))
    return (-1 if swaps & 1 else 1), merged


class SuperPolynomial:
    """Exact rational combination of canonical supermonomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Monomial, Coeff] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    @classmethod
    def one(cls) -> "SuperPolynomial":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "SuperPolynomial":
        return cls()

    @classmethod
    def variable(cls, symbol: Symbol, place: int) -> "SuperPolynomial":
        return cls({((place, symbol.kind, symbol.index),): 1})

    @classmethod
    def product_of(cls, factors: Iterable[tuple[Symbol, int]], coeff: Coeff = 1) -> "SuperPolynomial":
        """The product (a1|j1)(a2|j2)... taken in the given order."""
        sign, mono = _normalize([(j, a.kind, a.index) for a, j in factors])
        return cls({mono: sign * coeff}) if sign else cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        res = SuperPolynomial()
        res.terms = out
        return res

    def __neg__(self) -> "SuperPolynomial":
        res = SuperPolynomial()
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c: Coeff) -> "SuperPolynomial":
        if not c:
            return SuperPolynomial()
        res = SuperPolynomial()
        res.terms = {m: v * c for m, v in self.terms.items()}
        return res

    def __mul__(self, other: Union["SuperPolynomial", Coeff]) -> "SuperPolynomial":
        if not isinstance(other, SuperPolynomial):
            return self.scale(other)
        out: dict[Monomial, Coeff] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                sign, m = _monomial_product(m1, m2)
                if sign:
                    v = out.get(m, 0) + sign * c1 * c2
                    if v:
                        out[m] = v
                    else:
                        out.pop(m, None)
        res = SuperPolynomial()
        res.terms = out
        return res

    def __rmul__(self, c: Coeff) -> "SuperPolynomial":
        return self.scale(c)

    def symbols(self) -> set[Symbol]:
        return {Symbol(v[1], v[2]) for m in self.terms for v in m}

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        return sorted(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            body = "".join(_format_variable(v) for v in m) or "1"
            parts.append(f"{Fraction(c)} {body}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SuperPolynomial({self})"


class Polarization(NamedTuple):
    """The superderivation D_{target,source} sending (source|j) to (target|j)."""

    target: Symbol
    source: Symbol

    @property
    def parity(self) -> int:
        return (self.target.lie_parity + self.source.lie_parity) & 1

    def __str__(self) -> str:
        return f"D[{self.target},{self.source}]"


def _polarize_monomial(
    mono: Monomial, target: Symbol, source: Symbol, op_parity: int
) -> list[tuple[Monomial, int]]:
    out = []
    tkind, tidx = target
    skind, sidx = source
    w_odd = tkind in _ODD_KINDS
    odd_before = 0
    i = 0
    size = len(mono)
    while i < size:
        v = mono[i]
        v_odd = v[1] in _ODD_KINDS
        if v[1] == skind and v[2] == sidx:
            j = i + 1
            if not v_odd:
                while j < size and mono[j] == v:
                    j += 1
            mult = j - i
            sign = -mult if (op_parity and odd_before & 1) else mult
            w = (v[0], tkind, tidx)
            rest = mono[:i] + mono[i + 1 :]
            pos = bisect_left(rest, w)
            if w_odd:
                if pos < len(rest) and rest[pos] == w:
                    sign = 0
                else:
                    lo, hi = (i, pos) if pos >= i else (pos, i)
                    passed = sum(1 for u in rest[lo:hi] if u[1] in _ODD_KINDS)
                    if passed & 1:
                        sign = -sign
            if sign:
                out.append((rest[:pos] + (w,) + rest[pos:], sign))
            if v_odd:
                odd_before += 1
            i = j
            continue
        if v_odd:
            odd_before += 1
        i += 1
    return out


def polarize(op: Polarization, p: SuperPolynomial) -> SuperPolynomial:
    """Apply the left superderivation D_{a,b} to p."""
    target, source = op
    par = op.parity
    out: dict[Monomial, Coeff] = {}
    for mono, c in p.terms.items():
        for m, s in _polarize_monomial(mono, target, source, par):
            v = out.get(m, 0) + s * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    res = SuperPolynomial()
    res.terms = out
    return res


def apply_word(ops: Sequence[Polarization], p: SuperPolynomial) -> SuperPolynomial:
    """Compose polarizations; the rightmost operator acts first."""
    for op in reversed(ops):
        if not p.terms:
            break
        p = polarize(op, p)
    return p
