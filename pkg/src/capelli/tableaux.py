"""Tableaux on the graded alphabet, biproducts and bitableaux, the superstandard
basis, straightening by exact linear solve, and highest weight vectors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

from .enveloping import UGenerator
from .linalg import solve
from .partitions import Partition, partitions_of
from .superalgebra import (
    GAMMA,
    POSITIVE,
    Polarization,
    SuperPolynomial,
    Symbol,
    alpha,
    beta,
    parse_symbol,
    polarize,
    x,
)

__all__ = [
    "Tableau",
    "Bitableau",
    "StandardExpansion",
    "EigenvectorError",
    "parse_tableau",
    "parse_place_tableau",
    "biproduct",
    "bitableau_value",
    "deruyts",
    "deruyts_places",
    "coderuyts",
    "constant_rows",
    "highest_weight_vector",
    "is_superstandard",
    "is_standard_places",
    "superstandard_tableaux",
    "standard_place_tableaux",
    "standard_bitableaux",
    "straighten",
    "extract_scalar",
    "bitableau_word",
    "word_parity",
    "proper_tableaux",
]

Entry = Union[Symbol, int]


class EigenvectorError(ArithmeticError):
    """The result of an action is not proportional to the reference vector."""


@dataclass(frozen=True)
class Tableau:
    """Rows of symbols (or of places for place tableaux)."""

    rows: tuple[tuple[Entry, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        Partition(len(r) for r in rows)

    @property
    def shape(self) -> Partition:
        return Partition(len(r) for r in self.rows)

    def columns(self) -> list[tuple[Entry, ...]]:
        shape = self.shape
        if not shape:
            return []
        return [tuple(r[j] for r in self.rows if len(r) > j) for j in range(shape[0])]

    def content(self) -> Counter:
        return Counter(v for r in self.rows for v in r)

    def entries(self) -> list[Entry]:
        return [v for r in self.rows for v in r]

    def __str__(self) -> str:
        return "; ".join(" ".join(str(v) for v in r) for r in self.rows)


def parse_tableau(text: str) -> Tableau:
    rows = [r.split() for r in text.split(";")]
    return Tableau(tuple(tuple(parse_symbol(t) for t in r) for r in rows if r))


def parse_place_tableau(text: str) -> Tableau:
    rows = [r.split() for r in text.split(";")]
    return Tableau(tuple(tuple(int(t) for t in r) for r in rows if r))


def word_parity(word: Iterable[Symbol]) -> int:
    return sum(s.lie_parity for s in word) & 1


@lru_cache(maxsize=None)
def _biproduct(word: tuple[Symbol, ...], places: tuple[int, ...]) -> SuperPolynomial:
    p = SuperPolynomial.product_of((GAMMA, j) for j in places)
    for z in reversed(word):
        p = polarize(Polarization(z, GAMMA), p)
        if not p:
            break
    if GAMMA in p.symbols():
        raise AssertionError("auxiliary letter left in a biproduct")
    return p


def biproduct(word: Sequence[Symbol], places: Sequence[int]) -> SuperPolynomial:
    """(z1...zp | j1...jq) = D_{z1,g}...D_{zp,g}((g|j1)...(g|jq)); zero unless p = q."""
    if len(word) != len(places):
        return SuperPolynomial()
    return _biproduct(tuple(word), tuple(places))


def bitableau_value(S: Tableau, T: Tableau) -> SuperPolynomial:
    """Signed product of the row biproducts; zero when the shapes differ."""
    if S.shape != T.shape:
        return SuperPolynomial()
    exponent = 0
    places_parity = 0
    value = SuperPolynomial.one()
    for omega, varpi in zip(S.rows, T.rows):
        exponent += word_parity(omega) * places_parity
        places_parity += len(varpi) & 1
        value = value * biproduct(omega, varpi)
        if not value:
            return value
    return -value if exponent & 1 else value


@dataclass(frozen=True)
class Bitableau:
    left: Tableau
    right: Tableau

    @property
    def value(self) -> SuperPolynomial:
        return bitableau_value(self.left, self.right)

    def __str__(self) -> str:
        return f"({self.left} | {self.right})"


def deruyts(lam: Sequence[int]) -> Tableau:
    """Rows x1 ... x_{λ_i}."""
    return Tableau(tuple(tuple(x(j) for j in range(1, p + 1)) for p in lam))


def deruyts_places(lam: Sequence[int]) -> Tableau:
    """Rows 1 ... λ_i over places."""
    return Tableau(tuple(tuple(range(1, p + 1)) for p in lam))


def coderuyts(lam: Sequence[int]) -> Tableau:
    """Rows b1 ... b_{λ_i} in negative virtual letters."""
    return Tableau(tuple(tuple(beta(j) for j in range(1, p + 1)) for p in lam))


def constant_rows(lam: Sequence[int]) -> Tableau:
    """Row i filled with the positive virtual letter a_i."""
    return Tableau(tuple((alpha(i),) * p for i, p in enumerate(lam, start=1)))


@lru_cache(maxsize=None)
def _hwv(mu: tuple[int, ...]) -> SuperPolynomial:
    return bitableau_value(deruyts(mu), deruyts_places(mu))


def highest_weight_vector(mu: Sequence[int], n: int) -> SuperPolynomial:
    """(D_μ | D^P_μ), the highest weight vector of weight conj(μ)."""
    mu = Partition(mu)
    if mu and mu[0] > n:
        raise ValueError(f"first part of {tuple(mu)} exceeds n={n}")
    return _hwv(tuple(mu))


def _sym_key(s: Symbol) -> tuple[int, int]:
    return (s.kind, s.index)


def is_superstandard(X: Tableau) -> bool:
    """Rows and columns weakly increasing; negative letters (virtual odd and
    proper) never repeat in a row, positive letters never repeat in a column."""
    for r in X.rows:
        for a, b in zip(r, r[1:]):
            if _sym_key(a) > _sym_key(b) or (a == b and a.kind != POSITIVE):
                return False
    for c in X.columns():
        for a, b in zip(c, c[1:]):
            if _sym_key(a) > _sym_key(b) or (a == b and a.kind == POSITIVE):
                return False
    return True


def is_standard_places(T: Tableau) -> bool:
    """Places are odd: rows strictly increasing, columns weakly increasing."""
    return all(a < b for r in T.rows for a, b in zip(r, r[1:])) and all(
        a <= b for c in T.columns() for a, b in zip(c, c[1:])
    )


def _fillings(
    shape: Sequence[int],
    letters: Sequence,
    row_ok,
    col_ok,
    content: Counter | None,
) -> Iterator[Tableau]:
    cells = [(i, j) for i, p in enumerate(shape) for j in range(p)]
    grid: list[list] = [[None] * p for p in shape]
    remaining = Counter(content) if content is not None else None

    def rec(t: int) -> Iterator[Tableau]:
        if t == len(cells):
            yield Tableau(tuple(tuple(r) for r in grid))
            return
        i, j = cells[t]
        for a in letters:
            if remaining is not None and remaining[a] <= 0:
                continue
            if j > 0 and not row_ok(grid[i][j - 1], a):
                continue
            if i > 0 and not col_ok(grid[i - 1][j], a):
                continue
            grid[i][j] = a
            if remaining is not None:
                remaining[a] -= 1
            yield from rec(t + 1)
            if remaining is not None:
                remaining[a] += 1
        grid[i][j] = None

    yield from rec(0)


def _row_ok(a: Symbol, b: Symbol) -> bool:
    return _sym_key(a) < _sym_key(b) or (a == b and a.kind == POSITIVE)


def _col_ok(a: Symbol, b: Symbol) -> bool:
    return _sym_key(a) < _sym_key(b) or (a == b and a.kind != POSITIVE)


def superstandard_tableaux(
    shape: Sequence[int], alphabet: Sequence[Symbol], content: Counter | None = None
) -> Iterator[Tableau]:
    letters = sorted(set(alphabet), key=_sym_key)
    if content is not None:
        letters = [a for a in letters if content.get(a, 0) > 0]
    yield from _fillings(shape, letters, _row_ok, _col_ok, content)


def standard_place_tableaux(
    shape: Sequence[int], d: int, content: Counter | None = None
) -> Iterator[Tableau]:
    yield from _fillings(shape, range(1, d + 1), lambda a, b: a < b, lambda a, b: a <= b, content)


def _hook_ok(shape: Sequence[int], alphabet: Sequence[Symbol]) -> bool:
    m0 = sum(1 for s in set(alphabet) if s.kind == POSITIVE)
    rest = sum(1 for s in set(alphabet) if s.kind != POSITIVE)
    return len(shape) <= m0 or shape[m0] <= rest


def standard_bitableaux(
    shape: Sequence[int],
    alphabet: Sequence[Symbol],
    d: int,
    left_content: Counter | None = None,
    right_content: Counter | None = None,
) -> list[Bitableau]:
    """All pairs (S|T) with S superstandard over the alphabet and T standard
    over places 1..d, both of the given shape."""
    shape = Partition(shape)
    if (shape and shape[0] > d) or not _hook_ok(shape, alphabet):
        return []
    lefts = list(superstandard_tableaux(shape, alphabet, left_content))
    rights = list(standard_place_tableaux(shape, d, right_content))
    return [Bitableau(S, T) for S in lefts for T in rights]


@dataclass
class StandardExpansion:
    """Coefficients of a polynomial over superstandard bitableaux."""

    coefficients: dict[Bitableau, Fraction] = field(default_factory=dict)

    def value(self) -> SuperPolynomial:
        out = SuperPolynomial()
        for b, c in self.coefficients.items():
            out = out + b.value.scale(c)
        return out

    def __len__(self) -> int:
        return len(self.coefficients)


def _contents(mono: tuple) -> tuple[tuple, tuple]:
    symbols = Counter(Symbol(v[1], v[2]) for v in mono)
    places = Counter(v[0] for v in mono)
    return tuple(sorted(symbols.items())), tuple(sorted(places.items()))


def straighten(
    p: SuperPolynomial, alphabet: Sequence[Symbol] | None = None, d: int | None = None
) -> StandardExpansion:
    """Expand p over superstandard bitableaux of matching content.

    Every bitableau has a single (letter content, place content); p is split
    by content and each piece is solved against the standard values."""
    groups: dict[tuple, dict] = {}
    for m, c in p.terms.items():
        groups.setdefault(_contents(m), {})[m] = c
    result = StandardExpansion()
    for (sym_content, place_content), terms in sorted(groups.items()):
        left = Counter(dict(sym_content))
        right = Counter(dict(place_content))
        h = sum(left.values())
        letters = sorted(left) if alphabet is None else list(alphabet)
        dd = max(right) if d is None else d
        basis: list[Bitableau] = []
        for lam in partitions_of(h):
            basis.extend(standard_bitableaux(lam, letters, dd, left, right))
        values = [b.value for b in basis]
        monos = sorted(set(terms).union(*(v.terms for v in values)))
        rows = [[v.terms.get(m, 0) for v in values] for m in monos]
        sol, _ = solve(rows, [terms.get(m, 0) for m in monos])
        for b, c in zip(basis, sol):
            if c:
                result.coefficients[b] = c
    return result


def extract_scalar(p: SuperPolynomial, reference: SuperPolynomial) -> Fraction:
    """The c with p = c·reference, checked monomial by monomial."""
    if not reference:
        raise ValueError("reference vector is zero")
    if not p:
        return Fraction(0)
    m, r = next(iter(reference.terms.items()))
    c = Fraction(p.terms.get(m, 0)) / r
    if p != reference.scale(c):
        raise EigenvectorError("result is not a multiple of the reference vector")
    return c


def bitableau_word(S: Tableau, T: Tableau) -> tuple[UGenerator, ...]:
    """e_{S,T}: the product of e_{s,t} over the cells, read row by row."""
    if S.shape != T.shape:
        raise ValueError("shapes differ")
    return tuple(UGenerator(s, t) for rs, rt in zip(S.rows, T.rows) for s, t in zip(rs, rt))


def proper_tableaux(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """Every filling of the shape by x1..xn."""
    yield from _fillings(shape, [x(i) for i in range(1, n + 1)], lambda a, b: True, lambda a, b: True, None)
