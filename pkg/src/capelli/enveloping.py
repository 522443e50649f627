"""Words in the generators e_{a,b} of the enveloping superalgebra.

Elements are exact combinations of free words; equality in the enveloping
algebra is decided through a PBW normal form for a chosen total order on the
generators. The same rewriting, with virtual annihilators ordered last, gives
the projection of the virtual algebra onto U(gl(n)).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Callable, Hashable, Iterable, Mapping, NamedTuple, Sequence, Union

from .superalgebra import (
    Polarization,
    SuperPolynomial,
    Symbol,
    parse_symbol,
    polarize,
    x,
)

__all__ = [
    "UGenerator",
    "UElement",
    "e",
    "parse_word",
    "format_word",
    "supercommutator",
    "NormalOrderer",
    "pbw_normal_form",
    "proper_order_key",
    "devirtualization_key",
    "presentation_key",
    "ad",
    "devirtualize",
    "is_balanced",
    "act_on_module",
    "column_determinant",
    "column_permanent",
    "affine_matrix",
    "NotVirtualError",
]

Coeff = Union[int, Fraction]


class NotVirtualError(ValueError):
    """Raised when an element is detectably outside the virtual algebra."""


class UGenerator(NamedTuple):
    row: Symbol
    col: Symbol

    @property
    def parity(self) -> int:
        return (self.row.lie_parity + self.col.lie_parity) & 1

    @property
    def polarization(self) -> Polarization:
        return Polarization(self.row, self.col)

    def __str__(self) -> str:
        return f"e[{self.row},{self.col}]"


Word = tuple  # tuple of UGenerator


def e(a: Symbol | int, b: Symbol | int) -> UGenerator:
    """Generator e_{a,b}; integers stand for proper letters."""
    return UGenerator(x(a) if isinstance(a, int) else a, x(b) if isinstance(b, int) else b)


def format_word(word: Sequence[UGenerator]) -> str:
    return " ".join(str(g) for g in word) if word else "1"


def parse_word(text: str) -> Word:
    out = []
    for tok in text.split():
        if not (tok.startswith("e[") and tok.endswith("]")):
            raise ValueError(f"bad generator {tok!r}")
        a, b = tok[2:-1].split(",")
        out.append(UGenerator(parse_symbol(a), parse_symbol(b)))
    return tuple(out)


def _accumulate(out: dict, key: Hashable, c: Coeff) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class UElement:
    """Exact rational combination of words in the generators e_{a,b}."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Coeff] | None = None):
        self.terms: dict[Word, Coeff] = {}
        for w, c in (terms or {}).items():
            _accumulate(self.terms, tuple(w), c)

    @classmethod
    def one(cls) -> "UElement":
        return cls({(): 1})

    @classmethod
    def scalar(cls, c: Coeff) -> "UElement":
        return cls({(): c})

    @classmethod
    def word(cls, *gens: UGenerator, coeff: Coeff = 1) -> "UElement":
        return cls({tuple(gens): coeff})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Coeff, Word]]) -> "UElement":
        out = cls()
        for c, w in terms:
            _accumulate(out.terms, tuple(w), c)
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, UElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: Union["UElement", Coeff]) -> "UElement":
        if not isinstance(other, UElement):
            other = UElement.scalar(other)
        out = UElement()
        out.terms = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(out.terms, w, c)
        return out

    __radd__ = __add__

    def __neg__(self) -> "UElement":
        out = UElement()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other: Union["UElement", Coeff]) -> "UElement":
        return self + (-other if isinstance(other, UElement) else -other)

    def __mul__(self, other: Union["UElement", Coeff]) -> "UElement":
        if not isinstance(other, UElement):
            out = UElement()
            if other:
                out.terms = {w: c * other for w, c in self.terms.items()}
            return out
        out = UElement()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _accumulate(out.terms, w1 + w2, c1 * c2)
        return out

    def __rmul__(self, c: Coeff) -> "UElement":
        return self * c

    def __pow__(self, k: int) -> "UElement":
        out = UElement.one()
        for _ in range(k):
            out = out * self
        return out

    def symbols(self) -> set[Symbol]:
        return {s for w in self.terms for g in w for s in g}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))
        return " + ".join(f"{Fraction(c)} {format_word(w)}" for w, c in items)

    def __repr__(self) -> str:
        return f"UElement({self})"


def supercommutator(g: UGenerator, h: UGenerator) -> UElement:
    """[e_ab, e_cd] = δ_bc e_ad − (−1)^{|e_ab||e_cd|} δ_ad e_cb."""
    a, b = g
    c, d = h
    out = UElement()
    if b == c:
        _accumulate(out.terms, (UGenerator(a, d),), 1)
    if a == d:
        _accumulate(out.terms, (UGenerator(c, b),), 1 if g.parity & h.parity else -1)
    return out


def proper_order_key(g: UGenerator) -> tuple:
    return (g.row.kind, g.row.index, g.col.kind, g.col.index)


def devirtualization_key(g: UGenerator) -> tuple:
    """Generators annihilating a virtual letter go last; the rest row-major."""
    return (1 if g.col.is_virtual else 0,) + proper_order_key(g)


def presentation_key(g: UGenerator) -> tuple:
    """Block order matching the shape of the virtual presentations
    e_{S,C}e_{C,D}e_{D,C}e_{C,S}: proper rows first, proper columns last."""
    if g.row.is_proper:
        block = 0 if g.col.is_proper else 1
    elif g.col.is_proper:
        block = 5
    elif g.col.kind < g.row.kind:
        block = 4
    elif g.col.kind > g.row.kind:
        block = 2
    else:
        block = 3
    return (block,) + proper_order_key(g)


class NormalOrderer:
    """Memoized PBW rewriting for one generator order.

    With ``drop`` set, any intermediate word containing a generator for which
    ``drop`` is true is discarded. This is sound when such words sit at the
    right end after sorting and generate a left ideal being quotiented out."""

    def __init__(self, key: Callable[[UGenerator], tuple], drop: Callable[[UGenerator], bool] | None = None):
        self.key = key
        self.drop = drop
        self._insert_cache: dict[tuple, dict] = {}
        self._word_cache: dict[Word, dict] = {}

    def _keep(self, word: Word) -> bool:
        return self.drop is None or not any(self.drop(g) for g in word)

    def insert(self, g: UGenerator, word: Word) -> dict[Word, Coeff]:
        """Normal form of g·word for an already normal word."""
        cache_key = (g, word)
        hit = self._insert_cache.get(cache_key)
        if hit is not None:
            return hit
        out: dict[Word, Coeff] = {}
        if not word or self.key(g) < self.key(word[0]):
            w = (g,) + word
            if self._keep(w):
                out[w] = 1
        else:
            h = word[0]
            rest = word[1:]
            if g == h:
                if g.parity == 0:
                    w = (g,) + word
                    if self._keep(w):
                        out[w] = 1
                else:
                    for (f,), c in supercommutator(g, g).terms.items():
                        for w, c2 in self.insert(f, rest).items():
                            _accumulate(out, w, Fraction(c, 2) * c2)
            else:
                sign = -1 if g.parity & h.parity else 1
                for w1, c1 in self.insert(g, rest).items():
                    for w2, c2 in self.insert(h, w1).items():
                        _accumulate(out, w2, sign * c1 * c2)
                for (f,), c in supercommutator(g, h).terms.items():
                    for w, c2 in self.insert(f, rest).items():
                        _accumulate(out, w, c * c2)
        self._insert_cache[cache_key] = out
        return out

    def normal_word(self, word: Word) -> dict[Word, Coeff]:
        hit = self._word_cache.get(word)
        if hit is not None:
            return hit
        if not word:
            out: dict[Word, Coeff] = {(): 1}
        elif len(word) == 1:
            out = {word: 1} if self._keep(word) else {}
        else:
            out = {}
            for w1, c1 in self.normal_word(word[1:]).items():
                for w2, c2 in self.insert(word[0], w1).items():
                    _accumulate(out, w2, c1 * c2)
        self._word_cache[word] = out
        return out

    def __call__(self, u: UElement) -> UElement:
        out = UElement()
        for w, c in u.terms.items():
            for w2, c2 in self.normal_word(w).items():
                _accumulate(out.terms, w2, c * c2)
        return out


def pbw_normal_form(u: UElement, key: Callable[[UGenerator], tuple] = devirtualization_key) -> UElement:
    """Rewrite u so that every word is weakly increasing for ``key``."""
    return NormalOrderer(key)(u)


def ad(g: UGenerator, u: UElement) -> UElement:
    """Adjoint action of g, expanded as a superderivation over the factors."""
    out = UElement()
    for w, c in u.terms.items():
        before = 0
        for p, f in enumerate(w):
            sign = -1 if (g.parity and before) else 1
            for (h,), c2 in supercommutator(g, f).terms.items():
                _accumulate(out.terms, w[:p] + (h,) + w[p + 1 :], sign * c * c2)
            before ^= f.parity
    return out


def _virtual_balance(word: Word) -> tuple[bool, bool]:
    """(zero virtual weight, regular): reading right to left, no virtual
    letter is annihilated more often than it was created before."""
    created: dict[Symbol, int] = {}
    regular = True
    for g in reversed(word):
        if g.col.is_virtual:
            created[g.col] = created.get(g.col, 0) - 1
            if created[g.col] < 0:
                regular = False
        if g.row.is_virtual:
            created[g.row] = created.get(g.row, 0) + 1
    return all(v == 0 for v in created.values()), regular


def is_balanced(word: Word) -> bool:
    """Zero virtual weight and no virtual letter annihilated before it exists."""
    weight_zero, regular = _virtual_balance(word)
    return weight_zero and regular


_DEVIRT = NormalOrderer(devirtualization_key, drop=lambda g: g.col.is_virtual)


def devirtualize(u: UElement) -> UElement:
    """Image of a virtual-algebra element in U(gl(n)).

    Words are normal ordered with virtual annihilators moved to the right;
    words ending in such a generator lie in the irregular left ideal and are
    discarded as soon as they appear."""
    for w in u.terms:
        if not _virtual_balance(w)[0]:
            raise NotVirtualError(f"word {format_word(w)} has nonzero virtual weight")
    out = _DEVIRT(u)
    for w in out.terms:
        if any(not s.is_proper for g in w for s in g):
            raise NotVirtualError(f"virtual letters survive in {format_word(w)}")
    return out


def act_on_module(u: UElement, p: SuperPolynomial) -> SuperPolynomial:
    """Let u act on p through polarizations, rightmost factor first.

    Words are arranged in a trie on their reversed letters so that common
    right factors are applied once."""
    trie: dict = {}
    for w, c in u.terms.items():
        node = trie
        for g in reversed(w):
            node = node.setdefault(g, {})
        node[None] = node.get(None, 0) + c

    result: dict = {}

    def walk(node: dict, value: SuperPolynomial) -> None:
        for g, child in node.items():
            if g is None:
                for m, c in value.terms.items():
                    _accumulate(result, m, child * c)
                continue
            nxt = polarize(g.polarization, value)
            if nxt.terms:
                walk(child, nxt)

    if p.terms:
        walk(trie, p)
    out = SuperPolynomial()
    out.terms = result
    return out


def affine_matrix(n: int, diagonal_shifts: Sequence[Coeff]) -> list[list[UElement]]:
    """The matrix [e_{x_i,x_j} + c_i δ_ij] as UElements."""
    return [
        [UElement.word(e(i, j)) + (diagonal_shifts[i - 1] if i == j else 0) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]


def _column_expansion(matrix: Sequence[Sequence[UElement]], signed: bool) -> UElement:
    n = len(matrix)
    out = UElement()
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = UElement.scalar(-1 if signed and inv % 2 else 1)
        for col in range(n):
            term = term * matrix[perm[col]][col]
        out = out + term
    return out


def column_determinant(matrix: Sequence[Sequence[UElement]]) -> UElement:
    """Σ_σ sgn(σ) a_{σ(1),1} ⋯ a_{σ(n),n}."""
    return _column_expansion(matrix, True)


def column_permanent(matrix: Sequence[Sequence[UElement]]) -> UElement:
    """Σ_σ a_{σ(1),1} ⋯ a_{σ(n),n}."""
    return _column_expansion(matrix, False)
