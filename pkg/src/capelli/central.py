"""The central families H_k, I_k, K_λ, J_λ, S_λ as sums of balanced words in
virtual generators, and their eigenvalues on highest weight vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .enveloping import UElement, UGenerator, act_on_module, e, is_balanced
from .partitions import (
    Partition,
    Permutation,
    conjugate,
    contains,
    e_star_eval,
    gamma_statistic,
    h_star_eval,
    hook_number,
    pad,
    parse_partition,
)
from .superalgebra import alpha, beta, x
from .tableaux import (
    Tableau,
    _fillings,
    bitableau_word,
    coderuyts,
    constant_rows,
    extract_scalar,
    highest_weight_vector,
)

__all__ = [
    "CentralSpec",
    "VirtualProgram",
    "H",
    "I",
    "K",
    "J",
    "S",
    "product",
    "identity",
    "column_bitableau",
    "parse_spec",
    "build_program",
    "eigenvalue_action",
    "eigenvalue_closed",
    "duality_map",
    "NoClosedForm",
    "row_increasing_tableaux",
    "column_nondecreasing_tableaux",
]

FAMILIES = ("H", "I", "K", "J", "S", "Product", "Column")


class NoClosedForm(ValueError):
    """No closed eigenvalue formula is available for this family or weight."""


@dataclass(frozen=True)
class CentralSpec:
    family: str
    n: int
    k: int = 0
    shape: Partition = Partition()
    factors: tuple["CentralSpec", ...] = ()
    sigma: Permutation | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be positive")
        object.__setattr__(self, "shape", Partition(self.shape))
        if self.family in ("H", "I") and self.k < 1:
            raise ValueError(f"{self.family}_k needs k >= 1")
        if self.family in ("K", "J", "S") and self.shape and self.shape[0] > self.n:
            raise ValueError(f"{self.family}{tuple(self.shape)} needs first part <= n={self.n}")
        if self.family == "Column":
            if self.sigma is None or not set(self.sigma.support) <= set(range(1, self.n + 1)):
                raise ValueError("column bitableau support must lie in 1..n")
        if self.family == "Product" and any(f.n != self.n for f in self.factors):
            raise ValueError("product factors must share n")

    @property
    def degree(self) -> int:
        """Filtration degree of the element."""
        if self.family in ("H", "I"):
            return self.k
        if self.family in ("K", "J", "S"):
            return self.shape.weight
        if self.family == "Column":
            return len(self.sigma.support)
        return sum(f.degree for f in self.factors)

    def __str__(self) -> str:
        if self.family in ("H", "I"):
            return f"{self.family}:{self.k}"
        if self.family in ("K", "J", "S"):
            return f"{self.family}:{','.join(map(str, self.shape))}"
        if self.family == "Column":
            cyc = "".join("(" + " ".join(map(str, c)) + ")" for c in self.sigma.cycles())
            return f"C:{cyc}"
        return "*".join(str(f) for f in self.factors) or "1"


def H(k: int, n: int) -> CentralSpec:
    return CentralSpec("H", n, k=k)


def I(k: int, n: int) -> CentralSpec:  # noqa: E743
    return CentralSpec("I", n, k=k)


def K(shape: Sequence[int], n: int) -> CentralSpec:
    return CentralSpec("K", n, shape=Partition(shape))


def J(shape: Sequence[int], n: int) -> CentralSpec:
    return CentralSpec("J", n, shape=Partition(shape))


def S(shape: Sequence[int], n: int) -> CentralSpec:
    return CentralSpec("S", n, shape=Partition(shape))


def product(*factors: CentralSpec, n: int | None = None) -> CentralSpec:
    if n is None:
        n = factors[0].n
    return CentralSpec("Product", n, factors=tuple(factors))


def identity(n: int) -> CentralSpec:
    return CentralSpec("Product", n)


def column_bitableau(sigma: Permutation, n: int) -> CentralSpec:
    return CentralSpec("Column", n, sigma=sigma)


def parse_spec(text: str, n: int) -> CentralSpec:
    """Parse "H:2", "I:3", "K:2,1", "J:2,2", "S:3,1", "1" and products "H:2*I:1"."""
    text = text.strip()
    if text in ("", "1"):
        return identity(n)
    parts = [p.strip() for p in text.split("*")]
    if len(parts) > 1:
        return product(*(parse_spec(p, n) for p in parts), n=n)
    fam, sep, arg = text.partition(":")
    fam = fam.strip().upper()
    if not sep or fam not in ("H", "I", "K", "J", "S"):
        raise ValueError(f"bad spec {text!r}")
    if fam in ("H", "I"):
        try:
            k = int(arg)
        except ValueError:
            raise ValueError(f"bad spec {text!r}") from None
        return CentralSpec(fam, n, k=k)
    return CentralSpec(fam, n, shape=parse_partition(arg))


@dataclass
class VirtualProgram:
    """A central element as Σ c·word with every word balanced."""

    summands: list[tuple[Fraction, tuple[UGenerator, ...]]] = field(default_factory=list)

    def element(self) -> UElement:
        return UElement.from_terms(self.summands)

    def __len__(self) -> int:
        return len(self.summands)


def _row(symbols: Sequence[int]) -> tuple:
    return tuple(x(i) for i in symbols)


def row_increasing_tableaux(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """Fillings by x1..xn strictly increasing along rows, columns free."""
    yield from _fillings(
        shape, [x(i) for i in range(1, n + 1)], lambda a, b: a.index < b.index, lambda a, b: True, None
    )


def column_nondecreasing_tableaux(shape: Sequence[int], n: int) -> Iterator[Tableau]:
    """Fillings by x1..xn weakly increasing down columns, rows free."""
    yield from _fillings(
        shape, [x(i) for i in range(1, n + 1)], lambda a, b: True, lambda a, b: a.index <= b.index, None
    )


def _column_repetition_factor(T: Tableau) -> int:
    out = 1
    for col in T.columns():
        counts: dict = {}
        for s in col:
            counts[s] = counts.get(s, 0) + 1
        out *= prod(factorial(c) for c in counts.values())
    return out


def _summands(spec: CentralSpec) -> Iterator[tuple[Fraction, tuple[UGenerator, ...]]]:
    n = spec.n
    fam = spec.family
    if fam == "H":
        a = alpha(1)
        for idx in combinations(range(1, n + 1), spec.k):
            word = tuple(e(i, a) for i in reversed(idx)) + tuple(e(a, i) for i in idx)
            yield Fraction(1), word
    elif fam == "I":
        b = beta(1)
        for h in _compositions(spec.k, n):
            word = tuple(e(j, b) for j in range(n, 0, -1) for _ in range(h[j - 1]))
            word += tuple(e(b, j) for j in range(1, n + 1) for _ in range(h[j - 1]))
            yield Fraction(1, prod(factorial(t) for t in h)), word
    elif fam == "K":
        C = constant_rows(spec.shape)
        for T in row_increasing_tableaux(spec.shape, n):
            yield Fraction(1), bitableau_word(T, C) + bitableau_word(C, T)
    elif fam == "J":
        conj = conjugate(spec.shape)
        D = coderuyts(conj)
        for T in column_nondecreasing_tableaux(conj, n):
            yield Fraction(1, _column_repetition_factor(T)), bitableau_word(T, D) + bitableau_word(D, T)
    elif fam == "S":
        C = constant_rows(spec.shape)
        D = coderuyts(spec.shape)
        middle = bitableau_word(C, D) + bitableau_word(D, C)
        coeff = Fraction(1, hook_number(spec.shape))
        for T in row_increasing_tableaux(spec.shape, n):
            yield coeff, bitableau_word(T, C) + middle + bitableau_word(C, T)
    elif fam == "Column":
        sigma = spec.sigma
        k = len(sigma.support)
        sign = (-1) ** comb(k, 2) * sigma.sign()
        gammas = [alpha(t) for t in range(1, k + 1)]
        word = tuple(e(i, g) for i, g in zip(sigma.support, gammas))
        word += tuple(e(g, sigma(i)) for i, g in zip(sigma.support, gammas))
        yield Fraction(sign), word
    else:
        acc: list[tuple[Fraction, tuple]] = [(Fraction(1), ())]
        for f in spec.factors:
            acc = [(c1 * c2, w1 + w2) for c1, w1 in acc for c2, w2 in _summands(f)]
        yield from acc


def _compositions(k: int, n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, n - 1):
            yield (first,) + rest


def build_program(spec: CentralSpec) -> VirtualProgram:
    prog = VirtualProgram(list(_summands(spec)))
    for _, w in prog.summands:
        if not is_balanced(w):
            raise AssertionError(f"unbalanced word in {spec}")
    return prog


@lru_cache(maxsize=None)
def _element(spec: CentralSpec) -> UElement:
    return build_program(spec).element()


@lru_cache(maxsize=None)
def eigenvalue_action(spec: CentralSpec, mu: Partition) -> Fraction:
    """Eigenvalue of the element on the highest weight vector (D_μ | D^P_μ),
    computed by letting the polarization words act."""
    mu = Partition(mu)
    v = highest_weight_vector(mu, spec.n)
    if spec.family == "Product":
        out = Fraction(1)
        for f in spec.factors:
            out *= eigenvalue_action(f, mu)
        return out
    return extract_scalar(act_on_module(_element(spec), v), v)


def eigenvalue_closed(spec: CentralSpec, mu: Sequence[int]) -> Fraction:
    """Eigenvalue from the closed formulas, where one exists."""
    mu = Partition(mu)
    n = spec.n
    if mu and mu[0] > n:
        raise ValueError(f"first part of {tuple(mu)} exceeds n={n}")
    weight = pad(conjugate(mu), n)
    fam = spec.family
    if fam == "H":
        return Fraction(e_star_eval(spec.k, weight) if spec.k <= n else 0)
    if fam == "I":
        return Fraction(h_star_eval(spec.k, weight))
    if fam == "S":
        lam = spec.shape
        if mu.weight <= lam.weight:
            return Fraction(hook_number(lam) if mu == lam else 0)
        if not contains(lam, mu):
            return Fraction(0)
        raise NoClosedForm(f"S{tuple(lam)} on {tuple(mu)}: no closed form above the diagonal")
    if fam == "Column":
        return Fraction(gamma_statistic(mu, spec.sigma.support, spec.sigma))
    if fam == "Product":
        out = Fraction(1)
        for f in spec.factors:
            out *= eigenvalue_closed(f, mu)
        return out
    raise NoClosedForm(f"no closed eigenvalue formula for family {fam}")


def duality_map(spec: CentralSpec) -> CentralSpec:
    """H_k <-> I_k, S_λ -> S_conj(λ), extended multiplicatively."""
    fam = spec.family
    if fam == "H":
        return I(spec.k, spec.n)
    if fam == "I":
        return H(spec.k, spec.n)
    if fam == "S":
        conj = conjugate(spec.shape)
        if conj and conj[0] > spec.n:
            raise ValueError(f"conjugate of {tuple(spec.shape)} does not fit n={spec.n}")
        return S(conj, spec.n)
    if fam == "Product":
        return product(*(duality_map(f) for f in spec.factors), n=spec.n)
    raise NotImplementedError(f"duality image of family {fam} is not defined")
