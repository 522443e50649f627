"""Shifted symmetric polynomials: e*, h*, determinant-ratio s*, the eigenvalue
map χ_n by interpolation, the projection x_{n+1} = 0, and the involution w."""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import prod
from typing import Iterable, Mapping, Sequence, Union

import sympy

from .linalg import solve
from .partitions import Partition, conjugate, partitions_of

__all__ = [
    "ShiftedPolynomial",
    "EigRecord",
    "e_star_poly",
    "h_star_poly",
    "falling_factorial",
    "s_star_poly",
    "chi",
    "olshanski_project",
    "omega_involution",
    "InterpolationError",
    "NonExactDivision",
    "S_STAR_CONVENTIONS",
]

Coeff = Union[int, Fraction]
Exponents = tuple


class InterpolationError(ArithmeticError):
    """The interpolation system could not be made to determine the polynomial."""


class NonExactDivision(ArithmeticError):
    """A determinant ratio left a nonzero remainder."""


class ShiftedPolynomial:
    """Exact polynomial in x_1..x_n with rational coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, Coeff] | None = None):
        self.n = n
        self.terms: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not have length {n}")
            if c:
                self.terms[exps] = self.terms.get(exps, Fraction(0)) + Fraction(c)
                if not self.terms[exps]:
                    del self.terms[exps]

    @classmethod
    def constant(cls, n: int, c: Coeff) -> "ShiftedPolynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "ShiftedPolynomial":
        """x_i, 1-based."""
        return cls(n, {tuple(1 if j == i - 1 else 0 for j in range(n)): 1})

    def _coerce(self, other) -> "ShiftedPolynomial":
        if isinstance(other, ShiftedPolynomial):
            if other.n != self.n:
                raise ValueError(f"variable counts differ: {self.n} vs {other.n}")
            return other
        return ShiftedPolynomial.constant(self.n, other)

    def __add__(self, other) -> "ShiftedPolynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return ShiftedPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "ShiftedPolynomial":
        return ShiftedPolynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "ShiftedPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ShiftedPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "ShiftedPolynomial":
        other = self._coerce(other)
        out: dict[Exponents, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return ShiftedPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ShiftedPolynomial":
        out = ShiftedPolynomial.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = ShiftedPolynomial.constant(self.n, other)
        if not isinstance(other, ShiftedPolynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def top_degree_part(self) -> "ShiftedPolynomial":
        d = self.degree
        return ShiftedPolynomial(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def evaluate(self, values: Sequence[Coeff]) -> Fraction:
        if len(values) != self.n:
            raise ValueError(f"expected {self.n} values")
        return sum(
            (c * prod(Fraction(v) ** k for v, k in zip(values, m)) for m, c in self.terms.items()),
            Fraction(0),
        )

    def substitute(self, images: Sequence["ShiftedPolynomial"]) -> "ShiftedPolynomial":
        """Replace x_i by images[i]; all images share one variable count."""
        target = images[0].n if images else 0
        out = ShiftedPolynomial(target)
        powers: dict[tuple[int, int], ShiftedPolynomial] = {}
        for m, c in self.terms.items():
            term = ShiftedPolynomial.constant(target, c)
            for i, k in enumerate(m):
                if k:
                    if (i, k) not in powers:
                        powers[(i, k)] = images[i] ** k
                    term = term * powers[(i, k)]
            out = out + term
        return out

    def shift_swap(self, i: int) -> "ShiftedPolynomial":
        """f(..., x_{i+1} - 1, x_i + 1, ...) for 1-based i < n."""
        xs = [ShiftedPolynomial.variable(self.n, j) for j in range(1, self.n + 1)]
        xs[i - 1], xs[i] = xs[i] - 1, xs[i - 1] + 1
        return self.substitute(xs)

    def is_shifted_symmetric(self) -> bool:
        return all(self.shift_swap(i) == self for i in range(1, self.n))

    def sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        """Graded lexicographic order with x1 > x2 > ..."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    def to_json_obj(self) -> list[dict]:
        return [{"exponents": list(m), "coeff": str(c)} for m, c in self.sorted_terms()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, n: int, obj: Iterable[Mapping]) -> "ShiftedPolynomial":
        return cls(n, {tuple(t["exponents"]): Fraction(t["coeff"]) for t in obj})

    def to_sympy(self, symbols: Sequence[sympy.Symbol] | None = None) -> sympy.Expr:
        if symbols is None:
            symbols = sympy.symbols(f"x1:{self.n + 1}")
        return sympy.Add(
            *(
                sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(s**k for s, k in zip(symbols, m)))
                for m, c in self.terms.items()
            )
        )

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, symbols: Sequence[sympy.Symbol]) -> "ShiftedPolynomial":
        poly = sympy.Poly(sympy.expand(expr), *symbols, domain="QQ")
        return cls(
            len(symbols),
            {m: Fraction(int(c.numerator), int(c.denominator)) for m, c in poly.terms()},
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in self.sorted_terms():
            body = "*".join(f"x{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(m) if k)
            mag = abs(c)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if not out:
                out = f"-{text}" if c < 0 else text
            else:
                out += f" - {text}" if c < 0 else f" + {text}"
        return out

    def __repr__(self) -> str:
        return f"ShiftedPolynomial({self.n}, {self})"


class EigRecord(tuple):
    """(weight padded to n, eigenvalue)."""

    def __new__(cls, point: Sequence[int], value: Coeff) -> "EigRecord":
        return super().__new__(cls, (tuple(point), Fraction(value)))

    @property
    def point(self) -> tuple[int, ...]:
        return self[0]

    @property
    def value(self) -> Fraction:
        return self[1]


def _linear(n: int, i: int, shift: int) -> ShiftedPolynomial:
    return ShiftedPolynomial.variable(n, i) + shift


def e_star_poly(k: int, n: int) -> ShiftedPolynomial:
    """Σ_{i1<...<ik} (x_{i1}+k-1)(x_{i2}+k-2)...(x_{ik})."""
    if not 0 <= k <= n:
        raise ValueError(f"e*_{k} is defined for 0 <= k <= n={n}")
    out = ShiftedPolynomial(n)
    for idx in combinations(range(1, n + 1), k):
        term = ShiftedPolynomial.constant(n, 1)
        for t, i in enumerate(idx):
            term = term * _linear(n, i, k - 1 - t)
        out = out + term
    return out


def h_star_poly(k: int, n: int) -> ShiftedPolynomial:
    """Σ_{i1<=...<=ik} (x_{i1}-k+1)(x_{i2}-k+2)...(x_{ik})."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = ShiftedPolynomial(n)
    for idx in combinations_with_replacement(range(1, n + 1), k):
        term = ShiftedPolynomial.constant(n, 1)
        for t, i in enumerate(idx):
            term = term * _linear(n, i, -k + 1 + t)
        out = out + term
    return out


def falling_factorial(z: sympy.Expr, m: int) -> sympy.Expr:
    """(z)_m = z(z-1)...(z-m+1)."""
    return sympy.Mul(*(z - t for t in range(m)))


# Index placement for the shifted Schur determinant. The entry in row i and
# column j is (x_i + n - i)_{ν + n - j} with ν taken from:
#   "conjugate": conj(λ)_j   (the frozen convention; agrees with χ_n(S_λ))
#   "partition": λ_j
#   "row":       conj(λ)_i   (the shape index attached to the row, as displayed
#                             in some sources; not a polynomial in general)
S_STAR_CONVENTIONS = ("conjugate", "partition", "row")


def s_star_poly(lam: Sequence[int], n: int, convention: str = "conjugate") -> ShiftedPolynomial:
    """det[(x_i+n-i)_{ν+n-j}] / det[(x_i+n-i)_{n-j}] with ν placed per convention."""
    if convention not in S_STAR_CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    lam = Partition(lam)
    nu = conjugate(lam) if convention in ("conjugate", "row") else lam
    if len(nu) > n:
        raise ValueError(f"{tuple(nu)} has more than n={n} parts")
    nu_p = tuple(nu) + (0,) * (n - len(nu))
    xs = sympy.symbols(f"x1:{n + 1}")

    def index(i: int, j: int) -> int:
        return (nu_p[i] if convention == "row" else nu_p[j]) + n - 1 - j

    num = sympy.Matrix(n, n, lambda i, j: falling_factorial(xs[i] + n - 1 - i, index(i, j))).det(method="berkowitz")
    den = sympy.Matrix(n, n, lambda i, j: falling_factorial(xs[i] + n - 1 - i, n - 1 - j)).det(method="berkowitz")
    q, r = sympy.div(sympy.Poly(sympy.expand(num), *xs, domain="QQ"), sympy.Poly(sympy.expand(den), *xs, domain="QQ"))
    if not r.is_zero:
        raise NonExactDivision(f"denominator does not divide numerator for {tuple(lam)}, convention {convention}")
    return ShiftedPolynomial.from_sympy(q.as_expr(), xs)


def _monomials(n: int, m: int) -> list[Exponents]:
    out = []

    def rec(prefix: tuple, left: int) -> None:
        if len(prefix) == n - 1:
            for last in range(left + 1):
                out.append(prefix + (last,))
            return
        for a in range(left + 1):
            rec(prefix + (a,), left - a)

    if n == 0:
        return [()]
    rec((), m)
    return out


def _weights_of_size(h: int, n: int) -> list[tuple[int, ...]]:
    """Partitions of h with at most n parts, padded to length n."""
    return [tuple(nu) + (0,) * (n - len(nu)) for nu in partitions_of(h, max_length=n)]


def _symmetry_rows(n: int, monos: list[Exponents]) -> list[list[Fraction]]:
    rows: dict[tuple[int, Exponents], dict[int, Fraction]] = {}
    for col, m in enumerate(monos):
        f = ShiftedPolynomial(n, {m: 1})
        for i in range(1, n):
            diff = f.shift_swap(i) - f
            for mm, c in diff.terms.items():
                rows.setdefault((i, mm), {})[col] = c
    return [[r.get(c, Fraction(0)) for c in range(len(monos))] for _, r in sorted(rows.items())]


def chi(spec, held_out: int = 10, evaluate=None) -> ShiftedPolynomial:
    """The eigenvalue polynomial of a central element: the shifted symmetric
    polynomial of degree at most the filtration degree whose value at each
    weight ν (at most n parts) is the eigenvalue on the module of shape conj(ν).

    Monomial coefficients are solved from the shifted symmetry relations and
    evaluations at all weights of size 0, 1, 2, ... until the solution is
    unique; ``held_out`` further weights are then checked."""
    from .central import eigenvalue_action

    if evaluate is None:
        evaluate = eigenvalue_action
    n = spec.n
    m = spec.degree
    monos = _monomials(n, m)
    rows = _symmetry_rows(n, monos)
    rhs: list[Fraction] = [Fraction(0)] * len(rows)
    size = 0
    while True:
        for point in _weights_of_size(size, n):
            rows.append([Fraction(prod(a**k for a, k in zip(point, mono))) for mono in monos])
            rhs.append(evaluate(spec, conjugate(point)))
        if size >= m:
            sol, rk = solve(rows, rhs)
            if rk == len(monos):
                break
        if size > 2 * m + 2:
            raise InterpolationError(f"evaluations do not determine the polynomial of {spec}")
        size += 1
    poly = ShiftedPolynomial(n, dict(zip(monos, sol)))
    checked = 0
    while checked < held_out:
        size += 1
        for point in _weights_of_size(size, n):
            if checked >= held_out:
                break
            if poly.evaluate(point) != evaluate(spec, conjugate(point)):
                raise InterpolationError(f"held-out weight {point} disagrees for {spec}")
            checked += 1
    return poly


def olshanski_project(f: ShiftedPolynomial) -> ShiftedPolynomial:
    """Set the last variable to zero."""
    if f.n < 1:
        raise ValueError("nothing to project")
    return ShiftedPolynomial(f.n - 1, {m[:-1]: c for m, c in f.terms.items() if m[-1] == 0})


def omega_involution(f: ShiftedPolynomial) -> ShiftedPolynomial:
    """Write f as a polynomial in e*_1..e*_n and replace each e*_k by h*_k.

    This agrees with the stable involution only when n >= deg f: with fewer
    variables e*_k vanishes for k > n while h*_k does not.
    """
    n = f.n
    d = f.degree
    basis = [nu for h in range(d + 1) for nu in partitions_of(h, max_part=n)]
    e_basis = [prod((e_star_poly(k, n) for k in nu), start=ShiftedPolynomial.constant(n, 1)) for nu in basis]
    monos = sorted(set(f.terms).union(*(b.terms for b in e_basis)))
    rows = [[b.terms.get(mm, Fraction(0)) for b in e_basis] for mm in monos]
    coeffs, _ = solve(rows, [f.terms.get(mm, Fraction(0)) for mm in monos])
    out = ShiftedPolynomial(n)
    for nu, c in zip(basis, coeffs):
        if c:
            out = out + prod((h_star_poly(k, n) for k in nu), start=ShiftedPolynomial.constant(n, 1)) * c
    return out
