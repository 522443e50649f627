"""Partitions, permutations on finite supports, generalized strips, and the
closed-form eigenvalue evaluations that only need integer arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial, prod
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Partition",
    "Permutation",
    "all_permutations",
    "Strip",
    "parse_partition",
    "format_partition",
    "conjugate",
    "dominance_leq",
    "contains",
    "hook_number",
    "partition_factorial",
    "partitions_of",
    "partitions_up_to",
    "pad",
    "horizontal_strips",
    "vertical_strips",
    "e_star_eval",
    "h_star_eval",
    "gamma_statistic",
    "wilf_polynomial",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. Trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def cells(self) -> list[tuple[int, int]]:
        """Cells (row, column) of the Ferrers diagram, 1-based, row by row."""
        return [(i + 1, j + 1) for i, p in enumerate(self) for j in range(p)]

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()")
    if not text:
        return Partition()
    return Partition(int(t) for t in text.split(",") if t.strip())


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff every partial sum of lam is at most the matching partial sum of mu."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a > b:
            return False
    return True


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Diagram inclusion lam ⊆ mu."""
    if len(lam) > len(mu):
        return False
    return all(p <= q for p, q in zip(lam, mu))


def hook_number(lam: Sequence[int]) -> int:
    """Product of all hook lengths of the diagram."""
    conj = conjugate(lam)
    return prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))


def partition_factorial(lam: Sequence[int]) -> int:
    """λ! taken as the product of the row factorials."""
    return prod(factorial(p) for p in lam)


def partitions_of(
    h: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    """Partitions of h in reverse lexicographic order."""
    if max_part is None:
        max_part = h
    if max_length is None:
        max_length = h

    def rec(rest: int, bound: int, slots: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rest, bound), 0, -1):
            for tail in rec(rest - p, p, slots - 1):
                yield (p,) + tail

    for parts in rec(h, max_part, max_length):
        yield Partition(parts)


def partitions_up_to(
    m: int, max_part: int | None = None, max_length: int | None = None
) -> Iterator[Partition]:
    for h in range(m + 1):
        yield from partitions_of(h, max_part, max_length)


def pad(lam: Sequence[int], n: int) -> tuple[int, ...]:
    if len(lam) > n:
        raise ValueError(f"{tuple(lam)} has more than {n} parts")
    return tuple(lam) + (0,) * (n - len(lam))


@dataclass(frozen=True)
class Permutation:
    """A bijection of a finite set of integers, stored on its support."""

    support: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.support) != sorted(self.images) or len(set(self.support)) != len(self.support):
            raise ValueError("not a bijection of the support")

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> "Permutation":
        keys = tuple(sorted(mapping))
        return cls(keys, tuple(mapping[k] for k in keys))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]]) -> "Permutation":
        mapping: dict[int, int] = {}
        for cyc in cycles:
            for i, a in enumerate(cyc):
                mapping[a] = cyc[(i + 1) % len(cyc)]
        return cls.from_mapping(mapping)

    @classmethod
    def identity(cls, support: Iterable[int]) -> "Permutation":
        s = tuple(sorted(support))
        return cls(s, s)

    def __call__(self, i: int) -> int:
        return self.images[self.support.index(i)]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        mapping = dict(zip(self.support, self.images))
        for start in self.support:
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = mapping[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = mapping[nxt]
            out.append(tuple(cyc))
        return out

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_maxima(self) -> list[int]:
        return sorted(max(c) for c in self.cycles())


def all_permutations(support: Sequence[int]) -> Iterator[Permutation]:
    s = tuple(sorted(support))
    for imgs in permutations(s):
        yield Permutation(s, imgs)


@dataclass(frozen=True)
class Strip:
    """A set of cells of a diagram with at most one cell per column (horizontal)
    or per row (vertical). ``factor`` is the product of the factorials of the
    component sizes, a component being the chosen cells of one row (resp. column)."""

    cells: frozenset[tuple[int, int]]
    kind: str

    @property
    def factor(self) -> int:
        axis = 0 if self.kind == "horizontal" else 1
        counts: dict[int, int] = {}
        for cell in self.cells:
            counts[cell[axis]] = counts.get(cell[axis], 0) + 1
        return prod(factorial(c) for c in counts.values())


def _strips(mu: Sequence[int], k: int, kind: str) -> list[Strip]:
    free_axis = 1 if kind == "horizontal" else 0
    out = []
    for chosen in combinations(Partition(mu).cells(), k):
        keys = [c[free_axis] for c in chosen]
        if len(set(keys)) == k:
            out.append(Strip(frozenset(chosen), kind))
    return out


def horizontal_strips(mu: Sequence[int], k: int) -> list[Strip]:
    """All k-cell subsets of the diagram of mu with no two cells in a column."""
    return _strips(mu, k, "horizontal")


def vertical_strips(mu: Sequence[int], k: int) -> list[Strip]:
    """All k-cell subsets of the diagram of mu with no two cells in a row."""
    return _strips(mu, k, "vertical")


def e_star_eval(k: int, values: Sequence[int]) -> int:
    """Sum over i1<...<ik of (v_{i1}+k-1)(v_{i2}+k-2)...(v_{ik})."""
    n = len(values)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > n:
        raise ValueError(f"e*_{k} needs at least {k} variables, got {n}")
    return sum(
        prod(values[i] + k - 1 - t for t, i in enumerate(idx)) for idx in combinations(range(n), k)
    )


def h_star_eval(k: int, values: Sequence[int]) -> int:
    """Sum over i1<=...<=ik of (v_{i1}-k+1)(v_{i2}-k+2)...(v_{ik})."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return sum(
        prod(values[i] - k + 1 + t for t, i in enumerate(idx))
        for idx in combinations_with_replacement(range(len(values)), k)
    )


def gamma_statistic(mu: Sequence[int], support: Sequence[int], sigma: Permutation) -> int:
    """Product of conj(mu)_j over the maxima j of the cycles of sigma."""
    if tuple(sorted(support)) != tuple(sorted(sigma.support)):
        raise ValueError("sigma is not supported on the given set")
    conj = conjugate(mu)
    return prod(conj[j - 1] if j <= len(conj) else 0 for j in sigma.cycle_maxima())


def wilf_polynomial(n: int):
    """Sum over permutations of {1..n} of the monomial marking cycle maxima."""
    from .shifted import ShiftedPolynomial

    if n < 1:
        raise ValueError("n must be positive")
    terms: dict[tuple[int, ...], int] = {}
    for sigma in all_permutations(range(1, n + 1)):
        maxima = set(sigma.cycle_maxima())
        exps = tuple(1 if j in maxima else 0 for j in range(1, n + 1))
        terms[exps] = terms.get(exps, 0) + 1
    return ShiftedPolynomial(n, terms)
