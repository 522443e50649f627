from __future__ import annotations

from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli.partitions import (
    Partition,
    Permutation,
    all_permutations,
    conjugate,
    contains,
    dominance_leq,
    e_star_eval,
    format_partition,
    gamma_statistic,
    h_star_eval,
    hook_number,
    horizontal_strips,
    pad,
    parse_partition,
    partitions_of,
    partitions_up_to,
    vertical_strips,
    wilf_polynomial,
)
from capelli.shifted import ShiftedPolynomial

partitions = st.integers(0, 7).flatmap(lambda h: st.sampled_from(list(partitions_of(h))))


def _hook_oracle(lam):
    # hook length = arm + leg + 1, computed from the conjugate directly
    conj = conjugate(lam)
    out = 1
    for i, row in enumerate(lam):
        for j in range(row):
            out *= (row - j - 1) + (conj[j] - i - 1) + 1
    return out


def _strip_oracle(mu, k, horizontal):
    # walk subsets as 0/1 masks over the cell list
    cells = Partition(mu).cells()
    total = count = 0
    for mask in product((0, 1), repeat=len(cells)):
        chosen = [c for c, b in zip(cells, mask) if b]
        if len(chosen) != k:
            continue
        axis_free, axis_group = (1, 0) if horizontal else (0, 1)
        if len({c[axis_free] for c in chosen}) != k:
            continue
        groups: dict[int, int] = {}
        for c in chosen:
            groups[c[axis_group]] = groups.get(c[axis_group], 0) + 1
        f = 1
        for g in groups.values():
            for t in range(2, g + 1):
                f *= t
        count += 1
        total += f
    return count, total


class TestPartition:
    def test_strips_trailing_zeros(self):
        assert Partition((3, 1, 0, 0)) == (3, 1)

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_parse_and_format(self):
        assert parse_partition("3,2") == (3, 2)
        assert parse_partition("(2,1,1)") == (2, 1, 1)
        assert parse_partition("") == ()
        assert format_partition((3, 2)) == "3,2"

    def test_cells(self):
        assert Partition((2, 1)).cells() == [(1, 1), (1, 2), (2, 1)]


class TestConjugate:
    @pytest.mark.parametrize(
        "lam, want",
        [((3, 2), (2, 2, 1)), ((), ()), ((1, 1, 1), (3,)), ((4, 2, 1), (3, 2, 1, 1))],
    )
    def test_values(self, lam, want):
        assert conjugate(lam) == want

    @given(partitions)
    def test_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam


class TestDominance:
    def test_examples(self):
        assert dominance_leq((2, 1, 1), (3, 1))
        assert not dominance_leq((3, 1), (2, 2))
        assert dominance_leq((2, 2), (3, 1))
        assert dominance_leq((2, 2), (2, 2))

    @given(st.integers(1, 7).flatmap(lambda h: st.tuples(*(st.sampled_from(list(partitions_of(h))),) * 2)))
    def test_conjugation_reverses(self, pair):
        lam, mu = pair
        assert dominance_leq(lam, mu) == dominance_leq(conjugate(mu), conjugate(lam))

    def test_contains(self):
        assert contains((2, 1), (3, 2))
        assert not contains((3,), (2, 2))
        assert contains((), (1,))


class TestHook:
    @pytest.mark.parametrize("k, want", [(1, 1), (3, 6), (5, 120)])
    def test_single_row(self, k, want):
        assert hook_number((k,)) == want

    def test_small(self):
        assert hook_number((2, 1)) == 3
        assert hook_number(()) == 1

    @given(partitions)
    def test_matches_arm_leg_oracle(self, lam):
        assert hook_number(lam) == _hook_oracle(lam)

    @pytest.mark.parametrize("h", range(1, 8))
    def test_hook_length_formula(self, h):
        # sum over λ ⊢ h of (h!/H(λ))^2 = h!
        fact = 1
        for t in range(2, h + 1):
            fact *= t
        assert sum((fact // hook_number(lam)) ** 2 for lam in partitions_of(h)) == fact


class TestEnumeration:
    def test_counts(self):
        assert [len(list(partitions_of(h))) for h in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]

    def test_reverse_lex(self):
        assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_bounds(self):
        assert list(partitions_of(4, max_part=2, max_length=2)) == [(2, 2)]
        assert len(list(partitions_up_to(3))) == 7

    def test_pad(self):
        assert pad((2,), 3) == (2, 0, 0)
        with pytest.raises(ValueError):
            pad((1, 1, 1), 2)


class TestStrips:
    def test_horizontal_example(self):
        strips = horizontal_strips((3, 2), 2)
        # four same-row pairs carry factor 2, four cross-row pairs carry 1
        assert len(strips) == 8
        assert sum(s.factor for s in strips) == 12

    def test_horizontal_trivial(self):
        assert [s.factor for s in horizontal_strips((3, 1), 0)] == [1]
        strips = horizontal_strips((2,), 2)
        assert len(strips) == 1 and strips[0].factor == 2

    def test_vertical_examples(self):
        assert sum(s.factor for s in vertical_strips((2, 2, 1), 2)) == 12
        assert vertical_strips((1,), 2) == []
        strips = vertical_strips((1, 1), 2)
        assert len(strips) == 1 and strips[0].factor == 2

    @settings(max_examples=60)
    @given(partitions, st.integers(0, 4), st.booleans())
    def test_against_mask_enumeration(self, mu, k, horizontal):
        strips = horizontal_strips(mu, k) if horizontal else vertical_strips(mu, k)
        assert (len(strips), sum(s.factor for s in strips)) == _strip_oracle(mu, k, horizontal)

    @settings(max_examples=60)
    @given(partitions, st.integers(1, 4))
    def test_strip_sums_are_shifted_elementary(self, mu, k):
        n = max(len(conjugate(mu)), k)
        assert sum(s.factor for s in horizontal_strips(mu, k)) == e_star_eval(k, pad(conjugate(mu), n))
        assert sum(s.factor for s in vertical_strips(mu, k)) == h_star_eval(k, pad(conjugate(mu), n))


class TestShiftedEvaluations:
    def test_examples(self):
        assert e_star_eval(2, (2, 2, 1)) == 12
        assert h_star_eval(2, (3, 2)) == 12

    def test_k_too_large(self):
        with pytest.raises(ValueError):
            e_star_eval(3, (1, 1))

    @given(st.lists(st.integers(0, 6), min_size=1, max_size=4), st.integers(1, 4))
    def test_zero_and_linear(self, values, k):
        assert h_star_eval(1, values) == sum(values) == e_star_eval(1, values)
        if k <= len(values):
            assert e_star_eval(k, [0] * len(values)) == 0
        assert h_star_eval(k, [0] * len(values)) == 0

    @given(partitions, st.integers(1, 4))
    def test_duality(self, mu, k):
        conj = conjugate(mu)
        n = max(len(mu), len(conj), k)
        assert e_star_eval(k, pad(conj, n)) == h_star_eval(k, pad(mu, n))


class TestGamma:
    def test_example(self):
        sigma = Permutation.from_cycles([(6, 2, 4), (9, 5), (11, 7), (12,)])
        support = (2, 4, 5, 6, 7, 9, 11, 12)
        mu = (12, 11, 9, 9, 7, 6, 4, 2)
        c = conjugate(mu)
        assert sigma.cycle_maxima() == [6, 9, 11, 12]
        assert gamma_statistic(mu, support, sigma) == c[5] * c[8] * c[10] * c[11]

    def test_singleton_and_identity(self):
        mu = (3, 3, 2)
        c = conjugate(mu)
        assert gamma_statistic(mu, (2,), Permutation.identity((2,))) == c[1]
        assert gamma_statistic(mu, (1, 2, 3), Permutation.identity((1, 2, 3))) == c[0] * c[1] * c[2]

    @given(partitions, st.integers(1, 3))
    def test_double_sum_is_shifted_elementary(self, mu, k):
        n = max(len(conjugate(mu)), k, 3)
        total = sum(
            gamma_statistic(mu, idx, s)
            for idx in combinations(range(1, n + 1), k)
            for s in all_permutations(idx)
        )
        assert total == e_star_eval(k, pad(conjugate(mu), n))


class TestPermutation:
    def test_cycles_and_sign(self):
        p = Permutation.from_cycles([(1, 3), (2,)])
        assert p(1) == 3 and p(3) == 1
        assert p.sign() == -1
        assert sorted(p.cycles()) == [(1, 3), (2,)]

    def test_not_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 2), (1, 1))


class TestWilf:
    def test_small(self):
        assert wilf_polynomial(1) == ShiftedPolynomial(1, {(1,): 1})
        assert wilf_polynomial(2) == ShiftedPolynomial(2, {(1, 1): 1, (0, 1): 1})
        assert wilf_polynomial(3) == ShiftedPolynomial(
            3, {(1, 1, 1): 1, (1, 0, 1): 1, (0, 1, 1): 2, (0, 0, 1): 2}
        )

    @pytest.mark.parametrize("n", range(1, 6))
    def test_total_is_factorial(self, n):
        fact = 1
        for t in range(2, n + 1):
            fact *= t
        assert sum(wilf_polynomial(n).terms.values()) == fact
