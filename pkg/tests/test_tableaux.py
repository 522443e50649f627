from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from capelli.linalg import rank
from capelli.partitions import partitions_of
from capelli.superalgebra import SuperPolynomial, alpha, beta, x
from capelli.tableaux import (
    Bitableau,
    EigenvectorError,
    Tableau,
    biproduct,
    bitableau_value,
    coderuyts,
    constant_rows,
    deruyts,
    deruyts_places,
    extract_scalar,
    highest_weight_vector,
    is_superstandard,
    is_standard_places,
    parse_place_tableau,
    parse_tableau,
    standard_bitableaux,
    straighten,
)

a1, a2, b1 = alpha(1), alpha(2), beta(1)


def P(*factors, coeff=1):
    return SuperPolynomial.product_of(factors, coeff)


def _perm_sign(p):
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def _proper_det(rows, places):
    # the (x_i|j) commute, so the ordinary Leibniz determinant applies
    out = SuperPolynomial()
    for p in permutations(range(len(places))):
        out = out + P(*((rows[i], places[p[i]]) for i in range(len(rows))), coeff=_perm_sign(p))
    return out


class TestBiproduct:
    def test_proper_is_minus_determinant(self):
        xs = [x(1), x(2), x(3)]
        assert biproduct(xs, [1, 2, 3]) == -_proper_det(xs, [1, 2, 3])

    def test_length_mismatch(self):
        assert biproduct([x(1), x(2)], [1]) == SuperPolynomial()

    def test_mixed_example(self):
        want = (
            P((x(3), 1), (a2, 2), (a1, 3))
            + P((x(3), 1), (a1, 2), (a2, 3))
            - P((a2, 1), (x(3), 2), (a1, 3))
            - P((a1, 1), (x(3), 2), (a2, 3))
            + P((a2, 1), (a1, 2), (x(3), 3))
            + P((a1, 1), (a2, 2), (x(3), 3))
        )
        assert biproduct([a1, a2, x(3)], [1, 2, 3]) == want

    def test_mixed_example_laplace(self):
        w = biproduct([a1, a2, x(3)], [1, 2, 3])
        by_places = (
            biproduct([a1, a2], [1, 2]) * biproduct([x(3)], [3])
            + biproduct([a1, x(3)], [1, 2]) * biproduct([a2], [3])
            + biproduct([a2, x(3)], [1, 2]) * biproduct([a1], [3])
        )
        by_letters = (
            biproduct([a1, a2], [1, 2]) * biproduct([x(3)], [3])
            - biproduct([a1, a2], [1, 3]) * biproduct([x(3)], [2])
            + biproduct([a1, a2], [2, 3]) * biproduct([x(3)], [1])
        )
        assert w == by_places == by_letters

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.sampled_from([x(1), x(2), x(3), x(4)]), min_size=1, max_size=4, unique=True))
    def test_proper_sign_pattern(self, letters):
        places = list(range(1, len(letters) + 1))
        sign = (-1) ** comb(len(letters), 2)
        assert biproduct(letters, places) == _proper_det(letters, places).scale(sign)

    def test_positive_repeat_is_permanent(self):
        # (a1 a1 | 1 2) is a symmetric sum of the odd variables: two equal terms
        assert biproduct([a1, a1], [1, 2]) == P((a1, 1), (a1, 2), coeff=2)
        assert biproduct([x(1), x(1)], [1, 2]) == SuperPolynomial()


class TestBitableau:
    def test_single_row(self):
        S, T = parse_tableau("x1 x2"), parse_place_tableau("1 2")
        assert bitableau_value(S, T) == biproduct(S.rows[0], T.rows[0])

    def test_shape_mismatch(self):
        assert bitableau_value(parse_tableau("x1 x2"), parse_place_tableau("1; 2")) == SuperPolynomial()

    def test_deruyts_21(self):
        got = bitableau_value(deruyts((2, 1)), deruyts_places((2, 1)))
        row1 = P((x(2), 1), (x(1), 2)) - P((x(1), 1), (x(2), 2))
        assert got == row1 * P((x(1), 1))
        assert str(Bitableau(deruyts((2, 1)), deruyts_places((2, 1)))) == "(x1 x2; x1 | 1 2; 1)"

    def test_odd_sign(self):
        # second row of odd letter parity after an odd-length first row flips the sign
        S, T = parse_tableau("b1; b1"), parse_place_tableau("1; 2")
        assert bitableau_value(S, T) == -(P((b1, 1)) * P((b1, 2)))

    def test_highest_weight_vector(self):
        v = highest_weight_vector((3, 2), 3)
        xs = [x(1), x(2), x(3)]
        assert v == _proper_det(xs, [1, 2, 3]) * _proper_det(xs[:2], [1, 2])
        assert highest_weight_vector((1,), 1) == P((x(1), 1))
        assert highest_weight_vector((), 2) == SuperPolynomial.one()
        with pytest.raises(ValueError):
            highest_weight_vector((3,), 2)


class TestStandardness:
    def test_examples(self):
        assert is_superstandard(deruyts((2, 2)))
        assert is_superstandard(constant_rows((3, 2)))
        assert is_superstandard(coderuyts((2, 1)))
        assert not is_superstandard(parse_tableau("x2 x1"))
        assert not is_superstandard(parse_tableau("x1 x1"))
        assert not is_superstandard(parse_tableau("a1; a1"))
        assert is_standard_places(parse_place_tableau("1 2; 1"))
        assert not is_standard_places(parse_place_tableau("1 1"))

    def test_roundtrip(self):
        t = parse_tableau("a1 a1 x2; b1")
        assert parse_tableau(str(t)) == t
        assert t.shape == (3, 1)


def _all_values(letters, d, h):
    from capelli.tableaux import _fillings

    out = []
    for lam in partitions_of(h):
        for L in _fillings(lam, letters, lambda a, b: True, lambda a, b: True, None):
            for R in _fillings(lam, range(1, d + 1), lambda a, b: True, lambda a, b: True, None):
                out.append(bitableau_value(L, R))
    return out


class TestStandardBasis:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_single_box(self, n):
        assert len(standard_bitableaux((1,), [x(i) for i in range(1, n + 1)], 1)) == n

    def test_shape_21_count(self):
        assert len(standard_bitableaux((2, 1), [x(1), x(2)], 2)) == 4

    def test_hook_violation(self):
        assert standard_bitableaux((2,), [x(1)], 2) == []
        assert standard_bitableaux((1, 1, 1), [a1], 3) == []

    @pytest.mark.parametrize(
        "letters, d, h, dim",
        [
            # four commuting variables, degree 3: C(6, 3)
            ((x(1), x(2)), 2, 3, 20),
            # two odd and two even variables, degree 2: 1 + 4 + 3
            ((a1, x(1)), 2, 2, 8),
        ],
    )
    def test_count_is_dimension(self, letters, d, h, dim):
        count = sum(len(standard_bitableaux(lam, letters, d)) for lam in partitions_of(h))
        values = _all_values(letters, d, h)
        monos = sorted(set().union(*(v.terms for v in values)))
        assert count == dim
        assert rank([[v.terms.get(m, 0) for m in monos] for v in values]) == dim


class TestStraighten:
    def test_standard_is_single_term(self):
        S, T = parse_tableau("x1 x2; x1"), parse_place_tableau("1 2; 1")
        exp = straighten(bitableau_value(S, T))
        assert exp.coefficients == {Bitableau(S, T): 1}

    def test_row_swap(self):
        # proper letters anticommute inside a row biproduct
        S, T = parse_tableau("x2 x1; x1"), parse_place_tableau("1 2; 1")
        p = bitableau_value(S, T)
        exp = straighten(p)
        assert exp.coefficients == {Bitableau(parse_tableau("x1 x2; x1"), T): -1}
        assert exp.value() == p

    def test_nonstandard_places(self):
        S, T = parse_tableau("x1 x2; x2"), parse_place_tableau("1 2; 1")
        T2 = parse_place_tableau("2 1; 1")
        p = bitableau_value(S, T2)
        exp = straighten(p)
        assert exp.value() == p
        assert all(is_superstandard(b.left) and is_standard_places(b.right) for b in exp.coefficients)
        assert exp.coefficients == {Bitableau(S, T): -1}

    def test_zero(self):
        assert len(straighten(SuperPolynomial())) == 0

    @settings(max_examples=25, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_reexpansion(self, rnd: random.Random):
        letters = [a1, b1, x(1), x(2)]
        lam = rnd.choice([p for h in range(1, 5) for p in partitions_of(h) if p[0] <= 3])
        S = Tableau(tuple(tuple(rnd.choice(letters) for _ in range(p)) for p in lam))
        T = Tableau(tuple(tuple(rnd.sample(range(1, 4), p)) for p in lam))
        p = bitableau_value(S, T)
        assert straighten(p).value() == p


class TestExtractScalar:
    def test_examples(self):
        v = highest_weight_vector((2, 1), 2)
        assert extract_scalar(v, v) == 1
        assert extract_scalar(SuperPolynomial(), v) == 0
        assert extract_scalar(v.scale(12), v) == 12
        assert extract_scalar(v.scale(Fraction(-1, 3)), v) == Fraction(-1, 3)

    def test_not_proportional(self):
        v = highest_weight_vector((2, 1), 2)
        with pytest.raises(EigenvectorError):
            extract_scalar(v + P((x(1), 1)), v)
