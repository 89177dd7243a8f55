import random
from fractions import Fraction as F

import pytest

from zeta_relations.algebra import (
    ModPoly,
    RatLike,
    ZSeries,
    as_rat,
    series_reciprocal,
    bernoulli,
    bernoulli_via_tangent,
    kernel_basis,
    parse_rat,
    poly_eval,
    primitive_vector,
    rank,
    rat_to_str,
    tangent_numbers,
)
from zeta_relations.utils.errors import SeriesNotInvertibleError


def _random_poly(rng, degree):
    return ModPoly(tuple(F(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(degree + 1)))


class TestRationals:
    def test_canonical_strings(self):
        assert rat_to_str(F(-2, 6)) == "-1/3"
        assert rat_to_str(F(4, 2)) == "2"
        assert rat_to_str(F(0)) == "0"

    def test_parse(self):
        assert parse_rat(" -7/21 ") == F(-1, 3)

    def test_bool_rejected(self):
        with pytest.raises(TypeError):
            ModPoly.constant(True)

    def test_ratlike_forms(self):
        values: list[RatLike] = [3, F(-2, 4), "5/10"]
        assert [as_rat(v) for v in values] == [F(3), F(-1, 2), F(1, 2)]
        with pytest.raises(TypeError):
            as_rat(0.5)


class TestModPoly:
    def test_trailing_zeros_trimmed(self):
        assert ModPoly((1, 0, 0)).degree == 0
        assert ModPoly((0, 0)).degree is None
        assert ModPoly.zero().is_zero

    def test_str(self):
        c1 = ModPoly((F(1, 15), F(-1, 15), F(1, 15)))
        assert str(c1) == "1/15 - 1/15*k^2 + 1/15*k^4"

    def test_json(self):
        assert ModPoly((F(2, 3), -1, F(1, 3))).to_json() == ["2/3", "-1", "1/3"]

    def test_evaluation_is_multiplicative(self):
        rng = random.Random(7)
        for _ in range(50):
            p = _random_poly(rng, rng.randint(0, 5))
            q = _random_poly(rng, rng.randint(0, 5))
            x = F(rng.randint(-20, 20), rng.randint(1, 9))
            assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ModPoly.one() / 0


class TestZSeries:
    def test_reciprocal_of_one(self):
        one = ZSeries.constant(1, 10)
        assert one.reciprocal().nonzero_exponents() == [0]

    def test_geometric_series(self):
        s = ZSeries.from_coefficients(0, [1, -1], truncation=12)
        inv = series_reciprocal(s)
        assert inv.truncation == 12
        assert all(c == ModPoly.one() for _, c in inv.terms())

    def test_double_reciprocal(self):
        s = ZSeries.from_coefficients(0, [2, ModPoly((1, 1)), ModPoly((0, F(1, 3)))], truncation=10)
        assert s.reciprocal().reciprocal() == s

    def test_order_two_reciprocal(self):
        sn2 = ZSeries.from_coefficients(2, [1, ModPoly((F(-1, 3), F(-1, 3)))], truncation=10)
        inv = sn2.reciprocal()
        assert inv.order == -2
        assert inv.coefficient(-2) == ModPoly.one()
        product = sn2 * inv
        assert product.nonzero_exponents() == [0]

    def test_not_invertible(self):
        s = ZSeries.from_coefficients(0, [ModPoly((0, 1)), 1], truncation=6)
        with pytest.raises(SeriesNotInvertibleError, match="series not invertible"):
            s.reciprocal()

    def test_coefficient_beyond_truncation(self):
        with pytest.raises(ValueError):
            ZSeries.constant(1, 4).coefficient(6)

    def test_mixed_parity_addition(self):
        odd = ZSeries(0, (ModPoly.one(),), 3, odd=True)
        with pytest.raises(ValueError):
            odd + ZSeries.constant(1, 4)


class TestBernoulli:
    @pytest.mark.parametrize("n, expected", [(2, F(1, 6)), (4, F(-1, 30)), (6, F(1, 42))])
    def test_known_values(self, n, expected):
        assert bernoulli(n) == expected

    @pytest.mark.parametrize("n", [0, 1, 3, -2])
    def test_bad_index(self, n):
        with pytest.raises(ValueError):
            bernoulli(n)

    def test_tangent_numbers(self):
        assert tangent_numbers(5) == [1, 2, 16, 272, 7936]

    def test_two_routes_agree(self):
        for n in range(2, 65, 2):
            assert bernoulli(n) == bernoulli_via_tangent(n)


class TestLinearAlgebra:
    def test_identity_has_trivial_kernel(self):
        identity = [[int(i == j) for j in range(4)] for i in range(4)]
        assert kernel_basis(identity) == []

    def test_zero_matrix(self):
        assert kernel_basis([[0, 0, 0], [0, 0, 0]]) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]

    def test_rank(self):
        assert rank([[1, 2], [2, 4], [F(1, 2), 1]]) == 1

    def test_primitive_vector_sign(self):
        assert primitive_vector([F(4), F(-2), F(-6)]) == (-2, 1, 3)
        assert primitive_vector([0, 0]) == (0, 0)

    def test_kernel_invariant_under_row_operations(self):
        rng = random.Random(3)
        rows = [[F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(7)] for _ in range(4)]
        base = kernel_basis(rows, 7)
        factors = [F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice((-1, 1)) for _ in rows]
        scaled = [[x * f for x in row] for row, f in zip(rows, factors)]
        rng.shuffle(scaled)
        assert kernel_basis(scaled, 7) == base
        assert len(base) == 7 - rank(rows, 7)

    def test_kernel_invariant_under_row_combination(self):
        rng = random.Random(5)
        rows = [[F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(6)] for _ in range(3)]
        combined = [list(r) for r in rows]
        combined[2] = [x + F(-3, 2) * y for x, y in zip(rows[2], rows[0])]
        assert kernel_basis(combined, 6) == kernel_basis(rows, 6)
