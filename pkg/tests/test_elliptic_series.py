from fractions import Fraction as F

import pytest

from zeta_relations.algebra import ModPoly
from zeta_relations.series import (
    build_laurent_table,
    build_trig_table,
    cdef_combination,
    check_cdef_identity,
    doubling_identity_residual,
    glaisher_series,
    sn_ode_residual,
    sn_series,
)


class TestSnSeries:
    def test_leading_coefficients(self):
        sn = sn_series(6)
        assert sn.truncation == 7
        assert sn.coefficient(1) == ModPoly.one()
        assert sn.coefficient(3) == ModPoly((F(-1, 6), F(-1, 6)))
        assert sn.coefficient(5) == ModPoly((F(1, 120), F(14, 120), F(1, 120)))

    @pytest.mark.parametrize("bad", [0, 1, 5])
    def test_bad_truncation(self, bad):
        with pytest.raises(ValueError):
            sn_series(bad)

    def test_differential_equation(self):
        assert sn_ode_residual(40) == []


class TestGlaisherSquares:
    def test_ns2_times_sn2(self):
        series = glaisher_series(10)
        product = series.ns2 * series.sn2
        assert product.nonzero_exponents() == [0]
        assert product.coefficient(0) == ModPoly.one()

    def test_ns2_leading_terms(self):
        ns2 = glaisher_series(3).ns2
        assert ns2.coefficient(-2) == ModPoly.one()
        assert ns2.coefficient(0) == ModPoly((F(1, 3), F(1, 3)))

    def test_doubling_identity(self):
        assert doubling_identity_residual(16) == []

    def test_bad_depth(self):
        with pytest.raises(ValueError):
            glaisher_series(0)


class TestLaurentTable:
    def test_first_rows(self, small_table):
        assert small_table.c[1] == ModPoly((F(1, 15), F(-1, 15), F(1, 15)))
        assert small_table.d[1] == ModPoly((0, 1, -1))
        assert small_table.e[1] == ModPoly((1, -1))
        assert small_table.f[1] == ModPoly((0, -1))

    def test_second_rows(self, small_table):
        assert small_table.d[2] == ModPoly((0, F(-1, 3), 1, F(-2, 3)))
        assert small_table.e[2] == ModPoly((F(2, 3), -1, F(1, 3)))
        assert small_table.f[2] == ModPoly((0, F(1, 3), F(1, 3)))

    def test_unknown_family(self, small_table):
        with pytest.raises(ValueError):
            small_table.family("g")
        assert small_table.family("c") is small_table.c

    def test_cdef_identity(self, laurent64):
        for j in range(1, 65):
            assert check_cdef_identity(laurent64, j), j

    def test_cdef_out_of_range(self, small_table):
        with pytest.raises(ValueError):
            cdef_combination(small_table, 5)

    def test_degree_bounds(self, laurent64):
        for j in range(1, 33):
            assert laurent64.c[j].degree <= j + 1
            assert laurent64.d[j].degree <= j + 1
            assert laurent64.e[j].degree <= j
            assert laurent64.f[j].degree <= j

    def test_circular_limit(self, laurent64, trig64):
        for j in range(1, 21):
            assert laurent64.c[j].evaluate(0) == trig64.a[j]
            assert laurent64.e[j].evaluate(0) == trig64.b[j]
            assert laurent64.d[j].evaluate(0) == 0
            assert laurent64.f[j].evaluate(0) == 0

    def test_cached(self):
        assert build_laurent_table(4) is build_laurent_table(4)


class TestTrigTable:
    def test_values(self):
        trig = build_trig_table(2)
        assert [trig.a[j] for j in range(3)] == [F(1, 3), F(1, 15), F(2, 189)]
        assert [trig.b[j] for j in range(3)] == [1, 1, F(2, 3)]

    def test_negative_depth(self):
        with pytest.raises(ValueError):
            build_trig_table(-1)
