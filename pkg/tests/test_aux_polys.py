from fractions import Fraction as F

import pytest

from zeta_relations.algebra import ModPoly
from zeta_relations.series import (
    AuxFamily,
    AuxPolySet,
    check_closed_forms,
    closed_form_identities,
    kappa,
    kappa_hat,
    xi_kernel,
    xi_relation_residual,
)
from zeta_relations.utils.errors import KernelDimensionError


class TestAuxPolynomials:
    def test_theta_minus_one(self, small_aux):
        expected = ModPoly((F(1, 15), F(-16, 15), F(16, 15)))
        assert small_aux.poly(AuxFamily.THETA_MINUS, 1) == expected

    def test_theta_plus_two(self, small_aux):
        expected = ModPoly((F(2, 189), F(-22, 63), F(62, 63), F(-124, 189)))
        assert small_aux.poly(AuxFamily.THETA_PLUS, 2) == expected

    def test_lambda_one(self, small_aux):
        assert small_aux.poly(AuxFamily.LAMBDA_MINUS, 1) == ModPoly.one()
        assert small_aux.poly("lambda+", 1) == ModPoly((1, -2))

    def test_reconstructs_laurent_families(self, aux64, laurent64):
        for j in range(1, 41):
            assert aux64.theta_plus[j] + aux64.theta_minus[j] == laurent64.c[j] * 2, j
            assert aux64.theta_plus[j] - aux64.theta_minus[j] == laurent64.d[j] * 2, j
            assert aux64.lambda_plus[j] + aux64.lambda_minus[j] == laurent64.e[j] * 2, j
            assert aux64.lambda_plus[j] - aux64.lambda_minus[j] == laurent64.f[j] * 2, j

    def test_out_of_range(self, small_aux):
        with pytest.raises(ValueError):
            small_aux.poly(AuxFamily.THETA_PLUS, 0)
        with pytest.raises(ValueError):
            small_aux.alpha(1, 0)
        with pytest.raises(ValueError):
            small_aux.delta(small_aux.max_j + 2, 0)

    def test_shifted_accessors(self, small_aux):
        assert small_aux.alpha(2, 0) == F(1, 15)
        assert small_aux.gamma(2, 0) == 1
        assert small_aux.delta(2, 1) == -2


class TestCoefficientIdentities:
    def test_kappa(self):
        assert kappa(2) == F(-1)
        assert kappa(3) == F(1, 3)
        assert kappa_hat(2) == F(2, 32)
        with pytest.raises(ValueError):
            kappa(1)

    def test_all_identities_hold(self, aux64):
        for j in range(2, 42):
            results = closed_form_identities(aux64, j)
            assert len(results) == 10
            assert all(results.values()), (j, results)

    def test_check_wrapper(self, small_aux):
        assert check_closed_forms(small_aux, 2)
        with pytest.raises(ValueError):
            check_closed_forms(small_aux, 1)
        with pytest.raises(ValueError):
            check_closed_forms(small_aux, small_aux.max_j + 2)


class TestXiKernel:
    def test_first_kernel(self, small_aux):
        assert xi_kernel(small_aux, 1) == (-7, 8, 1, 0)

    def test_kernel_formula(self, aux64):
        for j in range(1, 41):
            p = 2 ** (2 * j + 1)
            assert xi_kernel(aux64, j) == (1 - p, p, 1, 0)

    def test_degenerate_kernels_rejected(self):
        one = ModPoly.one()
        flat = AuxPolySet(1, {1: one}, {1: one}, {1: one}, {1: one})
        with pytest.raises(KernelDimensionError, match="identity violated at j=1.*dimension 3"):
            xi_kernel(flat, 1)
        spread = AuxPolySet(
            1, {1: one}, {1: ModPoly((0, 1))}, {1: ModPoly((0, 0, 1))}, {1: ModPoly((0, 0, 0, 1))}
        )
        with pytest.raises(KernelDimensionError, match="dimension 0"):
            xi_kernel(spread, 1)

    def test_relation_residual(self, aux64):
        for j in range(1, 65):
            assert xi_relation_residual(aux64, j).is_zero
