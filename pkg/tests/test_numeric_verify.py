import pytest
from mpmath import mpf, nstr

from zeta_relations.models import SeriesKind
from zeta_relations.numeric import (
    check_closed_forms_numeric,
    check_fib8,
    check_lemma54,
    check_lemma54_points,
    gen_terms,
    jacobi_fn,
    make_context,
    nome_to_elliptic,
    relation_residual,
    resolve_sequence,
    series_values,
    sum_series,
    verify_relations,
)
from zeta_relations.utils.errors import PoleProximityError, SeriesUndefinedError, ZetaRelationsError


class TestSequences:
    def test_fibonacci_terms(self):
        terms = gen_terms(resolve_sequence("fibonacci"), 10)
        assert terms.u[:7] == [0, 1, 1, 2, 3, 5, 8]
        assert terms.v[:6] == [2, 1, 3, 4, 7, 11]
        assert terms.n_max == 10

    def test_pell_registry(self):
        seq = resolve_sequence("pell")
        assert seq.trace == 2
        assert gen_terms(seq, 5).u == [0, 1, 2, 5, 12, 29]

    def test_selectors(self):
        assert resolve_sequence("trace=3").discriminant == 13
        seq = resolve_sequence("beta=-0.25")
        assert not seq.exact
        ctx = make_context(30)
        assert seq.beta(ctx) == mpf("-0.25")

    @pytest.mark.parametrize("selector", ["trace=0", "trace=x", "beta=1.5", "beta=0", "beta=abc", "lucas-ish"])
    def test_bad_selectors(self, selector):
        with pytest.raises(ValueError):
            resolve_sequence(selector)

    def test_decimal_beta_needs_context(self):
        with pytest.raises(ValueError):
            gen_terms(resolve_sequence("beta=0.5"), 4)

    def test_undefined_series_error_type(self):
        assert issubclass(SeriesUndefinedError, ValueError)
        assert issubclass(SeriesUndefinedError, ZetaRelationsError)


class TestSummation:
    def test_reciprocal_fibonacci_squares(self):
        value = sum_series(resolve_sequence("fibonacci"), 1, SeriesKind.PHI, 40)
        assert nstr(value.value * 5, 9) == "2.42632075"

    def test_first_relation_numerically(self):
        values = series_values(resolve_sequence("fibonacci"), 1, 60)
        assert relation_residual((-2, 1, 0, 1), 1, values) < mpf(10) ** -55

    def test_tail_bound_is_small(self):
        value = sum_series(resolve_sequence("trace=2"), 2, "psi*", 50)
        assert value.tail_bound < mpf(10) ** -50
        assert value.guard_digits >= 10

    def test_bad_arguments(self):
        seq = resolve_sequence("fibonacci")
        with pytest.raises(ValueError):
            sum_series(seq, 0, SeriesKind.PHI, 40)
        with pytest.raises(ValueError):
            sum_series(seq, 1, SeriesKind.PHI, 5)


class TestElliptic:
    @pytest.mark.parametrize("q", ["0.1", "0.25", "0.5", "0.3819660112"])
    def test_nome_round_trip(self, q):
        ectx = nome_to_elliptic(q, 100)
        assert ectx.roundtrip_residual < mpf(10) ** -90
        assert abs(ectx.k2 + ectx.kp ** 2 - 1) < mpf(10) ** -90

    def test_fibonacci_nome(self):
        ctx = make_context(60)
        beta = resolve_sequence("fibonacci").beta(ctx)
        ectx = nome_to_elliptic(beta * beta, 60, ctx=ctx)
        assert 0 < ectx.k < 1
        assert ectx.E < ectx.K

    def test_small_nome(self):
        ectx = nome_to_elliptic("1e-30", 60)
        assert abs(ectx.K - ectx.ctx.pi / 2) < mpf(10) ** -10

    @pytest.mark.parametrize("q", ["0", "1", "-0.2"])
    def test_bad_nome(self, q):
        with pytest.raises(ValueError):
            nome_to_elliptic(q, 30)

    def test_circular_limit(self):
        values = jacobi_fn("0.7", 0, 50)
        ctx = values.ctx
        assert abs(values.sn - ctx.sin(ctx.mpf("0.7"))) < mpf(10) ** -45
        assert abs(values.dn - 1) < mpf(10) ** -45

    def test_quarter_period(self):
        ctx = make_context(50)
        K = ctx.ellipk(ctx.mpf("0.5"))
        values = jacobi_fn(K, "0.5", 50, ctx=ctx)
        assert abs(values.sn - 1) < mpf(10) ** -45
        assert all(r < mpf(10) ** -45 for r in values.pythagorean_residuals())

    def test_pole(self):
        with pytest.raises(PoleProximityError, match="argument near pole"):
            jacobi_fn(0, "0.5", 30).ns2

    @pytest.mark.parametrize("z, k2", [("0.7", 0), (complex(0.3, 0.2), "0.5"), ("1.1", "0.9")])
    def test_doubling_identity(self, z, k2):
        assert check_lemma54(z, k2, 100) < mpf(10) ** -90

    def test_random_points(self):
        points, _ = check_lemma54_points(points=20, seed=3, precision=100)
        assert len(points) == 20
        assert points[0].k2 == 0.0
        assert all(p.passed and p.residual < mpf(10) ** -90 for p in points)


class TestCertification:
    @pytest.mark.parametrize("precision", [50, 100])
    def test_fib8(self, precision):
        assert check_fib8(precision) < mpf(10) ** (10 - precision)

    def test_fib8_needs_precision(self):
        with pytest.raises(ValueError):
            check_fib8(20)

    def test_closed_forms(self):
        checks, tol = check_closed_forms_numeric(6, precision=80)
        assert len(checks) == 24
        assert all(c.passed for c in checks), [(c.kind, c.s) for c in checks if not c.passed]

    def test_closed_forms_other_sequence(self):
        checks, _ = check_closed_forms_numeric(3, "trace=3", precision=50)
        assert all(c.passed for c in checks)

    @pytest.mark.parametrize("m", range(1, 9))
    def test_relations_on_fibonacci(self, m):
        report = verify_relations(m, precision=60)
        assert report.passed
        assert len(report.residuals) == m
        assert all(r.residual < mpf(10) ** -50 for r in report.residuals)

    @pytest.mark.parametrize("selector", ["pell", "beta=0.3", "beta=-0.4"])
    def test_relations_on_other_sequences(self, selector):
        assert verify_relations(3, selector, precision=50).passed
