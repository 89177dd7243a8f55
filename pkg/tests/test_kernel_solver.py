import random
from fractions import Fraction as F

import pytest

from zeta_relations.algebra import kernel_basis, mat_vec
from zeta_relations.models import OutputFormat, RelationStyle
from zeta_relations.relations import (
    RelationVector,
    assemble_for,
    format_relation,
    membership_check,
    relation_space,
    structured_kernel,
    zero_pattern_check,
)

U = (-3, 3, 0, 0, 3, 0, 3, 0, 128, -124, 0, -4)
V = (0, 0, 0, 0, -6, 6, 0, 0, -32, 31, 0, 1)
W = (-3, 0, 0, 3, -3, 0, -3, 0, -128, 124, 0, 4)


class TestRelationSpace:
    def test_first_relation(self):
        basis = relation_space(1)
        assert basis.dim == 1
        assert basis.vectors[0].t == (-2, 1, 0, 1)
        assert basis.dual_path_checked

    def test_second_space(self):
        basis = relation_space(2)
        assert basis.dim == 2
        assert membership_check((1, 0, 0, -1, -7, 8, 1, 0), 2)
        assert membership_check((-2, 1, 0, 1, 0, 0, 0, 0), 2)
        assert not membership_check((1, 0, 0, 0, 0, 0, 0, 0), 2)

    def test_third_space(self):
        assert relation_space(3).dim == 3
        for vec in (U, V, W):
            assert membership_check(vec, 3)
        rational = (-1, 1, 0, 0, 1, 0, 1, 0, F(128, 3), F(-124, 3), 0, F(-4, 3))
        assert membership_check(rational, 3)

    @pytest.mark.parametrize("m", range(1, 25))
    def test_dimension_and_pattern(self, m):
        basis = relation_space(m)
        assert basis.dim == m
        assert basis.zero_pattern_ok
        assert zero_pattern_check(basis)
        rows = assemble_for(m).scalar_form
        for v in basis.vectors:
            assert not any(mat_vec(rows, v.t))

    def test_embedding(self):
        for m in range(1, 8):
            for v in relation_space(m).vectors:
                assert membership_check(v.padded(m + 1).t, m + 1)

    def test_structured_path_agrees(self):
        for m in range(1, 7):
            matrix = assemble_for(m)
            assert structured_kernel(matrix) == [v.t for v in relation_space(m).vectors]

    def test_invariant_under_row_operations(self):
        rows = assemble_for(3).scalar_form
        rng = random.Random(11)
        factors = [F(rng.choice((-3, 2, 5)), rng.choice((1, 4, 7))) for _ in rows]
        shuffled = [[x * f for x in row] for row, f in zip(rows, factors)]
        rng.shuffle(shuffled)
        assert kernel_basis(shuffled, 12) == [v.t for v in relation_space(3).vectors]

    def test_bad_m(self):
        with pytest.raises(ValueError):
            relation_space(0)

    def test_membership_length(self):
        with pytest.raises(ValueError):
            membership_check((1, 2, 3), 1)
        assert membership_check((0, 0, 0, 0), 1)

    def test_membership_mixed_rational_inputs(self):
        assert membership_check(("-2", F(1), 0, "1"), 1)
        assert membership_check(("1", F(-1, 2), 0, F(-1, 2)), 1)
        assert not membership_check(("1/3", 0, 0, 0), 1)


class TestRelationVector:
    def test_length_checked(self):
        with pytest.raises(ValueError):
            RelationVector(1, (1, 2, 3))

    def test_padding(self):
        v = RelationVector(1, (-2, 1, 0, 1))
        assert v.padded(2).t == (-2, 1, 0, 1, 0, 0, 0, 0)
        with pytest.raises(ValueError):
            v.padded(2).padded(1)


class TestFormatting:
    def test_phi_psi_text(self):
        v = relation_space(1).vectors[0]
        assert format_relation(v) == "−2Φ₂ + Φ₂* + Ψ₂* = 0"

    def test_zeta_text(self):
        v = relation_space(1).vectors[0]
        assert format_relation(v, RelationStyle.ZETA_FIBONACCI) == "−2ζ_F(2) + ζ_F*(2) + 5ζ_L*(2) = 0"

    def test_latex(self):
        v = relation_space(1).vectors[0]
        assert format_relation(v, "phi-psi", "latex") == "-2\\Phi_{2} + \\Phi^{*}_{2} + \\Psi^{*}_{2} = 0"
        assert "\\zeta_F^*(2)" in format_relation(v, "zeta-fibonacci", "latex")

    def test_json(self):
        v = relation_space(1).vectors[0]
        doc = format_relation(v, fmt=OutputFormat.JSON)
        assert doc["coefficients"] == ["-2", "1", "0", "1"]
        assert doc["style"] == "phi-psi"

    def test_zero_vector(self):
        assert format_relation(RelationVector(1, (0, 0, 0, 0))) == "0 = 0"
