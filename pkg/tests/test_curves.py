from fractions import Fraction

import pytest

from vertalign.combinatorics import lucas_coeff, lucas_row
from vertalign.curves import (
    RingPolynomial,
    build_source,
    build_target,
    coefficient_facts,
    pullback_rhs,
    table_rows,
    table_text,
    verify_morphism,
)
from vertalign.lockwood import lockwood_rhs
from vertalign.quotient_ring import (
    make_ring,
    ring_one,
    ring_pow,
    ring_zero,
    root_power,
    zeta_power,
)


class TestBuildSource:
    @pytest.mark.parametrize(
        "g, c, text",
        [
            (5, 1, "y^2 = x^11 + x"),
            (6, 1, "y^2 = x^13 + x"),
            (1, 1, "y^2 = x^3 + x"),
            (3, Fraction(3, 5), "y^2 = x^7 + 3/5*x"),
        ],
    )
    def test_equations(self, g, c, text):
        curve = build_source(make_ring(g, c))
        assert curve.equation_text() == text

    def test_structure(self):
        spec = make_ring(7, -2)
        f = build_source(spec).f
        assert f.degree == 15
        nonzero = [e for e in range(16) if not f.coefficient(e).is_zero()]
        assert nonzero == [1, 15]
        assert f.coefficient(15) == ring_one(spec)
        assert f.coefficient(1).as_rational() == -2


class TestBuildTarget:
    def test_example_g5(self):
        curve = build_target(make_ring(5, 1), 0)
        assert curve.equation_text() == "y^2 = x^5 - 5*x^3 + 5*x"

    def test_example_g6(self):
        curve = build_target(make_ring(6, 1), 0)
        assert curve.equation_text() == "y^2 = x^6 - 6*x^4 + 9*x^2 - 2"

    def test_g11_generic_twist_structure(self):
        # Coefficient of x^{11-2k} must be (-1)^k T(11,k) zeta^k u^k.
        spec = make_ring(11, 1)
        f = build_target(spec, 1).f
        expected_magnitudes = (1, 11, 44, 77, 55, 11)
        for k in range(6):
            expected = (zeta_power(spec, k) * root_power(spec, k)).scale(
                (-1) ** k * expected_magnitudes[k]
            )
            assert f.coefficient(11 - 2 * k) == expected

    def test_coefficient_construction_rule(self):
        for g, c, i in [(4, 2, 0), (9, Fraction(3, 5), 1), (12, -1, 1)]:
            spec = make_ring(g, c)
            f = build_target(spec, i).f
            for k in range(g // 2 + 1):
                expected = (zeta_power(spec, i * k) * root_power(spec, k)).scale(
                    (-1) ** k * lucas_coeff(g, k)
                )
                assert f.coefficient(g - 2 * k) == expected

    def test_parity_sparsity_and_normalization(self):
        for g, c, i in [(8, 1, 0), (9, 2, 1), (14, Fraction(3, 5), 1), (1, 5, 0)]:
            spec = make_ring(g, c)
            f = build_target(spec, i).f
            assert f.degree == g
            assert f.coefficient(g) == ring_one(spec)
            if g >= 1:
                assert f.coefficient(g - 1).is_zero()
            live = {g - 2 * k for k in range(g // 2 + 1)}
            for e in range(g + 1):
                if e not in live:
                    assert f.coefficient(e).is_zero()

    def test_rejects_bad_twist_index(self):
        spec = make_ring(5, 1)
        for bad in (-1, 2, 5):
            with pytest.raises(ValueError):
                build_target(spec, bad)
            with pytest.raises(ValueError):
                pullback_rhs(spec, bad)


class TestPullback:
    @pytest.mark.parametrize(
        "g, c, text",
        [
            (5, 1, "x^11 + x"),
            (6, 1, "x^13 + x"),
            (2, 1, "x^5 + x"),
        ],
    )
    def test_examples(self, g, c, text):
        assert pullback_rhs(make_ring(g, c), 0).to_text() == text

    def test_equals_source_polynomial(self):
        for g, c, i in [(3, 2, 1), (8, Fraction(3, 5), 0), (13, -1, 1)]:
            spec = make_ring(g, c)
            assert pullback_rhs(spec, i) == build_source(spec).f

    def test_substitution_into_bivariate_identity(self):
        # The pullback is literally x * L(x^2, w) where L is the expanded
        # two-variable identity and w = zeta^i c^{1/g}; rebuild it that way
        # from the independent bivariate expansion and compare.
        for g, c, i in [(2, 1, 0), (5, 1, 1), (7, Fraction(3, 5), 1), (10, 2, 0)]:
            spec = make_ring(g, c)
            w = zeta_power(spec, i) * root_power(spec, 1)
            rebuilt = [ring_zero(spec)] * (2 * g + 2)
            for (a, b), coeff in lockwood_rhs(g).terms().items():
                rebuilt[2 * a + 1] = rebuilt[2 * a + 1] + ring_pow(w, b).scale(coeff)
            assert RingPolynomial(spec, tuple(rebuilt)) == pullback_rhs(spec, i)


class TestVerifyMorphism:
    @pytest.mark.parametrize(
        "g, c, i",
        [
            (5, 1, 0),
            (6, 1, 0),
            (11, 1, 1),
            (7, 3, 1),
            (1, 1, 0),
            (2, Fraction(-3, 7), 1),
        ],
    )
    def test_holds(self, g, c, i):
        report = verify_morphism(make_ring(g, c), i)
        assert report.holds
        assert report.residual.is_zero()
        assert report.x_map_nonconstant

    def test_report_carries_equations(self):
        report = verify_morphism(make_ring(6, 1), 0)
        assert report.source.equation_text() == "y^2 = x^13 + x"
        assert report.target.equation_text() == "y^2 = x^6 - 6*x^4 + 9*x^2 - 2"
        assert report.pullback == report.source.f


class TestCoefficientFacts:
    @pytest.mark.parametrize(
        "g, second, last, last_exponent",
        [
            (10, -10, -2, 0),
            (9, -9, 9, 1),
            (8, -8, 2, 0),
            (2, -2, -2, 0),
            (3, -3, -3, 1),
        ],
    )
    def test_closed_forms(self, g, second, last, last_exponent):
        facts = coefficient_facts(g)
        assert (facts.second, facts.last, facts.last_exponent) == (
            second,
            last,
            last_exponent,
        )

    def test_agrees_with_extracted_coefficients(self):
        for g in range(2, 61):
            facts = coefficient_facts(g)
            spec = make_ring(g, 1)
            f = build_target(spec, 0).f
            assert f.coefficient(g - 2) == root_power(spec, 1).scale(facts.second)
            k_last = g // 2 if g % 2 == 0 else (g - 1) // 2
            assert f.coefficient(facts.last_exponent) == root_power(spec, k_last).scale(
                facts.last
            )

    def test_rejects_small_g(self):
        for bad in (1, 0, -2):
            with pytest.raises(ValueError):
                coefficient_facts(bad)


class TestUnitRootSpecialization:
    def test_c1_i0_coefficients_are_signed_lucas_row(self):
        for g in range(1, 31):
            spec = make_ring(g, 1)
            f = build_target(spec, 0).f.substitute_u(1)
            row = lucas_row(g).coefficients
            for k in range(g // 2 + 1):
                value = f.coefficient(g - 2 * k).as_rational()
                assert value == (-1) ** k * row[k]


class TestTable:
    def test_row_texts(self):
        rows = {row.g: row for row in table_rows(5, 11)}
        assert rows[5].equation_text() == "y^2 = x^5 - 5*zeta^i*x^3 + 5*zeta^(2i)*x"
        assert rows[7].equation_text() == (
            "y^2 = x^7 - 7*zeta^i*x^5 + 14*zeta^(2i)*x^3 - 7*zeta^(3i)*x"
        )
        assert rows[10].equation_text() == (
            "y^2 = x^10 - 10*zeta^i*x^8 + 35*zeta^(2i)*x^6 - 50*zeta^(3i)*x^4"
            " + 25*zeta^(4i)*x^2 - 2*zeta^(5i)"
        )

    def test_g1_single_term(self):
        assert table_rows(1, 1)[0].equation_text() == "y^2 = x"

    def test_entries_match_lucas_rows(self):
        for row in table_rows(1, 25):
            coeffs = lucas_row(row.g).coefficients
            assert [e.magnitude for e in row.entries] == list(coeffs)
            assert [e.sign for e in row.entries] == [(-1) ** k for k in range(len(coeffs))]
            assert [e.zeta_exp for e in row.entries] == list(range(len(coeffs)))
            assert [e.x_exp for e in row.entries] == [
                row.g - 2 * k for k in range(len(coeffs))
            ]

    def test_text_block(self):
        text = table_text(table_rows(5, 6))
        lines = text.splitlines()
        assert lines[0].startswith("g")
        assert lines[1].startswith("5")
        assert "x^6 - 6*zeta^i*x^4" in lines[2]

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            table_rows(0, 5)
        with pytest.raises(ValueError):
            table_rows(7, 5)
