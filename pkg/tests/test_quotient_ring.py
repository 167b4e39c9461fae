import random
from fractions import Fraction

import pytest

from vertalign.quotient_ring import (
    QuotientRingElement,
    from_rational,
    make_ring,
    ring_add,
    ring_mul,
    ring_neg,
    ring_one,
    ring_pow,
    ring_zero,
    root_power,
    zeta_power,
)

SPECS = [
    make_ring(1, 7),
    make_ring(2, 3),
    make_ring(5, 1),
    make_ring(6, 1),
    make_ring(6, 2),
    make_ring(7, 3),
    make_ring(8, -1),
    make_ring(12, Fraction(3, 5)),
]


def random_element(spec, rng, density=0.4):
    entries = {}
    for a in range(spec.deg_z):
        for b in range(spec.deg_u):
            if rng.random() < density:
                entries[(a, b)] = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
    return QuotientRingElement(spec, entries)


class TestMakeRing:
    def test_examples(self):
        spec = make_ring(5, 1)
        assert (spec.deg_z, spec.deg_u) == (4, 5)
        spec = make_ring(1, 7)
        assert (spec.deg_z, spec.deg_u) == (1, 1)
        spec = make_ring(6, 2)
        assert (spec.deg_z, spec.deg_u) == (2, 6)

    def test_phi_is_monic_divisor(self):
        for spec in SPECS:
            assert spec.phi_g.is_monic()
            assert spec.phi_g.degree == spec.deg_z

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            make_ring(0, 1)
        with pytest.raises(ValueError):
            make_ring(5, 0)


class TestZetaPower:
    def test_identity_cases(self):
        spec = make_ring(5, 1)
        assert zeta_power(spec, 0) == ring_one(spec)
        assert zeta_power(spec, 5) == ring_one(spec)
        assert zeta_power(spec, -5) == ring_one(spec)

    def test_reduction_in_r6(self):
        spec = make_ring(6, 1)
        # z^2 = z - 1, z^3 = -1, z^4 = -z, z^5 = 1 - z modulo z^2 - z + 1.
        assert zeta_power(spec, 2).to_text() == "-1 + z"
        assert zeta_power(spec, 3) == from_rational(spec, -1)
        assert zeta_power(spec, 4).to_text() == "-z"
        assert zeta_power(spec, 5).to_text() == "1 - z"

    def test_defining_relation_and_primitivity(self):
        for spec in SPECS:
            one = ring_one(spec)
            assert zeta_power(spec, spec.g) == one
            for m in range(1, spec.g):
                assert zeta_power(spec, m) != one

    def test_negative_exponents_wrap(self):
        spec = make_ring(7, 2)
        assert zeta_power(spec, -1) == zeta_power(spec, 6)

    def test_geometric_sum_vanishes(self):
        spec = make_ring(6, 1)
        total = ring_zero(spec)
        for m in range(6):
            total = ring_add(total, zeta_power(spec, m))
        assert total.is_zero()


class TestRootPower:
    def test_examples(self):
        assert root_power(make_ring(5, 1), 5) == ring_one(make_ring(5, 1))
        spec = make_ring(5, 3)
        assert root_power(spec, 7).to_text() == "3*u^2"
        for s in SPECS:
            assert root_power(s, 0) == ring_one(s)

    def test_defining_relation(self):
        for spec in SPECS:
            u = root_power(spec, 1)
            assert ring_pow(u, spec.g) == from_rational(spec, spec.c)

    def test_matches_repeated_multiplication(self):
        for spec in SPECS:
            u = root_power(spec, 1)
            acc = ring_one(spec)
            for k in range(2 * spec.g + 1):
                assert root_power(spec, k) == acc
                acc = ring_mul(acc, u)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            root_power(SPECS[0], -1)


class TestRingArithmetic:
    def test_zeta_times_zeta_inverse(self):
        for spec in SPECS:
            if spec.g > 1:
                product = ring_mul(zeta_power(spec, 1), zeta_power(spec, spec.g - 1))
                assert product == ring_one(spec)

    def test_spec_mismatch_rejected(self):
        with pytest.raises(ValueError):
            ring_add(ring_one(SPECS[0]), ring_one(SPECS[1]))
        with pytest.raises(ValueError):
            ring_mul(ring_one(make_ring(6, 1)), ring_one(make_ring(6, 2)))

    def test_ring_axioms_randomized(self):
        rng = random.Random(987654321)
        for spec in SPECS:
            triples = 1000 if spec.deg_z * spec.deg_u <= 16 else 150
            for _ in range(triples):
                x = random_element(spec, rng)
                y = random_element(spec, rng)
                w = random_element(spec, rng)
                assert (x + y) + w == x + (y + w)
                assert x + y == y + x
                assert x * y == y * x
                assert (x * y) * w == x * (y * w)
                assert x * (y + w) == x * y + x * w
                assert (x + ring_neg(x)).is_zero()
                assert x * ring_one(spec) == x
                assert (x * ring_zero(spec)).is_zero()

    def test_reduction_idempotence(self):
        rng = random.Random(24680)
        for spec in SPECS:
            for _ in range(50):
                x = random_element(spec, rng)
                assert QuotientRingElement(spec, x.entries()) == x

    def test_pow_consistency(self):
        rng = random.Random(1357)
        for spec in SPECS[:5]:
            x = random_element(spec, rng, density=0.5)
            acc = ring_one(spec)
            for e in range(6):
                assert ring_pow(x, e) == acc
                acc = ring_mul(acc, x)
        with pytest.raises(ValueError):
            ring_pow(ring_one(SPECS[0]), -2)

    def test_scalar_scale(self):
        spec = make_ring(6, 2)
        x = zeta_power(spec, 1) + root_power(spec, 1)
        assert x.scale(Fraction(3, 2)) == x * Fraction(3, 2)
        assert x.scale(0).is_zero()

    def test_g1_ring_collapses_to_rationals(self):
        spec = make_ring(1, 7)
        assert zeta_power(spec, 3) == ring_one(spec)
        assert root_power(spec, 1) == from_rational(spec, 7)
        x = from_rational(spec, Fraction(2, 3))
        assert ring_mul(x, root_power(spec, 1)).as_rational() == Fraction(14, 3)


class TestElementBasics:
    def test_basis_bounds_validated(self):
        spec = make_ring(6, 1)
        with pytest.raises(ValueError):
            QuotientRingElement(spec, {(2, 0): 1})  # a >= phi(6)
        with pytest.raises(ValueError):
            QuotientRingElement(spec, {(0, 6): 1})  # b >= g

    def test_coefficient_lookup(self):
        spec = make_ring(6, 2)
        x = QuotientRingElement(spec, {(1, 3): Fraction(3, 5), (0, 0): 2})
        assert x.coefficient(1, 3) == Fraction(3, 5)
        assert x.coefficient(0, 1) == 0
        assert x.entries() == {(0, 0): Fraction(2), (1, 3): Fraction(3, 5)}

    def test_rational_detection(self):
        spec = make_ring(6, 2)
        assert from_rational(spec, Fraction(5, 3)).is_rational()
        assert from_rational(spec, Fraction(5, 3)).as_rational() == Fraction(5, 3)
        assert not zeta_power(spec, 1).is_rational()
        with pytest.raises(ValueError):
            zeta_power(spec, 1).as_rational()

    def test_text_form(self):
        spec = make_ring(6, 2)
        assert ring_zero(spec).to_text() == "0"
        assert ring_one(spec).to_text() == "1"
        x = QuotientRingElement(
            spec, {(0, 1): Fraction(3, 5), (1, 0): -1, (1, 2): 2}
        )
        assert x.to_text() == "3/5*u - z + 2*z*u^2"

    def test_substitute_u_requires_matching_root(self):
        spec = make_ring(6, 1)
        x = root_power(spec, 2)
        assert x.substitute_u(1) == ring_one(spec)
        assert x.substitute_u(-1) == ring_one(spec)  # (-1)^6 = 1 too
        with pytest.raises(ValueError):
            x.substitute_u(2)

    def test_substitute_u_is_additive_and_multiplicative(self):
        spec = make_ring(5, 32)  # u -> 2 is a legal specialization
        rng = random.Random(11)
        for _ in range(25):
            x = random_element(spec, rng)
            y = random_element(spec, rng)
            assert (x + y).substitute_u(2) == x.substitute_u(2) + y.substitute_u(2)
            assert (x * y).substitute_u(2) == x.substitute_u(2) * y.substitute_u(2)
