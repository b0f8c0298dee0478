import json
import random
from fractions import Fraction

import pytest

from weylpoly import (
    DivisibilityError,
    QPoly,
    QXPoly,
    UsageError,
    XPoly,
    coeff_props,
    exact_divide,
    poly_from_json,
    poly_gcd,
    qpoly,
    qxpoly,
    xpoly,
)
from weylpoly.exactpoly import (
    NEG_INF,
    poly_to_json,
    qxpoly_from_json,
    qxpoly_to_json,
    xpoly_from_json,
    xpoly_to_json,
)

K40 = xpoly(2, 32, 50, 12)
K43 = xpoly(0, 12, 50, 32, 2)


def rand_xpoly(rng, max_deg=5, span=9):
    return xpoly(*[Fraction(rng.randint(-span, span), rng.randint(1, 4)) for _ in range(rng.randint(0, max_deg + 1))])


def rand_qxpoly(rng, max_deg=4, span=6):
    return qxpoly(
        *[
            tuple(rng.randint(-span, span) for _ in range(rng.randint(0, 3)))
            for _ in range(rng.randint(0, max_deg + 1))
        ]
    )


class TestArith:
    def test_add(self):
        assert xpoly(1, 1) + xpoly(0, 1) == xpoly(1, 2)

    def test_mul_mixed_ring(self):
        lhs = qxpoly(1, 1) * qxpoly((1,), (0, 1))
        assert lhs == qxpoly((1,), (1, 1), (0, 1))

    def test_scale(self):
        assert xpoly(0, 2) * Fraction(1, 2) == xpoly(0, 1)

    def test_kind_mismatch_raises(self):
        with pytest.raises(TypeError):
            xpoly(1, 1) + qxpoly((1,), (1,))

    def test_zero_degree_sentinel(self):
        assert XPoly().degree == NEG_INF
        assert QPoly().degree == NEG_INF
        assert QXPoly().degree == NEG_INF
        assert xpoly(5).degree == 0

    def test_ring_laws_random(self):
        rng = random.Random(20260810)
        for _ in range(60):
            a, b, c = (rand_xpoly(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
        for _ in range(40):
            a, b, c = (rand_qxpoly(rng) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c


class TestExactDivide:
    def test_tq2_by_one_plus_q(self):
        t2 = qxpoly((1, 1), (1, 2, 1), (0, 1, 1))
        want = qxpoly((1,), (1, 1), (0, 1))  # (1 + x)(1 + qx) expanded
        assert exact_divide(t2, qpoly(1, 1)) == want

    def test_linear_factor(self):
        assert exact_divide(xpoly(-1, 0, 1), xpoly(-1, 1)) == xpoly(1, 1)

    def test_non_factor_carries_remainder(self):
        with pytest.raises(DivisibilityError) as err:
            exact_divide(xpoly(1, 0, 1), xpoly(1, 1))
        assert err.value.remainder is not None
        assert not err.value.remainder.is_zero()

    def test_zero_divisor(self):
        with pytest.raises(UsageError):
            exact_divide(xpoly(1, 1), XPoly())

    def test_roundtrip_random(self):
        rng = random.Random(7)
        for _ in range(60):
            a = rand_xpoly(rng)
            b = rand_xpoly(rng)
            if b.is_zero():
                continue
            assert exact_divide(a * b, b) == a
        for _ in range(40):
            a = rand_qxpoly(rng)
            b = rand_qxpoly(rng)
            if b.is_zero():
                continue
            assert exact_divide(a * b, b) == a


class TestDerivative:
    def test_power_rule(self):
        assert xpoly(2, 3, 1).derivative() == xpoly(3, 2)

    def test_constant(self):
        assert xpoly(5).derivative() == XPoly()

    def test_coupled_family_entry(self):
        assert K40.derivative() == xpoly(32, 100, 36)


class TestGcd:
    def test_common_factor(self):
        a = xpoly(1, 1) * xpoly(1, 1)
        b = xpoly(1, 1) * xpoly(2, 1)
        assert poly_gcd(a, b) == xpoly(1, 1)

    def test_identical_entries(self):
        assert poly_gcd(K43, K43) == K43.monic()

    def test_coprime(self):
        assert poly_gcd(xpoly(1, 1), xpoly(2, 1)) == xpoly(1)

    def test_both_zero(self):
        with pytest.raises(UsageError):
            poly_gcd(XPoly(), XPoly())

    def test_divides_random(self):
        rng = random.Random(13)
        for _ in range(40):
            a, b = rand_xpoly(rng), rand_xpoly(rng)
            if a.is_zero() and b.is_zero():
                continue
            g = poly_gcd(a, b)
            if not a.is_zero():
                assert exact_divide(a, g) * g == a
            if not b.is_zero():
                assert exact_divide(b, g) * g == b


class TestEvalQ:
    def test_constant_entry(self):
        assert qxpoly((1, 1)).eval_q(1) == xpoly(2)

    def test_rank4_entry_at_one(self):
        from weylpoly.tables import T4_TABLE

        assert T4_TABLE[0].eval_q(1) == xpoly(2, 22, 22, 2)

    def test_q_zero_reduction(self):
        from weylpoly import assemble, brute_polynomial

        for n in (2, 3, 4):
            assert assemble("Dq", n).eval_q(0) == brute_polynomial("A", n - 1)

    def test_homomorphism_random(self):
        rng = random.Random(99)
        for _ in range(40):
            a, b = rand_qxpoly(rng), rand_qxpoly(rng)
            q0 = Fraction(rng.randint(-6, 6), rng.randint(1, 5))
            assert (a * b).eval_q(q0) == a.eval_q(q0) * b.eval_q(q0)
            assert (a + b).eval_q(q0) == a.eval_q(q0) + b.eval_q(q0)


class TestCoeffProps:
    def test_affine_rank3(self):
        props = coeff_props(xpoly(0, 4, 16, 4))
        assert props.nonnegative and props.symmetric and props.unimodal and props.log_concave

    def test_classical_rank2(self):
        props = coeff_props(xpoly(1, 4, 1))
        assert props.nonnegative and props.symmetric and props.unimodal and props.log_concave

    def test_gap_sequence(self):
        props = coeff_props(xpoly(1, 0, 1))
        assert not props.log_concave
        assert not props.unimodal
        assert props.symmetric

    def test_asymmetric(self):
        assert not coeff_props(xpoly(1, 2)).symmetric

    def test_span_ignores_leading_zeros(self):
        assert coeff_props(xpoly(0, 10, 28, 10)).symmetric


class TestJson:
    def test_xpoly_schema_and_roundtrip(self):
        p = xpoly(Fraction(-7, 3), 0, Fraction(10**40, 7))
        blob = xpoly_to_json(p)
        assert blob["var"] == "x"
        assert all(isinstance(v, str) for pair in blob["coeffs"] for v in pair)
        assert xpoly_from_json(json.loads(json.dumps(blob))) == p

    def test_qxpoly_schema_and_roundtrip(self):
        p = qxpoly((1, -(10**30)), (), (0, 0, 7))
        blob = qxpoly_to_json(p)
        assert blob["vars"] == ["x", "q"]
        assert qxpoly_from_json(json.loads(json.dumps(blob))) == p

    def test_generic_dispatch(self):
        for p in (xpoly(1, 2), qxpoly((1,), (2, 3))):
            assert poly_from_json(json.loads(json.dumps(poly_to_json(p)))) == p

    def test_wrong_schema(self):
        with pytest.raises(UsageError):
            xpoly_from_json({"var": "y", "coeffs": []})


class TestRendering:
    def test_single_variable(self):
        assert str(xpoly(0, 4, 16, 4)) == "4x + 16x^2 + 4x^3"
        assert str(XPoly()) == "0"
        assert str(xpoly(-1, 1)) == "-1 + x"

    def test_two_variable(self):
        t2 = qxpoly((1, 1), (1, 2, 1), (0, 1, 1))
        assert str(t2) == "(1 + q) + (1 + 2q + q^2)x + (q + q^2)x^2"
