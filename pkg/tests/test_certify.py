import random
from fractions import Fraction

import pytest

from normcert.certify import (
    CertifyStats,
    NormCertificate,
    certify,
    norm_of_value,
    verify,
)
from normcert.errors import ValueNotUnit
from normcert.extension import SimpleExtension
from normcert.instances import random_instance, run_random_suite
from normcert.poly import Poly
from normcert.qform import QuadraticForm, ValueFactor
from normcert.rings import QQ, QQ_LOCAL_X

from oracles import naive_det

F = Fraction


def qq_ext(*coeffs):
    return SimpleExtension(QQ, Poly(QQ, coeffs))


@pytest.fixture
def gauss_instance():
    ext = qq_ext(1, 0, 1)
    q = QuadraticForm(QQ, [1, 1])
    xs = [ext.element([F(3, 2), F(1, 2)]), ext.element([F(1, 2), F(-1, 2)])]
    return ext, q, xs


@pytest.fixture
def hyperbolic_instance():
    ext = qq_ext(-2, 0, 1)
    q = QuadraticForm(QQ, [1, -1])
    xs = [ext.element([F(1, 2), F(1, 2)]), ext.element([F(-1, 2), F(1, 2)])]
    return ext, q, xs


def factor_product(q, cert):
    acc = QQ.one
    for f in cert.factors:
        v = q.evaluate(f.vector)
        acc = acc * (v if f.exponent == 1 else QQ.invert(v))
    return acc


class TestBaseCase:
    def test_degree_one_single_factor(self):
        ext = qq_ext(-1, 1)  # t - 1, so S = Q
        q = QuadraticForm(QQ, [1])
        xs = [ext.element([3])]
        cert = certify(ext, q, xs)
        assert cert.target == 9
        assert len(cert.factors) == 1
        assert cert.factors[0] == ValueFactor((F(3),), 1)

    def test_degree_one_norm_is_value(self):
        ext = qq_ext(-5, 1)
        q = QuadraticForm(QQ, [2, 3])
        xs = [ext.element([2]), ext.element([1])]
        cert = certify(ext, q, xs)
        assert cert.target == 11 == norm_of_value(ext, q, xs)


class TestWorkedExamples:
    def test_gauss_target_five(self, gauss_instance):
        ext, q, xs = gauss_instance
        value = q.evaluate_ext(xs)
        assert value == ext.element([2, 1])
        # the norm oracle is the multiplication-matrix determinant
        assert naive_det(value.mult_matrix()) == 5
        cert = certify(ext, q, xs, rng=0)
        assert cert.target == 5
        assert verify(ext, q, xs, cert)
        assert factor_product(q, cert) == 5
        # and 5 is visibly a value of the form: q(1, 2) = 5
        assert q.evaluate([1, 2]) == 5

    def test_hyperbolic_target_minus_two(self, hyperbolic_instance):
        ext, q, xs = hyperbolic_instance
        value = q.evaluate_ext(xs)
        assert value == ext.gen()
        assert naive_det(value.mult_matrix()) == -2
        cert = certify(ext, q, xs, rng=0)
        assert cert.target == -2
        assert verify(ext, q, xs, cert)
        assert factor_product(q, cert) == -2

    def test_local_ring_scalar_witness(self):
        ring = QQ_LOCAL_X
        one_plus_x = ring.element((1, 1))
        ext = SimpleExtension(ring, Poly(ring, [-one_plus_x, ring.zero, ring.one]))
        q = QuadraticForm(ring, [ring.one])
        xs = [ext.gen()]
        assert norm_of_value(ext, q, xs) == one_plus_x * one_plus_x
        cert = certify(ext, q, xs, rng=0)
        assert cert.target == one_plus_x * one_plus_x
        assert verify(ext, q, xs, cert)

    def test_local_ring_hyperbolic_needs_sampling(self):
        # the b = 1 probe fails at the first level, so the certification
        # exercises the residue search and the exact lift over the local ring
        ring = QQ_LOCAL_X
        ext = SimpleExtension(ring, Poly(ring, [-2, 0, 1]))
        q = QuadraticForm(ring, [1, -1])
        xs = [
            ext.element([F(1, 2), F(1, 2)]),
            ext.element([F(-1, 2), F(1, 2)]),
        ]
        stats = CertifyStats()
        cert = certify(ext, q, xs, rng=0, stats=stats)
        assert cert.target == ring.from_int(-2)
        assert verify(ext, q, xs, cert)
        assert stats.genpos_tries > stats.genpos_calls  # sampling happened


class TestVerifier:
    def test_accepts_round_trip(self, gauss_instance):
        ext, q, xs = gauss_instance
        cert = certify(ext, q, xs, rng=0)
        assert verify(ext, q, xs, cert).ok

    def test_rejects_flipped_exponent(self, gauss_instance):
        ext, q, xs = gauss_instance
        cert = certify(ext, q, xs, rng=0)
        tampered = NormCertificate(
            target=cert.target,
            factors=(cert.factors[0].flipped(),) + cert.factors[1:],
        )
        outcome = verify(ext, q, xs, tampered)
        assert not outcome.ok
        assert "product" in outcome.failure

    def test_rejects_isotropic_factor(self, hyperbolic_instance):
        ext, q, xs = hyperbolic_instance
        cert = certify(ext, q, xs, rng=0)
        tampered = NormCertificate(
            target=cert.target,
            factors=cert.factors + (ValueFactor((F(1), F(1)), 1),),
        )
        outcome = verify(ext, q, xs, tampered)
        assert not outcome.ok
        assert "unit" in outcome.failure

    def test_rejects_wrong_target(self, gauss_instance):
        ext, q, xs = gauss_instance
        cert = certify(ext, q, xs, rng=0)
        tampered = NormCertificate(target=F(7), factors=cert.factors)
        outcome = verify(ext, q, xs, tampered)
        assert not outcome.ok

    def test_rejects_non_unit_instance_value(self, gauss_instance):
        ext, q, _ = gauss_instance
        bad_xs = [ext.zero(), ext.zero()]
        cert = NormCertificate(target=F(1), factors=())
        outcome = verify(ext, q, bad_xs, cert)
        assert not outcome.ok


class TestStructure:
    def test_value_must_be_unit(self, hyperbolic_instance):
        ext, q, _ = hyperbolic_instance
        with pytest.raises(ValueNotUnit):
            certify(ext, q, [ext.one(), ext.one()])  # q(1,1) = 0

    def test_trace_reduction_chain(self):
        rng = random.Random(31)
        for _ in range(15):
            n = rng.randint(2, 5)
            m = rng.randint(1, 3)
            inst = random_instance(QQ, rng, n, m)
            cert = certify(inst.ext, inst.q, inst.xs, rng=rng, with_trace=True)
            # depth is exactly n - 1 and degrees descend one at a time
            assert len(cert.trace) == n - 1
            for level, step in enumerate(cert.trace):
                expected_degree = n - level
                assert step.n == expected_degree
                assert step.p.degree == expected_degree
                assert step.p.is_monic()
                assert step.h.degree == expected_degree - 1
                assert step.g.degree == expected_degree - 1
                assert step.g.is_monic()
                # leading coefficient of h is the search value r
                assert step.h.leading == step.r
                assert QQ.is_invertible(step.r)
                assert step.h == step.g.scale(step.r)
                # evaluating the division identity at t = 0
                assert step.p.constant_term * step.h.constant_term == -1
                assert QQ.is_invertible(step.g.constant_term)

    def test_group_closure(self, gauss_instance):
        # certificates for c and for c^(-1) have reciprocal targets
        ext, q, xs = gauss_instance
        c = q.evaluate_ext(xs)
        cert = certify(ext, q, xs, rng=0)
        cinv = c.inverse()
        xs_inv = [x * cinv for x in xs]
        assert q.evaluate_ext(xs_inv) == cinv
        cert_inv = certify(ext, q, xs_inv, rng=0)
        assert cert.target * cert_inv.target == 1

    def test_determinism(self, gauss_instance):
        ext, q, xs = gauss_instance
        a = certify(ext, q, xs, rng=5, with_trace=True)
        b = certify(ext, q, xs, rng=5, with_trace=True)
        assert a == b

    def test_stats_collection(self):
        rng = random.Random(32)
        stats = CertifyStats()
        inst = random_instance(QQ, rng, 4, 2)
        certify(inst.ext, inst.q, inst.xs, rng=rng, stats=stats)
        assert stats.levels == 3
        assert stats.genpos_calls == 3
        assert stats.genpos_tries >= 3
        assert stats.genpos_exhausted == 0
        assert stats.level_checks >= 7 * stats.levels


class TestRandomRoundTrips:
    def test_rational_round_trips(self):
        result = run_random_suite(QQ, count=30, seed=33)
        assert result.ok, result.failures
        assert result.stats.genpos_exhausted == 0

    def test_local_round_trips(self):
        result = run_random_suite(
            QQ_LOCAL_X, count=5, seed=34, n_choices=(2, 3), m_choices=(1, 2)
        )
        assert result.ok, result.failures

    def test_oracle_agreement(self):
        rng = random.Random(35)
        for _ in range(10):
            inst = random_instance(QQ, rng, rng.randint(2, 4), rng.randint(1, 3))
            cert = certify(inst.ext, inst.q, inst.xs, rng=rng)
            value = inst.q.evaluate_ext(inst.xs)
            assert cert.target == naive_det(value.mult_matrix())


class TestNormOfValue:
    def test_worked_example(self, gauss_instance):
        ext, q, xs = gauss_instance
        assert norm_of_value(ext, q, xs) == 5

    def test_scalar_witness_norm_is_a_power(self):
        # a witness shaped like the first basis vector gives q_S(x) = a_1,
        # a scalar, whose norm is a_1^n
        for n in (2, 3, 4):
            ext = qq_ext(*([3] + [0] * (n - 1) + [1]))
            q = QuadraticForm(QQ, [5, 7])
            xs = [ext.one(), ext.zero()]
            assert q.evaluate_ext(xs) == ext.scalar(5)
            assert norm_of_value(ext, q, xs) == F(5) ** n

    def test_rejects_non_unit(self, hyperbolic_instance):
        ext, q, _ = hyperbolic_instance
        with pytest.raises(ValueNotUnit):
            norm_of_value(ext, q, [ext.one(), ext.one()])
