"""Constructive norm certificates and their independent verifier.

Given a diagonal regular form q over R and a witness x with c = q_S(x) a
unit of a simple extension S/R, `certify` produces an explicit product of
values of q over R, with exponents +-1, equal to the norm of c.  The
construction follows an induction on the degree of the extension:

  1. degree 1 means S = R and the witness itself is the certificate;
  2. otherwise pass to c^(-1), so that c * q_S(x) = 1, rescale by a square
     to make c primitive, then rescale again into general position so the
     form value r of the top coordinates of x in c's power basis is a unit
     (each discarded square of a unit norm is itself certified as a
     product of two values);
  3. with p the minimal polynomial of c and x(t) the coordinate lift of
     the witness, t*q(x(t)) - 1 is exactly divisible by p; the quotient h
     has degree n-1, leading coefficient r, and h(0)*p(0) = -1;
  4. g = h/r is monic with unit constant term, T = R[t]/(g) is one degree
     smaller, and the reduced witness certifies the norm of the class u of
     t in T; the norms combine through the sign-free exact identity
     N_S(c) * r * N_T(u) = 1.

Every one of those exact identities is re-checked at every level and a
certificate is verified before it is returned.  The verifier shares
nothing with the construction beyond ring arithmetic, form evaluation and
the multiplication-matrix determinant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InternalAssertion, NotSimple, SearchExhausted, ValueNotUnit
from .extension import ExtElement, SimpleExtension
from .genpos import (
    DEFAULT_BOUND,
    DEFAULT_MAX_TRIES,
    find_general_position,
    find_primitive_scaling,
)
from .poly import Poly
from .qform import QuadraticForm, ValueFactor


@dataclass
class ReductionStep:
    """Audit record of one induction level."""

    n: int
    p: Poly
    h: Poly
    r: object
    g: Poly
    b: ExtElement
    next_witness: tuple


@dataclass(frozen=True)
class NormCertificate:
    target: object
    factors: tuple
    trace: tuple | None = None


@dataclass
class CertifyStats:
    """Counters across one or many certification runs."""

    levels: int = 0
    level_checks: int = 0
    genpos_calls: int = 0
    genpos_tries: int = 0
    genpos_exhausted: int = 0


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    failure: str | None = None

    def __bool__(self):
        return self.ok


def norm_of_value(ext: SimpleExtension, q: QuadraticForm, xs):
    """The norm of q_S(x), the quantity a certificate targets."""
    value = q.evaluate_ext(list(xs))
    if not value.is_invertible():
        raise ValueNotUnit("q_S(x) is not a unit of the extension")
    return value.norm()


def _check(condition: bool, message: str, stats: CertifyStats | None):
    if not condition:
        raise InternalAssertion(message)
    if stats is not None:
        stats.level_checks += 1


def _certify_value(ext, q, xs, rng, max_tries, bound, stats):
    """Factors multiplying to the norm of q_S(x), plus per-level records."""
    value = q.evaluate_ext(xs)
    if not value.is_invertible():
        raise ValueNotUnit("q_S(x) is not a unit of the extension")
    if ext.n == 1:
        return [ValueFactor(tuple(x.coords[0] for x in xs), 1)], []
    factors, steps = _certify_inverse(
        ext, q, value.inverse(), xs, rng, max_tries, bound, stats
    )
    return [f.flipped() for f in factors], steps


def _certify_inverse(ext, q, c, xs, rng, max_tries, bound, stats):
    """Factors multiplying to the norm of c, where c * q_S(x) = 1 and n >= 2."""
    ring = ext.ring
    n = ext.n
    _check(c * q.evaluate_ext(xs) == ext.one(), "lost the defining relation", stats)
    if stats is not None:
        stats.levels += 1

    square_factors = []

    def discard_square(b: ExtElement):
        # replacing c by c*b^2 divides the norm by N(b)^2; certify that
        # square of a unit of R and charge it with exponent -1
        for f in q.square_as_value_product(b.norm()):
            square_factors.append(f.flipped())

    if not c.is_primitive():
        b1 = find_primitive_scaling(c, rng, max_tries=max_tries, bound=bound)
        b1_inv = b1.inverse()
        c = c * b1 * b1
        xs = [x * b1_inv for x in xs]
        discard_square(b1)

    if stats is not None:
        stats.genpos_calls += 1
    try:
        witness = find_general_position(
            c, xs, q, rng, max_tries=max_tries, bound=bound
        )
    except SearchExhausted:
        if stats is not None:
            stats.genpos_exhausted += 1
        raise
    if stats is not None:
        stats.genpos_tries += witness.tries_used
    if witness.b != ext.one():
        discard_square(witness.b)
    c, xs, r = witness.c_new, list(witness.x_new), witness.r

    # coordinates of the witness in the power basis of c, read as polynomials
    columns = [x.coords_in(c) for x in xs]
    tops = tuple(col[-1] for col in columns)
    x_polys = [Poly(ring, col) for col in columns]

    p = c.minimal_polynomial()
    q_of_x = Poly.zero(ring)
    for a, xp in zip(q.diag, x_polys):
        q_of_x = q_of_x + (xp * xp).scale(a)
    f_poly = q_of_x.shift(1) - Poly.one(ring)

    h, remainder = divmod(f_poly, p)
    _check(not remainder, "t*q(x(t)) - 1 is not divisible by the minimal polynomial", stats)
    _check(h.degree == n - 1, "quotient degree is not n - 1", stats)
    _check(h.leading == r, "leading coefficient of the quotient is not the search value", stats)
    _check(
        p.constant_term * h.constant_term == -ring.one,
        "constant terms do not multiply to -1",
        stats,
    )

    g = h.scale(ring.invert(r))
    try:
        sub_ext = SimpleExtension(ring, g)
    except NotSimple as exc:
        raise InternalAssertion(f"reduced modulus is not simple: {exc}") from exc
    _check(ring.is_invertible(g.constant_term), "g(0) is not a unit", stats)

    z = [sub_ext.from_poly(xp) for xp in x_polys]
    u = sub_ext.gen()
    q_z = q.evaluate_ext(z)
    _check(u * q_z == sub_ext.one(), "u * q_T(z) is not 1 in the reduced algebra", stats)
    q_z_inv = q_z.inverse()
    ys = [zj * q_z_inv for zj in z]

    sub_factors, sub_steps = _certify_value(
        sub_ext, q, ys, rng, max_tries, bound, stats
    )

    # sign-free combine identity, checked rather than trusted
    _check(
        c.norm() * r * u.norm() == ring.one,
        "norms and the leading coefficient do not combine to 1",
        stats,
    )

    factors = [ValueFactor(tops, -1)]
    factors.extend(f.flipped() for f in sub_factors)
    factors.extend(square_factors)
    step = ReductionStep(n=n, p=p, h=h, r=r, g=g, b=witness.b, next_witness=tuple(ys))
    return factors, [step] + sub_steps


def certify(
    ext: SimpleExtension,
    q: QuadraticForm,
    xs,
    rng: random.Random | int | None = None,
    max_tries: int = DEFAULT_MAX_TRIES,
    bound: int = DEFAULT_BOUND,
    with_trace: bool = False,
    stats: CertifyStats | None = None,
) -> NormCertificate:
    """Produce a verified certificate that the norm of q_S(x) is a product
    of values of q over the base ring."""
    if q.ring.id != ext.ring.id:
        raise ValueError("form and extension have different coefficient rings")
    xs = list(xs)
    if rng is None or isinstance(rng, int):
        rng = random.Random(0 if rng is None else rng)
    factors, steps = _certify_value(ext, q, xs, rng, max_tries, bound, stats)
    cert = NormCertificate(
        target=norm_of_value(ext, q, xs),
        factors=tuple(factors),
        trace=tuple(steps) if with_trace else None,
    )
    outcome = verify(ext, q, xs, cert)
    if not outcome:
        raise InternalAssertion(f"freshly built certificate failed to verify: {outcome.failure}")
    return cert


def verify(ext: SimpleExtension, q: QuadraticForm, xs, cert: NormCertificate) -> VerifyResult:
    """Independent check of a certificate against its instance.

    Accepts iff every factor value is a unit, the factor product equals the
    certificate target exactly, and the target equals the norm of q_S(x).
    """
    ring = ext.ring
    if not ring.contains(cert.target):
        return VerifyResult(False, "target is not an element of the coefficient ring")
    product = ring.one
    for i, f in enumerate(cert.factors):
        if f.exponent not in (1, -1):
            return VerifyResult(False, f"factor {i} has exponent {f.exponent}")
        try:
            value = q.evaluate(f.vector)
        except Exception as exc:
            return VerifyResult(False, f"factor {i} cannot be evaluated: {exc}")
        if not ring.is_invertible(value):
            return VerifyResult(False, f"factor {i} value {value} is not a unit")
        product = product * (value if f.exponent == 1 else ring.invert(value))
    if product != cert.target:
        return VerifyResult(
            False, f"factor product {product} does not equal target {cert.target}"
        )
    value = q.evaluate_ext(list(xs))
    if not value.is_invertible():
        return VerifyResult(False, "instance value q_S(x) is not a unit")
    if value.norm() != cert.target:
        return VerifyResult(False, "target does not equal the norm of q_S(x)")
    return VerifyResult(True)
