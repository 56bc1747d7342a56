"""General-position machinery: the scaling system matrix and the randomized
searches that realize its non-empty Zariski-open target sets.

For a primitive c and a unit b, the system matrix A has as column j the
coordinates of c^j * b^(2j+1) in the power basis of c; writing x*b^(-1) in
the power basis of c*b^2 and clearing b turns the coordinate problem into
the linear system A v = coords(x).  det A is a unit exactly when c*b^2 is
primitive, and Cramer's rule makes the top coordinate of x*b^(-1) equal to
det(A with its last column replaced by coords(x)) / det(A).

Both searches probe b = 1 first, then sample integer coordinates in
[-B, B] over the residue field (B doubles every 8 failures), lift the hit
coordinatewise, and re-verify every claimed property exactly over the ring
before returning.  Over an infinite residue field of characteristic 0 the
target sets are non-empty open, so failure within the try budget signals a
bug or an unsupported ring rather than bad luck.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass

from . import linalg
from .errors import (
    InternalAssertion,
    NotInvertible,
    NotPrimitive,
    SearchExhausted,
    ValueNotUnit,
)
from .extension import ExtElement, SimpleExtension
from .qform import QuadraticForm
from .rings import sample_residue

logger = logging.getLogger("normcert.genpos")

DEFAULT_MAX_TRIES = 64
DEFAULT_BOUND = 3
_BOUND_DOUBLING_PERIOD = 8


@dataclass(frozen=True)
class GenPosWitness:
    """A verified general-position scaling: c_new = c*b^2 primitive,
    x_new = x*b^(-1), and r = q(top coordinates of x_new in basis of c_new)
    a unit of the coefficient ring."""

    b: ExtElement
    c_new: ExtElement
    x_new: tuple
    r: object
    tries_used: int


def system_matrix(c: ExtElement, b: ExtElement):
    """The n x n matrix with column j = coords of c^j * b^(2j+1) in c's power basis."""
    if not c.is_primitive():
        raise NotPrimitive("system matrix needs a primitive element")
    if not b.is_invertible():
        raise NotInvertible("system matrix needs an invertible scaling")
    ext = c.ext
    ring = ext.ring
    step = c * b * b
    cols = []
    w = b
    for _ in range(ext.n):
        cols.append(w.coords)
        w = w * step
    raw = linalg.transpose(cols)
    # one batched solve against the powers matrix of c
    sol = linalg.solve_columns(ring, c.powers_matrix(), raw)
    out = linalg.transpose(sol)
    for row in out:
        for v in row:
            if not ring.contains(v):
                raise InternalAssertion("system matrix entry left the ring")
    return out


def system_determinants(c: ExtElement, b: ExtElement, xs):
    """det A together with, per witness coordinate, det of A with its last
    column replaced by that coordinate's power-basis coordinates."""
    a = system_matrix(c, b)
    ring = c.ext.ring
    det_a = linalg.det(ring, a)
    dets = []
    for x in xs:
        col = x.coords_in(c)
        replaced = [row[:-1] + [col[i]] for i, row in enumerate(a)]
        dets.append(linalg.det(ring, replaced))
    return det_a, dets


def last_column_minors(c: ExtElement, b: ExtElement):
    """The n minors of the system matrix along its last column, ordered so
    that entry i is the minor complementary to row n-1-i; expanding gives
    det(A_repl) = sum_i (-1)^i * minors[i] * coords(x)[n-1-i]."""
    ext = c.ext
    ring = ext.ring
    if ext.n == 1:
        if not c.is_primitive():
            raise NotPrimitive("system matrix needs a primitive element")
        if not b.is_invertible():
            raise NotInvertible("system matrix needs an invertible scaling")
        return [ring.one]
    a = system_matrix(c, b)
    n = ext.n
    return [linalg.det(ring, linalg.minor(a, n - 1 - i, n - 1)) for i in range(n)]


def _random_unit(rext: SimpleExtension, rng: random.Random, bound: int):
    """A random invertible element of the reduced algebra with integer
    coordinates in [-bound, bound], or None when the draw is singular."""
    k = rext.ring
    coords = [k.element(sample_residue(rng, bound)) for _ in range(rext.n)]
    cand = rext.element(coords)
    return cand if cand.is_invertible() else None


def _lift_witness(ext: SimpleExtension, bbar: ExtElement) -> ExtElement:
    if ext.residue_extension() is ext:
        return bbar
    return bbar.lift_to(ext)


def find_primitive_scaling(
    c: ExtElement,
    rng: random.Random,
    max_tries: int = DEFAULT_MAX_TRIES,
    bound: int = DEFAULT_BOUND,
) -> ExtElement:
    """A unit b such that c*b^2 is primitive, for any unit c.

    Probes b = 1, then searches on residues and lifts.
    """
    ext = c.ext
    if not c.is_invertible():
        raise NotInvertible("primitive scaling needs an invertible element")
    if c.is_primitive():
        return ext.one()
    rext = ext.residue_extension()
    cbar = c.reduce()
    tries = 1
    b_bound = bound
    while tries < max_tries:
        tries += 1
        if tries % _BOUND_DOUBLING_PERIOD == 0:
            b_bound *= 2
        bbar = _random_unit(rext, rng, b_bound)
        if bbar is None:
            continue
        if not (cbar * bbar * bbar).is_primitive():
            continue
        b = _lift_witness(ext, bbar)
        if not (c * b * b).is_primitive():
            raise InternalAssertion("primitivity did not lift from the residue field")
        return b
    logger.warning("primitive-scaling search exhausted after %d tries", max_tries)
    raise SearchExhausted(f"no primitive scaling found in {max_tries} tries")


def find_general_position(
    c: ExtElement,
    xs,
    q: QuadraticForm,
    rng: random.Random,
    max_tries: int = DEFAULT_MAX_TRIES,
    bound: int = DEFAULT_BOUND,
) -> GenPosWitness:
    """A verified witness b in the general-position set of (c, x, q).

    c must be primitive and q(x) must be a unit of the extension; the
    returned witness satisfies, exactly over the ring: c*b^2 primitive and
    q(top coordinates of x*b^(-1) in the basis of c*b^2) a unit.
    """
    ext = c.ext
    ring = ext.ring
    if not c.is_primitive():
        raise NotPrimitive("general position needs a primitive element")
    value = q.evaluate_ext(xs)
    if not value.is_invertible():
        raise ValueNotUnit("the form value q(x) must be a unit of the extension")

    def exact_witness(b: ExtElement, tries: int) -> GenPosWitness:
        c_new = c * b * b
        if not c_new.is_primitive():
            raise InternalAssertion("scaled element lost primitivity over the ring")
        binv = b.inverse()
        x_new = tuple(x * binv for x in xs)
        tops = [x.top_coefficient_in(c_new) for x in x_new]
        r = q.evaluate(tops)
        if not ring.is_invertible(r):
            raise InternalAssertion("general-position value is not a unit over the ring")
        return GenPosWitness(b=b, c_new=c_new, x_new=x_new, r=r, tries_used=tries)

    # deterministic probe: b = 1
    tops = [x.top_coefficient_in(c) for x in xs]
    if ring.is_invertible(q.evaluate(tops)):
        return exact_witness(ext.one(), 1)

    rext = ext.residue_extension()
    cbar = c.reduce()
    xbars = [x.reduce() for x in xs]
    qbar = q.residue_form()
    kring = rext.ring
    tries = 1
    b_bound = bound
    while tries < max_tries:
        tries += 1
        if tries % _BOUND_DOUBLING_PERIOD == 0:
            b_bound *= 2
        bbar = _random_unit(rext, rng, b_bound)
        if bbar is None:
            continue
        cb2 = cbar * bbar * bbar
        if not cb2.is_primitive():
            continue
        binv = bbar.inverse()
        tops = [(x * binv).top_coefficient_in(cb2) for x in xbars]
        if kring.is_invertible(qbar.evaluate(tops)):
            return exact_witness(_lift_witness(ext, bbar), tries)
    logger.warning("general-position search exhausted after %d tries", max_tries)
    raise SearchExhausted(f"no general-position scaling found in {max_tries} tries")
