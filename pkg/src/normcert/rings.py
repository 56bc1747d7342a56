"""Exact arithmetic for the two supported coefficient rings.

Both rings sit behind one small interface so everything downstream
(polynomials, extensions, forms, searches) is generic over it:

* ``RationalField`` -- the field Q.  Elements are plain
  ``fractions.Fraction`` values (already canonical: reduced, positive
  denominator).  The maximal ideal is (0), so residue and lift are the
  identity.

* ``LocalRationalFunctions`` -- rational functions in x that are defined
  at x = 0, i.e. quotients num/den of polynomials over Q with den(0) != 0.
  This is a local ring: a is a unit iff a(0) != 0, reduction modulo the
  maximal ideal is evaluation at 0, and the residue field is Q again.

Elements of the second ring are ``RatFunc`` values.  A ``RatFunc`` is
stored as scalar * N(x)/D(x) with N, D coprime primitive integer
polynomials with positive leading coefficients and the scalar a Fraction;
that representation is unique, keeps every operation in integer polynomial
arithmetic, and confines gcd work to cross cancellations.  Polynomial gcds
are computed modularly (images mod 31-bit primes, CRT, trial-division
certificate), so the coprime case costs one machine-word Euclid and no
intermediate ever outgrows the inputs (naive Euclid over Q explodes).

``RatFunc`` covers all of Q(x); intermediates of fraction-field linear
algebra may leave the local ring, and membership is re-checked wherever it
matters.  The two ring objects are singletons, ``QQ`` and ``QQ_LOCAL_X``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, lcm

from .errors import NotInvertible, RingMismatch

# ---------------------------------------------------------------------------
# integer polynomials: coefficient tuples, ascending degree, no trailing
# zeros, () is zero

_ONE_POLY = (1,)


def _ztrim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _zmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return tuple(out)


def _zsplit(cs):
    """(c, P) with P primitive of positive leading coefficient and cs = c*P."""
    if not cs:
        return 0, ()
    content = gcd(*cs)
    if cs[-1] < 0:
        content = -content
    return content, tuple(v // content for v in cs)


def _zdiv_exact(a, b):
    """Quotient of an exact division in Z[x]."""
    if b == _ONE_POLY:
        return a
    rem = list(a)
    db = len(b) - 1
    lcb = b[-1]
    quo = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            q, check = divmod(c, lcb)
            if check:
                raise ArithmeticError("exact integer division failed")
            quo[k - db] = q
            for i in range(db + 1):
                rem[k - db + i] -= q * b[i]
    if any(rem):
        raise ArithmeticError("exact integer division left a remainder")
    return tuple(quo)


def _is_prime_u32(n: int) -> bool:
    # deterministic Miller-Rabin, valid far beyond 2^32
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        v = pow(a, d, n)
        if v in (1, n - 1):
            continue
        for _ in range(s - 1):
            v = v * v % n
            if v == n - 1:
                break
        else:
            return False
    return True


class _PrimePool:
    """Descending 31-bit primes, generated on demand."""

    def __init__(self):
        self._primes = []
        self._next = 2**31 - 1

    def get(self, i: int) -> int:
        while len(self._primes) <= i:
            while not _is_prime_u32(self._next):
                self._next -= 2
            self._primes.append(self._next)
            self._next -= 2
        return self._primes[i]


_PRIMES31 = _PrimePool()


def _gcd_mod(a, b, p: int):
    """Monic gcd of the images in GF(p)[x] (a list, possibly [1])."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while b and b[-1] == 0:
        b.pop()
    while a and a[-1] == 0:
        a.pop()
    while b:
        inv = pow(b[-1], -1, p)
        db = len(b) - 1
        for k in range(len(a) - 1, db - 1, -1):
            c = a[k]
            if c:
                q = c * inv % p
                for i in range(db):
                    a[k - db + i] = (a[k - db + i] - q * b[i]) % p
                a[k] = 0
        while a and a[-1] == 0:
            a.pop()
        a, b = b, a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _zdivides(g, a):
    """Quotient of a by g in Z[x], or None when the division is not exact."""
    if len(g) > len(a):
        return None
    rem = list(a)
    dg = len(g) - 1
    lcg = g[-1]
    quo = [0] * (len(rem) - dg)
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if c:
            q, leftover = divmod(c, lcg)
            if leftover:
                return None
            quo[k - dg] = q
            for i in range(dg + 1):
                rem[k - dg + i] -= q * g[i]
    if any(rem):
        return None
    return tuple(quo)


def _zgcd(a, b):
    """Primitive gcd with positive leading coefficient, computed modularly.

    Images modulo 31-bit primes are combined by CRT with symmetric lift and
    certified by trial division, so no step ever exceeds the coefficient
    size of the inputs plus the (small) size of the gcd itself.  The common
    coprime case costs one machine-word Euclid.
    """
    if not a:
        return _zsplit(b)[1]
    if not b:
        return _zsplit(a)[1]
    if a == b:
        return _zsplit(a)[1]
    if len(a) == 1 or len(b) == 1:
        return _ONE_POLY
    a = _zsplit(a)[1]
    b = _zsplit(b)[1]
    lc_gcd = gcd(a[-1], b[-1])
    combined = None
    modulus = 1
    best_degree = None
    previous = None
    index = 0
    while True:
        p = _PRIMES31.get(index)
        index += 1
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        gp = _gcd_mod(a, b, p)
        degree = len(gp) - 1
        if degree == 0:
            return _ONE_POLY
        if best_degree is None or degree < best_degree:
            # every previous prime was unlucky; restart from this image
            best_degree = degree
            scaled = [c * lc_gcd % p for c in gp]
            combined, modulus, previous = scaled, p, None
        elif degree > best_degree:
            continue
        else:
            scaled = [c * lc_gcd % p for c in gp]
            inv = pow(modulus, -1, p)
            merged = []
            for old, new in zip(combined, scaled):
                delta = (new - old) * inv % p
                merged.append(old + modulus * delta)
            combined, modulus = merged, modulus * p
        half = modulus // 2
        lifted = tuple(c - modulus if c > half else c for c in combined)
        candidate = _zsplit(_ztrim(lifted))[1]
        if candidate == previous:
            quo_a = _zdivides(candidate, a)
            if quo_a is not None and _zdivides(candidate, b) is not None:
                return candidate
        previous = candidate


def _from_fraction_coeffs(cs):
    """(scalar, P) with P primitive positive-lc integer and cs = scalar*P over Q."""
    cs = _ztrim([Fraction(c) for c in cs])
    if not cs:
        return Fraction(0), ()
    mult = lcm(*(c.denominator for c in cs))
    content, prim = _zsplit(tuple(int(c * mult) for c in cs))
    return Fraction(content, mult), prim


def _fgcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator))


def _zstr(cs, var="x"):
    if not cs:
        return "0"
    terms = []
    for i, c in enumerate(cs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else "-" if c == -1 else f"{c}*"
            terms.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(terms).replace("+ -", "- ")


# ---------------------------------------------------------------------------


class RatFunc:
    """A quotient of polynomials over Q, always in lowest terms.

    The public faces `num` and `den` are Fraction coefficient tuples
    (ascending degree) scaled so the lowest-order nonzero denominator
    coefficient is 1; for elements of the local ring that is exactly the
    den(0) = 1 normalization, so equality of ring elements is structural.
    """

    __slots__ = ("scalar", "npoly", "dpoly", "_view")

    def __init__(self, num, den=(1,)):
        sn, npoly = _from_fraction_coeffs(num)
        sd, dpoly = _from_fraction_coeffs(den)
        if not dpoly:
            raise ZeroDivisionError("rational function with zero denominator")
        if npoly:
            g = _zgcd(npoly, dpoly)
            if g != _ONE_POLY:
                npoly = _zdiv_exact(npoly, g)
                dpoly = _zdiv_exact(dpoly, g)
        else:
            dpoly = _ONE_POLY
        self.scalar = sn / sd if npoly else Fraction(0)
        self.npoly = npoly
        self.dpoly = dpoly
        self._view = None

    @classmethod
    def _make(cls, scalar: Fraction, npoly, dpoly) -> RatFunc:
        # trusted constructor: pieces already coprime, primitive, positive lc
        self = object.__new__(cls)
        if not npoly or not scalar:
            scalar, npoly, dpoly = Fraction(0), (), _ONE_POLY
        self.scalar = scalar
        self.npoly = npoly
        self.dpoly = dpoly
        self._view = None
        return self

    @staticmethod
    def constant(v) -> RatFunc:
        v = Fraction(v)
        return RatFunc._make(v, _ONE_POLY if v else (), _ONE_POLY)

    def _canonical_view(self):
        if self._view is None:
            if not self.npoly:
                self._view = ((), (Fraction(1),))
            else:
                pivot = next(c for c in self.dpoly if c)
                num = tuple(self.scalar * c / pivot for c in self.npoly)
                den = tuple(Fraction(c, pivot) for c in self.dpoly)
                self._view = (num, den)
        return self._view

    @property
    def num(self):
        return self._canonical_view()[0]

    @property
    def den(self):
        return self._canonical_view()[1]

    # fraction-field arithmetic (closed under all four operations)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.npoly:
            return other
        if not other.npoly:
            return self
        t = _fgcd(self.scalar, other.scalar)
        s1, s2 = self.scalar / t, other.scalar / t
        if s1.denominator != 1 or s2.denominator != 1:
            raise ArithmeticError("scalar gcd split lost exactness")
        u1, u2 = s1.numerator, s2.numerator
        d = _zgcd(self.dpoly, other.dpoly)
        e1 = _zdiv_exact(self.dpoly, d)
        e2 = _zdiv_exact(other.dpoly, d)
        raw = [0] * max(len(self.npoly) + len(e2), len(other.npoly) + len(e1))
        for i, c in enumerate(_zmul(self.npoly, e2)):
            raw[i] += u1 * c
        for i, c in enumerate(_zmul(other.npoly, e1)):
            raw[i] += u2 * c
        content, psum = _zsplit(_ztrim(raw))
        if not psum:
            return RatFunc._make(Fraction(0), (), _ONE_POLY)
        g = _zgcd(psum, d)
        return RatFunc._make(
            t * content,
            _zdiv_exact(psum, g),
            _zmul(_zdiv_exact(self.dpoly, g), e2),
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RatFunc._make(-self.scalar, self.npoly, self.dpoly)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.npoly or not other.npoly:
            return RatFunc._make(Fraction(0), (), _ONE_POLY)
        g1 = _zgcd(self.npoly, other.dpoly)
        g2 = _zgcd(other.npoly, self.dpoly)
        return RatFunc._make(
            self.scalar * other.scalar,
            _zmul(_zdiv_exact(self.npoly, g1), _zdiv_exact(other.npoly, g2)),
            _zmul(_zdiv_exact(self.dpoly, g2), _zdiv_exact(other.dpoly, g1)),
        )

    __rmul__ = __mul__

    def reciprocal(self) -> RatFunc:
        if not self.npoly:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc._make(1 / self.scalar, self.dpoly, self.npoly)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.reciprocal()

    def __bool__(self):
        return bool(self.npoly)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (
            self.scalar == other.scalar
            and self.npoly == other.npoly
            and self.dpoly == other.dpoly
        )

    def __hash__(self):
        return hash((self.scalar, self.npoly, self.dpoly))

    def evaluate(self, v) -> Fraction:
        """Value at a rational point (the denominator must not vanish there)."""
        v = Fraction(v)
        den = Fraction(0)
        for c in reversed(self.dpoly):
            den = den * v + c
        if den == 0:
            raise ZeroDivisionError(f"rational function has a pole at {v}")
        num = Fraction(0)
        for c in reversed(self.npoly):
            num = num * v + c
        return self.scalar * num / den

    def at_zero(self) -> Fraction:
        """Value at x = 0; requires den(0) != 0."""
        if self.dpoly[0] == 0:
            raise ZeroDivisionError("rational function has a pole at 0")
        if not self.npoly:
            return Fraction(0)
        return self.scalar * self.npoly[0] / self.dpoly[0]

    def is_defined_at_zero(self) -> bool:
        return self.dpoly[0] != 0

    def __repr__(self):
        num, den = self._canonical_view()
        if len(den) == 1:
            return f"({_zstr(num)})"
        return f"({_zstr(num)})/({_zstr(den)})"


# ---------------------------------------------------------------------------
# ring objects


class RationalField:
    """The field Q; elements are fractions.Fraction."""

    id = "Q"
    is_field = True

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)
        self.residue_ring = self

    def element(self, v) -> Fraction:
        if isinstance(v, RatFunc):
            raise RingMismatch(f"{v!r} is not an element of {self.id}")
        return Fraction(v)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def contains(self, a) -> bool:
        return isinstance(a, Fraction)

    def check(self, a) -> Fraction:
        if not isinstance(a, Fraction):
            raise RingMismatch(f"expected an element of {self.id}, got {a!r}")
        return a

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def sub(self, a, b):
        return self.check(a) - self.check(b)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def is_invertible(self, a) -> bool:
        return self.check(a) != 0

    def invert(self, a):
        if self.check(a) == 0:
            raise NotInvertible("0 has no inverse in Q")
        return 1 / a

    def fraction_div(self, a, b):
        # division in the fraction field (same as the ring for a field)
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def residue(self, a) -> Fraction:
        return self.check(a)

    def lift(self, v) -> Fraction:
        return Fraction(v)

    def __repr__(self):
        return "RationalField()"


class LocalRationalFunctions:
    """Q[x] localized at (x): RatFunc values with den(0) != 0."""

    id = "Q[x]_(x)"
    is_field = False

    def __init__(self):
        self.zero = RatFunc.constant(0)
        self.one = RatFunc.constant(1)
        self.x = RatFunc((0, 1))
        self.residue_ring = QQ

    def element(self, v) -> RatFunc:
        if isinstance(v, RatFunc):
            a = v
        elif isinstance(v, (int, Fraction)):
            a = RatFunc.constant(v)
        elif isinstance(v, (tuple, list)):
            a = RatFunc(v)
        else:
            raise RingMismatch(f"cannot coerce {v!r} into {self.id}")
        if not a.is_defined_at_zero():
            raise RingMismatch(f"{a!r} has a pole at 0, not in {self.id}")
        return a

    def from_int(self, n: int) -> RatFunc:
        return RatFunc.constant(n)

    def contains(self, a) -> bool:
        return isinstance(a, RatFunc) and a.is_defined_at_zero()

    def check(self, a) -> RatFunc:
        if not isinstance(a, RatFunc):
            raise RingMismatch(f"expected an element of {self.id}, got {a!r}")
        if not a.is_defined_at_zero():
            raise RingMismatch(f"{a!r} has a pole at 0, not in {self.id}")
        return a

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def sub(self, a, b):
        return self.check(a) - self.check(b)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def is_invertible(self, a) -> bool:
        a = self.check(a)
        return bool(a.npoly) and a.npoly[0] != 0

    def invert(self, a):
        a = self.check(a)
        if not a.npoly or a.npoly[0] == 0:
            raise NotInvertible(f"{a!r} lies in the maximal ideal (x)")
        return a.reciprocal()

    def fraction_div(self, a, b):
        # division in Q(x); the result may leave the local ring
        return a / b

    def residue(self, a) -> Fraction:
        return self.check(a).at_zero()

    def lift(self, v) -> RatFunc:
        return RatFunc.constant(v)

    def __repr__(self):
        return "LocalRationalFunctions()"


QQ = RationalField()
QQ_LOCAL_X = LocalRationalFunctions()

_RINGS = {QQ.id: QQ, QQ_LOCAL_X.id: QQ_LOCAL_X}


def get_ring(ring_id: str):
    try:
        return _RINGS[ring_id]
    except KeyError:
        raise ValueError(f"unknown ring id {ring_id!r}") from None


def sample_residue(rng: random.Random, bound: int) -> Fraction:
    """A uniformly random integer in [-bound, bound], as a residue-field value."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return Fraction(rng.randint(-bound, bound))
