"""JSON encodings for every exchanged object.

Numbers are always strings so arbitrary precision survives the trip:
rationals are "p/q" (the "/q" omitted when q = 1), local rational
functions are {"num": [...], "den": [...]} with rational-string
coefficient lists ascending by degree.  Emission is deterministic
(sorted keys, fixed separators) so identical inputs and seeds produce
byte-identical artifacts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .certify import NormCertificate, ReductionStep
from .extension import SimpleExtension
from .poly import Poly
from .qform import QuadraticForm, ValueFactor
from .rings import QQ, RatFunc, get_ring


class FormatError(ValueError):
    """Malformed instance or certificate JSON."""


def rational_to_json(v: Fraction) -> str:
    return str(v)


def rational_from_json(data) -> Fraction:
    if not isinstance(data, str):
        raise FormatError(f"expected a rational string, got {data!r}")
    try:
        return Fraction(data)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {data!r}: {exc}") from None


def element_to_json(ring, a):
    if ring.id == QQ.id:
        return rational_to_json(a)
    return {
        "num": [rational_to_json(c) for c in a.num],
        "den": [rational_to_json(c) for c in a.den],
    }


def element_from_json(ring, data):
    if ring.id == QQ.id:
        return rational_from_json(data)
    if isinstance(data, str):
        # shorthand: a constant
        return ring.element(rational_from_json(data))
    if not isinstance(data, dict) or "num" not in data:
        raise FormatError(f"expected a num/den object, got {data!r}")
    num = [rational_from_json(c) for c in data["num"]]
    den = [rational_from_json(c) for c in data.get("den", ["1"])]
    try:
        return ring.element(RatFunc(num, den))
    except ZeroDivisionError as exc:
        raise FormatError(str(exc)) from None


def poly_to_json(p: Poly) -> dict:
    return {
        "ring": p.ring.id,
        "coeffs": [element_to_json(p.ring, c) for c in p.coeffs],
    }


def poly_from_json(data, ring=None) -> Poly:
    if isinstance(data, dict) and "coeffs" in data:
        ring = get_ring(data["ring"]) if "ring" in data else ring
        coeffs = data["coeffs"]
    elif isinstance(data, list):
        coeffs = data
    else:
        raise FormatError(f"expected a polynomial, got {data!r}")
    if ring is None:
        raise FormatError("polynomial without a ring")
    return Poly(ring, [element_from_json(ring, c) for c in coeffs])


def form_to_json(q: QuadraticForm) -> dict:
    return {"ring": q.ring.id, "diag": [element_to_json(q.ring, a) for a in q.diag]}


def form_from_json(data, ring=None) -> QuadraticForm:
    if isinstance(data, dict) and "diag" in data:
        ring = get_ring(data["ring"]) if "ring" in data else ring
        diag = data["diag"]
    elif isinstance(data, list):
        diag = data
    else:
        raise FormatError(f"expected a quadratic form, got {data!r}")
    if ring is None:
        raise FormatError("quadratic form without a ring")
    return QuadraticForm(ring, [element_from_json(ring, a) for a in diag])


def factor_to_json(ring, f: ValueFactor) -> dict:
    return {
        "vector": [element_to_json(ring, v) for v in f.vector],
        "exp": f.exponent,
    }


def factor_from_json(ring, data) -> ValueFactor:
    if not isinstance(data, dict) or "vector" not in data or "exp" not in data:
        raise FormatError(f"expected a value factor, got {data!r}")
    if data["exp"] not in (1, -1):
        raise FormatError(f"factor exponent must be 1 or -1, got {data['exp']!r}")
    return ValueFactor(
        tuple(element_from_json(ring, v) for v in data["vector"]), data["exp"]
    )


def _step_to_json(ring, step: ReductionStep) -> dict:
    return {
        "n": step.n,
        "p": poly_to_json(step.p),
        "h": poly_to_json(step.h),
        "r": element_to_json(ring, step.r),
        "g": poly_to_json(step.g),
        "b": [element_to_json(ring, v) for v in step.b.coords],
    }


def certificate_to_json(ring, cert: NormCertificate) -> dict:
    out = {
        "target": element_to_json(ring, cert.target),
        "factors": [factor_to_json(ring, f) for f in cert.factors],
    }
    if cert.trace is not None:
        out["trace"] = [_step_to_json(ring, s) for s in cert.trace]
    return out


def certificate_from_json(ring, data) -> NormCertificate:
    if not isinstance(data, dict) or "target" not in data or "factors" not in data:
        raise FormatError("certificate needs 'target' and 'factors'")
    return NormCertificate(
        target=element_from_json(ring, data["target"]),
        factors=tuple(factor_from_json(ring, f) for f in data["factors"]),
    )


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# ---------------------------------------------------------------------------
# problem instances


@dataclass
class InstanceSpec:
    ext: SimpleExtension
    q: QuadraticForm
    xs: list
    options: dict

    @property
    def ring(self):
        return self.ext.ring


def instance_to_json(inst: InstanceSpec) -> dict:
    ring = inst.ring
    return {
        "ring": ring.id,
        "p": poly_to_json(inst.ext.modulus),
        "q": [element_to_json(ring, a) for a in inst.q.diag],
        "x": [[element_to_json(ring, v) for v in x.coords] for x in inst.xs],
        "options": dict(inst.options),
    }


def instance_from_json(data) -> InstanceSpec:
    if not isinstance(data, dict):
        raise FormatError("instance must be a JSON object")
    for key in ("ring", "p", "q", "x"):
        if key not in data:
            raise FormatError(f"instance is missing {key!r}")
    try:
        ring = get_ring(data["ring"])
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    modulus = poly_from_json(data["p"], ring)
    ext = SimpleExtension(ring, modulus)
    q = form_from_json(data["q"], ring)
    if not isinstance(data["x"], list) or not data["x"]:
        raise FormatError("'x' must be a non-empty list of coordinate vectors")
    if len(data["x"]) != q.rank:
        raise FormatError(
            f"witness has {len(data['x'])} vectors but the form has rank {q.rank}"
        )
    xs = []
    for vec in data["x"]:
        if not isinstance(vec, list) or len(vec) != ext.n:
            raise FormatError(f"each witness vector needs {ext.n} coordinates")
        xs.append(ext.element([element_from_json(ring, v) for v in vec]))
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise FormatError("'options' must be an object")
    return InstanceSpec(ext=ext, q=q, xs=xs, options=options)


def load_instance(path: str) -> InstanceSpec:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None
    return instance_from_json(data)


def load_certificate(path: str, ring) -> NormCertificate:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from None
    return certificate_from_json(ring, data)
