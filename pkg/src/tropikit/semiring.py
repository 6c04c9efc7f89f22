"""Idempotent semirings on the extended reals and the deformation of addition.

Every instance is a :class:`SemiringSpec` describing the carrier set, the two
operations, and the neutral elements.  The built-in instances are

* ``bool``      ({0, 1}, or, and)
* ``maxplus``   (R u {-inf}, max, +), zero = -inf, one = 0
* ``minplus``   (R u {+inf}, min, +), zero = +inf, one = 0
* ``maxmin``    (R u {-inf, +inf}, max, min), zero = -inf, one = +inf
* ``nonneg``    (R+, +, *), the classical reference point; not idempotent
* ``deformed:<h>``  (R u {-inf}, add_h, +) for h > 0: the interpolating family
  whose h -> 0 limit is maxplus and whose h = 1 member is classical addition
  carried through the logarithm

Operations of the built-in specs accept floats or numpy arrays.  Values are
plain float64; -0.0 is normalized to +0.0 so equality can be bitwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError, NotIdempotent

NEG_INF = float("-inf")
POS_INF = float("inf")


def deformed_add(u, v, h):
    """h-deformed sum  u (+)_h v = h*ln(exp(u/h) + exp(v/h)).

    Computed as max(u,v) + h*log1p(exp(-|u-v|/h)), which never overflows and
    returns exactly max(u,v) + h*ln(2) when u == v.  Accepts scalars or
    arrays; -inf is neutral and never produces a NaN.
    """
    if not (isinstance(h, (int, float)) and math.isfinite(h) and h > 0):
        raise DomainError(f"deformation parameter must be a positive finite real, got {h!r}")
    ua = np.asarray(u, dtype=float)
    va = np.asarray(v, dtype=float)
    hi = np.maximum(ua, va)
    lo = np.minimum(ua, va)
    with np.errstate(invalid="ignore"):
        out = np.where(np.isneginf(lo), hi, hi + h * np.log1p(np.exp((lo - hi) / h)))
    if np.ndim(u) == 0 and np.ndim(v) == 0:
        return float(out) + 0.0
    return out + 0.0


def _lse_reduce(h: float) -> Callable:
    # (+)_h-reduction along an axis, in the same stable form as deformed_add
    def reduce_(a, axis):
        a = np.asarray(a, dtype=float)
        hi = np.max(a, axis=axis, keepdims=True)
        with np.errstate(invalid="ignore"):
            s = hi + h * np.log(np.sum(np.exp((a - hi) / h), axis=axis, keepdims=True))
            out = np.where(np.isneginf(hi), hi, s)
        return np.squeeze(out, axis=axis) + 0.0

    return reduce_


@dataclass(frozen=True)
class SemiringSpec:
    """One semiring: carrier predicate, operations, neutral elements.

    ``add`` and ``mul`` are binary callables working on floats and numpy
    arrays alike; they may assume their inputs satisfy ``contains``.
    ``add_reduce(a, axis)`` folds an array with the addition.  ``sample``
    draws carrier values for randomized law checking (None disables it).
    """

    name: str
    add: Callable
    mul: Callable
    zero: float
    one: float
    idempotent: bool
    contains: Callable
    add_reduce: Callable
    sample: Optional[Callable] = None
    h: Optional[float] = None

    def __repr__(self):
        return f"SemiringSpec({self.name!r})"


# --- samplers --------------------------------------------------------------
#
# Finite draws are multiples of 2**-20 within a modest range, so that chained
# additions stay exactly representable in float64 and the idempotent laws can
# be asserted bitwise.  A few percent of the draws are the special elements.

_GRAIN = 2.0**20


def _dyadic(rng, size, lo, hi):
    return rng.integers(int(lo * _GRAIN), int(hi * _GRAIN), size=size, endpoint=True) / _GRAIN


def _sprinkle(rng, values, specials, frac=0.04):
    for s in specials:
        mask = rng.random(values.shape) < frac
        values = np.where(mask, s, values)
    return values + 0.0


def _sample_bool(rng, size):
    return rng.integers(0, 2, size=size).astype(float)


def _sample_maxplus(rng, size):
    return _sprinkle(rng, _dyadic(rng, size, -50, 50), [NEG_INF, 0.0])


def _sample_minplus(rng, size):
    return _sprinkle(rng, _dyadic(rng, size, -50, 50), [POS_INF, 0.0])


def _sample_maxmin(rng, size):
    return _sprinkle(rng, _dyadic(rng, size, -50, 50), [NEG_INF, POS_INF])


def _sample_nonneg(rng, size):
    return _sprinkle(rng, _dyadic(rng, size, 0, 100), [0.0, 1.0])


# --- carrier predicates (vectorized) ---------------------------------------


def _contains_bool(x):
    x = np.asarray(x)
    return (x == 0.0) | (x == 1.0)


def _contains_maxplus(x):
    x = np.asarray(x)
    return ~np.isnan(x) & (x < POS_INF)


def _contains_minplus(x):
    x = np.asarray(x)
    return ~np.isnan(x) & (x > NEG_INF)


def _contains_maxmin(x):
    return ~np.isnan(np.asarray(x))


def _contains_nonneg(x):
    x = np.asarray(x)
    return np.isfinite(x) & (x >= 0.0)


BOOL = SemiringSpec(
    name="bool",
    add=np.maximum,
    mul=np.minimum,
    zero=0.0,
    one=1.0,
    idempotent=True,
    contains=_contains_bool,
    add_reduce=lambda a, axis: np.maximum.reduce(a, axis=axis),
    sample=_sample_bool,
)

MAXPLUS = SemiringSpec(
    name="maxplus",
    add=np.maximum,
    mul=np.add,
    zero=NEG_INF,
    one=0.0,
    idempotent=True,
    contains=_contains_maxplus,
    add_reduce=lambda a, axis: np.maximum.reduce(a, axis=axis),
    sample=_sample_maxplus,
)

MINPLUS = SemiringSpec(
    name="minplus",
    add=np.minimum,
    mul=np.add,
    zero=POS_INF,
    one=0.0,
    idempotent=True,
    contains=_contains_minplus,
    add_reduce=lambda a, axis: np.minimum.reduce(a, axis=axis),
    sample=_sample_minplus,
)

MAXMIN = SemiringSpec(
    name="maxmin",
    add=np.maximum,
    mul=np.minimum,
    zero=NEG_INF,
    one=POS_INF,
    idempotent=True,
    contains=_contains_maxmin,
    add_reduce=lambda a, axis: np.maximum.reduce(a, axis=axis),
    sample=_sample_maxmin,
)

NONNEG = SemiringSpec(
    name="nonneg",
    add=np.add,
    mul=np.multiply,
    zero=0.0,
    one=1.0,
    idempotent=False,
    contains=_contains_nonneg,
    add_reduce=lambda a, axis: np.add.reduce(a, axis=axis),
    sample=_sample_nonneg,
)


def deformed_spec(h: float) -> SemiringSpec:
    """The semiring (R u {-inf}, (+)_h, +) for a fixed h > 0."""
    if not (isinstance(h, (int, float)) and math.isfinite(h) and h > 0):
        raise DomainError(f"deformation parameter must be a positive finite real, got {h!r}")
    h = float(h)
    return SemiringSpec(
        name=f"deformed:{h:.17g}",
        add=lambda a, b: deformed_add(a, b, h),
        mul=np.add,
        zero=NEG_INF,
        one=0.0,
        idempotent=False,
        contains=_contains_maxplus,
        add_reduce=_lse_reduce(h),
        sample=_sample_maxplus,
        h=h,
    )


_BUILTIN = {s.name: s for s in (BOOL, MAXPLUS, MINPLUS, MAXMIN, NONNEG)}
_REGISTRY: dict[str, SemiringSpec] = {}


def register_semiring(spec: SemiringSpec) -> None:
    """Make a custom spec resolvable through get_semiring by its name."""
    if spec.name in _BUILTIN or spec.name.startswith("deformed:"):
        raise ValueError(f"name {spec.name!r} is reserved")
    _REGISTRY[spec.name] = spec


def get_semiring(name: str) -> SemiringSpec:
    """Resolve a semiring id: a built-in name, deformed:<h>, or a registered one."""
    if name in _BUILTIN:
        return _BUILTIN[name]
    if name.startswith("deformed:"):
        try:
            h = float(name.split(":", 1)[1])
            return deformed_spec(h)
        except (ValueError, DomainError):
            raise ValueError(f"bad deformation parameter in {name!r}") from None
    if name in _REGISTRY:
        return _REGISTRY[name]
    raise ValueError(f"unknown semiring id {name!r}")


# --- scalar operations with domain checking --------------------------------


def _require_member(x, spec: SemiringSpec) -> float:
    x = float(x)
    if not bool(spec.contains(x)):
        raise DomainError(f"{x!r} is not in the carrier of {spec.name}")
    return x


def add(a, b, spec: SemiringSpec) -> float:
    """a (+) b in the given semiring."""
    a = _require_member(a, spec)
    b = _require_member(b, spec)
    return float(spec.add(a, b)) + 0.0


def mul(a, b, spec: SemiringSpec) -> float:
    """a (x) b in the given semiring; the zero element absorbs unconditionally."""
    a = _require_member(a, spec)
    b = _require_member(b, spec)
    if a == spec.zero or b == spec.zero:
        return spec.zero
    return float(spec.mul(a, b)) + 0.0


def leq(a, b, spec: SemiringSpec) -> bool:
    """Standard partial order: a <= b  iff  a (+) b == b.

    Only meaningful when addition is idempotent; note that for minplus this
    order runs opposite to the numeric one (the zero element +inf is least).
    """
    if not spec.idempotent:
        raise NotIdempotent(f"{spec.name} has no idempotent addition, so no standard order")
    return add(a, b, spec) == float(b) + 0.0


# --- randomized law audit ---------------------------------------------------

AXIOM_NAMES = (
    "add-associative",
    "add-commutative",
    "add-idempotent",
    "mul-associative",
    "zero-neutral-add",
    "zero-absorbs-mul",
    "one-neutral-mul",
    "distributive-left",
    "distributive-right",
)


def check_axioms(spec: SemiringSpec, trials: int = 10000, seed: int = 0) -> dict:
    """Audit the semiring laws on random triples; returns {law: bool}.

    Idempotent instances are compared bitwise (their operations either select
    an operand or shift by dyadic samples, both exact in float64); the
    non-idempotent ones get a 1e-12 relative tolerance with the same absolute
    floor.  add-idempotent is always measured, so a truthful False is the
    expected result for the classical instances.
    """
    if spec.sample is None:
        raise ValueError(f"{spec.name} has no sampler; cannot audit laws")
    rng = np.random.default_rng(seed)
    x = spec.sample(rng, trials)
    y = spec.sample(rng, trials)
    z = spec.sample(rng, trials)
    A, M = spec.add, spec.mul
    zero = np.full(trials, spec.zero)
    one = np.full(trials, spec.one)

    if spec.idempotent:
        def eq(p, q):
            return bool(np.array_equal(np.asarray(p) + 0.0, np.asarray(q) + 0.0))
    else:
        def eq(p, q):
            return bool(np.allclose(p, q, rtol=1e-12, atol=1e-12))

    return {
        "add-associative": eq(A(A(x, y), z), A(x, A(y, z))),
        "add-commutative": eq(A(x, y), A(y, x)),
        "add-idempotent": eq(A(x, x), x),
        "mul-associative": eq(M(M(x, y), z), M(x, M(y, z))),
        "zero-neutral-add": eq(A(x, zero), x),
        "zero-absorbs-mul": eq(M(x, zero), zero),
        "one-neutral-mul": eq(M(one, x), x) and eq(M(x, one), x),
        "distributive-left": eq(M(x, A(y, z)), A(M(x, y), M(x, z))),
        "distributive-right": eq(M(A(y, z), x), A(M(y, x), M(z, x))),
    }
