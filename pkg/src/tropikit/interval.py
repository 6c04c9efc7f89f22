"""Weak interval extension of an idempotent semiring.

An interval [lower, upper] is a set of carrier values between its endpoints
in the standard order a <= b iff a (+) b == b.  Mind that for minplus this
order is reversed numerically: the "lower" endpoint is the larger number.
Endpointwise operations make the set of intervals a semiring again, and the
interval Bellman problem collapses to the two endpoint point-problems, so
uncertain systems cost exactly two ordinary solves instead of an exponential
endpoint search.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from . import linalg
from .errors import DomainError, NonConvergent, NotIdempotent, ShapeMismatch, SpecMismatch
from .semiring import MINPLUS, SemiringSpec, add, leq, mul


class IntervalValue:
    """Closed interval in the standard order of an idempotent semiring."""

    __slots__ = ("lower", "upper", "spec")

    def __init__(self, lower: float, upper: float, spec: SemiringSpec):
        if not spec.idempotent:
            raise NotIdempotent(f"intervals need the standard order; {spec.name} has none")
        lower = float(lower) + 0.0
        upper = float(upper) + 0.0
        if not leq(lower, upper, spec):
            raise DomainError(f"endpoints out of order for {spec.name}: {lower!r} !<= {upper!r}")
        self.lower = lower
        self.upper = upper
        self.spec = spec

    @classmethod
    def from_numeric(cls, a: float, b: float, spec: SemiringSpec) -> "IntervalValue":
        """Build from two endpoint values in either order."""
        a, b = float(a), float(b)
        if leq(a, b, spec):
            return cls(a, b, spec)
        return cls(b, a, spec)

    def numeric(self):
        """(min, max) view of the endpoints, convenient for files and tests."""
        return (min(self.lower, self.upper), max(self.lower, self.upper))

    def contains(self, x: float) -> bool:
        x = float(x)
        return leq(self.lower, x, self.spec) and leq(x, self.upper, self.spec)

    def __eq__(self, other):
        if not isinstance(other, IntervalValue):
            return NotImplemented
        return (
            self.spec.name == other.spec.name
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __hash__(self):
        return hash((self.spec.name, self.lower, self.upper))

    def __repr__(self):
        return f"IntervalValue({self.lower!r}, {self.upper!r}, spec={self.spec.name!r})"


def _same_spec(x, y) -> SemiringSpec:
    if x.spec.name != y.spec.name:
        raise SpecMismatch(f"mixed semirings: {x.spec.name} vs {y.spec.name}")
    return x.spec


def interval_add(x: IntervalValue, y: IntervalValue) -> IntervalValue:
    """Endpointwise (+); the tightest interval containing all pointwise sums."""
    spec = _same_spec(x, y)
    return IntervalValue(add(x.lower, y.lower, spec), add(x.upper, y.upper, spec), spec)


def interval_mul(x: IntervalValue, y: IntervalValue) -> IntervalValue:
    """Endpointwise (x); monotonicity of the product keeps endpoints ordered."""
    spec = _same_spec(x, y)
    return IntervalValue(mul(x.lower, y.lower, spec), mul(x.upper, y.upper, spec), spec)


class IntervalMatrix:
    """Matrix of intervals, stored as the two endpoint matrices."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower: linalg.SemiringMatrix, upper: linalg.SemiringMatrix):
        spec = lower.spec
        if spec.name != upper.spec.name:
            raise SpecMismatch(f"mixed semirings: {spec.name} vs {upper.spec.name}")
        if not spec.idempotent:
            raise NotIdempotent(f"intervals need the standard order; {spec.name} has none")
        if lower.shape != upper.shape:
            raise ShapeMismatch(f"endpoint shapes differ: {lower.shape} vs {upper.shape}")
        if not np.array_equal(spec.add(lower.data, upper.data), upper.data):
            raise DomainError("some interval has endpoints out of standard order")
        self.lower = lower
        self.upper = upper

    @classmethod
    def from_arrays(cls, lower, upper, spec: SemiringSpec) -> "IntervalMatrix":
        return cls(linalg.SemiringMatrix(lower, spec), linalg.SemiringMatrix(upper, spec))

    @classmethod
    def degenerate(cls, M: linalg.SemiringMatrix) -> "IntervalMatrix":
        return cls(M, M)

    @property
    def spec(self) -> SemiringSpec:
        return self.lower.spec

    @property
    def shape(self):
        return self.lower.shape

    def entry(self, i: int, j: int) -> IntervalValue:
        return IntervalValue(self.lower.data[i, j], self.upper.data[i, j], self.spec)

    def numeric_bounds(self):
        """(min_array, max_array) numeric view of the endpoint matrices."""
        return (
            np.minimum(self.lower.data, self.upper.data),
            np.maximum(self.lower.data, self.upper.data),
        )

    def contains_point(self, M: linalg.SemiringMatrix) -> bool:
        """Entrywise standard-order containment of a point matrix."""
        if M.shape != self.shape or M.spec.name != self.spec.name:
            return False
        spec = self.spec
        below = np.array_equal(spec.add(self.lower.data, M.data), M.data)
        above = np.array_equal(spec.add(M.data, self.upper.data), self.upper.data)
        return below and above

    def __eq__(self, other):
        if not isinstance(other, IntervalMatrix):
            return NotImplemented
        return self.lower == other.lower and self.upper == other.upper

    def __hash__(self):
        return hash((self.lower, self.upper))

    def __repr__(self):
        return f"IntervalMatrix(lower={self.lower!r}, upper={self.upper!r})"


def interval_matrix_add(A: IntervalMatrix, B: IntervalMatrix) -> IntervalMatrix:
    return IntervalMatrix(linalg.matrix_add(A.lower, B.lower), linalg.matrix_add(A.upper, B.upper))


def interval_matrix_mul(A: IntervalMatrix, B: IntervalMatrix) -> IntervalMatrix:
    return IntervalMatrix(linalg.matrix_mul(A.lower, B.lower), linalg.matrix_mul(A.upper, B.upper))


def interval_adjacency(n: int, edges, spec: SemiringSpec = MINPLUS) -> IntervalMatrix:
    """Interval edge matrix from (src, dst, wmin, wmax) rows.

    Numeric bounds are converted to standard-order endpoints per entry;
    parallel edges combine by interval (+); absent arcs are the degenerate
    zero interval.
    """
    lo = np.full((n, n), spec.zero)
    hi = np.full((n, n), spec.zero)
    for s, d, wmin, wmax in edges:
        s, d = int(s), int(d)
        if not (0 <= s < n and 0 <= d < n):
            raise DomainError(f"edge ({s}, {d}) out of range for {n} nodes")
        iv = IntervalValue.from_numeric(wmin, wmax, spec)
        cur = IntervalValue(lo[s, d], hi[s, d], spec)
        new = interval_add(cur, iv)
        lo[s, d], hi[s, d] = new.lower, new.upper
    return IntervalMatrix.from_arrays(lo, hi, spec)


def interval_bellman(
    H: IntervalMatrix, F: IntervalMatrix, max_iter: Optional[int] = None
) -> IntervalMatrix:
    """Least interval solution of X = H (x) X (+) F: exactly two point solves.

    The lower endpoints solve one ordinary Bellman system and the upper
    endpoints another; monotonicity of the iteration keeps the results
    ordered, so the pair is again a valid interval matrix, and each endpoint
    is attained by an admissible point problem.
    """
    if H.spec.name != F.spec.name:
        raise SpecMismatch(f"mixed semirings: {H.spec.name} vs {F.spec.name}")
    try:
        xl = linalg.solve_bellman_jacobi(H.lower, F.lower, max_iter=max_iter)
    except NonConvergent as e:
        raise NonConvergent(f"lower endpoint system: {e}", endpoint="lower") from None
    try:
        xu = linalg.solve_bellman_jacobi(H.upper, F.upper, max_iter=max_iter)
    except NonConvergent as e:
        raise NonConvergent(f"upper endpoint system: {e}", endpoint="upper") from None
    return IntervalMatrix(xl, xu)
