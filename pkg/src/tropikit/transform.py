"""Idempotent calculus for functions sampled on uniform 1-D grids.

With (+) = max (or min) and (x) = +, the usual integral becomes a supremum,
measures become weight functions added under the sup, convolution becomes
sup-convolution, and the Fourier kernel collapses to x*xi: the transform
sup_x(xi*x + phi(x)) is precisely a Legendre transform.  Every operation
here is linear over the ambient idempotent semiring, which is why the
Hopf-Lax evolution below superposes solutions exactly.

Grid values are float64; a maxplus function may take -inf where it has no
mass, a minplus one +inf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, GridMismatch

_CONVENTIONS = ("maxplus", "minplus")


@dataclass(frozen=True)
class SampledFunction:
    """Function values on the uniform grid start + step*i, i = 0..len-1."""

    start: float
    step: float
    values: np.ndarray
    convention: str = "maxplus"

    def __post_init__(self):
        start = float(self.start)
        step = float(self.step)
        if not (math.isfinite(start) and math.isfinite(step) and step > 0):
            raise DomainError(f"bad grid: start={self.start!r} step={self.step!r}")
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise DomainError("values must be a nonempty 1-D array")
        if self.convention not in _CONVENTIONS:
            raise DomainError(f"convention must be one of {_CONVENTIONS}")
        if np.any(np.isnan(vals)):
            raise DomainError("NaN is not a carrier value")
        bad = np.isposinf(vals) if self.convention == "maxplus" else np.isneginf(vals)
        if np.any(bad):
            raise DomainError(f"{self.convention} functions cannot take that infinity")
        vals = vals + 0.0
        vals.setflags(write=False)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "step", step)
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return self.values.size

    def grid(self) -> np.ndarray:
        return self.start + self.step * np.arange(self.values.size)

    def __eq__(self, other):
        if not isinstance(other, SampledFunction):
            return NotImplemented
        return (
            self.start == other.start
            and self.step == other.step
            and self.convention == other.convention
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.start, self.step, self.convention, self.values.tobytes()))


def _extremum(convention):
    return np.max if convention == "maxplus" else np.min


def _reduce_axis(convention):
    return (lambda a: a.max(axis=1)) if convention == "maxplus" else (lambda a: a.min(axis=1))


def _same_grid(phi: SampledFunction, psi: SampledFunction) -> None:
    if phi.convention != psi.convention:
        raise GridMismatch(f"mixed conventions: {phi.convention} vs {psi.convention}")
    if phi.start != psi.start or phi.step != psi.step or len(phi) != len(psi):
        raise GridMismatch("functions are sampled on different grids")


def idempotent_integral(phi: SampledFunction) -> float:
    """Integral with values in the idempotent semiring: the grid extremum."""
    return float(_extremum(phi.convention)(phi.values)) + 0.0


def integral_wrt_measure(phi: SampledFunction, psi: SampledFunction) -> float:
    """Integral of phi against the density psi: extremum of phi + psi."""
    _same_grid(phi, psi)
    return float(_extremum(phi.convention)(phi.values + psi.values)) + 0.0


def pointwise_add(phi: SampledFunction, psi: SampledFunction) -> SampledFunction:
    """(+) of functions: pointwise max (or min)."""
    _same_grid(phi, psi)
    op = np.maximum if phi.convention == "maxplus" else np.minimum
    return SampledFunction(phi.start, phi.step, op(phi.values, psi.values), phi.convention)


def scalar_mul(c: float, phi: SampledFunction) -> SampledFunction:
    """(x) by a scalar: shift the whole function by c."""
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"scalar must be finite, got {c!r}")
    return SampledFunction(phi.start, phi.step, phi.values + c, phi.convention)


def convolution(phi: SampledFunction, psi: SampledFunction) -> SampledFunction:
    """Idempotent convolution (phi (*) psi)(g) = extremum_x phi(x) + psi(g - x).

    Grids must share step and convention; the output grid spans
    [start_phi + start_psi, end_phi + end_psi] at the same step.  A single
    sample at 0 with value 0 is the unit.
    """
    if phi.convention != psi.convention:
        raise GridMismatch(f"mixed conventions: {phi.convention} vs {psi.convention}")
    if phi.step != psi.step:
        raise GridMismatch(f"mixed steps: {phi.step!r} vs {psi.step!r}")
    red = _extremum(phi.convention)
    a, b = phi.values, psi.values
    rev = b[::-1]
    nb = b.size
    out = np.empty(a.size + b.size - 1)
    for k in range(out.size):
        i0 = max(0, k - nb + 1)
        i1 = min(a.size - 1, k)
        out[k] = red(a[i0 : i1 + 1] + rev[nb - 1 - k + i0 : nb - k + i1])
    return SampledFunction(phi.start + psi.start, phi.step, out, phi.convention)


def legendre(
    phi: SampledFunction, xi_start: float, xi_step: float, xi_count: int
) -> SampledFunction:
    """phi~(xi) = max_x (xi*x + phi(x)) on the requested slope grid.

    Requires the maxplus convention (the transform is the sup-kernel
    integral with kernel xi*x).  The result is convex in xi: it is a finite
    max of affine functions with slopes on the x grid.
    """
    if phi.convention != "maxplus":
        raise DomainError("the slope transform is defined for maxplus functions")
    xi_count = int(xi_count)
    if xi_count < 1:
        raise DomainError("need at least one output sample")
    xi_start = float(xi_start)
    xi_step = float(xi_step)
    if not (math.isfinite(xi_start) and math.isfinite(xi_step) and xi_step > 0):
        raise DomainError(f"bad grid: start={xi_start!r} step={xi_step!r}")
    xs = phi.grid()
    xis = xi_start + xi_step * np.arange(xi_count)
    out = np.empty(xi_count)
    block = max(1, 2_000_000 // xs.size)
    for lo in range(0, xi_count, block):
        chunk = xis[lo : lo + block, None] * xs[None, :] + phi.values[None, :]
        out[lo : lo + block] = chunk.max(axis=1)
    return SampledFunction(xi_start, xi_step, out, "maxplus")


def hopf_lax_evolve(s0: SampledFunction, t: float, m: float = 1.0) -> SampledFunction:
    """Value function at time t of the free Hamilton-Jacobi flow:

        S(x, t) = min_y ( s0(y) + m*(x - y)^2 / (2t) )

    i.e. the min-plus integral operator with the parabolic Green kernel; s0
    must be a minplus function.  The output lives on the same grid.
    """
    if s0.convention != "minplus":
        raise DomainError("the evolution acts on minplus initial data")
    t = float(t)
    m = float(m)
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"time must be a positive real, got {t!r}")
    if not (math.isfinite(m) and m > 0):
        raise DomainError(f"mass must be a positive real, got {m!r}")
    ys = s0.grid()
    c = m / (2.0 * t)
    out = np.empty(len(s0))
    block = max(1, 2_000_000 // ys.size)
    for lo in range(0, len(s0), block):
        diff = ys[lo : lo + block, None] - ys[None, :]
        chunk = s0.values[None, :] + c * (diff * diff)
        out[lo : lo + block] = chunk.min(axis=1)
    return SampledFunction(s0.start, s0.step, out, "minplus")
