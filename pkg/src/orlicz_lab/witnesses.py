"""Analytic witness families.

These are the concrete functions the norm inequalities are exercised on:
monomials, polynomials, squared reproducing-type kernels pinned to a boundary
point, their scaled variants normalized to the unit ball of the circle space,
and the radial point-evaluation envelope 4 * Psi^{-1}(1/(1-|z|)).
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .functions import OrliczFunction


@dataclass(frozen=True)
class Monomial:
    n: int
    analytic: bool = True
    scale_hint: float | None = None
    focus_angle: float | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("monomial degree must be >= 0")

    def values(self, z):
        return np.asarray(z) ** self.n

    @property
    def label(self):
        return f"monomial(n={self.n})"

    def to_spec(self):
        return {"form": "monomial", "n": self.n}


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple  # complex, ascending degree
    analytic: bool = True
    scale_hint: float | None = None
    focus_angle: float | None = None

    def values(self, z):
        return np.polynomial.polynomial.polyval(np.asarray(z), np.asarray(self.coeffs))

    @property
    def label(self):
        return f"polynomial(degree={len(self.coeffs) - 1})"

    def to_spec(self):
        return {
            "form": "polynomial",
            "coeffs": [[float(np.real(c)), float(np.imag(c))] for c in self.coeffs],
        }


@dataclass(frozen=True)
class KernelSquared:
    """u(z) = h^2 / (1 - (1-h) conj(xi) z)^2 with |xi| = 1.

    Peaks with value 1 at z = xi (and at (1-h) xi inside the disk the value is
    still above 1/9 on the whole window |z - (1-h) xi| < h); |u| <= 1 on the
    closed disk.
    """

    h: float
    xi_angle: float = 0.0
    analytic: bool = True

    def __post_init__(self):
        if not (0.0 < self.h < 0.5):
            raise ValueError(f"kernel parameter h must lie in (0, 1/2), got {self.h}")

    def values(self, z):
        xi_bar = cmath.exp(-1j * self.xi_angle)
        denom = 1.0 - (1.0 - self.h) * xi_bar * np.asarray(z)
        return (self.h / denom) ** 2 * np.ones_like(denom)

    @property
    def scale_hint(self):
        return self.h

    @property
    def focus_angle(self):
        return self.xi_angle

    @property
    def label(self):
        return f"kernel_squared(h={self.h:g}, xi_angle={self.xi_angle:g})"

    def to_spec(self):
        return {"form": "kernel_squared", "h": self.h, "xi_angle": self.xi_angle}


@dataclass(frozen=True)
class ScaledKernel:
    """f(z) = x_j ((1 - r_j) / (1 - r_j conj(xi) z))^2 with r_j = 1 - 1/Psi(x_j).

    Sits inside the unit ball of the circle space and witnesses the lower half
    of the point-evaluation bound: |f(1 - h)| >= Psi^{-1}(1/h) / 4 for
    h = 1 - r_j.
    """

    x_j: float
    r_j: float
    xi_angle: float = 0.0
    analytic: bool = True

    def __post_init__(self):
        if not (0.0 < self.r_j < 1.0):
            raise ValueError(f"r_j must lie in (0, 1), got {self.r_j}")
        if self.x_j <= 0:
            raise ValueError("x_j must be positive")

    def values(self, z):
        xi_bar = cmath.exp(-1j * self.xi_angle)
        denom = 1.0 - self.r_j * xi_bar * np.asarray(z)
        return self.x_j * ((1.0 - self.r_j) / denom) ** 2 * np.ones_like(denom)

    @property
    def scale_hint(self):
        return 1.0 - self.r_j

    @property
    def focus_angle(self):
        return self.xi_angle

    @property
    def label(self):
        return f"scaled_kernel(x_j={self.x_j:g}, r_j={self.r_j:.12g})"

    def to_spec(self):
        return {"form": "scaled_kernel", "x_j": self.x_j, "xi_angle": self.xi_angle}


class EvaluationEnvelope:
    """S(z) = 4 Psi^{-1}(1/(1-|z|)), the radial envelope of point evaluations
    over the unit ball of the circle space.  Not analytic; disk-only."""

    analytic = False
    scale_hint = None
    focus_angle = None

    def __init__(self, psi: OrliczFunction):
        self.psi = psi

    def values(self, z):
        z = np.asarray(z)
        absz = np.abs(z)
        if np.any(absz >= 1.0):
            raise ValueError("the evaluation envelope is defined on the open disk only")
        log_u = -np.log1p(-absz)
        out = 4.0 * np.exp(np.asarray(self.psi.inverse_log(log_u)))
        # Psi^{-1}(y) -> 0 as y -> 0 but inverse_log(-inf) would be nan
        out = np.where(absz == 0.0, 4.0 * self.psi.inverse(1.0), out)
        return out

    @property
    def label(self):
        return f"evaluation_envelope({self.psi.label})"

    def to_spec(self):
        return {"form": "evaluation_envelope"}


def make_monomial(n: int) -> Monomial:
    return Monomial(n)


def make_polynomial(coeffs) -> Polynomial:
    return Polynomial(tuple(complex(c) for c in coeffs))


def make_kernel_squared(h: float, xi_angle: float = 0.0) -> KernelSquared:
    return KernelSquared(h, xi_angle)


def make_scaled_kernel(psi: OrliczFunction, x_j: float, xi_angle: float = 0.0) -> ScaledKernel:
    """Kernel witness normalized through r_j = 1 - 1/Psi(x_j); requires
    Psi(x_j) > 2 so that r_j lands in (1/2, 1)."""
    v = psi.eval(x_j)
    if v <= 2.0:
        raise ValueError(
            f"need Psi(x_j) > 2 for the scaled kernel, got Psi({x_j:g}) = {v:g}"
        )
    return ScaledKernel(x_j=float(x_j), r_j=1.0 - 1.0 / v, xi_angle=xi_angle)


def make_evaluation_envelope(psi: OrliczFunction) -> EvaluationEnvelope:
    return EvaluationEnvelope(psi)


@dataclass(frozen=True)
class KernelFamily:
    """The rotated family u_j, j = 0..N-1, N = floor(1/h) + 1, xi_j spread
    uniformly over the circle.  Boundary sums of |u_j| stay below
    e^2/(e-1)^2 no matter how small h gets."""

    h: float
    members: tuple

    @property
    def n_funcs(self) -> int:
        return len(self.members)

    def boundary_sum(self, t):
        """sum_j |u_j(e^{it})| at angles t (vectorized)."""
        z = np.exp(1j * np.atleast_1d(np.asarray(t, dtype=float)))
        total = np.zeros(len(z))
        for u in self.members:
            total += np.abs(u.values(z))
        return total

    def boundary_sample_angles(self, n_samples: int = 512) -> np.ndarray:
        """Uniform angles plus the member peak angles (the local maxima)."""
        base = 2.0 * math.pi * np.arange(n_samples) / n_samples
        peaks = np.array([u.xi_angle for u in self.members])
        return np.sort(np.concatenate([base, peaks]))


def make_kernel_family(h: float) -> KernelFamily:
    if not (0.0 < h <= 0.125):
        raise ValueError(f"family parameter h must lie in (0, 1/8], got {h}")
    n = int(math.floor(1.0 / h)) + 1
    members = tuple(
        KernelSquared(h, 2.0 * math.pi * j / n) for j in range(n)
    )
    return KernelFamily(h=h, members=members)


def parse_sampled_spec(spec, psi: OrliczFunction | None = None):
    """Build a sampled function from its JSON document.

    scaled_kernel and evaluation_envelope need the Orlicz function used to
    normalize them, passed as ``psi``.
    """
    if isinstance(spec, (str, bytes)):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ValueError(f"sampled-function spec is not valid JSON: {exc}") from None
    if not isinstance(spec, dict):
        raise ValueError("sampled-function spec must be a JSON object")
    form = spec.get("form")
    if form == "monomial":
        return make_monomial(int(spec["n"]))
    if form == "polynomial":
        return make_polynomial([complex(re, im) for re, im in spec["coeffs"]])
    if form == "constant":
        return make_polynomial([complex(spec["value"])])
    if form == "kernel_squared":
        return make_kernel_squared(float(spec["h"]), float(spec.get("xi_angle", 0.0)))
    if form == "scaled_kernel":
        if psi is None:
            raise ValueError("scaled_kernel needs an Orlicz function for normalization")
        return make_scaled_kernel(psi, float(spec["x_j"]), float(spec.get("xi_angle", 0.0)))
    if form == "evaluation_envelope":
        if psi is None:
            raise ValueError("evaluation_envelope needs an Orlicz function")
        return make_evaluation_envelope(psi)
    raise ValueError(f"unknown sampled-function form {form!r}")
