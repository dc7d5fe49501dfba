"""Cauchy transform of boundary data and its one-sided boundary values.

For a curve ``S`` bounding the interior domain ``U-`` (and the exterior
``U+`` containing infinity)::

    C(u)(z) = 1/(2 pi i) * integral_S u(zeta) / (zeta - z) dzeta

``boundary_values`` returns ``(u_minus, u_plus)``, the limits of ``C(u)`` from
inside and from outside. They satisfy ``u_minus - u_plus = u``.

On the unit circle both limits are Fourier projections. On other curves the
exterior limit is computed from the subtracted integrand
``(u(zeta) - u(z_j)) / (zeta - z_j)``, whose diagonal value ``u'(z_j)`` is
taken from a spectral derivative, and the interior limit follows by adding
``u``. Matrix-valued data is handled entrywise.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .curve import ClosedCurve, from_fourier, winding_number
from .errors import InputError

__all__ = [
    "BoundaryFunction",
    "NearCurveWarning",
    "cauchy_offcurve",
    "boundary_values",
    "plemelj_residual",
    "value_at_infinity",
    "side_transform",
    "fourier_modes",
]


class NearCurveWarning(UserWarning):
    """Off-curve evaluation within a few mesh widths of the curve."""


@dataclass(frozen=True, eq=False)
class BoundaryFunction:
    """Samples of a scalar or ``r x r`` matrix function at the curve nodes.

    ``values`` always has shape ``(n, r, r)``; scalars are stored as ``1 x 1``.
    """

    curve: ClosedCurve
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex)
        n = self.curve.n_nodes
        if v.ndim == 1:
            v = v.reshape(n if v.size == n else -1, 1, 1)
        if v.ndim != 3 or v.shape[0] != n or v.shape[1] != v.shape[2]:
            raise InputError(
                f"boundary values must have shape ({n},) or ({n}, r, r), "
                f"got {np.shape(self.values)}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_callable(cls, curve: ClosedCurve, f: Callable) -> "BoundaryFunction":
        """Sample ``f(z)`` at the nodes; ``f`` returns scalars or ``(n, r, r)``."""
        return cls(curve, f(curve.z))

    @property
    def r(self) -> int:
        return self.values.shape[1]

    @property
    def samples(self) -> np.ndarray:
        """Values as ``(n,)`` for scalars, ``(n, r, r)`` otherwise."""
        if self.r == 1:
            return self.values[:, 0, 0]
        return self.values

    def with_values(self, values) -> "BoundaryFunction":
        return BoundaryFunction(self.curve, values)


def fourier_modes(values: np.ndarray):
    """Signed mode numbers and coefficients of node samples along axis 0.

    The Nyquist mode is assigned to ``-n/2``.
    """
    n = values.shape[0]
    c = np.fft.fft(values, axis=0) / n
    ms = np.fft.fftfreq(n, 1.0 / n).astype(int)
    return ms, c


def _dtheta(values: np.ndarray) -> np.ndarray:
    n = values.shape[0]
    ms, c = fourier_modes(values)
    ik = (1j * ms).astype(complex)
    if n % 2 == 0:
        ik[n // 2] = 0
    return np.fft.ifft(ik.reshape((-1,) + (1,) * (values.ndim - 1)) * c * n, axis=0)


def _upsample(values: np.ndarray, m: int) -> np.ndarray:
    """Trigonometric interpolation of node samples onto ``m`` equispaced nodes."""
    ms, c = fourier_modes(values)
    out = np.zeros((m,) + values.shape[1:], dtype=complex)
    out[ms % m] = c
    return np.fft.ifft(out * m, axis=0)


def _fine_copy(curve: ClosedCurve, factor: int = 8) -> ClosedCurve | None:
    if curve.fourier_coeffs:
        return from_fourier(curve.fourier_coeffs, factor * curve.n_nodes)
    return None


def cauchy_offcurve(curve: ClosedCurve, u: BoundaryFunction, z: complex) -> np.ndarray:
    """Trapezoid approximation of ``C(u)(z)`` for ``z`` off the curve.

    Within five mesh widths of the curve the data are interpolated onto an
    eight times finer copy of the curve (when its Fourier description is
    known), the integrand is regularized by subtracting the value at the
    nearest node, and a :class:`NearCurveWarning`
    is issued since accuracy degrades there.
    """
    diff = curve.z - z
    dist = np.abs(diff)
    if dist.min() == 0:
        raise InputError(f"point {z} coincides with a curve node")
    w = curve.weights[:, None, None] / (2j * np.pi)
    d = diff[:, None, None]
    if dist.min() >= 5 * curve.mesh_width:
        return np.sum(w * u.values / d, axis=0)
    warnings.warn(
        f"Cauchy transform evaluated {dist.min():.2e} from the curve "
        f"(mesh width {curve.mesh_width:.2e}); result is low-accuracy",
        NearCurveWarning, stacklevel=2)
    fine = _fine_copy(curve)
    if fine is not None:
        curve, vals = fine, _upsample(u.values, fine.n_nodes)
        diff = curve.z - z
        dist = np.abs(diff)
        w = curve.weights[:, None, None] / (2j * np.pi)
        d = diff[:, None, None]
    else:
        vals = u.values
    j = int(np.argmin(dist))
    wind = winding_number(curve, z)
    return np.sum(w * (vals - vals[j]) / d, axis=0) + wind * vals[j]


def boundary_values(curve: ClosedCurve, u: BoundaryFunction):
    """Interior and exterior boundary values ``(u_minus, u_plus)`` of ``C(u)``."""
    v = u.values
    if curve.is_unit_circle:
        ms, c = fourier_modes(v)
        neg = (ms < 0)[:, None, None]
        n = curve.n_nodes
        u_minus = np.fft.ifft(np.where(neg, 0, c) * n, axis=0)
        u_plus = -np.fft.ifft(np.where(neg, c, 0) * n, axis=0)
        return u.with_values(u_minus), u.with_values(u_plus)

    n = curve.n_nodes
    zk = curve.z
    dzeta = zk[None, :] - zk[:, None]  # [j, k] = z_k - z_j
    np.fill_diagonal(dzeta, 1.0)
    kern = curve.weights[None, :] / dzeta
    np.fill_diagonal(kern, 0.0)
    kern = kern / (2j * np.pi)
    flat = v.reshape(n, -1)
    off = kern @ flat - kern.sum(axis=1)[:, None] * flat
    diag = (2 * np.pi / n) * _dtheta(flat) / (2j * np.pi)
    u_plus = (off + diag).reshape(v.shape)
    return u.with_values(v + u_plus), u.with_values(u_plus)


def plemelj_residual(curve: ClosedCurve, u: BoundaryFunction) -> float:
    """Largest entrywise defect of ``u_minus - u_plus = u`` over the nodes."""
    um, up = boundary_values(curve, u)
    return float(np.abs(um.values - up.values - u.values).max(initial=0.0))


def value_at_infinity(curve: ClosedCurve, u: BoundaryFunction) -> np.ndarray:
    """Quadrature value of ``C(u)`` at distance ``1e6 * diameter``.

    The exact limit is zero; this exists to observe the decay.
    """
    far = curve.centroid + 1e6 * curve.diameter
    return cauchy_offcurve(curve, u, far)


def side_transform(curve: ClosedCurve, u: BoundaryFunction, points, side: str,
                   node_tol: float = 1e-12) -> np.ndarray:
    """Evaluate the holomorphic continuation of one boundary value at points.

    ``side="interior"`` gives the continuation of ``u_minus`` (valid in the
    closed interior), ``side="exterior"`` that of ``u_plus`` (valid in the
    closed exterior). Points on the curve must coincide with nodes. Returns
    shape ``points.shape + (r, r)``.
    """
    if side not in ("interior", "exterior"):
        raise InputError(f"side must be 'interior' or 'exterior', got {side!r}")
    pts = np.asarray(points, dtype=complex)
    flat_pts = pts.ravel()
    r = u.r
    if curve.is_unit_circle:
        ms, c = fourier_modes(u.values)
        keep = ms >= 0 if side == "interior" else ms < 0
        ms, c = ms[keep], c[keep]
        sign = 1.0 if side == "interior" else -1.0
        if side == "interior":
            powers = flat_pts[:, None] ** ms[None, :]
        else:
            powers = (1 / flat_pts)[:, None] ** -ms[None, :]
        out = sign * np.einsum("pm,mij->pij", powers, c)
        return out.reshape(pts.shape + (r, r))

    um, up = boundary_values(curve, u)
    bv = um if side == "interior" else up
    out = np.empty((flat_pts.size, r, r), dtype=complex)
    scale = max(curve.diameter, 1.0)
    for i, p in enumerate(flat_pts):
        d = np.abs(curve.z - p)
        j = int(np.argmin(d))
        if d[j] <= node_tol * scale:
            out[i] = bv.values[j]
            continue
        out[i] = cauchy_offcurve(curve, u, p)
    return out.reshape(pts.shape + (r, r))
