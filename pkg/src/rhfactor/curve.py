"""Sampled smooth closed curves in the plane.

A curve is a trigonometric polynomial ``z(theta) = sum_m c_m exp(i m theta)``
sampled at ``n`` uniform parameters ``theta_k = 2 pi k / n``. Orientation is
always the one induced by increasing ``theta``; for the curves used here that
is counterclockwise. Whether the curve is simple is the caller's business.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import AmbiguousWinding, DegenerateParametrization, InputError

__all__ = [
    "ClosedCurve",
    "unit_circle",
    "from_fourier",
    "winding_number",
    "curve_from_json",
    "curve_to_json",
]


def _frozen(a):
    a = np.asarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class ClosedCurve:
    """Node positions ``z`` and parametrization derivatives ``dz = dz/dtheta``."""

    z: np.ndarray
    dz: np.ndarray
    kind: str = "fourier"
    fourier_coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "z", _frozen(np.asarray(self.z, dtype=complex)))
        object.__setattr__(self, "dz", _frozen(np.asarray(self.dz, dtype=complex)))
        if self.z.shape != self.dz.shape or self.z.ndim != 1:
            raise InputError("z and dz must be 1-d arrays of equal length")

    @property
    def n_nodes(self) -> int:
        return self.z.shape[0]

    @property
    def theta(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_nodes) / self.n_nodes

    @property
    def weights(self) -> np.ndarray:
        """Trapezoid weights for ``integral g(zeta) dzeta`` on the curve."""
        return (2 * np.pi / self.n_nodes) * self.dz

    @property
    def diameter(self) -> float:
        d = np.abs(self.z[:, None] - self.z[None, :])
        return float(d.max())

    @property
    def mesh_width(self) -> float:
        return float(np.abs(np.roll(self.z, -1) - self.z).max())

    @property
    def centroid(self) -> complex:
        return complex(self.z.mean())

    def scaled(self, alpha: complex) -> "ClosedCurve":
        """The image ``alpha * S``; orientation is preserved."""
        if alpha == 1:
            return self
        coeffs = {m: alpha * c for m, c in self.fourier_coeffs.items()}
        return ClosedCurve(alpha * self.z, alpha * self.dz, "fourier", coeffs)

    @property
    def is_unit_circle(self) -> bool:
        return self.kind == "unit_circle"


def unit_circle(n: int) -> ClosedCurve:
    """The counterclockwise unit circle at ``n`` nodes (``n >= 8``, even)."""
    if n < 8 or n % 2:
        raise InputError(f"unit circle needs an even node count >= 8, got {n}")
    z = np.exp(2j * np.pi * np.arange(n) / n)
    # axis points exact, so z_{n/4} == 1j bitwise
    z[n // 2] = -1.0
    if n % 4 == 0:
        z[n // 4], z[3 * n // 4] = 1j, -1j
    return ClosedCurve(z, 1j * z, "unit_circle", {1: 1.0 + 0j})


def from_fourier(coeffs: Mapping[int, complex], n: int) -> ClosedCurve:
    """Curve ``z(theta) = sum_m coeffs[m] e^{i m theta}`` sampled at ``n`` nodes.

    The derivative is taken analytically from the same coefficients.
    """
    coeffs = {int(m): complex(c) for m, c in coeffs.items() if c != 0}
    if not coeffs:
        raise DegenerateParametrization("all Fourier coefficients vanish")
    K = max(abs(m) for m in coeffs)
    if n < 8 or n < 4 * K:
        raise InputError(f"need n >= max(8, 4K) = {max(8, 4 * K)}, got {n}")
    theta = 2 * np.pi * np.arange(n) / n
    z = np.zeros(n, dtype=complex)
    dz = np.zeros(n, dtype=complex)
    for m, c in sorted(coeffs.items()):
        e = np.exp(1j * m * theta)
        z += c * e
        dz += 1j * m * c * e
    speed = np.abs(dz)
    if speed.max() == 0 or speed.min() < 1e-12 * speed.max():
        raise DegenerateParametrization(
            f"|dz/dtheta| degenerates: min {speed.min():.3g}, max {speed.max():.3g}")
    return ClosedCurve(z, dz, "fourier", coeffs)


def winding_number(curve: ClosedCurve, p: complex, return_defect: bool = False):
    """Index of ``p`` with respect to the curve, by the trapezoid rule.

    With ``return_defect`` the pre-rounding value minus the integer is
    returned as well.
    """
    diff = curve.z - p
    if np.abs(diff).min() == 0:
        raise InputError(f"point {p} lies on a curve node")
    value = np.sum(curve.weights / diff) / (2j * np.pi)
    w = int(np.rint(value.real))
    defect = complex(value) - w
    if abs(defect) > 0.25:
        raise AmbiguousWinding(
            f"winding value {value:.4g} is not close to an integer; "
            "the point is too close to the curve or n is too small")
    if return_defect:
        return w, defect
    return w


def curve_from_json(obj: Mapping) -> ClosedCurve:
    kind = obj.get("kind")
    if "n" not in obj:
        raise InputError("curve: missing field 'n'")
    n = int(obj["n"])
    if kind == "unit_circle":
        return unit_circle(n)
    if kind == "fourier":
        if "coeffs" not in obj:
            raise InputError("curve: missing field 'coeffs'")
        coeffs = {}
        for i, c in enumerate(obj["coeffs"]):
            try:
                coeffs[int(c["m"])] = complex(c.get("re", 0.0), c.get("im", 0.0))
            except (KeyError, TypeError, AttributeError) as exc:
                raise InputError(f"curve: bad entry coeffs[{i}]: {c!r}") from exc
        return from_fourier(coeffs, n)
    raise InputError(f"curve: unknown kind {kind!r}")


def curve_to_json(curve: ClosedCurve) -> dict:
    if curve.is_unit_circle:
        return {"kind": "unit_circle", "n": curve.n_nodes}
    coeffs = [{"m": m, "re": c.real, "im": c.imag}
              for m, c in sorted(curve.fourier_coeffs.items())]
    return {"kind": "fourier", "n": curve.n_nodes, "coeffs": coeffs}
