"""Line-bundle factorization on the elliptic curve C*/<alpha>.

The curve is cut along the image of ``S+``; what remains is the closed
annulus between ``S- = alpha S+`` and ``S+``. Given boundary loops ``f+`` on
``S+`` and ``f-`` on ``S-`` of the same degree about 0, let
``exp(phi(z)) = f+(z) / f-(alpha z)`` on ``S+`` and::

    psi(z) = sum_{k>=0} c(phi)(alpha^k z) + sum_{k>=1} C+(phi)(alpha^-k z)

with ``c(phi) = C-(phi) - C-(phi)(0)``. Then
``psi(z) - psi(alpha z) = phi(z) - c0`` where ``c0 = C-(phi)(0)``, and the
loops ``g+- = exp(-psi) f+-`` satisfy ``g-(alpha z) = lam g+(z)`` with
``lam = exp(-c0)``. ``lam`` is the multiplier of the flat bundle carrying the
glued section.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cauchy import BoundaryFunction, cauchy_offcurve, fourier_modes, side_transform
from .curve import ClosedCurve, from_fourier, winding_number
from .errors import AmbiguousWinding, InputError, OutsideAnnulus, SeriesNotConverged
from .rh_scalar import continuous_log, degree

__all__ = [
    "EllipticProblem",
    "EllipticFactorization",
    "elliptic_phi",
    "elliptic_psi",
    "elliptic_factorize",
    "series_lengths",
    "psi_polar_grid",
]

MAX_TERMS = 10_000


@dataclass(frozen=True, eq=False)
class EllipticProblem:
    """Modulus ``alpha``, the outer curve and the two boundary loops.

    ``f_minus`` is sampled at the scaled nodes ``alpha * s_plus.z``.
    """

    alpha: complex
    s_plus: ClosedCurve
    f_plus: np.ndarray
    f_minus: np.ndarray

    def __post_init__(self):
        a = complex(self.alpha)
        if not 0 < abs(a) < 1:
            raise InputError(f"need 0 < |alpha| < 1, got {self.alpha}")
        object.__setattr__(self, "alpha", a)
        n = self.s_plus.n_nodes
        for name in ("f_plus", "f_minus"):
            v = getattr(self, name)
            v = np.array(v.samples if isinstance(v, BoundaryFunction) else v, dtype=complex)
            if v.shape != (n,):
                raise InputError(f"{name} must have {n} scalar samples")
            v.setflags(write=False)
            object.__setattr__(self, name, v)
        if winding_number(self.s_plus, 0) != 1:
            raise InputError("the outer curve must enclose 0")
        fine = _fine(self.s_plus)
        try:
            inside = all(winding_number(fine, w) == 1 for w in a * self.s_plus.z)
        except AmbiguousWinding as exc:
            raise InputError("alpha * S+ is too close to S+ for this sampling; "
                             "increase n") from exc
        if not inside:
            raise InputError("alpha * S+ is not contained inside S+")
        dp = degree(self.s_plus, self.f_plus)
        dm = degree(self.s_minus, self.f_minus)
        if dp != dm:
            raise InputError(f"f_plus has degree {dp} but f_minus has degree {dm}")

    @property
    def s_minus(self) -> ClosedCurve:
        return self.s_plus.scaled(self.alpha)

    @property
    def n(self) -> int:
        return degree(self.s_plus, self.f_plus)

    @classmethod
    def from_callables(cls, alpha, s_plus: ClosedCurve, f_plus, f_minus):
        alpha = complex(alpha)
        return cls(alpha, s_plus, f_plus(s_plus.z), f_minus(alpha * s_plus.z))


@dataclass
class EllipticFactorization:
    lam: complex
    g_plus: np.ndarray
    g_minus: np.ndarray
    residual: float
    identity_defect: float
    c0: complex
    phi: np.ndarray
    psi_plus: np.ndarray
    psi_minus: np.ndarray
    terms: tuple


def _fine(curve: ClosedCurve) -> ClosedCurve:
    if curve.fourier_coeffs:
        return from_fourier(curve.fourier_coeffs, 8 * curve.n_nodes)
    return curve


def elliptic_phi(p: EllipticProblem) -> BoundaryFunction:
    """Continuous logarithm of ``f+(z) / f-(alpha z)`` on ``S+``."""
    return continuous_log(p.s_plus, p.f_plus / p.f_minus)


class _Transforms:
    """Interior (minus its value at 0) and exterior continuations of C(phi)."""

    def __init__(self, curve: ClosedCurve, phi: BoundaryFunction):
        self.curve = curve
        self.phi = phi
        if curve.is_unit_circle:
            ms, c = fourier_modes(phi.values[:, 0, 0])
            self.ms, self.c = ms, c
            self.c0 = complex(c[ms == 0].sum())
        else:
            self.c0 = complex(cauchy_offcurve(curve, phi, 0.0)[0, 0])

    def inner(self, pts):
        pts = np.asarray(pts, dtype=complex)
        if self.curve.is_unit_circle:
            sel = self.ms > 0
            return (pts[..., None] ** self.ms[sel]) @ self.c[sel]
        return side_transform(self.curve, self.phi, pts, "interior")[..., 0, 0] - self.c0

    def outer(self, pts):
        pts = np.asarray(pts, dtype=complex)
        if self.curve.is_unit_circle:
            sel = self.ms < 0
            return -((1 / pts)[..., None] ** -self.ms[sel]) @ self.c[sel]
        return side_transform(self.curve, self.phi, pts, "exterior")[..., 0, 0]


def _n_terms(alpha: complex, sup: float, tol: float) -> int:
    if sup <= tol * (1 - abs(alpha)) * 1e-3:
        return 1
    K = int(np.ceil(np.log(tol * (1 - abs(alpha)) / sup) / np.log(abs(alpha)))) + 2
    K = max(K, 1)
    if K > MAX_TERMS:
        raise SeriesNotConverged(
            f"series needs {K} terms for tol={tol:g} with |alpha|={abs(alpha):.6f}")
    return K


def series_lengths(p: EllipticProblem, phi: BoundaryFunction, tol: float = 1e-10):
    """Numbers of inner and outer terms needed for ``tol``.

    Uses the geometric tail bound for holomorphic functions vanishing at the
    center of a disk: the k-th term is at most ``|alpha|^k`` times the
    supremum of the transform on ``S+``.
    """
    tr = _Transforms(p.s_plus, phi)
    z = p.s_plus.z
    sup_in = float(np.abs(tr.inner(z)).max())
    sup_out = float(np.abs(tr.outer(z)).max())
    return _n_terms(p.alpha, sup_in, tol), _n_terms(p.alpha, sup_out, tol) + 1


def _in_annulus(p: EllipticProblem, pts) -> np.ndarray:
    outer, inner = _fine(p.s_plus), _fine(p.s_minus)
    scale = max(p.s_plus.diameter, 1.0)
    ok = np.empty(pts.size, dtype=bool)
    for i, z in enumerate(pts.ravel()):
        on_plus = np.abs(p.s_plus.z - z).min() <= 1e-12 * scale
        on_minus = np.abs(p.s_minus.z - z).min() <= 1e-12 * scale
        if on_plus or on_minus:
            ok[i] = True
            continue
        try:
            ok[i] = winding_number(outer, z) == 1 and winding_number(inner, z) == 0
        except (AmbiguousWinding, InputError):
            ok[i] = False
    return ok.reshape(pts.shape)


def elliptic_psi(p: EllipticProblem, phi: BoundaryFunction, z, tol: float = 1e-10,
                 return_terms: bool = False, check: bool = True):
    """Evaluate ``psi`` at points of the closed annulus.

    With ``return_terms`` also returns the per-term maximum moduli (over the
    given points) of the inner and outer series.
    """
    pts = np.asarray(z, dtype=complex)
    if check and not np.all(_in_annulus(p, pts)):
        raise OutsideAnnulus("some evaluation points lie outside the closed annulus")
    tr = _Transforms(p.s_plus, phi)
    k_in, k_out = series_lengths(p, phi, tol)
    a = p.alpha
    psi = np.zeros(pts.shape, dtype=complex)
    inner_max = np.zeros(k_in)
    outer_max = np.zeros(k_out)
    for k in range(k_in):
        term = tr.inner(a ** k * pts)
        inner_max[k] = np.abs(term).max(initial=0.0)
        psi += term
    for k in range(1, k_out + 1):
        term = tr.outer(a ** (-k) * pts)
        outer_max[k - 1] = np.abs(term).max(initial=0.0)
        psi += term
    if return_terms:
        return psi, inner_max, outer_max
    return psi


def elliptic_factorize(p: EllipticProblem, tol: float = 1e-10) -> EllipticFactorization:
    """Factor ``(f+, f-)`` into the multiplier ``lam`` and the section ``(g+, g-)``."""
    phi = elliptic_phi(p)
    tr = _Transforms(p.s_plus, phi)
    c0 = tr.c0
    lam = np.exp(-c0)
    zp = p.s_plus.z
    psi_plus, inner_max, outer_max = elliptic_psi(p, phi, zp, tol, return_terms=True,
                                                  check=False)
    psi_minus = elliptic_psi(p, phi, p.alpha * zp, tol, check=False)
    g_plus = np.exp(-psi_plus) * p.f_plus
    g_minus = np.exp(-psi_minus) * p.f_minus
    residual = float(np.abs(g_minus - lam * g_plus).max())
    defect = float(np.abs(psi_plus - psi_minus - phi.samples + c0).max())
    return EllipticFactorization(
        lam=complex(lam), g_plus=g_plus, g_minus=g_minus, residual=residual,
        identity_defect=defect, c0=c0, phi=phi.samples, psi_plus=psi_plus,
        psi_minus=psi_minus, terms=(inner_max, outer_max))


def psi_polar_grid(p: EllipticProblem, n_radial: int = 16, tol: float = 1e-10):
    """``psi`` on the grid ``alpha^t z_k``, ``t`` from 0 to 1, for plotting.

    Returns ``(t, points, values)`` with ``points``/``values`` of shape
    ``(n_radial, n)``. For curves that are not star-shaped about 0 some
    grid points may leave the annulus, which raises.
    """
    phi = elliptic_phi(p)
    t = np.linspace(0.0, 1.0, n_radial)
    pts = p.alpha ** t[:, None] * p.s_plus.z[None, :]
    return t, pts, elliptic_psi(p, phi, pts, tol)
