"""Scalar (C*-valued) factorization on a closed curve in the plane.

Conventions: the interior of the curve is ``U-`` (it contains the base point,
normally 0), the exterior ``U+`` contains infinity. A pair ``(f_minus,
f_plus)`` of nowhere-zero loops of equal degree is glued by

    phi = log(f_plus / f_minus),   (cm, cp) = boundary values of C(phi),
    f = exp(cm) * f_minus = exp(cp) * f_plus

which is the exponential of the jump relation ``cm - cp = phi``.
"""

from __future__ import annotations

import numpy as np

from .cauchy import BoundaryFunction, boundary_values
from .curve import ClosedCurve, winding_number
from .errors import (BasepointOutside, InputError, NonzeroDegree, PhaseJumpTooLarge,
                     RankAmbiguous, ZeroValue)

__all__ = [
    "degree",
    "continuous_log",
    "factorize_scalar",
    "moduli_split",
    "class_equiv",
    "normalize_representative",
    "moduli_roundtrip",
    "solve_scalar_rh",
]

# consecutive phase increments must stay below this to unwrap uniquely
MAX_PHASE_STEP = np.pi / 2


def _scalar_samples(f) -> np.ndarray:
    if isinstance(f, BoundaryFunction):
        if f.r != 1:
            raise InputError(f"expected scalar boundary data, got r={f.r}")
        return f.samples
    return np.asarray(f, dtype=complex)


def _check_nonzero(vals: np.ndarray, what: str = "function"):
    if np.any(vals == 0) or not np.all(np.isfinite(vals)):
        raise ZeroValue(f"{what} vanishes or is not finite at some node")


def _phase_increments(vals: np.ndarray) -> np.ndarray:
    steps = np.angle(np.roll(vals, -1) / vals)
    worst = np.abs(steps).max()
    if worst >= MAX_PHASE_STEP:
        k = int(np.argmax(np.abs(steps)))
        raise PhaseJumpTooLarge(
            f"phase increment {worst:.3f} rad between nodes {k} and {k + 1} "
            "exceeds pi/2; sample more finely")
    return steps


def degree(curve: ClosedCurve, f) -> int:
    """Winding number of the loop ``k -> f_k`` around 0."""
    vals = _scalar_samples(f)
    _check_nonzero(vals)
    total = _phase_increments(vals).sum() / (2 * np.pi)
    return int(np.rint(total))


def continuous_log(curve: ClosedCurve, q) -> BoundaryFunction:
    """A continuous logarithm of a degree-zero loop.

    The branch is fixed by taking the principal value at node 0.
    """
    vals = _scalar_samples(q)
    _check_nonzero(vals)
    steps = _phase_increments(vals)
    deg = int(np.rint(steps.sum() / (2 * np.pi)))
    if deg != 0:
        raise NonzeroDegree(f"loop has degree {deg}; no continuous logarithm exists")
    arg = np.angle(vals[0]) + np.concatenate([[0.0], np.cumsum(steps[:-1])])
    return BoundaryFunction(curve, np.log(np.abs(vals)) + 1j * arg)


def factorize_scalar(curve: ClosedCurve, f_minus, f_plus):
    """Glue boundary classes ``[f_minus]`` (interior) and ``[f_plus]`` (exterior).

    Returns ``(f, cm, cp)`` with ``f = exp(cm) f_minus = exp(cp) f_plus``;
    ``cm`` extends holomorphically inside, ``cp`` outside (vanishing at
    infinity).
    """
    fm = _scalar_samples(f_minus)
    fp = _scalar_samples(f_plus)
    _check_nonzero(fm, "f_minus")
    _check_nonzero(fp, "f_plus")
    hm, hp = degree(curve, fm), degree(curve, fp)
    if hm != hp:
        raise NonzeroDegree(f"f_minus has degree {hm} but f_plus has degree {hp}")
    phi = continuous_log(curve, fp / fm)
    cm, cp = boundary_values(curve, phi)
    f = BoundaryFunction(curve, np.exp(cm.samples) * fm)
    return f, cm, cp


def _inside_point(curve: ClosedCurve, basepoint):
    if basepoint is None:
        basepoint = curve.centroid
    if winding_number(curve, basepoint) != 1:
        raise BasepointOutside(f"base point {basepoint} is not enclosed by the curve")
    return complex(basepoint)


def moduli_split(curve: ClosedCurve, f, e: int, basepoint=None):
    """Split a framed class of degree ``e`` into interior/exterior representatives.

    ``f -> (f, (z - b)^(-e) f)`` with ``b`` the interior base point (the curve
    centroid unless given).
    """
    vals = _scalar_samples(f)
    _check_nonzero(vals)
    b = _inside_point(curve, basepoint)
    plus = (curve.z - b) ** (-int(e)) * vals
    return BoundaryFunction(curve, vals), BoundaryFunction(curve, plus)


def normalize_representative(f) -> np.ndarray:
    """Scale a loop by a constant so that its first sample is real positive."""
    vals = _scalar_samples(f)
    return vals * (abs(vals[0]) / vals[0])


def moduli_roundtrip(curve: ClosedCurve, f, e: int, basepoint=None,
                     log_unit_minus=None, log_unit_plus=None):
    """Split ``f`` into its two boundary classes and glue them back.

    ``log_unit_minus`` / ``log_unit_plus`` are optional node samples of
    logarithms of holomorphic units on the interior / exterior side; the
    representatives are multiplied by their exponentials before gluing, which
    must not change the glued class. The exterior representative is untwisted
    by ``(z - b)^e`` first, reducing to the degree-0 bundle.

    Returns ``(f_glued, defect)`` where ``defect`` is the largest modulus of
    ``log(f_glued / f)`` after both are scaled to agree at node 0.
    """
    vals = _scalar_samples(f)
    b = _inside_point(curve, basepoint)
    cls_minus, cls_plus = moduli_split(curve, vals, e, b)
    fm = cls_minus.samples
    fp = cls_plus.samples * (curve.z - b) ** int(e)
    if log_unit_minus is not None:
        fm = fm * np.exp(np.asarray(log_unit_minus))
    if log_unit_plus is not None:
        fp = fp * np.exp(np.asarray(log_unit_plus))
    glued, _, _ = factorize_scalar(curve, fm, fp)
    ratio = glued.samples / vals
    if degree(curve, ratio) != 0:
        return glued, float("inf")
    ratio = ratio / ratio[0]
    defect = float(np.abs(continuous_log(curve, ratio).samples).max())
    return glued, defect


def class_equiv(curve: ClosedCurve, f, g, side: str, tol: float = 1e-7):
    """Whether ``f`` and ``g`` differ by a holomorphic unit on one side.

    ``side="interior"`` tests ``f/g = exp(h)`` with ``h`` holomorphic inside;
    ``side="exterior"`` the same with ``h`` holomorphic outside including at
    infinity. Returns ``(equivalent, defect)``; a degree mismatch gives
    ``(False, inf)``.
    """
    if side not in ("interior", "exterior"):
        raise InputError(f"side must be 'interior' or 'exterior', got {side!r}")
    q = _scalar_samples(f) / _scalar_samples(g)
    if degree(curve, q) != 0:
        return False, float("inf")
    h = continuous_log(curve, q)
    cm, cp = boundary_values(curve, h)
    if side == "interior":
        defect = np.abs(cp.samples).max()
    else:
        defect = np.abs(cm.samples - cm.samples.mean()).max()
    scale = max(1.0, float(np.abs(h.samples).max()))
    return bool(defect <= tol * scale), float(defect)


def solve_scalar_rh(curve: ClosedCurve, upsilon, m: int, d: int = -1,
                    gamma_tilde=(), N: int = 32, tol: float = 1e-8):
    """Scalar instance of the general problem ``Y+ = upsilon Y-`` with a pole
    of order ``m`` at infinity and prescribed top Laurent coefficients.

    The line bundle is ``O(-deg upsilon)``, so the homogeneous solution space
    has dimension ``max(0, m + 1 - deg upsilon)``. That closed form is
    compared with the collocation count; a disagreement raises
    :class:`~rhfactor.errors.RankAmbiguous`.
    """
    from .rh_vector import JumpDatum, solve_rh

    ups = _scalar_samples(upsilon)
    jump = JumpDatum(curve, BoundaryFunction(curve, ups))
    gamma = np.asarray(gamma_tilde, dtype=complex).reshape(-1, 1)
    report = solve_rh(jump, m, d, gamma, N=N, tol=tol)
    bundle_degree = -jump.det_degree
    expected = max(0, bundle_degree + m - d)
    if report.affine_dimension != expected:
        raise RankAmbiguous(
            f"collocation gives dimension {report.affine_dimension}, "
            f"line-bundle count gives {expected}")
    return report
