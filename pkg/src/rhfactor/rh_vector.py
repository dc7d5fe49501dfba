"""Matrix Riemann-Hilbert problems by Taylor/Laurent collocation.

The unknown is a pair ``Y-`` (holomorphic inside the curve) and ``Y+``
(holomorphic outside, with a pole of order at most ``m`` at infinity) of
``C^r``-valued functions glued by ``Y+ = rho(upsilon) Y-`` on the curve.
Both are truncated to ``N + 1`` terms about an interior center ``z0``::

    Y-(z) = sum_{j=0..N} a_j (z - z0)^j
    Y+(z) = sum_{j=0..N} b_j (z - z0)^(m - j)

and the jump relation is imposed at every node. The null space of the
resulting ``(n r) x (2 r (N + 1))`` system approximates the space of global
sections of the twisted bundle ``V(m inf)``; its dimension as a function of
``m`` is the staircase ``sum_j max(0, n_j + m + 1)`` from which the
splitting type ``(n_1 >= ... >= n_r)`` is read off.

With the jump convention ``Y+ = upsilon Y-``, the scalar jump ``zeta^k``
yields the single index ``-k``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import linalg
from scipy.special import binom

from .cauchy import BoundaryFunction
from .curve import ClosedCurve, winding_number
from .errors import DegenerateConstraint, InputError, NotSL2, RankAmbiguous, SumMismatch
from .rh_scalar import degree

__all__ = [
    "JumpDatum",
    "SplittingType",
    "RHSolveReport",
    "h0_dimension",
    "h0_basis",
    "splitting_type",
    "solve_rh",
    "sl2_stratum",
    "coefficient_decay_ratio",
]

DEFAULT_N = 32
DEFAULT_TOL = 1e-8
RANK_GAP = 1e3


@dataclass(frozen=True, eq=False)
class JumpDatum:
    """Sampled invertible jump matrices ``rho(upsilon)`` on a curve."""

    curve: ClosedCurve
    rho_upsilon: BoundaryFunction
    center: complex | None = None
    det_degree: int = field(init=False)

    def __post_init__(self):
        if self.rho_upsilon.curve is not self.curve and \
                self.rho_upsilon.values.shape[0] != self.curve.n_nodes:
            raise InputError("jump samples do not match the curve")
        dets = np.linalg.det(self.rho_upsilon.values)
        scale = np.abs(self.rho_upsilon.values).max()
        if np.abs(dets).min() <= 1e-14 * max(scale, 1.0) ** self.r:
            raise InputError("jump matrix is singular at some node")
        object.__setattr__(self, "det_degree", degree(self.curve, dets))
        c = self.center
        if c is None:
            c = 0.0 if winding_number(self.curve, 0.0) == 1 else self.curve.centroid
        elif winding_number(self.curve, c) != 1:
            raise InputError(f"expansion center {c} is not inside the curve")
        object.__setattr__(self, "center", complex(c))

    @property
    def r(self) -> int:
        return self.rho_upsilon.r

    @property
    def radius(self) -> float:
        """Mean distance from the center to the nodes; used to scale powers."""
        return float(np.abs(self.curve.z - self.center).mean())

    @property
    def dets(self) -> np.ndarray:
        return np.linalg.det(self.rho_upsilon.values)

    @classmethod
    def from_callable(cls, curve: ClosedCurve, f, center=None) -> "JumpDatum":
        vals = np.asarray(f(curve.z), dtype=complex)
        return cls(curve, BoundaryFunction(curve, vals), center)


@dataclass(frozen=True)
class SplittingType:
    """Partial indices, sorted decreasingly, and the staircase they came from."""

    indices: tuple
    staircase: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __getitem__(self, i):
        return self.indices[i]


@dataclass
class RHSolveReport:
    solvable: bool
    residual: float
    affine_dimension: int
    interior_coeffs: np.ndarray
    exterior_coeffs: np.ndarray
    parameters: dict
    center: complex = 0j
    boundary_defect: float = 0.0
    constraint_defect: float = 0.0
    tolerance: float = DEFAULT_TOL
    basis_interior: np.ndarray | None = None
    basis_exterior: np.ndarray | None = None

    def interior(self, z):
        """Evaluate ``Y-`` at points ``z``; returns shape ``z.shape + (r,)``."""
        return _eval_series(self.interior_coeffs, np.asarray(z) - self.center, 0, +1)

    def exterior(self, z):
        m = self.parameters["m"]
        return _eval_series(self.exterior_coeffs, np.asarray(z) - self.center, m, -1)


def _eval_series(coeffs, w, m, sign):
    j = np.arange(coeffs.shape[1])
    powers = w[..., None] ** (m + sign * j)
    return np.einsum("...j,cj->...c", powers, coeffs)


def _check_truncation(jump: JumpDatum, m: int, N: int):
    if N < abs(m) + 4:
        raise InputError(f"truncation N={N} too small for pole order m={m}; need N >= |m| + 4")
    if jump.curve.n_nodes < 2 * (N + 1):
        raise InputError(
            f"{jump.curve.n_nodes} nodes cannot resolve N={N}; need n >= 2(N + 1)")


def _collocation(jump: JumpDatum, m: int, N: int) -> np.ndarray:
    """Rows ``(k, c)``: ``Y+_c(z_k) - sum_c' rho_k[c, c'] Y-_c'(z_k)``.

    Unknowns are ordered ``[a_{c,j}], [b_{c,j}]`` in the scaled variable
    ``t = (z - z0) / radius``; rows carry the trapezoid weight ``1/sqrt(n)``.
    """
    n, r = jump.curve.n_nodes, jump.r
    t = (jump.curve.z - jump.center) / jump.radius
    j = np.arange(N + 1)
    t_int = t[:, None] ** j[None, :]
    t_ext = t[:, None] ** (m - j)[None, :]
    rho = jump.rho_upsilon.values
    a_block = -np.einsum("kcd,kj->kcdj", rho, t_int).reshape(n * r, r * (N + 1))
    b_block = np.einsum("cd,kj->kcdj", np.eye(r), t_ext).reshape(n * r, r * (N + 1))
    return np.hstack([a_block, b_block]) / np.sqrt(n)


def _null_space(M: np.ndarray, tol: float):
    """Numerical null space with the relative threshold and a gap check."""
    _, s, vh = linalg.svd(M, full_matrices=True)
    ncols = M.shape[1]
    if s.size == 0 or s[0] == 0:
        return np.eye(ncols, dtype=complex), s
    s_full = np.concatenate([s, np.zeros(ncols - s.size)])
    discard = s_full <= tol * s[0]
    nullity = int(discard.sum())
    if 0 < nullity < ncols:
        kept_min = s_full[~discard].min()
        disc_max = s_full[discard].max()
        if disc_max > 0 and kept_min / disc_max < RANK_GAP:
            raise RankAmbiguous(
                f"no singular value gap: smallest kept {kept_min:.3e}, "
                f"largest discarded {disc_max:.3e}; increase N or adjust tol")
    return vh[ncols - nullity:].conj().T, s_full


def _unscale(x: np.ndarray, jump: JumpDatum, m: int, N: int):
    """Split a scaled unknown vector into unscaled (interior, exterior) arrays."""
    r = jump.r
    j = np.arange(N + 1)
    rad = jump.radius
    a = x[: r * (N + 1)].reshape(r, N + 1) / rad ** j
    b = x[r * (N + 1):].reshape(r, N + 1) / rad ** (m - j)
    return a, b


def h0_basis(jump: JumpDatum, m: int, N: int = DEFAULT_N, tol: float = DEFAULT_TOL):
    """Basis of sections of ``V(m inf)`` as coefficient arrays.

    Returns ``(interior, exterior)`` of shape ``(dim, r, N + 1)``.
    """
    _check_truncation(jump, m, N)
    Z, _ = _null_space(_collocation(jump, m, N), tol)
    pairs = [_unscale(Z[:, i], jump, m, N) for i in range(Z.shape[1])]
    shape = (0, jump.r, N + 1)
    interior = np.array([p[0] for p in pairs]) if pairs else np.zeros(shape, complex)
    exterior = np.array([p[1] for p in pairs]) if pairs else np.zeros(shape, complex)
    return interior, exterior


def h0_dimension(jump: JumpDatum, m: int, N: int = DEFAULT_N, tol: float = DEFAULT_TOL) -> int:
    """Dimension of the space of solutions with pole order ``<= m`` at infinity."""
    _check_truncation(jump, m, N)
    Z, _ = _null_space(_collocation(jump, m, N), tol)
    return Z.shape[1]


def _indices_from_staircase(dims: dict, r: int):
    ms = sorted(dims)
    indices = []
    prev_inc = 0
    for lo, hi in zip(ms[:-1], ms[1:]):
        inc = dims[hi] - dims[lo]
        if inc < prev_inc or inc > r:
            raise RankAmbiguous(
                f"staircase increments not monotone in [0, {r}]: {dims}")
        indices += [-hi] * (inc - prev_inc)
        prev_inc = inc
    return tuple(sorted(indices, reverse=True)), prev_inc


def splitting_type(jump: JumpDatum, N: int = DEFAULT_N, tol: float = DEFAULT_TOL) -> SplittingType:
    """Partial indices of the jump, read off the dimension staircase.

    ``dim_m - dim_{m-1}`` counts the indices with ``n_j >= -m``. The range of
    ``m`` starts at ``+-(|det_degree| + r + 3)`` and widens until the bottom
    dimension is 0 and the top increment equals ``r``.
    """
    r = jump.r
    guess = abs(jump.det_degree) + r + 2
    lo, hi = -(guess + 1), guess + 1
    dims = {m: h0_dimension(jump, m, N, tol) for m in range(lo, hi + 1)}
    while True:
        if dims[lo] != 0:
            lo -= 1
            dims[lo] = h0_dimension(jump, lo, N, tol)
            continue
        if dims[hi] - dims[hi - 1] != r:
            hi += 1
            dims[hi] = h0_dimension(jump, hi, N, tol)
            continue
        break
    indices, top = _indices_from_staircase(dims, r)
    if top != r or len(indices) != r:
        raise RankAmbiguous(f"staircase did not saturate at r={r}: {dims}")
    if sum(indices) != -jump.det_degree:
        raise SumMismatch(
            f"indices {indices} sum to {sum(indices)}, expected {-jump.det_degree}")
    return SplittingType(indices, dict(sorted(dims.items())))


def _constraint_rows(jump: JumpDatum, m: int, d: int, N: int):
    """Rows fixing the Laurent coefficients of ``z^(m-i)``, ``i = 0..d``, of ``Y+``.

    ``(z - z0)^(m-j) = sum_l binom(m-j, l) (-z0)^l z^(m-j-l)``, so the
    coefficient of ``z^(m-i)`` is ``sum_{j<=i} binom(m-j, i-j) (-z0)^(i-j) b_j``.
    """
    r = jump.r
    z0 = jump.center
    rad = jump.radius
    nunk = 2 * r * (N + 1)
    C = np.zeros(((d + 1) * r, nunk), dtype=complex)
    for i in range(d + 1):
        for j in range(i + 1):
            w = binom(m - j, i - j) * (-z0) ** (i - j) / rad ** (m - j)
            for c in range(r):
                C[i * r + c, r * (N + 1) + c * (N + 1) + j] = w
    return C


def solve_rh(jump: JumpDatum, m: int, d: int = -1, gamma_tilde=None,
             N: int = DEFAULT_N, tol: float = DEFAULT_TOL) -> RHSolveReport:
    """Solve ``Y+ = rho(upsilon) Y-`` with ``z^(d-m) Y+(z) - gamma(z) -> 0``.

    ``gamma_tilde`` has shape ``(d + 1, r)``; row ``s`` is the coefficient of
    ``z^s`` in the polynomial ``gamma`` (equivalently of ``zeta^(-s)`` in its
    expansion at infinity), so row ``d`` is the leading one and must be
    nonzero. The constraints fix the coefficients of ``z^m, ..., z^(m-d)`` of
    ``Y+`` to rows ``d, ..., 0``.

    Solvability is decided by the least-squares residual (RMS over the nodes)
    against ``tol * max(1, |gamma|)``. ``affine_dimension`` is the dimension
    of the homogeneous constrained system, i.e. of sections with pole order
    ``<= m - d - 1``.
    """
    r = jump.r
    if d < -1:
        raise InputError(f"d must be >= -1, got {d}")
    gamma = np.zeros((0, r), complex) if gamma_tilde is None else \
        np.asarray(gamma_tilde, dtype=complex).reshape(-1, r)
    if gamma.shape[0] != d + 1:
        raise InputError(f"gamma_tilde must have d + 1 = {d + 1} rows, got {gamma.shape[0]}")
    if d >= 0 and not np.any(gamma[d] != 0):
        raise DegenerateConstraint("leading coefficient of gamma vanishes")
    if d > N:
        raise InputError(f"degree d={d} exceeds truncation N={N}")
    _check_truncation(jump, m, N)

    M = _collocation(jump, m, N)
    nunk = M.shape[1]
    params = {"m": int(m), "d": int(d), "gamma_tilde": gamma}
    if d == -1:
        Z, _ = _null_space(M, tol)
        x = np.zeros(nunk, dtype=complex)
        residual = 0.0
        scale = 1.0
    else:
        C = _constraint_rows(jump, m, d, N)
        g = gamma[::-1].reshape(-1)  # constraint row i pairs with gamma_{d-i}
        x_p = linalg.lstsq(C, g)[0]
        W = linalg.null_space(C)
        MW = M @ W
        y = linalg.lstsq(MW, -M @ x_p)[0]
        x = x_p + W @ y
        residual = float(np.linalg.norm(M @ x))
        Zw, _ = _null_space(MW, tol)
        Z = W @ Zw
        scale = max(1.0, float(np.abs(gamma).max()))
    solvable = residual <= tol * scale

    a, b = _unscale(x, jump, m, N)
    report = RHSolveReport(
        solvable=bool(solvable), residual=residual, affine_dimension=Z.shape[1],
        interior_coeffs=a, exterior_coeffs=b, parameters=params,
        center=jump.center, tolerance=tol)
    basis = [_unscale(Z[:, i], jump, m, N) for i in range(Z.shape[1])]
    report.basis_interior = np.array([p[0] for p in basis]).reshape(-1, r, N + 1)
    report.basis_exterior = np.array([p[1] for p in basis]).reshape(-1, r, N + 1)

    zk = jump.curve.z
    yminus = report.interior(zk)
    yplus = report.exterior(zk)
    jumped = np.einsum("kcd,kd->kc", jump.rho_upsilon.values, yminus)
    report.boundary_defect = float(np.abs(yplus - jumped).max())
    if d >= 0:
        C = _constraint_rows(jump, m, d, N)
        report.constraint_defect = float(np.abs(C @ x - gamma[::-1].reshape(-1)).max())
    return report


def sl2_stratum(jump: JumpDatum, N: int = DEFAULT_N, tol: float = DEFAULT_TOL) -> int:
    """Stratum index ``n`` of an SL(2) jump, whose bundle is ``O(n) + O(-n)``."""
    if jump.r != 2:
        raise NotSL2(f"expected 2x2 jump matrices, got r={jump.r}")
    if np.abs(jump.dets - 1).max() > tol:
        raise NotSL2(f"determinant deviates from 1 by {np.abs(jump.dets - 1).max():.3e}")
    st = splitting_type(jump, N, tol)
    return st.indices[0]


def coefficient_decay_ratio(coeffs, floor: float = 1e-13) -> float:
    """Geometric decay rate of a coefficient sequence over its last quartile.

    ``(max|c| over the last quartile / max|c|) ** (1 / (3N/4))``. Tails
    below ``floor * max|c|`` count as fully decayed (ratio 0).
    """
    c = np.abs(np.asarray(coeffs)).reshape(-1, np.shape(coeffs)[-1]).max(axis=0)
    top = c.max()
    if top == 0:
        return 0.0
    N = c.size - 1
    start = (3 * N) // 4
    tail = c[start:].max() / top
    if tail <= floor:
        return 0.0
    return float(tail ** (1.0 / max(start, 1)))
