"""Hölder seminorms of sampled functions, half-line gluing, 1-D jet extension.

For ``0 < alpha < 1`` the Hölder seminorm is
``sup |f(x) - f(y)| / |x - y|^alpha``. On samples the maximum over all pairs
is a lower bound for the seminorm of any function through the samples.

Gluing two pieces ``F-`` on ``x <= 0`` and ``F+`` on ``x >= 0`` that agree
at 0 inflates the seminorm by at most ``2^(1 - alpha)``: for ``x < 0 < y``,
``|F(x) - F(y)| <= M (|x|^alpha + |y|^alpha) <= 2^(1-alpha) M |x - y|^alpha``
by concavity. Pairs ``(-t, t)`` for ``F(x) = sign(x) |x|^alpha`` attain it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

import numpy as np

from .errors import InputError, InterfaceMismatch

__all__ = [
    "HolderDatum",
    "JetDatum",
    "JetExtension",
    "holder_seminorm",
    "sup_norm",
    "glue_half_lines",
    "bump",
    "jet_extend_1d",
    "central_derivative",
]


@dataclass(frozen=True, eq=False)
class HolderDatum:
    xs: np.ndarray
    fs: np.ndarray
    alpha: float

    def __post_init__(self):
        xs = np.asarray(self.xs, dtype=float)
        fs = np.asarray(self.fs, dtype=float)
        if xs.ndim != 1 or xs.shape != fs.shape:
            raise InputError("xs and fs must be 1-d arrays of equal length")
        if np.any(np.diff(xs) <= 0):
            raise InputError("xs must be strictly increasing")
        if not 0 < self.alpha < 1:
            raise InputError(f"alpha must lie in (0, 1), got {self.alpha}")
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "fs", fs)
        object.__setattr__(self, "alpha", float(self.alpha))


@dataclass(frozen=True)
class JetDatum:
    """Prescribed derivatives ``A_0, ..., A_k`` at the origin."""

    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise InputError("a jet needs at least the value A_0")
        object.__setattr__(self, "coefficients", tuple(float(a) for a in self.coefficients))

    @property
    def k(self) -> int:
        return len(self.coefficients) - 1


def holder_seminorm(d: HolderDatum, block: int = 2048) -> float:
    """Maximum of ``|f(x) - f(y)| / |x - y|^alpha`` over all sample pairs."""
    xs, fs = d.xs, d.fs
    n = xs.size
    if n < 2:
        raise InputError("need at least two samples")
    best = 0.0
    for start in range(0, n, block):
        stop = min(start + block, n)
        dx = xs[start:stop, None] - xs[None, :]
        df = np.abs(fs[start:stop, None] - fs[None, :])
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dx > 0, df / np.abs(dx) ** d.alpha, 0.0)
        best = max(best, float(ratio.max()))
    return best


def sup_norm(d: HolderDatum) -> float:
    return float(np.abs(d.fs).max())


def glue_half_lines(f_minus: HolderDatum, f_plus: HolderDatum, alpha: float | None = None):
    """Concatenate two half-line pieces that agree at 0.

    Returns ``(glued, bound_ok, info)`` where ``info`` holds the three
    seminorms and the constant ``2^(1 - alpha)``.
    """
    if alpha is None:
        alpha = f_minus.alpha
    if f_minus.xs[-1] != 0 or f_plus.xs[0] != 0:
        raise InputError("pieces must be sampled on x <= 0 and x >= 0, both including 0")
    if f_minus.fs[-1] != f_plus.fs[0]:
        raise InterfaceMismatch(
            f"values at 0 differ: {f_minus.fs[-1]!r} vs {f_plus.fs[0]!r}")
    glued = HolderDatum(np.concatenate([f_minus.xs, f_plus.xs[1:]]),
                        np.concatenate([f_minus.fs, f_plus.fs[1:]]), alpha)
    m_minus = holder_seminorm(HolderDatum(f_minus.xs, f_minus.fs, alpha))
    m_plus = holder_seminorm(HolderDatum(f_plus.xs, f_plus.fs, alpha))
    m_glued = holder_seminorm(glued)
    const = 2.0 ** (1.0 - alpha)
    bound_ok = m_glued <= const * max(m_minus, m_plus) + 1e-12
    info = {"seminorm_minus": m_minus, "seminorm_plus": m_plus,
            "seminorm": m_glued, "bound_constant": const}
    return glued, bool(bound_ok), info


def _smooth_step(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    pos = x > 0
    out[pos] = np.exp(-1.0 / x[pos])
    return out


def bump(t):
    """C-infinity cutoff: 1 on ``[-1/2, 1/2]``, 0 outside ``(-1, 1)``."""
    s = np.abs(np.asarray(t, dtype=float))
    a = _smooth_step(1.0 - s)
    b = _smooth_step(s - 0.5)
    return a / (a + b)


@dataclass(frozen=True, eq=False)
class JetExtension:
    """``A(x) = bump(x / halfwidth) * sum_s A_s x^s / s!``.

    Calling it evaluates ``A`` exactly; ``values`` are the samples on ``xs``.
    """

    jet: JetDatum
    halfwidth: float
    xs: np.ndarray

    @property
    def values(self) -> np.ndarray:
        return self(self.xs)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        taylor = sum(a * x ** s / factorial(s) for s, a in enumerate(self.jet.coefficients))
        return bump(x / self.halfwidth) * taylor


def jet_extend_1d(j: JetDatum, halfwidth: float, n_points: int = 1025) -> JetExtension:
    """Smooth function on the line whose derivatives at 0 are the jet entries."""
    if halfwidth <= 0:
        raise InputError(f"halfwidth must be positive, got {halfwidth}")
    n_points = max(int(n_points), 512)
    xs = np.linspace(-1.5 * halfwidth, 1.5 * halfwidth, n_points)
    return JetExtension(j, float(halfwidth), xs)


def central_derivative(f, order: int, h: float, x0: float = 0.0) -> float:
    """Central difference ``h^-s sum_i (-1)^i C(s, i) f(x0 + (s/2 - i) h)``.

    Second-order accurate in ``h`` for every derivative order ``s``.
    """
    s = int(order)
    offsets = (s / 2 - np.arange(s + 1)) * h
    signs = np.array([(-1) ** i * comb(s, i) for i in range(s + 1)], dtype=float)
    return float(np.dot(signs, f(x0 + offsets)) / h ** s)
