import numpy as np
import pytest

from rhfactor.cauchy import BoundaryFunction, fourier_modes
from rhfactor.curve import from_fourier, unit_circle
from rhfactor.errors import InputError, OutsideAnnulus, SeriesNotConverged
from rhfactor.rh_elliptic import (EllipticProblem, elliptic_factorize, elliptic_phi,
                                  elliptic_psi, psi_polar_grid, series_lengths)


def psi_oracle(phi_samples, alpha, z):
    """Closed-form geometric sums of the psi series on the unit circle.

    A mode c_m z^m of phi contributes c_m z^m / (1 - alpha^m) for m > 0 and
    -c_m z^m alpha^|m| / (1 - alpha^|m|) for m < 0; the constant drops out.
    """
    ms, c = fourier_modes(np.asarray(phi_samples))
    out = np.zeros(np.shape(z), complex)
    for m, cm in zip(ms, c):
        if m > 0:
            out += cm * z ** m / (1 - alpha ** m)
        elif m < 0:
            a = alpha ** (-m)
            out -= cm * z ** float(m) * a / (1 - a)
    return out


def fplus(z):
    return z * np.exp(0.3 * z + 0.2 / z + 0.1 * z ** 2)


def fminus(w):
    return w * np.exp(-0.2 * w + 0.05 / w)


@pytest.fixture(scope="module")
def circle():
    return unit_circle(256)


class TestProblem:
    def test_scaled_nodes(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, lambda z: z, lambda w: w)
        np.testing.assert_allclose(p.s_minus.z, 0.5 * circle.z)
        assert p.n == 1

    @pytest.mark.parametrize("alpha", [0, 1, 1.5j, -1])
    def test_bad_alpha(self, circle, alpha):
        with pytest.raises(InputError):
            EllipticProblem.from_callables(alpha, circle, lambda z: z, lambda w: w)

    def test_curve_must_enclose_zero(self):
        c = from_fourier({0: 3.0, 1: 1.0}, 64)
        with pytest.raises(InputError):
            EllipticProblem.from_callables(0.5, c, lambda z: z, lambda w: w)

    def test_degree_mismatch(self, circle):
        with pytest.raises(InputError):
            EllipticProblem.from_callables(0.5, circle, lambda z: z, lambda w: np.ones_like(w))


class TestPhi:
    def test_trivial(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, np.ones_like, np.ones_like)
        np.testing.assert_array_equal(elliptic_phi(p).samples, 0)

    def test_powers(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, lambda z: z, lambda w: w)
        np.testing.assert_allclose(elliptic_phi(p).samples, np.log(2), atol=1e-15)

    def test_exp(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, np.exp, np.exp)
        np.testing.assert_allclose(elliptic_phi(p).samples, 0.5 * circle.z, atol=1e-14)


class TestPsi:
    def test_zero(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, np.ones_like, np.ones_like)
        phi = BoundaryFunction(circle, np.zeros(256))
        np.testing.assert_array_equal(elliptic_psi(p, phi, np.array([0.7, 0.6j])), 0)

    def test_constant(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, np.ones_like, np.ones_like)
        phi = BoundaryFunction(circle, np.full(256, 2 - 1j))
        assert np.abs(elliptic_psi(p, phi, np.array([0.7, 0.6j]))).max() <= 1e-14

    def test_geometric_series(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, np.exp, np.exp)
        phi = BoundaryFunction(circle, 0.5 * circle.z)
        pts = np.array([0.6, 0.9j, -0.75 + 0.1j])
        np.testing.assert_allclose(elliptic_psi(p, phi, pts), pts, atol=1e-10)

    @pytest.mark.parametrize("alpha", [0.5, 0.3j, -0.7])
    def test_matches_closed_form(self, circle, alpha):
        p = EllipticProblem.from_callables(alpha, circle, fplus, fminus)
        phi = elliptic_phi(p)
        r = 0.5 * (1 + abs(alpha))
        pts = r * np.exp(1j * np.linspace(0, 2 * np.pi, 9))
        got = elliptic_psi(p, phi, pts)
        np.testing.assert_allclose(got, psi_oracle(phi.samples, alpha, pts), atol=1e-9)

    def test_outside_annulus(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, np.exp, np.exp)
        phi = elliptic_phi(p)
        for z in (0.1, 1.5j):
            with pytest.raises(OutsideAnnulus):
                elliptic_psi(p, phi, np.array([z]))

    def test_not_converged(self):
        # |alpha|^K has to reach 1e-60: K is about 1.4e4 > 1e4
        c = unit_circle(1024)
        p = EllipticProblem.from_callables(0.99, c, np.exp, np.exp)
        with pytest.raises(SeriesNotConverged):
            series_lengths(p, elliptic_phi(p), 1e-60)

    def test_thin_annulus_rejected(self):
        with pytest.raises(InputError):
            EllipticProblem.from_callables(1 - 1e-7, unit_circle(64), np.exp, np.exp)


class TestFactorize:
    def test_trivial(self, circle):
        res = elliptic_factorize(EllipticProblem.from_callables(0.5, circle, np.ones_like,
                                                                np.ones_like))
        assert res.lam == 1 and res.residual == 0
        np.testing.assert_array_equal(res.g_plus, 1)

    def test_powers(self, circle):
        res = elliptic_factorize(EllipticProblem.from_callables(0.5, circle, lambda z: z,
                                                                lambda w: w))
        assert res.c0 == pytest.approx(np.log(2), abs=1e-14)
        assert res.lam == pytest.approx(0.5, abs=1e-14)
        assert res.residual <= 1e-10
        np.testing.assert_allclose(res.g_plus, circle.z, atol=1e-14)

    def test_exp(self, circle):
        res = elliptic_factorize(EllipticProblem.from_callables(0.5, circle, np.exp, np.exp))
        assert res.lam == pytest.approx(1, abs=1e-14)
        assert res.residual <= 1e-8
        np.testing.assert_allclose(res.psi_plus, circle.z, atol=1e-8)
        np.testing.assert_allclose(res.g_plus, 1, atol=1e-8)

    @pytest.mark.parametrize("alpha", [0.5, 0.8, 0.6j, -0.3, 0.4 + 0.4j])
    def test_quasi_periodicity(self, circle, alpha):
        p = EllipticProblem.from_callables(alpha, circle, fplus, fminus)
        res = elliptic_factorize(p)
        assert res.residual <= 1e-8
        assert res.identity_defect <= 1e-8

    def test_general_curve(self):
        c = from_fourier({1: 1.0, -1: 0.2, 2: 0.05}, 256)
        p = EllipticProblem.from_callables(0.5, c, fplus, fminus)
        res = elliptic_factorize(p)
        assert res.residual <= 1e-8
        assert res.identity_defect <= 1e-8

    def test_tail_ratio(self, circle):
        p = EllipticProblem.from_callables(0.5, circle, fplus, fminus)
        inner = elliptic_factorize(p).terms[0]
        last = inner[-10:]
        ratios = last[1:] / last[:-1]
        assert np.all(np.abs(ratios - 0.5) <= 0.05)

    def test_lambda_invariance(self, circle):
        rng = np.random.default_rng(3)
        base = EllipticProblem.from_callables(0.6, circle, fplus, fminus)
        lam0 = elliptic_factorize(base).lam
        for _ in range(5):
            cp = 0.2 * (rng.normal(size=3) + 1j * rng.normal(size=3))
            cq = 0.2 * (rng.normal(size=3) + 1j * rng.normal(size=3))

            def h(z, cp=cp, cq=cq):
                return np.exp(sum(a * z ** (k + 1) + b * z ** -(k + 1.0)
                                  for k, (a, b) in enumerate(zip(cp, cq))))

            p = EllipticProblem.from_callables(
                0.6, circle, lambda z: fplus(z) * h(z), lambda w: fminus(w) * h(w))
            res = elliptic_factorize(p)
            assert abs(res.lam - lam0) <= 1e-10
            assert res.residual <= 1e-8


def test_polar_grid(circle):
    p = EllipticProblem.from_callables(0.5, unit_circle(64), np.exp, np.exp)
    t, pts, vals = psi_polar_grid(p, n_radial=5)
    assert pts.shape == vals.shape == (5, 64)
    np.testing.assert_allclose(vals, pts, atol=1e-9)
