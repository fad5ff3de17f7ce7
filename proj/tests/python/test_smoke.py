import math
import random

import pytest

import ngauss


def normals(n, seed):
    rng = random.Random(seed)
    return [rng.gauss(0.0, 1.0) for _ in range(n)]


def test_moments():
    s = ngauss.summary([1.0, 2.0, 3.0, 4.0, 10.0])
    assert s.n == 5
    assert s.mean == pytest.approx(4.0)
    assert ngauss.mean([1.0, 3.0]) == 2.0


def test_power_kurtosis_and_selection():
    assert ngauss.power_kurtosis(1.0) == pytest.approx(3.0, abs=1e-12)
    top = ngauss.select_exponent(4.0583, 15, 3)
    assert str(top[0].c) == "11/9"
    assert str(top[0].normalizing) == "9/11"


def test_odd_ratio_and_signed_pow():
    c = ngauss.OddRatio.parse("9/11")
    assert c == ngauss.OddRatio(9, 11)
    assert float(c.reciprocal()) == pytest.approx(11 / 9)
    assert ngauss.signed_pow(-8.0, "1/3") == pytest.approx(-2.0)
    with pytest.raises(ngauss.NgaussError):
        ngauss.OddRatio(2, 3)


def test_special_functions():
    b = 0.5
    assert ngauss.gamma_modulus_sq(0.5, b) == pytest.approx(math.pi / math.cosh(math.pi * b), rel=1e-12)
    assert ngauss.chi_square_sf(8.63832, 9) == pytest.approx(0.47131, abs=1e-4)


def test_fits_and_densities():
    x = normals(500, 3)
    g = ngauss.fit_gaussian(x)
    assert abs(g.mu) < 0.2
    assert ngauss.cdf(g, g.mu) == pytest.approx(0.5)
    p4 = ngauss.PearsonIVParams(5.5666, -1.6843, 4.2831, -0.8211)
    assert ngauss.pdf(p4, 0.0) > 0.0
    assert 0.0 < ngauss.cdf(p4, 0.0) < 1.0


def test_normality_tests():
    x = normals(100, 5)
    d, p = ngauss.lilliefors(x, reps=2000, seed=1)
    assert 0.0 <= d <= 1.0 and 0.0 < p <= 1.0
    w, p = ngauss.shapiro_wilk(x)
    assert 0.9 < w <= 1.0


def test_analyze_returns_report():
    r = ngauss.analyze(normals(200, 11), reps=2000)
    for key in ("moments", "normality", "fits", "recommendation", "decisions"):
        assert key in r
    assert r == ngauss.analyze(normals(200, 11), reps=2000)


def test_errors_map_to_exception():
    with pytest.raises(ngauss.NgaussError):
        ngauss.summary([0.5] * 10)
    with pytest.raises(ngauss.NgaussError):
        ngauss.analyze(normals(50, 1), preset="nope")
    assert issubclass(ngauss.NgaussError, ValueError)


def test_study():
    r = ngauss.run_study("laplace", n_samples=10, sample_size=60, reps=1000)
    assert len(r["rows"]) == 10
