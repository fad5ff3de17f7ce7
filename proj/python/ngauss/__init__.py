"""Power transforms to normality, symmetric model fitting and goodness-of-fit tests."""

import json as _json

from ._ngauss import *  # noqa: F401,F403
from ._ngauss import NgaussError
from ._ngauss import acf as _acf
from ._ngauss import analyze as _analyze
from ._ngauss import chi_square_gof as _chi_square_gof
from ._ngauss import run_study as _run_study

__version__ = "0.1.0"


def acf(values, max_lag=20):
    """Sample ACF report as a dict (see docs/report_schema.md)."""
    return _json.loads(_acf(values, max_lag))


def chi_square_gof(values, model, edges, n_params, df=None):
    return _json.loads(_chi_square_gof(values, model, edges, n_params, df))


def analyze(values, preset="default", alpha=None, seed=None, thin=None, reps=None):
    """Run the full analysis pipeline; returns the JSON report as a dict."""
    return _json.loads(_analyze(values, preset, alpha, seed, thin, reps))


def run_study(source="laplace", n_samples=100, sample_size=100, alpha=0.05, seed=1, reps=10000):
    return _json.loads(_run_study(source, n_samples, sample_size, alpha, seed, reps))
