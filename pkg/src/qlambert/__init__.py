"""Exact q-series toolkit: eta quotients, theta functions, Lambert series,
cusp analysis on Gamma0(N), and mechanical verification of q-series
identities."""

from .errors import DSLError, ExactDivisionError, PrecisionError, QlambertError
from .series import ONE, QSeries, qpow

__all__ = [
    "DSLError",
    "ExactDivisionError",
    "PrecisionError",
    "QlambertError",
    "QSeries",
    "ONE",
    "qpow",
]

__version__ = "0.1.0"
