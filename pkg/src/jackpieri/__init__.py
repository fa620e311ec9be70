"""Exact Jack and interpolation Jack polynomials, with verification suites
for their Pieri-type identities, difference equations and kernel relations."""

__version__ = "0.1.0"

from .field import Field, RatFunc
from .jack import a_coefficient, eval_at_ones, jack, phi, psi
from .interpjack import binomial_coefficient, eval_interp, interp_jack
from .identities import SUITES, SuiteConfig, VerificationReport, run_suite

__all__ = [
    "Field",
    "RatFunc",
    "jack",
    "phi",
    "psi",
    "eval_at_ones",
    "a_coefficient",
    "interp_jack",
    "eval_interp",
    "binomial_coefficient",
    "SUITES",
    "SuiteConfig",
    "VerificationReport",
    "run_suite",
]
