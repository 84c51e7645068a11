"""qident: a q-series/partition computational kernel with a numerical
verification harness for classical and multivariable (BC_n) basic
hypergeometric summation and transformation identities."""

__version__ = "1.0.0"

from .errors import (
    ConfigError,
    DivisionByVanishingFactor,
    DomainError,
    EmptyWindow,
    NoConvergence,
    NotAPartition,
    NotTerminating,
    QidentError,
)
from .identities import CASES, IdentityReport, run_case, sample_params
from .policy import DEFAULT_POLICY, QPower, TruncationPolicy
from .series import SeriesSpec, SeriesValue, eval_omega, eval_phi, eval_psi
from .wfunc import WParams, poch_partition, w_multi, w_skew_single

__all__ = [
    "CASES",
    "ConfigError",
    "DEFAULT_POLICY",
    "DivisionByVanishingFactor",
    "DomainError",
    "EmptyWindow",
    "IdentityReport",
    "NoConvergence",
    "NotAPartition",
    "NotTerminating",
    "QPower",
    "QidentError",
    "SeriesSpec",
    "SeriesValue",
    "TruncationPolicy",
    "WParams",
    "eval_omega",
    "eval_phi",
    "eval_psi",
    "poch_partition",
    "run_case",
    "sample_params",
    "w_multi",
    "w_skew_single",
    "__version__",
]
