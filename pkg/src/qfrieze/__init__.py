"""Exact quantum frieze patterns and quantum cluster variables of type A_n."""

from .classical import CommLaurent, classical_frieze, cross_check, specialize
from .coefficients import NuPoly, exact_divide, specialize_nu_one
from .continuant import ContinuantTable, continuant
from .exceptions import (
    DirectionOutOfRange,
    IndexOutOfRange,
    InvalidRank,
    InvalidWindow,
    InvariantViolation,
    NotDivisible,
    NotQuasiCommuting,
    OddRank,
    QFriezeError,
    RankMismatch,
)
from .frieze import (
    FriezeGrid,
    check_periodicity,
    cluster_variables,
    frieze_from_mouth,
    frieze_of_variables,
    fundamental_domain,
    phi,
)
from .models import CheckResult, VerificationReport
from .seed import QuantumSeed, initial_seed, mutate, mutate_sequence
from .suite import run_suite
from .torus import LambdaForm, TorusElement, lambda_eval, left_divide, multiply, right_divide

__all__ = [
    "CheckResult",
    "CommLaurent",
    "ContinuantTable",
    "DirectionOutOfRange",
    "FriezeGrid",
    "IndexOutOfRange",
    "InvalidRank",
    "InvalidWindow",
    "InvariantViolation",
    "LambdaForm",
    "NotDivisible",
    "NotQuasiCommuting",
    "NuPoly",
    "OddRank",
    "QFriezeError",
    "QuantumSeed",
    "RankMismatch",
    "TorusElement",
    "VerificationReport",
    "check_periodicity",
    "classical_frieze",
    "cluster_variables",
    "continuant",
    "cross_check",
    "exact_divide",
    "frieze_from_mouth",
    "frieze_of_variables",
    "fundamental_domain",
    "initial_seed",
    "lambda_eval",
    "left_divide",
    "multiply",
    "mutate",
    "mutate_sequence",
    "phi",
    "right_divide",
    "run_suite",
    "specialize",
    "specialize_nu_one",
]

__version__ = "0.1.0"
