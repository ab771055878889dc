"""Exact verification of q-supercongruences and their classical counterparts."""

from .engine import INAPPLICABLE, REFUTED, VERIFIED, Modulus, Strategy, Verdict, check_congruence, modulus, verify_lhopital
from .errors import (
    DenominatorNotInvertible,
    DivisionByZeroPoly,
    DivisionByZeroRat,
    InapplicablePoint,
    InvalidParams,
    NonUnitConstantTerm,
    QCongError,
    UnknownModulus,
    UnknownTarget,
)
from .powerseries import QSeries, series_pochhammer_inf, verify_jackson, verify_rahman
from .registry import REGISTRY, Report, TargetId, verify_target
from .supercong import CLASSICAL, ClassicalTarget, check_supercongruence

__version__ = "0.1.0"

__all__ = [
    "VERIFIED", "REFUTED", "INAPPLICABLE",
    "Modulus", "Strategy", "Verdict", "check_congruence", "modulus", "verify_lhopital",
    "QCongError", "DenominatorNotInvertible", "DivisionByZeroPoly", "DivisionByZeroRat",
    "InapplicablePoint", "InvalidParams", "NonUnitConstantTerm", "UnknownModulus", "UnknownTarget",
    "QSeries", "series_pochhammer_inf", "verify_jackson", "verify_rahman",
    "REGISTRY", "Report", "TargetId", "verify_target",
    "CLASSICAL", "ClassicalTarget", "check_supercongruence",
]
