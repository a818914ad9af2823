"""Exact arithmetic for monomial ideals of numerical semigroup rings."""

from .classify import (
    ClassificationReport,
    InstanceSpec,
    PropositionOutcome,
    check_proposition,
    classify,
    is_burch,
    is_elias,
    is_ulrich,
)
from .errors import SgpError
from .ideals import FractionalIdeal, ideal_from_generators, maximal_ideal, power_of_maximal
from .invariants import InvariantReport, invariant_report
from .semigroup import NumericalSemigroup, make_semigroup

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport",
    "FractionalIdeal",
    "InstanceSpec",
    "InvariantReport",
    "NumericalSemigroup",
    "PropositionOutcome",
    "SgpError",
    "check_proposition",
    "classify",
    "ideal_from_generators",
    "invariant_report",
    "is_burch",
    "is_elias",
    "is_ulrich",
    "make_semigroup",
    "maximal_ideal",
    "power_of_maximal",
]
