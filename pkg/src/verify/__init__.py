"""
Verification harness: each suite checks a family of solvabilizer and graph
laws on concrete instances and reports pass, fail or skipped-hypothesis.
"""

from .direct_sum_laws import verify_direct_sum_laws
from .generator import Instance, InstanceGenerator
from .measure_laws import (
    verify_direct_sum_measure,
    verify_indicator_product,
    verify_isomorphism_invariance,
    verify_measure_laws,
)
from .morphism_laws import verify_direct_sum_morphism, verify_morphism_laws, verify_pullback, verify_ses
from .report import Check, PreconditionError, Report, Status, reports_frame, summarize
from .solvabilizer_laws import verify_solvabilizer_laws
from .suites import SUITES, run_all, run_suite

__all__ = [
    "Check",
    "Instance",
    "InstanceGenerator",
    "PreconditionError",
    "Report",
    "Status",
    "SUITES",
    "reports_frame",
    "run_all",
    "run_suite",
    "summarize",
    "verify_direct_sum_laws",
    "verify_direct_sum_measure",
    "verify_direct_sum_morphism",
    "verify_indicator_product",
    "verify_isomorphism_invariance",
    "verify_measure_laws",
    "verify_morphism_laws",
    "verify_pullback",
    "verify_ses",
    "verify_solvabilizer_laws",
]
