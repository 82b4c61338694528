"""Verification suites, the curated test family, and structured reports."""

from .family import FamilyMember, build_family, member_in, sup_norm_monomial
from .reports import CheckRecord, SuiteReport, combined_tolerance, envelope
from .suites import (
    SUITES,
    check_cor10,
    check_cor12,
    check_hl_first,
    check_hl_higher,
    check_lemma3,
    check_lemma4,
    check_lemma5,
    check_metric_axioms,
    check_prop2,
    check_thm6,
    check_thm7,
    divergence_probe,
    explore_conjecture13,
    explore_conjecture14,
    run_suite,
)

__all__ = [
    "FamilyMember",
    "build_family",
    "member_in",
    "sup_norm_monomial",
    "CheckRecord",
    "SuiteReport",
    "combined_tolerance",
    "envelope",
    "SUITES",
    "run_suite",
    "check_metric_axioms",
    "check_prop2",
    "check_lemma3",
    "check_lemma4",
    "check_lemma5",
    "check_thm6",
    "check_thm7",
    "check_hl_first",
    "check_hl_higher",
    "check_cor10",
    "check_cor12",
    "explore_conjecture13",
    "explore_conjecture14",
    "divergence_probe",
]
