"""Randomized exact / enclosure-certified verification campaigns."""

from .campaigns import (CAMPAIGN_RUNNERS, estimate_r_constant, run_campaign,
                        verify_bivaluation_symmetry,
                        verify_bm_minkowski_valuation, verify_class_reduction,
                        verify_general_bm, verify_general_minkowski,
                        verify_intrinsic_bm, verify_r_constant, verify_upbound)
from .reporting import (CAMPAIGNS, ConfigError, ExperimentConfig, Report,
                        TrialRecord)

__all__ = [
    "CAMPAIGN_RUNNERS", "CAMPAIGNS", "ConfigError", "ExperimentConfig",
    "Report", "TrialRecord", "estimate_r_constant", "run_campaign",
    "verify_bivaluation_symmetry", "verify_bm_minkowski_valuation",
    "verify_class_reduction", "verify_general_bm", "verify_general_minkowski",
    "verify_intrinsic_bm", "verify_r_constant", "verify_upbound",
]
