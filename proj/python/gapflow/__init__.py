"""Gap distributions of superposed renewal traffic streams."""

from ._core import (  # noqa: F401
    ArrivalTimeline,
    Family,
    FitOptions,
    FitReport,
    GapSample,
    GofResult,
    HeadwayModel,
    RenewalTestResult,
    ResidualView,
    SelectionResult,
    SuperposedGapModel,
    build_model_from_headway_fits,
    exponential_gap_cdf,
    family_from_name,
    fit_gaps,
    fit_headways,
    gaps_from_arrivals,
    ks_gof,
    loglik_gaps,
    loglik_headways,
    model_from_json,
    model_to_json,
    renewal_test,
    sample_headways,
    select_L,
    simulate_component,
    simulate_superposed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
