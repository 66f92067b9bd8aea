"""Flows behind the command line: sweeps, figure data and self-validation."""

from oamparity.flows.figures import (
    FigureId,
    FigureManifest,
    figure_curves,
    write_figure,
)
from oamparity.flows.sweeps import (
    SweepResult,
    SweepSpec,
    run_optimal_sweep,
    run_sensitivity_sweep,
    run_signal_sweep,
)
from oamparity.flows.validation import (
    CHECKS,
    ValidationCheck,
    ValidationReport,
    run_validation,
)

__all__ = [
    "CHECKS",
    "FigureId",
    "FigureManifest",
    "SweepResult",
    "SweepSpec",
    "ValidationCheck",
    "ValidationReport",
    "figure_curves",
    "run_optimal_sweep",
    "run_sensitivity_sweep",
    "run_signal_sweep",
    "run_validation",
    "write_figure",
]
