"""Truncated Fock-space oracle for the ideal interferometer."""

from oamparity.oracle.fock import (
    MODE_A,
    MODE_B,
    OracleResult,
    TwoModeFockState,
    apply_bs_fock,
    apply_phase_fock,
    default_cutoff,
    mean_photon_number,
    parity_fock,
    run_ideal_oracle,
    tmsv_fock,
)

__all__ = [
    "MODE_A",
    "MODE_B",
    "OracleResult",
    "TwoModeFockState",
    "apply_bs_fock",
    "apply_phase_fock",
    "default_cutoff",
    "mean_photon_number",
    "parity_fock",
    "run_ideal_oracle",
    "tmsv_fock",
]
