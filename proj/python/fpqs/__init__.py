"""Statevector simulator for fixed-point quantum search."""

from ._core import (
    AngleSchedule,
    Circuit,
    DensityMatrix,
    SearchCircuit,
    Statevector,
    TomographyResult,
    apply_circuit,
    build_grover_circuit,
    build_ofpqs_circuit,
    build_selective_phase,
    chebyshev_t,
    compute_gamma,
    compute_schedule,
    export_qasm,
    fidelity_pure,
    grover_success_probability,
    marginal_probability,
    predict_success_probability,
    probability,
    reconstruct,
    run_noisy,
    sample,
    tomography_settings,
    __version__,
)

__all__ = [
    "AngleSchedule",
    "Circuit",
    "DensityMatrix",
    "SearchCircuit",
    "Statevector",
    "TomographyResult",
    "apply_circuit",
    "build_grover_circuit",
    "build_ofpqs_circuit",
    "build_selective_phase",
    "chebyshev_t",
    "compute_gamma",
    "compute_schedule",
    "export_qasm",
    "fidelity_pure",
    "grover_success_probability",
    "marginal_probability",
    "predict_success_probability",
    "probability",
    "reconstruct",
    "run_noisy",
    "sample",
    "tomography_settings",
    "__version__",
]
