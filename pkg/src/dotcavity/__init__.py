"""Entangling quantum dots through photon exchange with a shared cavity mode.

A small dense-matrix simulator: two three-level dots couple to one bosonic
mode, a voltage-controlled detuning schedule swaps an excitation through the
cavity, and the resulting two-qubit entanglement is quantified under ideal
and Markovian-noise dynamics.
"""

from .tensor import (
    DenseOperator,
    DensityMatrix,
    SpaceDescriptor,
    StateVector,
    basis_state,
    embed,
    hermitian_eigenvalues,
    kron,
    partial_trace,
    propagator,
    trace_distance,
)
from .model import (
    ModelParams,
    NoiseConfig,
    NoiseKind,
    PhysicalCalibration,
    annihilation,
    build_hamiltonian,
    build_lindblads,
    dot_projector,
    excitation_number,
)
from .protocol import (
    PulseSpec,
    Schedule,
    Segment,
    basis_input,
    canonical_entangling_schedule,
    initial_state,
    pulse_unitary,
    truth_table_local_phases,
    truth_table_target_phases,
)
from .dynamics import (
    Diagnostics,
    EvolutionResult,
    IntegratorConfig,
    TruthTableRow,
    evolve_master,
    evolve_unitary,
    integrate_master,
    run_protocol,
    verify_truth_table,
)
from .entanglement import (
    EntanglementReport,
    FullLeakageError,
    TwoQubitState,
    analyze,
    concurrence,
    eof,
    reduce_to_qubits,
)

__version__ = "0.1.0"

__all__ = [
    "DenseOperator",
    "DensityMatrix",
    "SpaceDescriptor",
    "StateVector",
    "basis_state",
    "embed",
    "hermitian_eigenvalues",
    "kron",
    "partial_trace",
    "propagator",
    "trace_distance",
    "ModelParams",
    "NoiseConfig",
    "NoiseKind",
    "PhysicalCalibration",
    "annihilation",
    "build_hamiltonian",
    "build_lindblads",
    "dot_projector",
    "excitation_number",
    "PulseSpec",
    "Schedule",
    "Segment",
    "basis_input",
    "canonical_entangling_schedule",
    "initial_state",
    "pulse_unitary",
    "truth_table_local_phases",
    "truth_table_target_phases",
    "Diagnostics",
    "EvolutionResult",
    "IntegratorConfig",
    "TruthTableRow",
    "evolve_master",
    "evolve_unitary",
    "integrate_master",
    "run_protocol",
    "verify_truth_table",
    "EntanglementReport",
    "FullLeakageError",
    "TwoQubitState",
    "analyze",
    "concurrence",
    "eof",
    "reduce_to_qubits",
    "__version__",
]
