"""Two-qubit reduction, Wootters concurrence, and entanglement of formation.

The qubit pair lives in the {|0>, |1>} levels of the two dots. Reduction
traces out the cavity, projects onto that subspace, and renormalizes; the
discarded weight is reported as leakage rather than folded into the measure
(the post-selected reading). Concurrence uses the Hermitian similarity
sqrt(rho) rho~ sqrt(rho) instead of the non-Hermitian product rho rho~, so
only Hermitian eigensolvers appear in the kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .tensor import DensityMatrix, hermiticity_defect, partial_trace

# clamp window for reduced-state eigenvalues pushed slightly negative by the
# integrator; anything below is treated as a broken state, not noise
NEGATIVITY_CLIP = 1e-9

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)

DOT_QUBIT_LEVELS = (0, 1)  # dark state and ground state span the qubit


class FullLeakageError(ValueError):
    """The state has no support on the computational subspace."""


@dataclass(frozen=True)
class TwoQubitState:
    """4x4 density matrix over {|00>,|01>,|10>,|11>} plus the projected-out weight."""

    rho2: np.ndarray
    leakage: float

    def __post_init__(self):
        mat = np.array(self.rho2, dtype=complex)
        if mat.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got {mat.shape}")
        if hermiticity_defect(mat) > 1e-9:
            raise ValueError("two-qubit state is not Hermitian")
        if not 0.0 <= self.leakage <= 1.0:
            raise ValueError(f"leakage {self.leakage} outside [0, 1]")
        mat.setflags(write=False)
        object.__setattr__(self, "rho2", mat)


@dataclass(frozen=True)
class EntanglementReport:
    concurrence: float
    eof: float
    leakage: float


def reduce_to_qubits(rho_full: DensityMatrix, clip_tol: float = NEGATIVITY_CLIP) -> TwoQubitState:
    """Project the full state onto the two-qubit computational subspace.

    Traces out the cavity, keeps the {|0>,|1>} block of each dot, records the
    lost weight as leakage, renormalizes, and clamps eigenvalues in
    [-clip_tol, 0) to zero. Raises FullLeakageError when nothing remains.
    """
    space = rho_full.space
    if space.slot_count != 3 or space.dims[0] != 3 or space.dims[1] != 3:
        raise ValueError("reduction is defined for two dots plus a cavity")
    dots = partial_trace(rho_full, keep=(0, 1))
    qubit_idx = [3 * a + b for a in DOT_QUBIT_LEVELS for b in DOT_QUBIT_LEVELS]
    sub = dots[np.ix_(qubit_idx, qubit_idx)]
    weight = float(sub.trace().real)
    leakage = 1.0 - weight
    if weight <= 1e-12:
        raise FullLeakageError("state has no weight on the qubit subspace")
    sub = sub / weight

    evals, evecs = np.linalg.eigh(sub)
    if evals[0] < -clip_tol:
        raise ValueError(
            f"reduced state eigenvalue {evals[0]:.3e} below the clamp window -{clip_tol:g}"
        )
    if evals[0] < 0.0:
        evals = np.clip(evals, 0.0, None)
        sub = (evecs * evals) @ evecs.conj().T
        sub = sub / sub.trace().real
    return TwoQubitState(rho2=sub, leakage=min(max(leakage, 0.0), 1.0))


def _sqrt_psd(mat: np.ndarray) -> np.ndarray:
    evals, evecs = np.linalg.eigh(mat)
    evals = np.clip(evals, 0.0, None)
    return (evecs * np.sqrt(evals)) @ evecs.conj().T


def concurrence(state: TwoQubitState | np.ndarray) -> float:
    """Wootters concurrence C = max(0, l1 - l2 - l3 - l4).

    The l_i are the descending square roots of the eigenvalues of rho rho~,
    rho~ = (sy x sy) rho* (sy x sy); they are obtained here as the square
    roots of the spectrum of the Hermitian matrix sqrt(rho) rho~ sqrt(rho).
    """
    rho = state.rho2 if isinstance(state, TwoQubitState) else np.asarray(state, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError(f"concurrence needs a 4x4 density matrix, got {rho.shape}")
    rho_tilde = _YY @ rho.conj() @ _YY
    root = _sqrt_psd(rho)
    m = root @ rho_tilde @ root
    m = 0.5 * (m + m.conj().T)
    lam = np.sqrt(np.clip(np.linalg.eigvalsh(m), 0.0, None))[::-1]
    c = lam[0] - lam[1] - lam[2] - lam[3]
    return float(min(max(c, 0.0), 1.0))


def _binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def eof(c: float) -> float:
    """Entanglement of formation for a given concurrence.

    E = h((1 + sqrt(1 - C^2)) / 2) with h the binary entropy; strictly
    increasing in C, 0 at C = 0 and exactly 1 at C = 1.
    """
    if not -1e-12 <= c <= 1.0 + 1e-12:
        raise ValueError(f"concurrence {c} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    x = 0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - c * c)))
    return _binary_entropy(x)


def analyze(rho_full: DensityMatrix) -> EntanglementReport:
    """Reduce, then report concurrence, entanglement of formation, and leakage."""
    reduced = reduce_to_qubits(rho_full)
    c = concurrence(reduced)
    return EntanglementReport(concurrence=c, eof=eof(c), leakage=reduced.leakage)
