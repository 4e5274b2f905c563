"""Operators for quantum dots exchanging photons with a single cavity mode.

Level labelling (deliberately unconventional, and used consistently
throughout this package): each dot is a three-level system where

    index 1 = ground state,
    index 0 = lowest excited state (a dark state; qubit partner of |1>),
    index 2 = dipole-coupled auxiliary state.

The qubit lives in span{|0>, |1>}; only the 1<->2 transition couples to the
cavity. Units: the coupling rate g defines the frequency unit, so times are
in 1/g and all rates (noise rate, detunings) are quoted in units of g.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field

import numpy as np

from .tensor import DenseOperator, SpaceDescriptor, embed

DOT_DIM = 3
GROUND = 1
DARK = 0
AUXILIARY = 2

# |delta_omega_A - delta_omega_B| / g below which dot addressing degrades
MIN_OFFSET_RATIO = 10.0


class NoiseKind(enum.Enum):
    """Which single decoherence channel dominates the run."""

    DEPHASING_QUBIT = "dephasing"
    RADIATIVE_DECAY = "radiative_decay"
    CAVITY_LOSS = "cavity_loss"
    NONE = "none"


@dataclass(frozen=True)
class ModelParams:
    """Coupling rate, per-dot frequency offsets, and cavity cutoff.

    delta_omega[d] is dot d's offset from the reference dot, in units of g;
    the two-dot convention is delta_omega = (offset, 0.0). The instantaneous
    voltage detuning delta equals delta_omega[d] exactly when dot d is
    resonant with the cavity.
    """

    g: float = 1.0
    delta_omega: tuple[float, ...] = (20.0, 0.0)
    n_max: int = 2

    def __post_init__(self):
        object.__setattr__(self, "delta_omega", tuple(float(x) for x in self.delta_omega))
        if self.g <= 0:
            raise ValueError("coupling rate g must be positive")
        if self.n_max < 1:
            raise ValueError("cavity cutoff n_max must be >= 1")
        if len(self.delta_omega) < 1:
            raise ValueError("need at least one dot")
        if self.dot_count == 2:
            ratio = abs(self.delta_omega[0] - self.delta_omega[1]) / self.g
            if ratio < MIN_OFFSET_RATIO:
                warnings.warn(
                    f"dot offset split {ratio:.3g} g is small; the detuned dot "
                    "will not stay spectator during photon exchange",
                    stacklevel=2,
                )

    @property
    def dot_count(self) -> int:
        return len(self.delta_omega)

    def space(self) -> SpaceDescriptor:
        """Dots in slots 0..dot_count-1 (dim 3 each), cavity in the last slot."""
        return SpaceDescriptor((DOT_DIM,) * self.dot_count + (self.n_max + 1,))


@dataclass(frozen=True)
class NoiseConfig:
    kind: NoiseKind = NoiseKind.NONE
    gamma: float = 0.0

    def __post_init__(self):
        if self.gamma < 0:
            raise ValueError("noise rate gamma must be >= 0")


@dataclass(frozen=True)
class PhysicalCalibration:
    """Laboratory-scale numbers used only to convert reports to real units.

    Defaults: dipole coupling rate 1e9/s for a nanocrystal attached to a
    20 um silica microsphere (vacuum field ~150 V/cm at the surface), and a
    whispering-gallery-mode Q-factor of 1e9.
    """

    g_physical: float = 1e9  # 1/seconds
    q_factor: float = 1e9
    vacuum_field: float = 150.0  # V/cm

    def __post_init__(self):
        if self.g_physical <= 0 or self.q_factor <= 0 or self.vacuum_field <= 0:
            raise ValueError("calibration values must be positive")

    def seconds(self, t_in_units_of_inverse_g: float) -> float:
        return t_in_units_of_inverse_g / self.g_physical


def dot_projector(i: int, j: int) -> np.ndarray:
    """3x3 matrix |i><j| on a single dot."""
    if i not in (0, 1, 2) or j not in (0, 1, 2):
        raise ValueError(f"dot levels must be in {{0,1,2}}, got ({i}, {j})")
    mat = np.zeros((DOT_DIM, DOT_DIM), dtype=complex)
    mat[i, j] = 1.0
    return mat


def annihilation(n_max: int) -> np.ndarray:
    """Bosonic annihilation operator truncated at n_max photons."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    return np.diag(np.sqrt(np.arange(1, n_max + 1)), k=1).astype(complex)


def build_hamiltonian(params: ModelParams, delta: float) -> DenseOperator:
    """Rotating-frame Hamiltonian at instantaneous voltage detuning `delta`.

    H = sum_d i g (|2><1|_d a - |1><2|_d a†) + sum_d (delta - delta_omega_d) |1><1|_d

    The exchange term moves one excitation between dot d and the cavity; the
    diagonal term carries the Stark detuning relative to each dot's offset.
    Dot d is resonant when delta == delta_omega[d].
    """
    space = params.space()
    cavity_slot = params.dot_count
    a = embed(annihilation(params.n_max), cavity_slot, space).entries
    a_dag = a.conj().T

    h = np.zeros((space.total_dim, space.total_dim), dtype=complex)
    for d in range(params.dot_count):
        raise_d = embed(dot_projector(AUXILIARY, GROUND), d, space).entries
        lower_d = embed(dot_projector(GROUND, AUXILIARY), d, space).entries
        h += 1j * params.g * (raise_d @ a - lower_d @ a_dag)
        h += (delta - params.delta_omega[d]) * embed(
            dot_projector(GROUND, GROUND), d, space
        ).entries
    return DenseOperator(space, h)


def build_lindblads(config: NoiseConfig, space: SpaceDescriptor) -> list[DenseOperator]:
    """Jump operators for the selected noise channel, scaled by sqrt(gamma).

    Qubit dephasing acts as a projector onto the dark state of each dot,
    radiative decay lowers each dot's auxiliary state to ground, cavity loss
    annihilates one photon. The NONE kind yields no operators.
    """
    if config.kind is NoiseKind.NONE:
        return []
    root_rate = np.sqrt(config.gamma)
    dot_slots = range(space.slot_count - 1)
    cavity_slot = space.slot_count - 1
    if config.kind is NoiseKind.DEPHASING_QUBIT:
        ops = [embed(dot_projector(DARK, DARK), d, space) for d in dot_slots]
    elif config.kind is NoiseKind.RADIATIVE_DECAY:
        ops = [embed(dot_projector(GROUND, AUXILIARY), d, space) for d in dot_slots]
    elif config.kind is NoiseKind.CAVITY_LOSS:
        ops = [embed(annihilation(space.dims[cavity_slot] - 1), cavity_slot, space)]
    else:  # pragma: no cover - enum is exhaustive
        raise ValueError(f"unknown noise kind {config.kind}")
    return [DenseOperator(space, root_rate * op.entries) for op in ops]


def excitation_number(space: SpaceDescriptor) -> DenseOperator:
    """Total exchangeable excitation count: photons plus auxiliary-state dots.

    Diagonal in the product basis and conserved by the exchange Hamiltonian
    for every detuning, which makes it the conservation diagnostic.
    """
    cavity_slot = space.slot_count - 1
    a = annihilation(space.dims[cavity_slot] - 1)
    n = embed(a.conj().T @ a, cavity_slot, space).entries.copy()
    for d in range(space.slot_count - 1):
        n += embed(dot_projector(AUXILIARY, AUXILIARY), d, space).entries
    return DenseOperator(space, n)
