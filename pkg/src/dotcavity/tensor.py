"""Dense complex linear algebra over small tensor-product Hilbert spaces.

Index convention is slot-major: the leftmost subsystem varies slowest, so a
product basis state with per-slot occupations (i_0, ..., i_{N-1}) sits at flat
index ((i_0 * d_1 + i_1) * d_2 + ...). Kronecker products therefore compose
left to right in slot order. Everything is stored dense; the spaces handled
here are a few dozen dimensions at most.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

HERMITICITY_TOL = 1e-10
UNITARITY_TOL = 1e-10


def _as_matrix(op) -> np.ndarray:
    """Coerce a DenseOperator or array-like to a complex 2-d ndarray."""
    if isinstance(op, DenseOperator):
        return op.entries
    mat = np.asarray(op, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {mat.shape}")
    return mat


def _readonly(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SpaceDescriptor:
    """Ordered list of subsystem dimensions defining the tensor index layout.

    Slot order is fixed for the life of a computation; all operators and
    states must be built against the same descriptor.
    """

    dims: tuple[int, ...]

    def __init__(self, dims: Iterable[int]):
        dims = tuple(int(d) for d in dims)
        if not dims:
            raise ValueError("SpaceDescriptor needs at least one subsystem")
        if any(d < 2 for d in dims):
            raise ValueError(f"all subsystem dimensions must be >= 2, got {dims}")
        object.__setattr__(self, "dims", dims)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    @property
    def slot_count(self) -> int:
        return len(self.dims)

    def index(self, occupations: Sequence[int]) -> int:
        """Flat index of the product basis state with the given occupations."""
        if len(occupations) != len(self.dims):
            raise ValueError(
                f"expected {len(self.dims)} occupations, got {len(occupations)}"
            )
        idx = 0
        for occ, dim in zip(occupations, self.dims):
            if not 0 <= occ < dim:
                raise ValueError(f"occupation {occ} out of range for dim {dim}")
            idx = idx * dim + occ
        return idx


@dataclass(frozen=True)
class DenseOperator:
    """Complex matrix acting on the full Hilbert space of `space`."""

    space: SpaceDescriptor
    entries: np.ndarray

    def __post_init__(self):
        mat = np.array(self.entries, dtype=complex)
        if mat.shape != (self.space.total_dim, self.space.total_dim):
            raise ValueError(
                f"operator shape {mat.shape} does not match space dimension "
                f"{self.space.total_dim}"
            )
        object.__setattr__(self, "entries", _readonly(mat))

    def dagger(self) -> "DenseOperator":
        return DenseOperator(self.space, self.entries.conj().T)

    def is_hermitian(self, tol: float = HERMITICITY_TOL) -> bool:
        return hermiticity_defect(self.entries) <= tol


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state over `space` (unit Euclidean norm within 1e-12)."""

    space: SpaceDescriptor
    amplitudes: np.ndarray
    norm_tol: float = 1e-12

    def __post_init__(self):
        vec = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if vec.shape != (self.space.total_dim,):
            raise ValueError(
                f"state length {vec.shape[0]} does not match space dimension "
                f"{self.space.total_dim}"
            )
        norm = np.linalg.norm(vec)
        if abs(norm - 1.0) > self.norm_tol:
            raise ValueError(f"state norm {norm!r} deviates from 1 beyond tolerance")
        object.__setattr__(self, "amplitudes", _readonly(vec))

    def density(self) -> "DensityMatrix":
        return DensityMatrix(self.space, np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian unit-trace matrix over `space`.

    Hermiticity is enforced at construction (1e-12 relative); positivity is
    checked by diagnostics, not here, since integrators may leave eigenvalues
    slightly negative within tolerance.
    """

    space: SpaceDescriptor
    entries: np.ndarray
    trace_tol: float = 1e-8

    def __post_init__(self):
        mat = np.array(self.entries, dtype=complex)
        if mat.shape != (self.space.total_dim, self.space.total_dim):
            raise ValueError(
                f"density matrix shape {mat.shape} does not match space dimension "
                f"{self.space.total_dim}"
            )
        if hermiticity_defect(mat) > 1e-12:
            raise ValueError("density matrix is not Hermitian within 1e-12")
        tr = mat.trace()
        if abs(tr - 1.0) > self.trace_tol:
            raise ValueError(f"density matrix trace {tr!r} deviates from 1")
        object.__setattr__(self, "entries", _readonly(mat))

    @classmethod
    def unchecked(cls, space: SpaceDescriptor, entries: np.ndarray) -> "DensityMatrix":
        """Wrap entries without invariant checks, for states flagged as failed."""
        obj = cls.__new__(cls)
        object.__setattr__(obj, "space", space)
        object.__setattr__(obj, "entries", _readonly(np.array(entries, dtype=complex)))
        object.__setattr__(obj, "trace_tol", np.inf)
        return obj


def hermiticity_defect(mat: np.ndarray) -> float:
    """Norm of (M - M†) relative to the norm of M (0 for the zero matrix)."""
    mat = np.asarray(mat)
    scale = np.linalg.norm(mat)
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(mat - mat.conj().T) / scale)


def kron(a, b) -> np.ndarray:
    """Kronecker product with row-major convention index = i_a * dim_b + i_b."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def embed(op, slot: int, space: SpaceDescriptor) -> DenseOperator:
    """Lift a single-subsystem operator to the full space.

    Places `op` on `slot` and the identity on every other slot, composing by
    Kronecker product in slot order.
    """
    mat = _as_matrix(op)
    if not 0 <= slot < space.slot_count:
        raise ValueError(f"slot {slot} out of range for {space.slot_count} slots")
    if mat.shape[0] != space.dims[slot]:
        raise ValueError(
            f"operator dimension {mat.shape[0]} does not match slot {slot} "
            f"dimension {space.dims[slot]}"
        )
    left = int(np.prod(space.dims[:slot], dtype=int)) if slot > 0 else 1
    right = int(np.prod(space.dims[slot + 1:], dtype=int)) if slot + 1 < space.slot_count else 1
    full = np.kron(np.kron(np.eye(left), mat), np.eye(right))
    return DenseOperator(space, full)


def propagator(hamiltonian, t: float, space: SpaceDescriptor | None = None) -> DenseOperator:
    """Unitary exp(-i H t) of a Hermitian generator, via spectral decomposition.

    Real eigenvalues make the result unitary to round-off, which keeps long
    pulse sequences norm-preserving. Raises if H fails the Hermiticity check.
    """
    if isinstance(hamiltonian, DenseOperator):
        space = hamiltonian.space
        mat = hamiltonian.entries
    else:
        mat = _as_matrix(hamiltonian)
        if space is None:
            space = SpaceDescriptor((mat.shape[0],))
    if hermiticity_defect(mat) > HERMITICITY_TOL:
        raise ValueError("propagator requires a Hermitian generator")
    evals, evecs = np.linalg.eigh(mat)
    phases = np.exp(-1j * evals * t)
    unitary = (evecs * phases) @ evecs.conj().T
    defect = np.linalg.norm(unitary.conj().T @ unitary - np.eye(mat.shape[0]))
    if defect > UNITARITY_TOL:
        raise ValueError(f"propagator lost unitarity (defect {defect:g})")
    return DenseOperator(space, unitary)


def partial_trace(rho, keep: Iterable[int], space: SpaceDescriptor | None = None) -> np.ndarray:
    """Trace out every slot not in `keep`; returns a matrix on the kept slots.

    Kept slots retain their original relative order. Trace and Hermiticity of
    the input are preserved.
    """
    if isinstance(rho, DensityMatrix):
        space = rho.space
        mat = rho.entries
    else:
        mat = _as_matrix(rho)
        if space is None:
            raise ValueError("partial_trace of a bare matrix needs a SpaceDescriptor")
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise ValueError("keep set must be nonempty")
    if keep[0] < 0 or keep[-1] >= space.slot_count:
        raise ValueError(f"keep slots {keep} out of range for {space.slot_count} slots")

    dims = space.dims
    n = len(dims)
    tensor = mat.reshape(dims + dims)
    # contract row/column indices of each traced slot pairwise
    for slot in sorted(set(range(n)) - set(keep), reverse=True):
        tensor = np.trace(tensor, axis1=slot, axis2=slot + tensor.ndim // 2)
    kept_dim = int(np.prod([dims[k] for k in keep], dtype=int))
    return tensor.reshape(kept_dim, kept_dim)


def hermitian_eigenvalues(mat) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix."""
    m = _as_matrix(mat)
    if hermiticity_defect(m) > HERMITICITY_TOL:
        raise ValueError("hermitian_eigenvalues requires a Hermitian matrix")
    return np.linalg.eigvalsh(m)


def basis_state(space: SpaceDescriptor, occupations: Sequence[int]) -> StateVector:
    """Product basis state with the given per-slot occupations."""
    vec = np.zeros(space.total_dim, dtype=complex)
    vec[space.index(occupations)] = 1.0
    return StateVector(space, vec)


def trace_distance(a, b) -> float:
    """Trace distance (1/2)||a - b||_1 between two Hermitian matrices."""
    diff = _as_matrix(a) - _as_matrix(b)
    return 0.5 * float(np.sum(np.abs(np.linalg.eigvalsh(diff))))
