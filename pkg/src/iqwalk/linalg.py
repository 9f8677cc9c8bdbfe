"""Dense complex linear algebra over multipartite Hilbert spaces.

Everything here works on plain ``numpy`` arrays: state vectors are 1-d
complex arrays, operators are 2-d complex arrays.  A
:class:`SubsystemShape` records how a flat index decomposes into local
subsystem indices.  The convention throughout the package is row-major
(big-endian) composite indexing: the *leftmost* subsystem is the most
significant digit of the flat index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import ContractViolationError

# Tolerance below which an operator is accepted as Hermitian.
HERMITIAN_ATOL = 1e-10
# Eigenvalues in [-PSD_CLIP, 0) are treated as float noise and clamped to 0.
PSD_CLIP = 1e-12


@dataclass(frozen=True)
class SubsystemShape:
    """Ordered local dimensions of a multipartite Hilbert space.

    ``dims[k]`` is the dimension of subsystem ``k``; the total dimension is
    their product.  For the interacting walk on ``n`` sites the shape is
    ``(n, 2, 2, ..., 2)``: position, coin, then one qubit per vertex.
    """

    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if not self.dims or any(d < 1 for d in self.dims):
            raise ValueError(f"subsystem dimensions must be >= 1, got {self.dims}")

    @property
    def total(self) -> int:
        return int(np.prod(self.dims))

    def __len__(self) -> int:
        return len(self.dims)

    def check_vector(self, vec: np.ndarray) -> None:
        if vec.shape != (self.total,):
            raise ValueError(f"vector of shape {vec.shape} does not match subsystem dims "
                             f"{self.dims} (total {self.total})")

    def check_matrix(self, mat: np.ndarray) -> None:
        if mat.shape != (self.total, self.total):
            raise ValueError(f"matrix of shape {mat.shape} does not match subsystem dims "
                             f"{self.dims} (total {self.total})")


def as_shape(shape: SubsystemShape | Sequence[int]) -> SubsystemShape:
    """Coerce a plain dimension sequence into a :class:`SubsystemShape`."""
    if isinstance(shape, SubsystemShape):
        return shape
    return SubsystemShape(tuple(shape))


@dataclass(frozen=True)
class HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None


def _normalize_subset(subset: Iterable[int], num_subsystems: int, name: str) -> tuple[int, ...]:
    idx = sorted({int(i) for i in subset})
    if not idx:
        raise ValueError(f"{name} must select at least one subsystem")
    if idx[0] < 0 or idx[-1] >= num_subsystems:
        raise ValueError(f"{name} {idx} out of range for {num_subsystems} subsystems")
    return tuple(idx)


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, shape ``(ra*rb, ca*cb)``."""
    return np.kron(np.asarray(a), np.asarray(b))


def kron_all(mats: Iterable[np.ndarray]) -> np.ndarray:
    """Kronecker product of a sequence of matrices, left to right."""
    return reduce(np.kron, (np.asarray(m) for m in mats))


def partial_trace(rho: np.ndarray,
                  shape: SubsystemShape | Sequence[int],
                  keep: Iterable[int]) -> np.ndarray:
    """Trace out every subsystem not listed in ``keep``.

    Parameters
    ----------
    rho : square matrix on the full space described by ``shape``.
    shape : subsystem dimensions of the full space.
    keep : indices of the subsystems the reduced matrix lives on.  Their
        relative order is preserved in the output.

    Returns
    -------
    The reduced matrix of dimension ``prod(dims[k] for k in keep)``.
    The trace is preserved.
    """
    shape = as_shape(shape)
    rho = np.asarray(rho)
    shape.check_matrix(rho)
    k = len(shape)
    keep_idx = _normalize_subset(keep, k, "keep")

    tensor = rho.reshape(shape.dims + shape.dims)
    row = list(range(k))
    # Traced subsystems reuse the row label on the column axis; kept ones
    # get a fresh label so they survive the contraction.
    col = [k + i if i in keep_idx else i for i in range(k)]
    out = [i for i in keep_idx] + [k + i for i in keep_idx]
    reduced = np.einsum(tensor, row + col, out)
    d = int(np.prod([shape.dims[i] for i in keep_idx]))
    return reduced.reshape(d, d)


def partial_transpose(rho: np.ndarray,
                      shape: SubsystemShape | Sequence[int],
                      part: Iterable[int]) -> np.ndarray:
    """Transpose the indices of the subsystems listed in ``part``.

    Hermiticity and trace of the input are preserved; the output has the
    same shape as ``rho``.
    """
    shape = as_shape(shape)
    rho = np.asarray(rho)
    shape.check_matrix(rho)
    k = len(shape)
    part_idx = _normalize_subset(part, k, "part")

    tensor = rho.reshape(shape.dims + shape.dims)
    perm = list(range(2 * k))
    for i in part_idx:
        perm[i], perm[k + i] = perm[k + i], perm[i]
    d = shape.total
    return tensor.transpose(perm).reshape(d, d)


def reduced_density(amplitudes: np.ndarray,
                    shape: SubsystemShape | Sequence[int],
                    keep: Iterable[int]) -> np.ndarray:
    """Reduced density matrix of a pure state without forming the full
    projector.

    Equivalent to ``partial_trace(outer(psi, psi.conj()), shape, keep)`` but
    works directly on the amplitude vector, which is what keeps larger site
    counts tractable.
    """
    shape = as_shape(shape)
    psi = np.asarray(amplitudes)
    shape.check_vector(psi)
    k = len(shape)
    keep_idx = _normalize_subset(keep, k, "keep")
    rest = [i for i in range(k) if i not in keep_idx]

    tensor = psi.reshape(shape.dims)
    d_keep = int(np.prod([shape.dims[i] for i in keep_idx]))
    block = tensor.transpose(list(keep_idx) + rest).reshape(d_keep, -1)
    return block @ block.conj().T


def hermitian_eig(a: np.ndarray, *, vectors: bool = True,
                  atol: float = HERMITIAN_ATOL) -> HermitianSpectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    The input is symmetrized as ``(A + A^dag)/2`` before solving; inputs
    whose anti-Hermitian part exceeds ``atol`` entrywise are rejected.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    defect = np.abs(a - a.conj().T).max() if a.size else 0.0
    if defect > atol:
        raise ContractViolationError(
            f"matrix is not Hermitian: max |A - A^dag| = {defect:.3e} > {atol:.0e}")
    h = (a + a.conj().T) / 2
    if vectors:
        vals, vecs = np.linalg.eigh(h)
        return HermitianSpectrum(vals[::-1].copy(), vecs[:, ::-1].copy())
    vals = np.linalg.eigvalsh(h)
    return HermitianSpectrum(vals[::-1].copy(), None)


def matrix_sqrt_psd(a: np.ndarray, *, clip: float = PSD_CLIP) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[-clip, 0)`` are clamped to zero as float noise; an
    eigenvalue below ``-clip`` raises :class:`ContractViolationError`.
    """
    spec = hermitian_eig(a)
    vals = spec.eigenvalues
    if vals.size and vals.min() < -clip:
        raise ContractViolationError(
            f"matrix is not PSD: smallest eigenvalue {vals.min():.3e} < -{clip:.0e}")
    vals = np.clip(vals, 0.0, None)
    vecs = spec.eigenvectors
    root = (vecs * np.sqrt(vals)) @ vecs.conj().T
    return (root + root.conj().T) / 2


def schatten1_norm(a: np.ndarray) -> float:
    """Trace norm: sum of singular values (sum of |eigenvalues| when
    ``a`` is Hermitian)."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return float(np.linalg.svd(a, compute_uv=False).sum())
