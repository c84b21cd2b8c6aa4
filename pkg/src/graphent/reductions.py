"""Reduced density matrices and subsystem purities.

Subsystems are given as collections of 1-indexed qubit labels. Purity
of a reduction is what the entanglement measures below consume; the
full density matrix is exposed for inspection and cross-checking.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from graphent.states import num_qubits


def _subset(state: np.ndarray, keep: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    n = num_qubits(state)
    keep = tuple(keep)
    if len(set(keep)) != len(keep):
        raise ValueError(f"duplicate qubits in subsystem {keep!r}")
    if not keep:
        raise ValueError("subsystem must contain at least one qubit")
    for q in keep:
        if not (isinstance(q, (int, np.integer)) and 1 <= q <= n):
            raise ValueError(f"qubit {q!r} out of range for n={n}")
    return n, keep


def _split_matrix(state: np.ndarray, keep: tuple[int, ...], n: int) -> np.ndarray:
    """Reshape the state into a (kept) x (traced) matrix M with
    rho_keep = M M^dagger."""
    t = np.asarray(state, dtype=complex).reshape((2,) * n)
    kept_axes = [q - 1 for q in keep]
    other_axes = [ax for ax in range(n) if ax not in kept_axes]
    t = np.transpose(t, kept_axes + other_axes)
    return t.reshape(2 ** len(keep), 2 ** (n - len(keep)))


def partial_trace(state: np.ndarray, keep: Iterable[int]) -> np.ndarray:
    """Reduced density matrix on the kept qubits, tracing out the rest.

    Rows and columns of the result are indexed by the kept qubits in
    the order given, first label most significant.
    """
    n, keep = _subset(state, keep)
    m = _split_matrix(state, keep, n)
    return m @ m.conj().T


def purity(rho: np.ndarray) -> float:
    """Tr(rho^2) for a density matrix; validates Hermiticity and trace."""
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got {rho.shape}")
    if not np.allclose(rho, rho.conj().T, atol=1e-10):
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > 1e-8:
        raise ValueError(f"density matrix trace is {np.trace(rho).real}, expected 1")
    # Tr(rho^2) = Frobenius norm squared for Hermitian rho
    return float(np.sum(np.abs(rho) ** 2))


def subset_purity(state: np.ndarray, keep: Iterable[int]) -> float:
    """Tr(rho_keep^2) computed without forming the larger Gram matrix.

    Both sides of a bipartition have equal purity, so the Gram matrix
    is always built on the smaller side.
    """
    n, keep = _subset(state, keep)
    if len(keep) > n - len(keep) and len(keep) < n:
        keep = tuple(q for q in range(1, n + 1) if q not in keep)
    m = _split_matrix(state, keep, n)
    if m.shape[0] <= m.shape[1]:
        gram = m @ m.conj().T
    else:
        gram = m.conj().T @ m
    return float(np.sum(np.abs(gram) ** 2))
