"""Statevector construction and manipulation for graph states.

A state on n qubits is a complex vector of length 2^n. Qubit 1 maps to
the most significant bit of the basis index, so |q1 q2 ... qn> sits at
index q1*2^(n-1) + ... + qn. All qubit arguments are 1-indexed.
"""

from __future__ import annotations

import numpy as np

from graphent.graphs import Graph, neighbors

# exp(-i pi/4 X): square root of X up to phase
_SQRT_X = np.array([[1.0, -1.0j], [-1.0j, 1.0]], dtype=complex) / np.sqrt(2.0)
# exp(+i pi/4 Z)
_SQRT_Z = np.diag([np.exp(0.25j * np.pi), np.exp(-0.25j * np.pi)])


def num_qubits(state: np.ndarray) -> int:
    """Qubit count of a statevector; validates shape."""
    state = np.asarray(state)
    if state.ndim != 1:
        raise ValueError(f"statevector must be 1-D, got shape {state.shape}")
    n = int(np.log2(state.size).round())
    if 2**n != state.size or n < 1:
        raise ValueError(f"statevector length {state.size} is not a power of two")
    return n


def plus_state(n: int) -> np.ndarray:
    """|+>^n: the uniform superposition with amplitude 2^(-n/2)."""
    if not 1 <= n <= 16:
        raise ValueError(f"qubit count must be in 1..16, got {n}")
    return np.full(2**n, 2.0 ** (-n / 2.0), dtype=complex)


def apply_cz(state: np.ndarray, i: int, j: int) -> np.ndarray:
    """Controlled-Z between qubits i and j: negate amplitudes with both bits set."""
    n = num_qubits(state)
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"bad qubit pair ({i}, {j}) for n={n}")
    out = np.array(state, dtype=complex)
    idx = np.arange(out.size)
    mask = (1 << (n - i)) | (1 << (n - j))
    out[(idx & mask) == mask] *= -1.0
    return out


def build_graph_state(g: Graph) -> np.ndarray:
    """|G>: apply one CZ per edge of g to |+>^n."""
    state = plus_state(g.n)
    idx = np.arange(state.size)
    for i, j in g.edges:
        mask = (1 << (g.n - i)) | (1 << (g.n - j))
        state[(idx & mask) == mask] *= -1.0
    return state


def apply_local_unitary(state: np.ndarray, u: np.ndarray, qubit: int) -> np.ndarray:
    """Apply a single-qubit unitary u to one qubit of the state.

    Raises ValueError if u is not 2x2 unitary to within 1e-10.
    """
    n = num_qubits(state)
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range for n={n}")
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    if not np.allclose(u.conj().T @ u, np.eye(2), atol=1e-10):
        raise ValueError("matrix is not unitary")
    t = np.asarray(state, dtype=complex).reshape((2,) * n)
    t = np.moveaxis(t, qubit - 1, 0)
    t = (u @ t.reshape(2, -1)).reshape((2,) + (2,) * (n - 1))
    return np.moveaxis(t, 0, qubit - 1).reshape(-1)


def lc_unitary_apply(state: np.ndarray, g: Graph, a: int) -> np.ndarray:
    """Local Clifford that realizes local complementation at vertex a.

    Applies exp(-i pi/4 X) on a and exp(+i pi/4 Z) on each neighbor of a
    in g. Up to global phase, this maps |G> onto the state of the
    locally complemented graph.
    """
    n = num_qubits(state)
    if n != g.n:
        raise ValueError(f"state has {n} qubits but graph has {g.n} vertices")
    out = apply_local_unitary(state, _SQRT_X, a)
    for b in sorted(neighbors(g, a)):
        out = apply_local_unitary(out, _SQRT_Z, b)
    return out


def inner_product(a: np.ndarray, b: np.ndarray) -> complex:
    """<a|b> with the first argument conjugated."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return complex(np.vdot(a, b))


def stabilizer_expectation(state: np.ndarray, g: Graph, a: int) -> float:
    """<s| X_a prod_{b in N(a)} Z_b |s>, evaluated with bit arithmetic.

    Equals 1 exactly when the state is stabilized by the generator at
    vertex a; graph states satisfy this for every vertex.
    """
    n = num_qubits(state)
    if n != g.n:
        raise ValueError(f"state has {n} qubits but graph has {g.n} vertices")
    if not 1 <= a <= n:
        raise ValueError(f"vertex {a} out of range for n={n}")
    s = np.asarray(state, dtype=complex)
    flip = 1 << (n - a)
    zmask = 0
    for b in neighbors(g, a):
        zmask |= 1 << (n - b)
    idx = np.arange(s.size)
    # X_a permutes basis states; a is never in its own neighborhood, so
    # the Z sign pattern is unchanged by the flip.
    signs = 1.0 - 2.0 * (np.bitwise_count(idx & zmask) & 1)
    val = np.sum(np.conj(s) * signs * s[idx ^ flip])
    return float(np.real(val))
