"""Entanglement measures for pure multiqubit states.

Two measures are provided. The closed-form one aggregates the purities
of every nonempty proper subsystem:

    2^(1 - n/2) * sqrt(2^n - 2 - sum_A Tr rho_A^2)

with A running over all 2^n - 2 subsystems, both halves of each
bipartition counted. The geometric one is

    1 - max |<phi|psi>|^2

over product states phi, evaluated by alternating (see-saw)
optimization with random restarts. Two independent oracles bound the
geometric value: the largest Schmidt coefficient across any single
bipartition (lower bound, exact for two qubits) and a dense parameter
grid (upper bound, small systems only).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from graphent.reductions import subset_purity
from graphent.states import num_qubits

_TIE_TOL = 1e-15
_DEGENERATE_NORM = 1e-15
_MAX_REDRAWS = 8


class DegenerateContractionError(RuntimeError):
    """Contraction against the other factors vanished; restart the sweep
    from a fresh product state."""


@dataclass(frozen=True)
class ProductState:
    """Fully separable n-qubit state as a tuple of single-qubit factors."""

    factors: tuple[np.ndarray, ...]

    def __post_init__(self):
        for k, f in enumerate(self.factors):
            f = np.asarray(f)
            if f.shape != (2,):
                raise ValueError(f"factor {k + 1} has shape {f.shape}, expected (2,)")
            if abs(np.vdot(f, f).real - 1.0) > 1e-12:
                raise ValueError(f"factor {k + 1} is not unit-norm")

    @property
    def n(self) -> int:
        return len(self.factors)


@dataclass(frozen=True)
class GemConfig:
    """Optimizer knobs for the geometric measure."""

    restarts: int = 64
    max_iterations: int = 500
    tolerance: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iterations < 1:
            raise ValueError(f"max_iterations must be >= 1, got {self.max_iterations}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")


@dataclass(frozen=True)
class GemDiagnostics:
    restarts_used: int
    best_restart_index: int
    iterations: int
    converged: bool
    best_fidelity: float
    degenerate_redraws: int
    restarts_at_best: int


@dataclass(frozen=True)
class MeasureResult:
    kind: str
    value: float
    diagnostics: GemDiagnostics | None = None


def _normalized(state: np.ndarray) -> np.ndarray:
    s = np.asarray(state, dtype=complex)
    norm = np.linalg.norm(s)
    if norm < 1e-12:
        raise ValueError("statevector has (near-)zero norm")
    return s / norm


def gcm(state: np.ndarray) -> MeasureResult:
    """Closed-form measure from all subsystem purities. Deterministic.

    Only subsystems up to half the qubits are reduced explicitly; each
    purity equals its complement's, so smaller-than-half layers count
    twice and the exact-half layer (even n) once.
    """
    n = num_qubits(state)
    if n < 2:
        raise ValueError(f"need at least 2 qubits, got {n}")
    s = _normalized(state)
    total = 0.0
    for r in range(1, n // 2 + 1):
        weight = 1.0 if 2 * r == n else 2.0
        for keep in itertools.combinations(range(1, n + 1), r):
            total += weight * subset_purity(s, keep)
    radicand = 2**n - 2 - total
    if radicand < -1e-10:
        raise ValueError(f"purity sum exceeds bound by {-radicand}")
    value = 2.0 ** (1.0 - n / 2.0) * np.sqrt(max(radicand, 0.0))
    return MeasureResult(kind="GCM", value=float(value))


def product_state_vector(phi: ProductState) -> np.ndarray:
    """Full 2^n statevector of a product state."""
    v = np.array([1.0 + 0j])
    for f in phi.factors:
        v = np.kron(v, np.asarray(f, dtype=complex))
    return v


def product_fidelity(state: np.ndarray, phi: ProductState) -> float:
    """|<phi|state>|^2."""
    s = _normalized(state)
    if s.size != 2**phi.n:
        raise ValueError(f"state has {s.size} amplitudes, product state needs {2**phi.n}")
    return float(abs(np.vdot(product_state_vector(phi), s)) ** 2)


def _environment(psi_t: np.ndarray, factors, k: int) -> np.ndarray:
    """Contraction of the state against every factor except k.

    The optimal factor k is this vector normalized, and the fidelity it
    achieves is its squared norm.
    """
    n = psi_t.ndim
    t = np.moveaxis(psi_t, k, n - 1)
    others = [j for j in range(n) if j != k]
    for j in others:
        t = np.tensordot(np.conj(factors[j]), t.reshape(2, -1), axes=(0, 0))
    return t.reshape(2)


def see_saw_step(state: np.ndarray, phi: ProductState, k: int) -> ProductState:
    """Replace factor k by its closed-form optimum, others held fixed.

    The product fidelity never decreases under this update. Raises
    DegenerateContractionError when the contraction vanishes and no
    optimum direction exists.
    """
    n = num_qubits(state)
    if n != phi.n:
        raise ValueError(f"state has {n} qubits but product state has {phi.n}")
    if not 1 <= k <= n:
        raise ValueError(f"qubit {k} out of range for n={n}")
    s = _normalized(state)
    env = _environment(s.reshape((2,) * n), phi.factors, k - 1)
    norm = np.linalg.norm(env)
    if norm < _DEGENERATE_NORM:
        raise DegenerateContractionError(
            f"contraction at qubit {k} has norm {norm:.3e}"
        )
    factors = list(phi.factors)
    factors[k - 1] = env / norm
    return ProductState(tuple(factors))


def _draw_factors(seed: int, restart: int, n: int, attempt: int = 0) -> np.ndarray:
    """Independent per-restart factor draw; scheduling cannot affect it."""
    key = (seed, restart) if attempt == 0 else (seed, restart, attempt)
    rng = np.random.default_rng(key)
    raw = rng.normal(size=(n, 2)) + 1j * rng.normal(size=(n, 2))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)


def _batched_environment(psi_t: np.ndarray, factors: np.ndarray, k: int) -> np.ndarray:
    """Environment vectors for all restarts at once; factors is (R, n, 2)."""
    n = psi_t.ndim
    r = factors.shape[0]
    t = np.moveaxis(psi_t, k, n - 1).reshape(1, -1)
    t = np.broadcast_to(t, (r, t.shape[1]))
    for j in [j for j in range(n) if j != k]:
        t = np.einsum("ra,rab->rb", np.conj(factors[:, j]), t.reshape(r, 2, -1))
    return t


def gem(state: np.ndarray, cfg: GemConfig | None = None) -> MeasureResult:
    """Geometric measure by see-saw over random product-state restarts.

    Each restart's starting factors come from a dedicated stream keyed
    by (seed, restart index), sweeps update qubits 1..n cyclically, and
    the winner is the highest final fidelity with ties broken toward
    the lowest restart index. The result is reproducible for a fixed
    config and is an upper bound on the true measure.
    """
    cfg = cfg or GemConfig()
    n = num_qubits(state)
    s = _normalized(state)
    psi_t = s.reshape((2,) * n)
    r = cfg.restarts

    factors = np.stack([_draw_factors(cfg.seed, i, n) for i in range(r)])
    attempts = np.zeros(r, dtype=int)
    fidelities = np.zeros(r)
    degenerate_redraws = 0
    iterations = 0
    converged = False

    for iterations in range(1, cfg.max_iterations + 1):
        previous = fidelities.copy()
        for k in range(n):
            env = _batched_environment(psi_t, factors, k)
            norms = np.linalg.norm(env, axis=1)
            bad = norms < _DEGENERATE_NORM
            for i in np.flatnonzero(bad):
                # Measure-zero start; redraw this restart from its own
                # continuation stream rather than emitting NaN.
                if attempts[i] < _MAX_REDRAWS:
                    attempts[i] += 1
                    degenerate_redraws += 1
                    factors[i] = _draw_factors(cfg.seed, int(i), n, int(attempts[i]))
                    env[i] = _batched_environment(
                        psi_t, factors[i : i + 1], k
                    )[0]
                    norms[i] = np.linalg.norm(env[i])
            still_bad = norms < _DEGENERATE_NORM
            safe = np.where(still_bad, 1.0, norms)
            factors[:, k] = env / safe[:, None]
            factors[still_bad, k] = np.array([1.0, 0.0], dtype=complex)
            fidelities = np.where(still_bad, 0.0, norms**2)
        if np.max(np.abs(fidelities - previous)) < cfg.tolerance and iterations > 1:
            converged = True
            break

    fidelities = np.clip(fidelities, 0.0, 1.0)
    best_fid = float(np.max(fidelities))
    best_index = int(np.flatnonzero(fidelities >= best_fid - _TIE_TOL)[0])
    at_best = int(np.sum(fidelities >= best_fid - 1e-9))
    diag = GemDiagnostics(
        restarts_used=r,
        best_restart_index=best_index,
        iterations=iterations,
        converged=converged,
        best_fidelity=best_fid,
        degenerate_redraws=degenerate_redraws,
        restarts_at_best=at_best,
    )
    return MeasureResult(kind="GEM", value=1.0 - best_fid, diagnostics=diag)


def gem_bipartite_oracle(state: np.ndarray, cut) -> float:
    """1 minus the largest eigenvalue of the reduction onto the cut.

    Across one fixed bipartition the best product fidelity equals the
    top Schmidt weight, so this is exact for 2 qubits and a lower bound
    on the geometric measure otherwise.
    """
    n = num_qubits(state)
    cut = tuple(cut)
    if not cut or len(cut) >= n:
        raise ValueError(f"cut must be a nonempty proper subset, got {cut!r}")
    s = _normalized(state)
    keep = cut if len(cut) <= n - len(cut) else tuple(
        q for q in range(1, n + 1) if q not in cut
    )
    t = s.reshape((2,) * n)
    kept_axes = [q - 1 for q in keep]
    if len(set(keep)) != len(keep) or any(not 1 <= q <= n for q in keep):
        raise ValueError(f"bad cut {cut!r} for n={n}")
    other = [ax for ax in range(n) if ax not in kept_axes]
    m = np.transpose(t, kept_axes + other).reshape(2 ** len(keep), -1)
    gram = m @ m.conj().T
    lam = float(np.linalg.eigvalsh(gram)[-1])
    return 1.0 - min(lam, 1.0)


def _bloch_grid(density: int) -> np.ndarray:
    """Single-qubit pure states on a (polar, azimuth) grid, poles included."""
    theta = np.linspace(0.0, np.pi, density)
    phi = np.linspace(0.0, 2.0 * np.pi, density, endpoint=False)
    th, ph = np.meshgrid(theta, phi, indexing="ij")
    states = np.stack(
        [np.cos(th / 2) + 0j, np.sin(th / 2) * np.exp(1j * ph)], axis=-1
    )
    return states.reshape(-1, 2)


def _grid_refine(s: np.ndarray, angles: np.ndarray, spacing: tuple[float, float],
                 rounds: int) -> float:
    """Coordinate-wise local grid descent on the (theta, phi) parameters.

    Evaluates plain product fidelities on shrinking windows; shares no
    machinery with the alternating optimizer.
    """
    n = angles.shape[0]
    wt, wp = spacing
    best = _angles_fidelity(s, angles)
    for _ in range(rounds):
        for k in range(n):
            th = np.clip(angles[k, 0] + np.linspace(-wt, wt, 17), 0.0, np.pi)
            ph = angles[k, 1] + np.linspace(-wp, wp, 17)
            tg, pg = np.meshgrid(th, ph, indexing="ij")
            cand = np.stack(
                [np.cos(tg / 2) + 0j, np.sin(tg / 2) * np.exp(1j * pg)], axis=-1
            ).reshape(-1, 2)
            others = [
                np.array([np.cos(a / 2), np.sin(a / 2) * np.exp(1j * b)])
                for a, b in angles
            ]
            red = np.moveaxis(s.reshape((2,) * n), k, n - 1).reshape(-1, 2)
            for j in [j for j in range(n) if j != k]:
                red = np.tensordot(np.conj(others[j]), red.reshape(2, -1, 2),
                                   axes=(0, 0))
            fid = np.abs(cand.conj() @ red.reshape(2)) ** 2
            i = int(np.argmax(fid))
            if fid[i] > best:
                best = float(fid[i])
                angles[k, 0] = tg.reshape(-1)[i]
                angles[k, 1] = pg.reshape(-1)[i]
        wt *= 0.2
        wp *= 0.2
    return best


def _angles_fidelity(s: np.ndarray, angles: np.ndarray) -> float:
    v = np.array([1.0 + 0j])
    for th, ph in angles:
        v = np.kron(v, np.array([np.cos(th / 2), np.sin(th / 2) * np.exp(1j * ph)]))
    return float(abs(np.vdot(v, s)) ** 2)


def brute_force_gem(state: np.ndarray, grid_density: int = 24,
                    refine_rounds: int = 3) -> float:
    """Dense-grid maximization of product fidelity; small systems only.

    Scans every combination of per-qubit grid states, then polishes the
    best grid point with local window searches. Converges to the
    geometric measure from above as the grid refines. Deterministic.
    """
    n = num_qubits(state)
    if n > 3:
        raise ValueError(f"grid search supports at most 3 qubits, got {n}")
    if grid_density < 2:
        raise ValueError(f"grid_density must be >= 2, got {grid_density}")
    s = _normalized(state)
    grid = _bloch_grid(grid_density)
    g = grid.shape[0]
    theta = np.linspace(0.0, np.pi, grid_density)
    phi = np.linspace(0.0, 2.0 * np.pi, grid_density, endpoint=False)

    def grid_angles(flat_index: int) -> tuple[float, float]:
        return theta[flat_index // len(phi)], phi[flat_index % len(phi)]

    if n == 1:
        fid = np.abs(grid.conj() @ s) ** 2
        i = int(np.argmax(fid))
        best, angles = float(fid[i]), np.array([grid_angles(i)])
    elif n == 2:
        m = grid.conj() @ s.reshape(2, 2)
        fid = np.abs(m @ grid.conj().T) ** 2
        ia, ib = np.unravel_index(int(np.argmax(fid)), fid.shape)
        best = float(fid[ia, ib])
        angles = np.array([grid_angles(int(ia)), grid_angles(int(ib))])
    else:
        best = -1.0
        best_idx = (0, 0, 0)
        psi_m = s.reshape(2, 4)
        for ia in range(g):
            t1 = (np.conj(grid[ia]) @ psi_m).reshape(2, 2)
            m = grid.conj() @ t1
            fid = np.abs(m @ grid.conj().T) ** 2
            ib, ic = np.unravel_index(int(np.argmax(fid)), fid.shape)
            if fid[ib, ic] > best:
                best = float(fid[ib, ic])
                best_idx = (ia, int(ib), int(ic))
        angles = np.array([grid_angles(i) for i in best_idx])

    spacing = (np.pi / (grid_density - 1), 2.0 * np.pi / grid_density)
    if refine_rounds > 0:
        best = max(best, _grid_refine(s, angles, spacing, refine_rounds))
    return 1.0 - min(best, 1.0)
