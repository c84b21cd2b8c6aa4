"""Reduced-state and purity tests."""

import itertools
import random

import numpy as np
import pytest

from graphent.graphs import make_graph
from graphent.reductions import partial_trace, purity, subset_purity
from graphent.states import build_graph_state

from test_states import random_unitary


def random_state(rng: np.random.Generator, n: int) -> np.ndarray:
    raw = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return raw / np.linalg.norm(raw)


def einsum_reduction(psi: np.ndarray, keep, n: int) -> np.ndarray:
    """Independent reduced-matrix construction via explicit index
    contraction on the full outer product."""
    t = psi.reshape((2,) * n)
    keep = tuple(keep)
    idx_ket = list(range(n))
    idx_bra = [i + n if (i + 1) in keep else i for i in range(n)]
    out = [q - 1 for q in keep] + [q - 1 + n for q in keep]
    return np.einsum(t, idx_ket, t.conj(), idx_bra, out).reshape(
        2 ** len(keep), 2 ** len(keep)
    )


def test_bell_reduction_is_maximally_mixed():
    psi = build_graph_state(make_graph(2, [(1, 2)]))
    for q in (1, 2):
        rho = partial_trace(psi, [q])
        assert np.allclose(rho, np.eye(2) / 2, atol=1e-12)
        assert purity(rho) == pytest.approx(0.5, abs=1e-12)
        assert subset_purity(psi, [q]) == pytest.approx(0.5, abs=1e-12)


def test_product_state_purity_is_one():
    rng = np.random.default_rng(5)
    factors = [random_state(rng, 1) for _ in range(4)]
    psi = np.array([1.0 + 0j])
    for f in factors:
        psi = np.kron(psi, f)
    for r in range(1, 4):
        for keep in itertools.combinations(range(1, 5), r):
            assert subset_purity(psi, keep) == pytest.approx(1.0, abs=1e-12)


def test_ghz_single_qubit_purities():
    # Star graph states reduce any single qubit to a mixed state of purity 1/2.
    g = make_graph(3, [(1, 2), (1, 3)])
    psi = build_graph_state(g)
    for q in (1, 2, 3):
        assert subset_purity(psi, [q]) == pytest.approx(0.5, abs=1e-12)


def test_partial_trace_matches_einsum_oracle():
    rng = np.random.default_rng(17)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        psi = random_state(rng, n)
        r = int(rng.integers(1, n))
        keep = tuple(sorted(rng.choice(n, size=r, replace=False) + 1))
        keep = tuple(int(q) for q in keep)
        assert np.allclose(
            partial_trace(psi, keep), einsum_reduction(psi, keep, n), atol=1e-12
        )


def test_partial_trace_respects_keep_order():
    rng = np.random.default_rng(29)
    psi = random_state(rng, 3)
    r12 = partial_trace(psi, [1, 2])
    r21 = partial_trace(psi, [2, 1])
    # swapping the two kept qubits permutes rows/columns
    swap = np.array([0, 2, 1, 3])
    assert np.allclose(r21, r12[np.ix_(swap, swap)], atol=1e-12)


def test_subset_purity_matches_dense_path():
    rng = np.random.default_rng(43)
    for _ in range(25):
        n = int(rng.integers(2, 7))
        psi = random_state(rng, n)
        r = int(rng.integers(1, n))
        keep = tuple(int(q) for q in sorted(rng.choice(n, size=r, replace=False) + 1))
        assert subset_purity(psi, keep) == pytest.approx(
            purity(partial_trace(psi, keep)), abs=1e-11
        )


def test_subset_purity_complement_symmetry():
    rng = np.random.default_rng(59)
    for _ in range(15):
        n = int(rng.integers(2, 7))
        psi = random_state(rng, n)
        r = int(rng.integers(1, n))
        keep = set(int(q) for q in rng.choice(n, size=r, replace=False) + 1)
        comp = set(range(1, n + 1)) - keep
        if not comp:
            continue
        assert subset_purity(psi, keep) == pytest.approx(
            subset_purity(psi, comp), abs=1e-11
        )


def test_subset_purity_local_unitary_invariance():
    rng = np.random.default_rng(71)
    from graphent.states import apply_local_unitary

    for _ in range(10):
        n = int(rng.integers(2, 6))
        psi = random_state(rng, n)
        rotated = psi
        for q in range(1, n + 1):
            rotated = apply_local_unitary(rotated, random_unitary(rng), q)
        for r in range(1, n):
            for keep in itertools.combinations(range(1, n + 1), r):
                assert subset_purity(rotated, keep) == pytest.approx(
                    subset_purity(psi, keep), abs=1e-10
                )


def test_purity_validation():
    with pytest.raises(ValueError):
        purity(np.array([[0.5, 0.5j], [0.5j, 0.5]]))  # not Hermitian
    with pytest.raises(ValueError):
        purity(np.eye(2))  # trace 2
    with pytest.raises(ValueError):
        purity(np.ones((2, 3)))
    assert purity(np.eye(2) / 2) == pytest.approx(0.5)


def test_subset_validation():
    psi = build_graph_state(make_graph(2, [(1, 2)]))
    with pytest.raises(ValueError):
        partial_trace(psi, [])
    with pytest.raises(ValueError):
        partial_trace(psi, [1, 1])
    with pytest.raises(ValueError):
        partial_trace(psi, [3])
