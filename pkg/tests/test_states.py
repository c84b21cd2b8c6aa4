"""Statevector tests: construction, local unitaries, stabilizers."""

import itertools
import random

import numpy as np
import pytest

from graphent.graphs import local_complement, make_graph
from graphent.states import (
    apply_cz,
    apply_local_unitary,
    build_graph_state,
    inner_product,
    lc_unitary_apply,
    num_qubits,
    plus_state,
    stabilizer_expectation,
)

_S2 = 1.0 / np.sqrt(2.0)
_KETS = {
    "0": np.array([1.0, 0.0]),
    "1": np.array([0.0, 1.0]),
    "+": np.array([_S2, _S2]),
    "-": np.array([_S2, -_S2]),
}


def ket(symbols: str) -> np.ndarray:
    """Product ket from a symbol string, first symbol = qubit 1."""
    v = np.array([1.0])
    for ch in symbols:
        v = np.kron(v, _KETS[ch])
    return v.astype(complex)


def pauli_string(n: int, xs=(), zs=()) -> np.ndarray:
    """Dense X/Z Pauli product for cross-checking bit-trick code."""
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    z = np.diag([1.0, -1.0]).astype(complex)
    m = np.array([[1.0 + 0j]])
    for q in range(1, n + 1):
        op = np.eye(2, dtype=complex)
        if q in xs:
            op = op @ x
        if q in zs:
            op = op @ z
        m = np.kron(m, op)
    return m


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(a)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_graph(rng: random.Random, n: int):
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5]
    return make_graph(n, edges)


def test_plus_state():
    for n in (1, 2, 5):
        s = plus_state(n)
        assert s.shape == (2**n,)
        assert np.allclose(s, 2.0 ** (-n / 2.0))
        assert abs(np.vdot(s, s) - 1.0) < 1e-12


def test_apply_cz_two_qubits():
    got = apply_cz(plus_state(2), 1, 2)
    assert np.allclose(got, 0.5 * np.array([1, 1, 1, -1]))
    # symmetric in the qubit pair, and an involution
    assert np.allclose(apply_cz(got, 2, 1), plus_state(2))
    with pytest.raises(ValueError):
        apply_cz(got, 1, 1)


def test_apply_cz_targets_correct_bits():
    # On 3 qubits, CZ(2,3) must leave qubit 1 alone: index bit layout is
    # qubit 1 at the most significant position.
    state = np.zeros(8, dtype=complex)
    state[0b011] = 1.0
    assert np.allclose(apply_cz(state, 2, 3)[0b011], -1.0)
    state = np.zeros(8, dtype=complex)
    state[0b110] = 1.0
    assert np.allclose(apply_cz(state, 2, 3)[0b110], 1.0)


def test_build_matches_sequential_cz():
    rng = random.Random(3)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 6))
        state = plus_state(g.n)
        for i, j in g.edges:
            state = apply_cz(state, i, j)
        assert np.allclose(build_graph_state(g), state, atol=1e-14)


# Closed-form expansions in mixed local bases, each certified by the
# stabilizer conditions K_a |psi> = |psi> for every vertex.
_EXPANSIONS = [
    ((2, [(1, 2)]), _S2, ["0+", "1-"]),
    ((3, [(1, 2), (1, 3)]), _S2, ["0++", "1--"]),
    ((4, [(1, 2), (1, 3), (1, 4)]), _S2, ["0+++", "1---"]),
    ((5, [(1, 2), (1, 3), (1, 4), (1, 5)]), _S2, ["0++++", "1----"]),
    ((5, [(1, 2), (2, 3), (3, 4), (4, 5)]), 0.5,
     ["+0+0+", "+0-1-", "-1-0+", "-1+1-"]),
    ((6, [(1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]), 0.5,
     ["+0+0++", "+0-1-+", "-1-0+-", "-1+1--"]),
    ((6, [(1, 6), (2, 4), (3, 4), (4, 5), (5, 6), (3, 6)]), 0.5,
     ["+++0+0", "+--1-0", "-+-0-1", "--+1+1"]),
    ((7, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)]), _S2,
     ["0++++++", "1------"]),
]


@pytest.mark.parametrize("graph_args,coeff,branches", _EXPANSIONS)
def test_known_expansions(graph_args, coeff, branches):
    n, edges = graph_args
    expected = coeff * np.sum([ket(b) for b in branches], axis=0)
    got = build_graph_state(make_graph(n, edges))
    assert np.allclose(got, expected, atol=1e-12)


@pytest.mark.parametrize("graph_args,coeff,branches", _EXPANSIONS)
def test_expansions_are_stabilized(graph_args, coeff, branches):
    # Independent certification of the closed forms above: dense Pauli
    # products, no bit tricks involved.
    n, edges = graph_args
    g = make_graph(n, edges)
    psi = coeff * np.sum([ket(b) for b in branches], axis=0)
    assert abs(np.vdot(psi, psi) - 1.0) < 1e-12
    for a in range(1, n + 1):
        ka = pauli_string(n, xs={a}, zs={j for i, j in g.edges if i == a}
                          | {i for i, j in g.edges if j == a})
        assert np.linalg.norm(ka @ psi - psi) < 1e-12


def test_stabilizer_expectation_matches_dense_oracle():
    rng = random.Random(7)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 5))
        nrng = np.random.default_rng(rng.randint(0, 10**9))
        raw = nrng.normal(size=2**g.n) + 1j * nrng.normal(size=2**g.n)
        psi = raw / np.linalg.norm(raw)
        for a in range(1, g.n + 1):
            zs = {j for i, j in g.edges if i == a} | {i for i, j in g.edges if j == a}
            dense = np.vdot(psi, pauli_string(g.n, xs={a}, zs=zs) @ psi).real
            assert abs(stabilizer_expectation(psi, g, a) - dense) < 1e-10


def test_graph_states_are_stabilized():
    rng = random.Random(19)
    for _ in range(25):
        g = random_graph(rng, rng.randint(2, 7))
        psi = build_graph_state(g)
        for a in range(1, g.n + 1):
            assert abs(stabilizer_expectation(psi, g, a) - 1.0) < 1e-12


def test_stabilizer_expectation_flags_wrong_state():
    g = make_graph(2, [(1, 2)])
    # X (x) Z has zero expectation in |++>
    assert abs(stabilizer_expectation(plus_state(2), g, 1)) < 1e-12


def test_apply_local_unitary_basis_action():
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    state = np.zeros(8, dtype=complex)
    state[0b000] = 1.0
    assert np.allclose(apply_local_unitary(state, x, 1)[0b100], 1.0)
    assert np.allclose(apply_local_unitary(state, x, 3)[0b001], 1.0)


def test_apply_local_unitary_rejects_non_unitary():
    state = plus_state(2)
    with pytest.raises(ValueError):
        apply_local_unitary(state, np.array([[1.0, 0.0], [0.0, 2.0]]), 1)
    with pytest.raises(ValueError):
        apply_local_unitary(state, np.eye(3), 1)


def test_apply_local_unitary_matches_dense_kron():
    rng = np.random.default_rng(31)
    for _ in range(10):
        n = int(rng.integers(2, 5))
        u = random_unitary(rng)
        q = int(rng.integers(1, n + 1))
        raw = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        psi = raw / np.linalg.norm(raw)
        ops = [np.eye(2, dtype=complex)] * n
        ops[q - 1] = u
        full = np.array([[1.0 + 0j]])
        for op in ops:
            full = np.kron(full, op)
        assert np.allclose(apply_local_unitary(psi, u, q), full @ psi, atol=1e-12)


def test_lc_unitary_matches_graph_move():
    rng = random.Random(41)
    for _ in range(30):
        g = random_graph(rng, rng.randint(2, 7))
        a = rng.randint(1, g.n)
        direct = build_graph_state(local_complement(g, a))
        moved = lc_unitary_apply(build_graph_state(g), g, a)
        assert abs(abs(inner_product(direct, moved)) - 1.0) < 1e-12


def test_inner_product_conjugates_first_argument():
    a = np.array([1.0j, 0.0])
    b = np.array([1.0, 0.0])
    assert inner_product(a, b) == pytest.approx(-1.0j)
    with pytest.raises(ValueError):
        inner_product(a, np.ones(4))


def test_num_qubits_validation():
    assert num_qubits(np.ones(8)) == 3
    with pytest.raises(ValueError):
        num_qubits(np.ones(6))
    with pytest.raises(ValueError):
        num_qubits(np.ones((2, 2)))
