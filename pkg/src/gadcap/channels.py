"""Finite-dimensional quantum channels: Kraus form, Choi form, extensions.

Choi conventions: ``ChoiMatrix.state`` holds the normalized Choi state
(trace one); the unnormalized operator Gamma = sum_ij |i><j| (x) N(|i><j|)
equals ``din * state`` and is exposed as ``ChoiMatrix.gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .mathcore import eig_hermitian, partial_trace, tensor

KRAUS_PRUNE_TOL = 1e-12
TP_TOL = 1e-8


@dataclass
class QuantumChannel:
    """CPTP map given by Kraus operators (each dout x din)."""

    kraus: list[np.ndarray]
    din: int = field(init=False)
    dout: int = field(init=False)

    def __post_init__(self):
        ks = [np.asarray(k, dtype=complex) for k in self.kraus]
        if not ks:
            raise ValueError("at least one Kraus operator required")
        self.kraus = ks
        self.dout, self.din = ks[0].shape
        acc = sum(k.conj().T @ k for k in ks)
        if not np.allclose(acc, np.eye(self.din), atol=TP_TOL):
            raise ValueError("Kraus operators do not satisfy trace preservation")


@dataclass
class ChoiMatrix:
    """Choi representation of a channel from a din- to a dout-dim system."""

    state: np.ndarray  # normalized (trace one), on A (x) B
    din: int
    dout: int

    @property
    def gamma(self) -> np.ndarray:
        return self.din * self.state


def apply(ch: QuantumChannel, rho: np.ndarray) -> np.ndarray:
    """Act with the channel on a density operator."""
    return sum(k @ rho @ k.conj().T for k in ch.kraus)


def identity_channel(d: int) -> QuantumChannel:
    return QuantumChannel([np.eye(d)])


def choi(ch: QuantumChannel) -> ChoiMatrix:
    """Choi state of a channel (maximally entangled input convention)."""
    d = ch.din
    gamma = np.zeros((d * ch.dout, d * ch.dout), dtype=complex)
    for k in ch.kraus:
        # vec with the input index first: sum_i |i>_A (x) K|i>_B
        vk = np.zeros(d * ch.dout, dtype=complex)
        for i in range(d):
            vk[i * ch.dout:(i + 1) * ch.dout] = k[:, i]
        gamma += np.outer(vk, vk.conj())
    return ChoiMatrix(state=gamma / d, din=d, dout=ch.dout)


def isometric_extension(ch: QuantumChannel) -> np.ndarray:
    """Isometry V: din -> dout (x) denv with V = sum_k K_k (x) |k>_E.

    The environment basis follows the Kraus operator ordering.
    """
    r = len(ch.kraus)
    v = np.zeros((ch.dout * r, ch.din), dtype=complex)
    for idx, k in enumerate(ch.kraus):
        e = np.zeros((r, 1))
        e[idx, 0] = 1.0
        v += np.kron(k, e)
    return v


def complementary(ch: QuantumChannel) -> QuantumChannel:
    """Complementary channel to the environment of the canonical isometry."""
    r = len(ch.kraus)
    ks = []
    for j in range(ch.dout):
        c = np.zeros((r, ch.din), dtype=complex)
        for i, k in enumerate(ch.kraus):
            c[i, :] = k[j, :]
        ks.append(c)
    return QuantumChannel(ks)


def channel_from_choi(c: ChoiMatrix, tol: float = 1e-10) -> QuantumChannel:
    """Recover a Kraus representation from a Choi matrix.

    Eigenvectors of Gamma with eigenvalue above ``tol`` become Kraus
    operators; the trace-preservation marginal is checked to within 1e-6.
    """
    marg = partial_trace(c.gamma, (c.din, c.dout), (0,))
    if not np.allclose(marg, np.eye(c.din), atol=1e-6):
        raise ValueError("Choi marginal on the input system is not the identity")
    spec = eig_hermitian(c.gamma)
    ks = []
    for lam, v in zip(spec.values, spec.vectors.T):
        if lam > tol:
            k = np.zeros((c.dout, c.din), dtype=complex)
            for i in range(c.din):
                k[:, i] = v[i * c.dout:(i + 1) * c.dout]
            ks.append(np.sqrt(lam) * k)
    return QuantumChannel(ks)


def compose(second: QuantumChannel, first: QuantumChannel) -> QuantumChannel:
    """Composition second o first, pruning redundant Kraus operators.

    The raw Kraus product list is refactored through the Choi matrix when it
    exceeds din*dout operators, keeping the representation minimal.
    """
    if first.dout != second.din:
        raise ValueError("dimension mismatch in composition")
    ks = [k2 @ k1 for k2 in second.kraus for k1 in first.kraus]
    ks = [k for k in ks if np.max(np.abs(k)) ** 2 > KRAUS_PRUNE_TOL]
    ch = QuantumChannel(ks)
    if len(ks) > first.din * second.dout:
        ch = channel_from_choi(choi(ch), tol=KRAUS_PRUNE_TOL)
    return ch


def pauli_twirl(ch: QuantumChannel) -> QuantumChannel:
    """Average a qubit channel over conjugation by the Pauli group."""
    if ch.din != 2 or ch.dout != 2:
        raise ValueError("Pauli twirl is defined for qubit channels")
    paulis = [np.eye(2),
              np.array([[0, 1], [1, 0]], dtype=complex),
              np.array([[0, -1j], [1j, 0]], dtype=complex),
              np.array([[1, 0], [0, -1]], dtype=complex)]
    gamma = np.zeros((4, 4), dtype=complex)
    for p in paulis:
        conj = QuantumChannel([p])
        inner = compose(conj, compose(ch, QuantumChannel([p.conj().T])))
        gamma += choi(inner).gamma / 4.0
    return channel_from_choi(ChoiMatrix(state=gamma / 2.0, din=2, dout=2))


def tensor_channels(ch1: QuantumChannel, ch2: QuantumChannel) -> QuantumChannel:
    """Parallel composition ch1 (x) ch2."""
    ks = [tensor(k1, k2) for k1 in ch1.kraus for k2 in ch2.kraus]
    return QuantumChannel(ks)
