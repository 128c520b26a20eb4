"""Generalized amplitude damping channel: structure and exact predicates.

The channel A_{gamma,N} damps a qubit toward the thermal state
(1-N)|0><0| + N|1><1| with loss parameter gamma.  It coincides with the
qubit thermal attenuator of transmissivity eta = 1 - gamma.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import ChoiMatrix, QuantumChannel, compose
from .mathcore import tensor

EB_MARGIN_TOL = 1e-12


@dataclass
class GadcParams:
    """Damping parameter gamma and thermal population n, both in [0, 1]."""

    gamma: float
    n: float

    def __post_init__(self):
        if not (0.0 <= self.gamma <= 1.0):
            raise ValueError("gamma must lie in [0, 1]")
        if not (0.0 <= self.n <= 1.0):
            raise ValueError("n must lie in [0, 1]")


@dataclass
class ThermalParams:
    """Transmissivity eta and environment population n; eta = 1 - gamma."""

    eta: float
    n: float

    def __post_init__(self):
        if not (0.0 <= self.eta <= 1.0):
            raise ValueError("eta must lie in [0, 1]")
        if not (0.0 <= self.n <= 1.0):
            raise ValueError("n must lie in [0, 1]")

    def to_gadc(self) -> GadcParams:
        return GadcParams(gamma=1.0 - self.eta, n=self.n)


def kraus_operators(p: GadcParams) -> list[np.ndarray]:
    """All four Kraus operators, including zero-prefactor ones."""
    gamma, n = p.gamma, p.n
    a1 = np.sqrt(1.0 - n) * np.diag([1.0, np.sqrt(1.0 - gamma)])
    a2 = np.sqrt(gamma * (1.0 - n)) * np.array([[0.0, 1.0], [0.0, 0.0]])
    a3 = np.sqrt(n) * np.diag([np.sqrt(1.0 - gamma), 1.0])
    a4 = np.sqrt(gamma * n) * np.array([[0.0, 0.0], [1.0, 0.0]])
    return [a1, a2, a3, a4]


def gadc_channel(p: GadcParams) -> QuantumChannel:
    """The channel A_{gamma,n}; Kraus operators with zero prefactor dropped."""
    gamma, n = p.gamma, p.n
    pref = [1.0 - n, gamma * (1.0 - n), n, gamma * n]
    ks = [k for w, k in zip(pref, kraus_operators(p)) if w > 0.0]
    return QuantumChannel(ks)


def gadc_choi(p: GadcParams) -> ChoiMatrix:
    """Closed-form Choi state of A_{gamma,n} on A (x) B."""
    gamma, n = p.gamma, p.n
    s = np.sqrt(1.0 - gamma)
    state = 0.5 * np.array([
        [1.0 - gamma * n, 0.0, 0.0, s],
        [0.0, gamma * n, 0.0, 0.0],
        [0.0, 0.0, gamma * (1.0 - n), 0.0],
        [s, 0.0, 0.0, 1.0 - gamma * (1.0 - n)],
    ])
    return ChoiMatrix(state=state, din=2, dout=2)


def bloch_image(p: GadcParams, r: np.ndarray) -> np.ndarray:
    """Image of a Bloch vector (rx, ry, rz) under the channel."""
    gamma, n = p.gamma, p.n
    rx, ry, rz = r
    s = np.sqrt(1.0 - gamma)
    return np.array([s * rx, s * ry, (1.0 - gamma) * rz + gamma * (1.0 - 2.0 * n)])


def convex_decompose(p: GadcParams) -> tuple[float, GadcParams, GadcParams]:
    """A_{gamma,n} = (1-n) A_{gamma,0} + n A_{gamma,1}; returns (n, p0, p1)."""
    return p.n, GadcParams(p.gamma, 0.0), GadcParams(p.gamma, 1.0)


def compose_params(p2: GadcParams, p1: GadcParams) -> GadcParams:
    """Parameters of the serial composition A_{p2} o A_{p1}."""
    g1, n1 = p1.gamma, p1.n
    g2, n2 = p2.gamma, p2.n
    gamma = g1 + g2 - g1 * g2
    if gamma == 0.0:
        return GadcParams(0.0, 0.0)
    n = (g1 * (1.0 - g2) * n1 + g2 * n2) / gamma
    return GadcParams(gamma, n)


def serial_decompose(p: GadcParams) -> tuple[tuple[GadcParams, GadcParams],
                                             tuple[GadcParams, GadcParams]]:
    """Two factorizations of A_{gamma,n} into extreme-population stages.

    Returns ((outer1, inner1), (outer2, inner2)) with
    A_{gamma,n} = outer1 o inner1 = outer2 o inner2, where the first route
    applies an n=0 stage then an n=1 stage and the second the reverse.
    Degenerate denominators (gamma*n = 1 or gamma*(1-n) = 1) fall back to the
    single-stage factorization with an identity partner.
    """
    gamma, n = p.gamma, p.n
    d1 = 1.0 - gamma * n
    if d1 > 0.0:
        # rounding can push the quotient one ulp past 1 near gamma = 1
        g1 = min(gamma * (1.0 - n) / d1, 1.0)
        route1 = (GadcParams(gamma * n, 1.0), GadcParams(g1, 0.0))
    else:
        route1 = (GadcParams(1.0, 1.0), GadcParams(0.0, 0.0))
    d2 = 1.0 - gamma * (1.0 - n)
    if d2 > 0.0:
        g2 = min(gamma * n / d2, 1.0)
        route2 = (GadcParams(gamma * (1.0 - n), 0.0), GadcParams(g2, 1.0))
    else:
        route2 = (GadcParams(1.0, 0.0), GadcParams(0.0, 0.0))
    return route1, route2


def gadc_complement(p: GadcParams) -> QuantumChannel:
    """Complementary channel with the canonical 4-dim environment.

    Uses the full Kraus list (zero-prefactor operators kept) so the
    environment basis ordering is the same for every parameter point.
    """
    from .channels import complementary

    return complementary(QuantumChannel(kraus_operators(p)))


def eb_margin(p: GadcParams) -> float:
    """Determinant of the partially transposed Choi state (closed form).

    Nonnegative exactly when the channel is entanglement breaking.
    """
    gamma, n = p.gamma, p.n
    return (-1.0 + 2.0 * gamma - gamma ** 2
            + gamma ** 4 * (1.0 - n) ** 2 * n ** 2) / 16.0


def is_entanglement_breaking(p: GadcParams) -> tuple[bool, float]:
    """Entanglement-breaking test; returns (flag, margin = det of PT Choi)."""
    m = eb_margin(p)
    return m >= -EB_MARGIN_TOL, m


def two_extendability_quantities(p: GadcParams) -> tuple[float, float, float]:
    """Closed-form (Tr[rho_AB^2], Tr[rho_B^2], det rho_AB) of the Choi state."""
    gamma, n = p.gamma, p.n
    pur_ab = gamma ** 2 * n ** 2 - gamma ** 2 * n + gamma ** 2 / 2.0 - gamma + 1.0
    pur_b = 2.0 * gamma ** 2 * n ** 2 - 2.0 * gamma ** 2 * n + gamma ** 2 / 2.0 + 0.5
    det_ab = gamma ** 4 * n ** 2 * (1.0 - n) ** 2 / 16.0
    return pur_ab, pur_b, det_ab


def is_antidegradable(p: GadcParams) -> tuple[bool, float]:
    """Anti-degradability test via two-extendability of the Choi state.

    The channel is anti-degradable iff
    Tr[rho_AB^2] - Tr[rho_B^2] <= 4 sqrt(det rho_AB), which for this family
    reduces to gamma >= 1/2.  Returns (flag, inequality slack).
    """
    pur_ab, pur_b, det_ab = two_extendability_quantities(p)
    slack = 4.0 * np.sqrt(det_ab) - (pur_ab - pur_b)
    return p.gamma >= 0.5, slack


def estar_channel() -> QuantumChannel:
    """Fixed channel from the 4-dim environment to the output qubit.

    Composing it with the complement of A_{gamma,n} (canonical Kraus order)
    yields A_{1-gamma,n} for every gamma and n.
    """
    e0 = np.zeros((2, 4))
    e0[0, 0] = 1.0
    e0[1, 1] = 1.0
    e1 = np.zeros((2, 4))
    e1[0, 3] = 1.0
    e1[1, 2] = 1.0
    return QuantumChannel([e0, e1])


def antidegrading_channel(p: GadcParams) -> QuantumChannel:
    """Channel mapping the environment output back to the channel output.

    Defined for gamma >= 1/2 as A_{(2 gamma - 1)/gamma, n} composed after the
    fixed environment-to-output channel.
    """
    if p.gamma < 0.5:
        raise ValueError("anti-degrading map exists only for gamma >= 1/2")
    post = gadc_channel(GadcParams((2.0 * p.gamma - 1.0) / p.gamma, p.n))
    return compose(post, estar_channel())


def degrading_channel_n0(p: GadcParams) -> QuantumChannel:
    """Degrading map for the n = 0 channel with gamma < 1/2.

    The complement of A_{gamma,0} is A_{1-gamma,0}, so
    A_{(1-2 gamma)/(1-gamma),0} degrades the output to the environment.
    """
    if p.n != 0.0:
        raise ValueError("closed-form degrading map requires n = 0")
    if p.gamma >= 0.5:
        raise ValueError("degradable only for gamma < 1/2")
    return gadc_channel(GadcParams((1.0 - 2.0 * p.gamma) / (1.0 - p.gamma), 0.0))


def beamsplitter_unitary(eta: float) -> np.ndarray:
    """Two-qubit excitation-preserving interaction of transmissivity eta."""
    s, c = np.sqrt(eta), np.sqrt(1.0 - eta)
    return np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, s, c, 0.0],
        [0.0, -c, s, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])


def thermal_channel(t: ThermalParams) -> QuantumChannel:
    """Qubit thermal attenuator L_{eta,n} = A_{1-eta,n}."""
    return gadc_channel(t.to_gadc())


def extended_channel(t: ThermalParams) -> QuantumChannel:
    """Extended attenuator keeping the purifying half of the environment.

    The environment qubit E arrives entangled with a reference E'; the output
    is B (x) E' (dimension 4) after tracing out E.
    """
    eta, n = t.eta, t.n
    u = beamsplitter_unitary(eta)
    # |theta_n> on E (x) E'
    theta = np.zeros(4)
    theta[0] = np.sqrt(1.0 - n)
    theta[3] = np.sqrt(n)
    # isometry A -> B (x) E (x) E': embed input with environment state, rotate A,E
    w = np.zeros((8, 2), dtype=complex)
    for i in range(2):
        vin = np.zeros(2)
        vin[i] = 1.0
        w[:, i] = tensor(np.outer(vin, [1.0]), theta.reshape(4, 1)).reshape(8)
    full = tensor(u, np.eye(2)) @ w  # acts on A(x)E, leaves E' alone; order B,E,E'
    # Kraus indexed by traced system E (middle); output B (x) E'
    ks = []
    for e in range(2):
        k = np.zeros((4, 2), dtype=complex)
        for b in range(2):
            for ep in range(2):
                k[2 * b + ep, :] = full[4 * b + 2 * e + ep, :]
        ks.append(k)
    return QuantumChannel(ks)


def phase_damping_channel(mu: float) -> QuantumChannel:
    """Qubit phase damping multiplying coherences by mu."""
    if not (0.0 <= mu <= 1.0):
        raise ValueError("mu must lie in [0, 1]")
    ks = [np.diag([1.0, mu])]
    if mu < 1.0:
        ks.append(np.diag([0.0, np.sqrt(1.0 - mu ** 2)]))
    return QuantumChannel(ks)


def trace_out_second(d1: int, d2: int) -> QuantumChannel:
    """Channel on d1*d2 that discards the second factor."""
    ks = []
    for e in range(d2):
        k = np.zeros((d1, d1 * d2))
        for i in range(d1):
            k[i, i * d2 + e] = 1.0
        ks.append(k)
    return QuantumChannel(ks)


def extended_degrading_channel(t: ThermalParams) -> QuantumChannel:
    """Map degrading the extended attenuator to its weak complement.

    Discards E', applies the attenuator of transmissivity (1-eta)/eta, then
    phase damping with parameter 1 - 2n.  Valid for eta >= 1/2 and n <= 1/2.
    """
    eta, n = t.eta, t.n
    if eta < 0.5:
        raise ValueError("degrading map requires eta >= 1/2")
    if n > 0.5:
        raise ValueError("degrading map requires n <= 1/2")
    att = thermal_channel(ThermalParams((1.0 - eta) / eta, n))
    return compose(phase_damping_channel(1.0 - 2.0 * n),
                   compose(att, trace_out_second(2, 2)))
