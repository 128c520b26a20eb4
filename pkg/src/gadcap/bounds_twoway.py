"""Two-way assisted quantum/private capacity bounds for the GADC.

Lower bound: reverse coherent information over diagonal inputs.  Upper
bounds: half the channel mutual information, squashed-entanglement bounds
built from the two serial decompositions with 50/50 qubit-beamsplitter
squashing channels, the closed-form max-Rains/max-relative-entropy bound,
and the approximate-covariance bound with a Bell-diagonal relative entropy
of entanglement.  All values are in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds_classical import eps_cov, mutual_info_gadc
from .channels import complementary, isometric_extension
from .gadc import GadcParams, gadc_channel, serial_decompose
from .mathcore import cmi, entropy_vn, g, golden_max, h2

ESQ_SEED_POINTS = 101
ESQ_TOL = 1e-9
SEPARABILITY_GAMMA = 2.0 * (np.sqrt(2.0) - 1.0)


def rci_objective(p: GadcParams, x: float) -> float:
    """Reverse coherent information H(rho) - H(A^c(rho)) of the diagonal
    input rho = diag(1-x, x)."""
    rho = np.diag([1.0 - x, x]).astype(complex)
    comp = complementary(gadc_channel(p))
    env = sum(k @ rho @ k.conj().T for k in comp.kraus)
    return h2(x) - entropy_vn(env)


def reverse_coherent_lb(p: GadcParams) -> float:
    """Lower bound on the two-way quantum capacity: reverse coherent
    information maximized over diagonal inputs, clipped at zero."""
    _, val = golden_max(lambda x: rci_objective(p, x), 0.0, 1.0,
                        seed_points=200, tol=1e-10)
    return max(val, 0.0)


def half_mi_ub(p: GadcParams) -> float:
    """Upper bound: half the channel mutual information (identity
    squashing channel)."""
    return 0.5 * mutual_info_gadc(p)


@dataclass
class SquashedBoundConfig:
    """Choice of serial decomposition and squashing-channel parameters.

    ``variant`` selects which two-stage factorization generates the
    purification; ``squash`` holds (gamma1, n1, gamma2, n2) for the two
    environment squashing channels, defaulting to 50/50 qubit
    beamsplitters.
    """

    variant: int = 1
    squash: tuple[float, float, float, float] = (0.5, 0.0, 0.5, 0.0)

    def __post_init__(self):
        if self.variant not in (1, 2):
            raise ValueError("variant must be 1 or 2")
        if not all(0.0 <= v <= 1.0 for v in self.squash):
            raise ValueError("squash parameters must lie in [0, 1]")


def _purified_state(p: GadcParams, variant: int,
                    x: float) -> tuple[np.ndarray, tuple[int, ...]]:
    """Pure state on A (x) B (x) E2' (x) E1' from the two-stage isometries
    applied to sqrt(1-x)|00> + sqrt(x)|11>."""
    route1, route2 = serial_decompose(p)
    outer, inner = route1 if variant == 1 else route2
    v_in = isometric_extension(gadc_channel(inner))
    v_out = isometric_extension(gadc_channel(outer))
    e1 = v_in.shape[0] // 2
    e2 = v_out.shape[0] // 2
    theta = np.zeros(4)
    theta[0] = np.sqrt(1.0 - x)
    theta[3] = np.sqrt(x)
    psi = np.kron(np.eye(2), v_in) @ theta
    psi = np.kron(np.eye(2), np.kron(v_out, np.eye(e1))) @ psi
    return psi, (2, 2, e2, e1)


def _squash_kraus(params: tuple[float, float], dim: int) -> list[np.ndarray]:
    if dim == 1:
        return [np.eye(1, dtype=complex)]
    return gadc_channel(GadcParams(*params)).kraus


def esq_objective(p: GadcParams, cfg: SquashedBoundConfig, x: float) -> float:
    """Conditional mutual information I(A;B|E1 E2) of the squashed
    four-party state at input asymmetry x."""
    psi, dims = _purified_state(p, cfg.variant, x)
    rho = np.outer(psi, psi.conj())
    k1s = _squash_kraus((cfg.squash[0], cfg.squash[1]), dims[3])
    k2s = _squash_kraus((cfg.squash[2], cfg.squash[3]), dims[2])
    tau = np.zeros_like(rho)
    for k2 in k2s:
        for k1 in k1s:
            op = np.kron(np.eye(4), np.kron(k2, k1))
            tau += op @ rho @ op.conj().T
    return cmi(tau, dims, (0,), (1,), (2, 3))


def esq_ub(p: GadcParams, cfg: SquashedBoundConfig | None = None) -> float:
    """Squashed-entanglement upper bound: half the maximal conditional
    mutual information over diagonal-Schmidt inputs."""
    cfg = cfg or SquashedBoundConfig()
    _, val = golden_max(lambda x: esq_objective(p, cfg, x), 0.0, 1.0,
                        seed_points=ESQ_SEED_POINTS, tol=ESQ_TOL)
    return 0.5 * val


def esq_min(p: GadcParams) -> float:
    """Best squashed-entanglement bound: min over the two decompositions."""
    return min(esq_ub(p, SquashedBoundConfig(variant=1)),
               esq_ub(p, SquashedBoundConfig(variant=2)))


def max_rains_analytic(p: GadcParams) -> float:
    """Closed form of the max-Rains/max-relative-entropy-of-entanglement
    bound; zero exactly on the entanglement-breaking region."""
    gamma, n = p.gamma, p.n
    disc = (gamma * (2.0 * n - 1.0)) ** 2 + 4.0 * (1.0 - gamma)
    val = 1.0 - gamma / 2.0 + 0.5 * np.sqrt(disc)
    return float(np.log2(max(1.0, val)))


def bell_diagonal_state(gamma: float) -> np.ndarray:
    """Choi state of the twirled channel (n = 1/2); Bell diagonal."""
    s = np.sqrt(1.0 - gamma)
    return 0.5 * np.array([
        [1.0 - gamma / 2.0, 0.0, 0.0, s],
        [0.0, gamma / 2.0, 0.0, 0.0],
        [0.0, 0.0, gamma / 2.0, 0.0],
        [s, 0.0, 0.0, 1.0 - gamma / 2.0],
    ])


def closest_separable_state(gamma: float) -> np.ndarray:
    """Closest separable state to the Bell-diagonal Choi state in relative
    entropy, valid while that state is entangled."""
    x = gamma / (2.0 * (2.0 - 2.0 * np.sqrt(1.0 - gamma) + gamma))
    return np.array([
        [0.5 - x, 0.0, 0.0, x],
        [0.0, x, 0.0, 0.0],
        [0.0, 0.0, x, 0.0],
        [x, 0.0, 0.0, 0.5 - x],
    ])


def _xlog2x(v: float) -> float:
    return float(v * np.log2(v)) if v > 1e-300 else 0.0


def er_bell_diagonal(gamma: float) -> float:
    """Relative entropy of entanglement of the Bell-diagonal Choi state;
    zero once the state is separable (gamma >= 2(sqrt(2)-1))."""
    if not 0.0 <= gamma <= 1.0:
        raise ValueError("gamma must lie in [0, 1]")
    if gamma >= SEPARABILITY_GAMMA:
        return 0.0
    if gamma == 0.0:
        return 1.0
    s = np.sqrt(1.0 - gamma)
    r = [0.25 * (2.0 + 2.0 * s - gamma), 0.25 * (2.0 - 2.0 * s - gamma),
         gamma / 4.0, gamma / 4.0]
    val = sum(_xlog2x(v) for v in r) + 1.0
    val -= (gamma / 2.0) * np.log2(gamma / (2.0 - 2.0 * s + gamma))
    val += ((gamma - 2.0 + 2.0 * s) / 4.0) * np.log2(
        (4.0 - gamma - 4.0 * s) / (8.0 + gamma))
    return float(val)


def cov_twoway_ub(p: GadcParams) -> float:
    """Approximate-covariance upper bound on the two-way capacities."""
    e = eps_cov(p)
    return er_bell_diagonal(p.gamma) + 2.0 * e + g(e)


@dataclass
class TwowayBoundSet:
    """All two-way assisted capacity bounds at one parameter point."""

    rci_lb: float
    half_mi: float
    esq1: float
    esq2: float
    max_rains: float
    cov: float


def twoway_bound_set(p: GadcParams) -> TwowayBoundSet:
    """Evaluate every two-way bound at one parameter point."""
    return TwowayBoundSet(
        rci_lb=reverse_coherent_lb(p),
        half_mi=half_mi_ub(p),
        esq1=esq_ub(p, SquashedBoundConfig(variant=1)),
        esq2=esq_ub(p, SquashedBoundConfig(variant=2)),
        max_rains=max_rains_analytic(p),
        cov=cov_twoway_ub(p),
    )
