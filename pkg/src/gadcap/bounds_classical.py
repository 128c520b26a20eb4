"""Classical-capacity lower and upper bounds for the GADC.

All values are in bits.  The Holevo information is the lower bound; upper
bounds come from SDP relaxations, approximate entanglement breakability,
approximate covariance, approximate unitality, and entanglement assistance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .channels import QuantumChannel, apply, channel_from_choi
from .gadc import GadcParams, gadc_channel
from .mathcore import entropy_vn, g, golden_max, h2

RESIDUAL_TOL = 1e-10
SCAN_POINTS = 2000


def f_ent(x: float) -> float:
    """(1+x)log2(1+x) + (1-x)log2(1-x), the entropy deficit of a Bloch
    vector of length x."""
    out = 0.0
    if x > -1.0 + 1e-300 and 1.0 + x > 0:
        out += (1.0 + x) * np.log2(1.0 + x) if 1.0 + x > 0 else 0.0
    if 1.0 - x > 0:
        out += (1.0 - x) * np.log2(1.0 - x)
    return float(out)


def f_ent_prime(x: float) -> float:
    """Derivative of f_ent: log2((1+x)/(1-x))."""
    return float(np.log2((1.0 + x) / (1.0 - x)))


@dataclass
class HolevoSolve:
    """Solution record of the implicit-equation Holevo optimization."""

    chi: float
    q: float
    rstar: float
    residual: float
    bracket: tuple[float, float] | None
    from_fallback: bool = False


def _rstar(p: GadcParams, q: float) -> float | None:
    gamma, n = p.gamma, p.n
    rad = 1.0 - gamma - (q - gamma * (1.0 - 2.0 * n)) ** 2 / (1.0 - gamma) + q * q
    if rad < -1e-12:
        return None
    rad = max(rad, 0.0)
    r = np.sqrt(rad)
    if r >= 1.0:
        return None
    return float(r)


def _residual(p: GadcParams, q: float) -> float | None:
    gamma, n = p.gamma, p.n
    r = _rstar(p, q)
    if r is None or abs(q) >= 1.0:
        return None
    lhs = (gamma * q - gamma ** 2 * (1.0 - 2.0 * n)
           - gamma * (1.0 - gamma) * (1.0 - 2.0 * n)) * f_ent_prime(r)
    rhs = -r * (1.0 - gamma) * f_ent_prime(q)
    return float(lhs - rhs)


def _chi_at(p: GadcParams, q: float) -> float | None:
    r = _rstar(p, q)
    if r is None:
        return None
    return 0.5 * (f_ent(r) - np.log2(1.0 - q * q) - q * f_ent_prime(q))


def holevo_gadc(p: GadcParams) -> HolevoSolve:
    """Holevo information via the scalar implicit equation for the optimal
    input-ensemble asymmetry q.

    Scans q over (-1,1), bisects every sign change of the residual, and
    keeps the root maximizing the resulting value.  Falls back to the
    generic ensemble optimizer if no bracket is found.
    """
    if not (0.0 < p.gamma < 1.0):
        raise ValueError("holevo_gadc requires gamma in (0,1)")
    qs = np.linspace(-1.0 + 1e-9, 1.0 - 1e-9, SCAN_POINTS)
    res = [(_residual(p, q), q) for q in qs]
    best: HolevoSolve | None = None
    for (r1, q1), (r2, q2) in zip(res[:-1], res[1:]):
        if r1 is None or r2 is None or r1 * r2 > 0:
            continue
        a, b, ra = q1, q2, r1
        for _ in range(200):
            m = 0.5 * (a + b)
            rm = _residual(p, m)
            if rm is None:
                break
            if abs(rm) <= RESIDUAL_TOL or (b - a) < 1e-16:
                break
            if (rm > 0) == (ra > 0):
                a, ra = m, rm
            else:
                b = m
        q = 0.5 * (a + b)
        chi = _chi_at(p, q)
        rm = _residual(p, q)
        if chi is None or rm is None:
            continue
        if best is None or chi > best.chi:
            best = HolevoSolve(chi=chi, q=q, rstar=_rstar(p, q),
                               residual=rm, bracket=(q1, q2))
    if best is None:
        chi = holevo_generic(gadc_channel(p))
        return HolevoSolve(chi=chi, q=np.nan, rstar=np.nan, residual=np.nan,
                           bracket=None, from_fallback=True)
    return best


def chi_half_analytic(gamma: float) -> float:
    """Holevo information of the covariant (n = 1/2) channel."""
    return 1.0 - h2((1.0 - np.sqrt(1.0 - gamma)) / 2.0)


def _ensemble_chi(ch: QuantumChannel, x: np.ndarray) -> float:
    """Holevo quantity of an ensemble parameterized by 4 Bloch angles pairs
    and 4 softmax weights."""
    thetas, phis, w = x[0:4], x[4:8], x[8:12]
    probs = np.exp(w - np.max(w))
    probs /= probs.sum()
    avg = np.zeros((2, 2), dtype=complex)
    cond = 0.0
    for t, ph, pr in zip(thetas, phis, probs):
        psi = np.array([np.cos(t / 2.0), np.exp(1j * ph) * np.sin(t / 2.0)])
        out = apply(ch, np.outer(psi, psi.conj()))
        avg += pr * out
        cond += pr * entropy_vn(out)
    return entropy_vn(avg) - cond


def holevo_generic(ch: QuantumChannel, restarts: int = 20,
                   seed: int = 2024) -> float:
    """Holevo information of a qubit channel by multi-start ensemble ascent.

    Optimizes over ensembles of at most four pure states with probabilities;
    the reported value is a certified lower bound on the Holevo information.
    """
    if ch.din != 2 or ch.dout != 2:
        raise ValueError("holevo_generic expects a qubit-to-qubit channel")
    rng = np.random.default_rng(seed)
    starts = [np.concatenate([[0.0, np.pi, np.pi / 2, np.pi / 2],
                              [0.0, 0.0, 0.0, np.pi], np.zeros(4)])]
    for _ in range(restarts - 1):
        starts.append(np.concatenate([rng.uniform(0, np.pi, 4),
                                      rng.uniform(0, 2 * np.pi, 4),
                                      rng.normal(0, 1, 4)]))
    best = 0.0
    best_x = starts[0]
    for x0 in starts:
        r = minimize(lambda x: -_ensemble_chi(ch, x), x0, method="L-BFGS-B",
                     options={"ftol": 1e-14, "gtol": 1e-12, "maxiter": 500})
        if -r.fun > best:
            best, best_x = -r.fun, r.x
    # polish the winner with a derivative-free pass
    r = minimize(lambda x: -_ensemble_chi(ch, x), best_x, method="Nelder-Mead",
                 options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 2000})
    best = max(best, -r.fun)
    return float(best)


def c_beta_analytic(p: GadcParams) -> float:
    """Closed form of the no-signalling/PPT SDP bound: log2(1+sqrt(1-gamma))."""
    return float(np.log2(1.0 + np.sqrt(1.0 - p.gamma)))


def eps_cov(p: GadcParams) -> float:
    """Covariance parameter: half diamond distance to the twirled channel."""
    return p.gamma * abs(p.n - 0.5)


def c_cov_ub(p: GadcParams) -> float:
    """Upper bound from approximate covariance."""
    e = eps_cov(p)
    return chi_half_analytic(p.gamma) + 2.0 * e + g(e)


def c_eb_ub(p: GadcParams, seed: int = 2024) -> float:
    """Upper bound from approximate entanglement breakability.

    Finds the nearest entanglement-breaking channel by SDP, evaluates its
    Holevo information with the generic ensemble optimizer, and adds the
    continuity correction (output dimension 2).
    """
    from .sdp import sdp_eps_eb

    eps, jm = sdp_eps_eb(gadc_channel(p))
    chi_m = holevo_generic(channel_from_choi(jm), seed=seed)
    return chi_m + 2.0 * eps + g(eps)


def c_fil_ub(p: GadcParams) -> float:
    """Upper bound from approximate unitality.

    The closed form carries a population-asymmetry term
    (1/2)log2(n'/(1-n')) that is a valid correction only in the n' >= 1/2
    orientation; since the capacity is invariant under n <-> 1-n, the bound
    is evaluated at n' = max(n, 1-n).  Returns NaN for n in {0, 1}.
    """
    if p.n <= 0.0 or p.n >= 1.0:
        return float("nan")
    gamma = p.gamma
    n = max(p.n, 1.0 - p.n)
    fv = (gamma * np.sqrt(n * (1.0 - n))
          + np.sqrt(n + (1.0 - n) * (1.0 - gamma))
          * np.sqrt(1.0 - n + n * (1.0 - gamma)))
    return float(1.0 - h2(0.5 * (1.0 - np.sqrt(1.0 - gamma) / fv))
                 + np.log2(fv) + 0.5 * np.log2(n / (1.0 - n)))


def _xlog2x(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    out = np.zeros_like(v)
    mask = v > 1e-300
    out[mask] = v[mask] * np.log2(v[mask])
    return out


def mutual_info_objective(p: GadcParams, z: float) -> float:
    """Channel mutual information at input Bloch-z asymmetry z."""
    gamma, n = p.gamma, p.n
    lam = np.array([0.5 * (1.0 + z), 0.5 * (1.0 - z)])
    drift = (2.0 * n - 1.0) * gamma - (1.0 - gamma) * z
    lamp = np.array([0.5 * (1.0 + drift), 0.5 * (1.0 - drift)])
    rad = (4.0 - 4.0 * (1.0 + z * (2.0 * n - 1.0)) * gamma
           + (2.0 * n - 1.0 + z) ** 2 * gamma ** 2)
    rad = max(rad, 0.0)
    base = 2.0 - (1.0 + (2.0 * n - 1.0) * z) * gamma
    lampp = np.array([
        0.5 * (1.0 - n) * gamma * (1.0 - z),
        0.5 * n * gamma * (1.0 + z),
        0.25 * (base + np.sqrt(rad)),
        0.25 * (base - np.sqrt(rad)),
    ])
    return float(-_xlog2x(lam).sum() - _xlog2x(lamp).sum()
                 + _xlog2x(np.clip(lampp, 0.0, None)).sum())


def mutual_info_gadc(p: GadcParams) -> float:
    """Entanglement-assisted classical capacity: max over diagonal inputs."""
    _, val = golden_max(lambda z: mutual_info_objective(p, z), -1.0, 1.0,
                        seed_points=200, tol=1e-10)
    return val


def mutual_info_direct(p: GadcParams, z: float) -> float:
    """Oracle: I(A;B) of the joint state from a purified diagonal input."""
    from .mathcore import cmi

    lam1 = 0.5 * (1.0 + z)
    psi = np.zeros(4)
    psi[0] = np.sqrt(lam1)
    psi[3] = np.sqrt(1.0 - lam1)
    rho = np.outer(psi, psi)
    ch = gadc_channel(p)
    ks = [np.kron(np.eye(2), k) for k in ch.kraus]
    out = sum(k @ rho @ k.conj().T for k in ks)
    return cmi(out, (2, 2), (0,), (1,), ())
