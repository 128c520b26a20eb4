"""Quantum and private capacity bounds for the GADC.

Lower bound: coherent information over diagonal inputs.  Upper bounds:
data processing through amplitude damping factors, approximate
(anti-)degradability, Rains information, and the extended-channel coherent
information.  All values in bits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .channels import QuantumChannel, apply, channel_from_choi, \
    isometric_extension
from .gadc import GadcParams, ThermalParams, extended_channel, gadc_channel, \
    gadc_complement
from .mathcore import entropy_vn, g, golden_max, h2, partial_trace


@dataclass
class QuantumBoundSet:
    """All quantum-capacity bounds evaluated at one parameter point."""

    ic_lb: float
    dp1: float
    dp2: float
    dp3: float
    dp4: float
    deg1: float
    deg2: float
    adeg: float
    rains: float
    rmg: float
    p_deg1: float
    p_deg2: float


def q_ad(gamma: float) -> float:
    """Quantum capacity of the amplitude damping channel."""
    if gamma >= 0.5:
        return 0.0
    if gamma <= 0.0:
        return 1.0
    _, val = golden_max(lambda p: h2((1.0 - gamma) * p) - h2(gamma * p),
                        0.0, 1.0, seed_points=200, tol=1e-10)
    return max(val, 0.0)


def coherent_info_lb(p: GadcParams) -> float:
    """Coherent information maximized over diagonal inputs, clipped at 0."""
    ch = gadc_channel(p)
    comp = gadc_complement(p)

    def ic(q: float) -> float:
        rho = np.diag([1.0 - q, q])
        return entropy_vn(apply(ch, rho)) - entropy_vn(apply(comp, rho))

    _, val = golden_max(ic, 0.0, 1.0, seed_points=200, tol=1e-10)
    return max(val, 0.0)


def dp_bounds(p: GadcParams) -> tuple[float, float, float, float]:
    """Data-processing upper bounds through the serial decompositions.

    Degenerate denominators (total damping of an inner factor) make the
    factorization parameter undefined; the affected bound falls back to
    the trivial value 1.
    """
    gamma, n = p.gamma, p.n
    d1 = 1.0 - gamma * n
    b1 = q_ad(gamma * (1.0 - n) / d1) if d1 > 0.0 else 1.0
    d2 = 1.0 - gamma * (1.0 - n)
    b4 = q_ad(gamma * n / d2) if d2 > 0.0 else 1.0
    return (b1, q_ad(gamma * (1.0 - n)), q_ad(gamma * n), b4)


def u_d(ch: QuantumChannel, degrading: QuantumChannel,
        restarts: int = 6, seed: int = 11) -> float:
    """Residual conditional entropy of a channel/degrading-map pair.

    Maximizes H(F | E~) of the state (W (x) 1_E) V rho V^dag (.)^dag over
    input states rho, where V extends the channel and W extends the
    degrading map.  The objective is concave in rho, so multi-start local
    ascent over the Bloch ball converges reliably.
    """
    v = isometric_extension(ch)          # A -> B (x) E
    w = isometric_extension(degrading)   # B -> E~ (x) F
    de = len(ch.kraus)
    dearr = degrading.dout
    df = len(degrading.kraus)
    big = np.kron(w, np.eye(de)) @ v     # A -> E~ (x) F (x) E

    def objective(r: np.ndarray) -> float:
        x, y, z = r
        rho = 0.5 * np.array([[1.0 + z, x - 1j * y], [x + 1j * y, 1.0 - z]])
        omega = big @ rho @ big.conj().T
        ef = partial_trace(omega, (dearr, df, de), (0, 1))
        e_only = partial_trace(omega, (dearr, df, de), (0,))
        return entropy_vn(ef) - entropy_vn(e_only)

    def neg(u: np.ndarray) -> float:
        nrm = np.linalg.norm(u)
        r = u if nrm <= 1.0 else u / nrm
        return -objective(r)

    rng = np.random.default_rng(seed)
    starts = [np.zeros(3), np.array([0.0, 0.0, 0.9]), np.array([0.0, 0.0, -0.9])]
    for _ in range(restarts - len(starts)):
        u = rng.normal(size=3)
        starts.append(u / np.linalg.norm(u) * rng.uniform(0, 1) ** (1 / 3))
    best = -np.inf
    for x0 in starts:
        res = minimize(neg, x0, method="Nelder-Mead",
                       options={"xatol": 1e-9, "fatol": 1e-12, "maxiter": 2000})
        best = max(best, -res.fun)
    return float(best)


def eps_deg_ubs(p: GadcParams) -> tuple[float, float]:
    """Upper bounds on (Q, P) from approximate degradability.

    Valid for gamma in (0, 1/2); the environment dimension is 4, giving
    Q <= U_D + 4 eps + g(eps) and P <= U_D + 12 eps + 3 g(eps).
    """
    from .sdp import sdp_eps_deg

    ch = gadc_channel(p)
    eps, jd = sdp_eps_deg(ch)
    ud = u_d(ch, channel_from_choi(jd))
    return (ud + 4.0 * eps + g(eps), ud + 12.0 * eps + 3.0 * g(eps))


def eps_close_deg_ubs(p: GadcParams) -> tuple[float, float]:
    """Upper bounds on (Q, P) from closeness to the zero-population channel."""
    from .sdp import diamond_dist

    eps = 0.5 * diamond_dist(gadc_channel(p),
                             gadc_channel(GadcParams(p.gamma, 0.0)))
    base = q_ad(p.gamma)
    return (base + 2.0 * eps + 2.0 * g(eps), base + 4.0 * eps + 4.0 * g(eps))


def eps_adeg_ub(p: GadcParams) -> float:
    """Upper bound on Q and P from approximate anti-degradability
    (output dimension 2, so the log2(d_B - 1) term vanishes)."""
    from .sdp import sdp_eps_adeg

    eps, _ = sdp_eps_adeg(gadc_channel(p))
    return 2.0 * eps + h2(min(eps, 0.5)) + g(eps)


# ---------------------------------------------------------------------------
# Rains information
# ---------------------------------------------------------------------------

def _joint_state_xform(p: GadcParams, q: float) -> np.ndarray:
    """X-form vector (r00, r11, r22, r33, corner) of the joint state from
    the two-qubit input sqrt(1-q)|00> + sqrt(q)|11>."""
    gamma, n = p.gamma, p.n
    return np.array([
        (1.0 - q) * (1.0 - gamma * n),
        (1.0 - q) * gamma * n,
        q * gamma * (1.0 - n),
        q * (1.0 - gamma * (1.0 - n)),
        np.sqrt(q * (1.0 - q)) * np.sqrt(1.0 - gamma),
    ])


def _xform_matrix(v: np.ndarray, phi: float = 0.0) -> np.ndarray:
    m = np.diag(v[:4]).astype(complex)
    m[0, 3] = v[4] * np.exp(1j * phi)
    m[3, 0] = v[4] * np.exp(-1j * phi)
    return m


_LOG2E = 1.0 / np.log(2.0)


def _rho_log_terms(r: np.ndarray) -> float:
    """Tr[rho log2 rho] for an X-form vector (block + two scalars)."""
    m = 0.5 * (r[0] + r[3])
    w = np.hypot(0.5 * (r[0] - r[3]), r[4])
    total = 0.0
    for lam in (m + w, m - w, r[1], r[2]):
        if lam > 1e-15:
            total += lam * np.log2(lam)
    return total


def _trace_rho_log_sigma(r: np.ndarray, s: np.ndarray,
                         phi: float = 0.0) -> float:
    """Tr[rho log2 sigma] for X-form vectors; -inf style inf on support gap."""
    # outer block: sigma_b = [[sa, sc e^{i phi}], [conj, sd]]
    sa, sd, sc = s[0], s[3], s[4]
    m = 0.5 * (sa + sd)
    h = 0.5 * (sa - sd)
    w = np.hypot(h, sc)
    total = 0.0
    cphi = np.cos(phi)
    if w < 1e-15:
        if m <= 1e-15:
            if r[0] + r[3] > 1e-12 or r[4] != 0.0:
                return -np.inf
        else:
            total += (r[0] + r[3]) * np.log2(m)
    else:
        lam_p, lam_m = m + w, m - w
        # <v+|rho|v+> with v+ = (cos t, e^{-i phi} sin t), tan(2t) = sc/h
        c2 = 0.5 * (1.0 + h / w)     # cos^2 t
        s2 = 0.5 * (1.0 - h / w)     # sin^2 t
        cross = (sc / w) * r[4] * cphi  # 2 Re[cos t sin t e^{i phi} rho_corner]
        ov_p = r[0] * c2 + r[3] * s2 + cross
        ov_m = r[0] * s2 + r[3] * c2 - cross
        for lam, ov in ((lam_p, ov_p), (lam_m, ov_m)):
            if lam <= 1e-15:
                if ov > 1e-12:
                    return -np.inf
                continue
            total += ov * np.log2(lam)
    for ri, si in ((r[1], s[1]), (r[2], s[2])):
        if ri > 1e-15:
            if si <= 1e-15:
                return -np.inf
            total += ri * np.log2(si)
    return total


def _sigma_from_params(x: np.ndarray) -> np.ndarray:
    """Map unconstrained parameters to a PPT X-form state vector."""
    xs = np.clip(x[:4], -60.0, 60.0)
    wts = np.exp(xs - np.max(xs))
    wts = wts / wts.sum()
    alpha, beta, gam, delta = wts
    cap = min(np.sqrt(alpha * delta), np.sqrt(beta * gam))
    xi = cap / (1.0 + np.exp(-np.clip(x[4], -60.0, 60.0)))
    return np.array([alpha, beta, gam, delta, xi])


def _rains_inner(p: GadcParams, q: float, restarts: int = 10,
                 seed: int = 5, phi_grid: int = 0,
                 warm: list | None = None) -> float:
    """Minimal relative entropy to PPT X-form states for a fixed input."""
    r = _joint_state_xform(p, q)
    const = _rho_log_terms(r)

    def obj(x: np.ndarray, phi: float = 0.0) -> float:
        val = const - _trace_rho_log_sigma(r, _sigma_from_params(x), phi)
        return val if np.isfinite(val) else 1e6

    rng = np.random.default_rng(seed)
    starts = []
    if warm:
        starts.extend(warm)
    # heuristic: sigma proportional to rho itself (exact when rho is PPT)
    safe = np.clip(r[:4], 1e-12, None)
    cap = min(np.sqrt(safe[0] * safe[3]), np.sqrt(safe[1] * safe[2]))
    frac = min(r[4] / cap, 1.0 - 1e-9) if cap > 0 else 0.5
    logit = np.log(frac / (1.0 - frac)) if 0 < frac < 1 else 0.0
    starts.append(np.concatenate([np.log(safe), [logit]]))
    starts.append(np.zeros(5))
    for _ in range(max(restarts - len(starts), 0)):
        starts.append(rng.normal(0, 1.5, 5))
    best = np.inf
    best_x = None
    for x0 in starts:
        res = minimize(obj, x0, method="Nelder-Mead",
                       options={"xatol": 1e-10, "fatol": 1e-13,
                                "maxiter": 2000})
        if res.fun < best:
            best, best_x = res.fun, res.x
    if warm is not None and best_x is not None:
        warm.clear()
        warm.append(best_x)
    if phi_grid and best_x is not None:
        for phi in np.linspace(0, 2 * np.pi, phi_grid, endpoint=False):
            best = min(best, obj(best_x, phi))
    return float(max(best, 0.0))


def rains_ub(p: GadcParams, restarts: int = 10, phi_grid: int = 0) -> float:
    """Rains information upper bound on the quantum and private capacities.

    Outer concave maximization over the diagonal-input parameter; inner
    minimization over PPT states of X form with the phase fixed to zero
    (optionally spot-checked on a phase grid; the real corner of the joint
    state makes zero the optimal phase).  The inner optimizer is warm
    started from the previous outer iterate after the full-restart seeding
    pass.
    """
    warm: list = []

    def inner(q: float) -> float:
        n_restarts = restarts if not warm else 3
        return _rains_inner(p, q, restarts=n_restarts, phi_grid=phi_grid,
                            warm=warm)

    _, val = golden_max(inner, 0.0, 1.0, seed_points=21, tol=1e-6)
    return max(val, 0.0)


def q_rmg_ub(t: ThermalParams) -> float:
    """Coherent information of the extended attenuator (degradable for
    n > 0), an upper bound on the base channel's quantum capacity.  For
    n = 0 the extension adds nothing and the amplitude damping capacity is
    returned."""
    if t.n <= 0.0:
        return q_ad(1.0 - t.eta)
    ext = extended_channel(t)
    comp_ks = _weak_complement_kraus(ext)

    def ic(p: float) -> float:
        rho = np.diag([1.0 - p, p])
        out = sum(k @ rho @ k.conj().T for k in ext.kraus)
        env = sum(k @ rho @ k.conj().T for k in comp_ks)
        return entropy_vn(out) - entropy_vn(env)

    _, val = golden_max(ic, 0.0, 1.0, seed_points=200, tol=1e-10)
    return max(val, 0.0)


def _weak_complement_kraus(ch: QuantumChannel) -> list[np.ndarray]:
    """Kraus operators of the complement to the canonical isometry."""
    r = len(ch.kraus)
    out = []
    for j in range(ch.dout):
        c = np.zeros((r, ch.din), dtype=complex)
        for i, k in enumerate(ch.kraus):
            c[i, :] = k[j, :]
        out.append(c)
    return out


def quantum_bound_set(p: GadcParams) -> QuantumBoundSet:
    """Evaluate every quantum-capacity bound at one parameter point.

    Approximate-degradability bounds are only defined for gamma in
    (0, 1/2) and report NaN outside; the extended-channel bound is only
    defined for gamma <= 1/2 and uses the population symmetry n <-> 1-n.
    """
    d1, d2, d3, d4 = dp_bounds(p)
    if 0.0 < p.gamma < 0.5:
        deg1, p_deg1 = eps_deg_ubs(p)
        deg2, p_deg2 = eps_close_deg_ubs(p)
    else:
        deg1 = p_deg1 = deg2 = p_deg2 = float("nan")
    if p.gamma <= 0.5:
        rmg = q_rmg_ub(ThermalParams(1.0 - p.gamma, min(p.n, 1.0 - p.n)))
    else:
        rmg = float("nan")
    return QuantumBoundSet(
        ic_lb=coherent_info_lb(p), dp1=d1, dp2=d2, dp3=d3, dp4=d4,
        deg1=deg1, deg2=deg2, adeg=eps_adeg_ub(p), rains=rains_ub(p),
        rmg=rmg, p_deg1=p_deg1, p_deg2=p_deg2)
