"""Semidefinite programs for channel capacity bounds and witness checks.

Design notes
------------
Programs are phrased against a thin ``ConeProgram`` wrapper so the conic
backend is swappable; the default backend is CLARABEL via cvxpy, with SCS as
a fallback.  ``ConeSolution.dual`` is reconstructed from the returned dual
multipliers through the Lagrangian, so the reported primal-dual gap is an
honest complementary-slackness residual rather than a solver-internal value.

Diamond distance uses the one-block semidefinite form
    (1/2) ||Phi||_diamond = min { ||Tr_B Z||_inf : Z >= 0, Z >= J(Phi) }
valid for differences of completely positive trace-preserving maps, where
J(Phi) is the unnormalized Choi operator.  This form was validated against
pairs with known diamond distance (orthogonal constant channels, identity
vs. replacer) and against the triangle inequality on random channels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import cvxpy as cp
import numpy as np

from .channels import ChoiMatrix, QuantumChannel, choi
from .gadc import GadcParams, gadc_choi, gadc_complement
from .mathcore import partial_trace, partial_transpose

GAP_TOL = 1e-7
DEFAULT_SOLVER_TOL = 1e-10


@dataclass
class ConeProgram:
    """A minimization over Hermitian matrix blocks with conic constraints."""

    variables: dict[str, cp.Variable] = field(default_factory=dict)
    constraints: list = field(default_factory=list)
    objective: cp.Expression | None = None

    def hermitian(self, name: str, dim: int, complex_field: bool = False) -> cp.Variable:
        var = (cp.Variable((dim, dim), hermitian=True) if complex_field
               else cp.Variable((dim, dim), symmetric=True))
        self.variables[name] = var
        return var

    def scalar(self, name: str) -> cp.Variable:
        var = cp.Variable()
        self.variables[name] = var
        return var

    def psd(self, expr) -> None:
        self.constraints.append(expr >> 0)

    def equal(self, lhs, rhs) -> None:
        self.constraints.append(lhs == rhs)

    def minimize(self, expr) -> None:
        self.objective = expr


@dataclass
class ConeSolution:
    status: str
    primal: float
    dual: float
    blocks: dict[str, np.ndarray]
    gap: float


def _slack_pairing(con) -> float:
    """<slack, dual multiplier> for one constraint (complementary slackness)."""
    dv = con.dual_value
    if dv is None:
        return 0.0
    if isinstance(con, cp.constraints.PSD):
        slack = con.expr.value
        return float(np.real(np.tensordot(np.conj(dv), slack, axes=2)))
    resid = con.residual
    if resid is None:
        return 0.0
    return float(np.sum(np.abs(resid) * np.abs(np.atleast_1d(dv))))


def solve(prog: ConeProgram, tol: float | None = None) -> ConeSolution:
    """Solve a cone program; raises on failure, reports a duality gap.

    ``tol`` defaults to the module-level ``DEFAULT_SOLVER_TOL`` at call
    time, so the default can be overridden globally.
    """
    if tol is None:
        tol = DEFAULT_SOLVER_TOL
    problem = cp.Problem(cp.Minimize(prog.objective), prog.constraints)
    try:
        problem.solve(solver=cp.CLARABEL, tol_gap_abs=tol, tol_gap_rel=tol,
                      tol_feas=tol)
    except cp.SolverError:
        problem.solve(solver=cp.SCS, eps=max(tol, 1e-9))
    if problem.status not in ("optimal", "optimal_inaccurate"):
        raise RuntimeError(f"SDP failed with status {problem.status}")
    primal = float(problem.value)
    gap = sum(abs(_slack_pairing(c)) for c in prog.constraints)
    blocks = {k: (np.array(v.value) if v.value is not None else None)
              for k, v in prog.variables.items()}
    return ConeSolution(status=problem.status, primal=primal,
                        dual=primal - gap, blocks=blocks, gap=gap)


def _ptrace_expr(expr, dims: Sequence[int], keep: Sequence[int]):
    """Partial trace of a cvxpy expression via isometry sandwiches."""
    n = len(dims)
    traced = [i for i in range(n) if i not in keep]
    dk = int(np.prod([dims[k] for k in keep]))
    out = 0
    # enumerate joint basis of traced systems
    idx_ranges = [range(dims[i]) for i in traced]
    import itertools
    for combo in itertools.product(*idx_ranges):
        mats = []
        for i in range(n):
            if i in keep:
                mats.append(np.eye(dims[i]))
            else:
                e = np.zeros((dims[i], 1))
                e[combo[traced.index(i)], 0] = 1.0
                mats.append(e)
        iso = mats[0]
        for m in mats[1:]:
            iso = np.kron(iso, m)
        out = out + iso.T @ expr @ iso
    return out


def _pt_expr(expr, dims: Sequence[int], sys: int):
    """Partial transpose of a cvxpy matrix expression."""
    d = int(np.prod(dims))
    rows = []
    # build index map: PT is a linear reshuffle of entries
    n = len(dims)
    strides = np.cumprod([1] + list(dims[::-1]))[::-1][1:]

    def unravel(i):
        out = []
        for s in strides:
            out.append(i // s)
            i = i % s
        return out

    def ravel(ix):
        return int(sum(a * s for a, s in zip(ix, strides)))

    entries = {}
    for i in range(d):
        for j in range(d):
            ri, rj = unravel(i), unravel(j)
            ri2, rj2 = list(ri), list(rj)
            ri2[sys], rj2[sys] = rj[sys], ri[sys]
            entries[(i, j)] = (ravel(ri2), ravel(rj2))
    rows = []
    for i in range(d):
        cols = [expr[entries[(i, j)][0], entries[(i, j)][1]] for j in range(d)]
        rows.append(cp.hstack(cols))
    return cp.vstack(rows)


def _opnorm_epigraph(prog: ConeProgram, expr, dim: int, name: str = "t"):
    """t with t*I >= expr >= -t*I; for PSD expr this is the spectral norm."""
    t = prog.scalar(name)
    prog.psd(t * np.eye(dim) - expr)
    prog.psd(expr + t * np.eye(dim))
    return t


def diamond_dist(ch1: QuantumChannel, ch2: QuantumChannel,
                 tol: float | None = None) -> float:
    """Diamond-norm distance ||ch1 - ch2||_diamond."""
    j = choi(ch1).gamma - choi(ch2).gamma
    din, dout = ch1.din, ch1.dout
    prog = ConeProgram()
    z = prog.hermitian("z", din * dout, complex_field=np.iscomplexobj(j) and
                       np.max(np.abs(j.imag)) > 0)
    prog.psd(z)
    prog.psd(z - j)
    t = prog.scalar("t")
    prog.psd(t * np.eye(din) - _ptrace_expr(z, (din, dout), (0,)))
    prog.minimize(t)
    sol = solve(prog, tol)
    return max(2.0 * sol.primal, 0.0)


def sdp_c_beta(c: ChoiMatrix, tol: float | None = None) -> ConeSolution:
    """SDP whose log2 upper-bounds the classical capacity (no-signalling
    assisted form).  Returns the solution; value in bits is log2(primal)."""
    gamma = np.real(c.gamma)
    da, db = c.din, c.dout
    dims = (da, db)
    prog = ConeProgram()
    r = prog.hermitian("r", da * db)
    s = prog.hermitian("s", db)
    gtb = partial_transpose(gamma, dims, 1)
    prog.psd(r - gtb)
    prog.psd(r + gtb)
    rtb = _pt_expr(r, dims, 1)
    ones = np.eye(da)
    prog.psd(cp.kron(ones, s) - rtb)
    prog.psd(rtb + cp.kron(ones, s))
    prog.minimize(cp.trace(s))
    return solve(prog, tol)


def sdp_c_zeta(c: ChoiMatrix, tol: float | None = None) -> ConeSolution:
    """Companion SDP upper bound on classical capacity; bits = log2(primal)."""
    gamma = np.real(c.gamma)
    da, db = c.din, c.dout
    prog = ConeProgram()
    v = prog.hermitian("v", da * db)
    s = prog.hermitian("s", db)
    prog.psd(v - gamma)
    vtb = _pt_expr(v, (da, db), 1)
    ones = np.eye(da)
    prog.psd(cp.kron(ones, s) - vtb)
    prog.psd(vtb + cp.kron(ones, s))
    prog.minimize(cp.trace(s))
    return solve(prog, tol)


def c_beta_bits(c: ChoiMatrix, tol: float | None = None) -> float:
    return float(np.log2(sdp_c_beta(c, tol).primal))


def c_zeta_bits(c: ChoiMatrix, tol: float | None = None) -> float:
    return float(np.log2(sdp_c_zeta(c, tol).primal))


def _link_choi(gamma_first: np.ndarray, dims_first: tuple[int, int],
               jd, d_last: int):
    """Choi operator of (second o first) given the second map's Choi variable.

    gamma_first lives on A (x) B, jd on B (x) C; the result lives on A (x) C:
    Tr_B[(Gamma_first^{T_B} (x) I_C)(I_A (x) J_second)].
    """
    da, db = dims_first
    gtb = partial_transpose(gamma_first, (da, db), 1)
    lhs = np.kron(gtb, np.eye(d_last))
    rhs = cp.kron(np.eye(da), jd)
    return _ptrace_expr(lhs @ rhs, (da, db, d_last), (0, 2))


def sdp_eps_deg(ch: QuantumChannel, tol: float | None = None
                ) -> tuple[float, ChoiMatrix]:
    """Best degrading approximation: minimize (1/2)||N^c - D o N||_diamond
    over channels D from the output to the environment.

    Returns (epsilon, Choi matrix of the optimal D).
    """
    comp = gadc_complement_or_generic(ch)
    de = comp.dout
    da, db = ch.din, ch.dout
    g_n = np.real(choi(ch).gamma)
    g_c = np.real(choi(comp).gamma)
    prog = ConeProgram()
    jd = prog.hermitian("jd", db * de)
    prog.psd(jd)
    prog.equal(_ptrace_expr(jd, (db, de), (0,)), np.eye(db))
    diff = g_c - _link_choi(g_n, (da, db), jd, de)
    z = prog.hermitian("z", da * de)
    prog.psd(z)
    prog.psd(z - diff)
    t = prog.scalar("t")
    prog.psd(t * np.eye(da) - _ptrace_expr(z, (da, de), (0,)))
    prog.minimize(t)
    sol = solve(prog, tol)
    return max(sol.primal, 0.0), ChoiMatrix(state=sol.blocks["jd"] / db, din=db, dout=de)


def sdp_eps_adeg(ch: QuantumChannel, tol: float | None = None
                 ) -> tuple[float, ChoiMatrix]:
    """Best anti-degrading approximation: minimize
    (1/2)||N - E o N^c||_diamond over channels E from environment to output.
    """
    comp = gadc_complement_or_generic(ch)
    de = comp.dout
    da, db = ch.din, ch.dout
    g_n = np.real(choi(ch).gamma)
    g_c = np.real(choi(comp).gamma)
    prog = ConeProgram()
    je = prog.hermitian("je", de * db)
    prog.psd(je)
    prog.equal(_ptrace_expr(je, (de, db), (0,)), np.eye(de))
    diff = g_n - _link_choi(g_c, (da, de), je, db)
    z = prog.hermitian("z", da * db)
    prog.psd(z)
    prog.psd(z - diff)
    t = prog.scalar("t")
    prog.psd(t * np.eye(da) - _ptrace_expr(z, (da, db), (0,)))
    prog.minimize(t)
    sol = solve(prog, tol)
    return max(sol.primal, 0.0), ChoiMatrix(state=sol.blocks["je"] / de, din=de, dout=db)


def gadc_complement_or_generic(ch: QuantumChannel) -> QuantumChannel:
    """Complement with a stable environment ordering.

    Qubit channels presented with fewer than four Kraus operators are padded
    with zero operators so the environment dimension is always four; this
    keeps degrading-map SDPs comparable across a parameter sweep.
    """
    from .channels import complementary

    if ch.din == 2 and ch.dout == 2 and len(ch.kraus) < 4:
        ks = list(ch.kraus) + [np.zeros((2, 2))] * (4 - len(ch.kraus))
        return complementary(QuantumChannel(ks))
    return complementary(ch)


def sdp_eps_eb(ch: QuantumChannel, tol: float | None = None
               ) -> tuple[float, ChoiMatrix]:
    """Diamond-norm distance (halved) to the PPT channel set.

    For qubit channels PPT of the Choi state is equivalent to entanglement
    breaking, so this is the distance to the nearest entanglement-breaking
    channel.  Returns (epsilon, Choi of the optimizing channel).
    """
    da, db = ch.din, ch.dout
    g_n = np.real(choi(ch).gamma)
    prog = ConeProgram()
    jm = prog.hermitian("jm", da * db)
    prog.psd(jm)
    prog.psd(_pt_expr(jm, (da, db), 1))
    prog.equal(_ptrace_expr(jm, (da, db), (0,)), np.eye(da))
    z = prog.hermitian("z", da * db)
    prog.psd(z)
    prog.psd(z - (g_n - jm))
    t = prog.scalar("t")
    prog.psd(t * np.eye(da) - _ptrace_expr(z, (da, db), (0,)))
    prog.minimize(t)
    sol = solve(prog, tol)
    return max(sol.primal, 0.0), ChoiMatrix(state=sol.blocks["jm"] / da, din=da, dout=db)


def sdp_sigma_emax(c: ChoiMatrix, tol: float | None = None) -> ConeSolution:
    """Max-relative-entropy-of-entanglement SDP; bits = log2(primal).

    minimize ||Tr_B Y||_inf  s.t.  Y >= Gamma, Y^{T_B} >= 0.
    """
    gamma = np.real(c.gamma)
    da, db = c.din, c.dout
    prog = ConeProgram()
    y = prog.hermitian("y", da * db)
    prog.psd(y - gamma)
    prog.psd(_pt_expr(y, (da, db), 1))
    t = prog.scalar("t")
    prog.psd(t * np.eye(da) - _ptrace_expr(y, (da, db), (0,)))
    prog.minimize(t)
    return solve(prog, tol)


def sdp_delta_rmax(c: ChoiMatrix, tol: float | None = None) -> ConeSolution:
    """Max-Rains SDP; bits = log2(primal).

    minimize ||Tr_B (V + Y)||_inf  s.t.  V, Y >= 0, (V - Y)^{T_B} >= Gamma.
    """
    gamma = np.real(c.gamma)
    da, db = c.din, c.dout
    prog = ConeProgram()
    v = prog.hermitian("v", da * db)
    y = prog.hermitian("y", da * db)
    prog.psd(v)
    prog.psd(y)
    prog.psd(_pt_expr(v - y, (da, db), 1) - gamma)
    t = prog.scalar("t")
    prog.psd(t * np.eye(da) - _ptrace_expr(v + y, (da, db), (0,)))
    prog.minimize(t)
    return solve(prog, tol)


def emax_bits(c: ChoiMatrix, tol: float | None = None) -> float:
    return float(np.log2(sdp_sigma_emax(c, tol).primal))


def rmax_bits(c: ChoiMatrix, tol: float | None = None) -> float:
    return float(np.log2(sdp_delta_rmax(c, tol).primal))


# ---------------------------------------------------------------------------
# witness verification: closed-form feasible points certifying SDP optima
# ---------------------------------------------------------------------------

@dataclass
class WitnessReport:
    target: float
    primal_value: float | None
    dual_value: float | None
    max_violation: float
    ok: bool


def _min_eig(m: np.ndarray) -> float:
    return float(np.min(np.linalg.eigvalsh((m + m.conj().T) / 2.0)))


def verify_cbeta_witness(p: GadcParams, tol: float = 1e-9) -> WitnessReport:
    """Check closed-form optima of the classical-capacity SDP pair.

    The primal witness (R, S) is feasible for the zero-population Choi
    operator; channel covariance plus convexity transfer the resulting value
    1 + sqrt(1-gamma) to every population n.  The dual witnesses for both
    SDP forms are feasible for arbitrary n and attain the same value, so
    together they pin the optimum.  ``max_violation`` is the largest
    eigenvalue/equality violation across all constraints.
    """
    gamma = p.gamma
    sq = np.sqrt(1.0 - gamma)
    target = 1.0 + sq
    viol = 0.0

    # primal witness, checked against the n = 0 Choi operator
    g0 = gadc_choi(GadcParams(gamma, 0.0)).gamma
    a = 0.5 * (sq - (1.0 - gamma))
    r = np.array([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0 - gamma + a, a, 0.0],
        [0.0, a, 1.0 + a, 0.0],
        [0.0, 0.0, 0.0, 1.0 - gamma],
    ])
    s = np.diag([1.0 + a, 1.0 - gamma + a])
    gtb = partial_transpose(g0, (2, 2), 1)
    rtb = partial_transpose(r, (2, 2), 1)
    eye_s = np.kron(np.eye(2), s)
    for m in (r - gtb, r + gtb, eye_s - rtb, eye_s + rtb):
        viol = max(viol, -_min_eig(m))
    primal_value = float(np.trace(s))
    viol = max(viol, abs(primal_value - target))

    # dual witness of the first SDP form, feasible for arbitrary n
    g = gadc_choi(p).gamma
    k = 0.5 * np.array([[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1.0]])
    e = 0.5 * np.array([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1.0]])
    m_w = np.zeros((4, 4))
    f = np.zeros((4, 4))
    for psd in (k, m_w, e, f):
        viol = max(viol, -_min_eig(psd))
    viol = max(viol, -_min_eig(partial_transpose(e - f, (2, 2), 1) - (k + m_w)))
    eb = partial_trace(e, (2, 2), (1,)) + partial_trace(f, (2, 2), (1,))
    viol = max(viol, -_min_eig(np.eye(2) - eb))
    dual1 = float(np.real(np.trace(g @ partial_transpose(k - m_w, (2, 2), 1))))
    viol = max(viol, abs(dual1 - target))

    # dual witness of the companion SDP form
    k2 = 0.5 * np.array([[1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1.0]])
    e2 = 0.5 * np.array([[1, 0, 0, 0], [0, 1, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1.0]])
    f2 = np.zeros((4, 4))
    for psd in (k2, e2, f2):
        viol = max(viol, -_min_eig(psd))
    viol = max(viol, -_min_eig(partial_transpose(e2 - f2, (2, 2), 1) - k2))
    eb2 = partial_trace(e2, (2, 2), (1,)) + partial_trace(f2, (2, 2), (1,))
    viol = max(viol, -_min_eig(np.eye(2) - eb2))
    dual2 = float(np.real(np.trace(k2 @ g)))
    viol = max(viol, abs(dual2 - target))

    return WitnessReport(target=target, primal_value=primal_value,
                         dual_value=dual1, max_violation=viol, ok=viol <= tol)


def verify_emax_witness(p: GadcParams, tol: float = 1e-9) -> WitnessReport:
    """Check closed-form primal/dual optima of the max-entanglement SDP and
    the dual witness of the max-Rains SDP."""
    from .gadc import is_entanglement_breaking

    gamma, n = p.gamma, p.n
    disc = (gamma * (2.0 * n - 1.0)) ** 2 + 4.0 * (1.0 - gamma)
    lam_minus = 0.5 * (gamma - np.sqrt(disc))
    target = 1.0 - gamma / 2.0 + 0.5 * np.sqrt(disc)
    viol = 0.0
    g = gadc_choi(p).gamma

    if is_entanglement_breaking(p)[0]:
        # value pins to 1: primal Y = Gamma (PPT), dual P = rho (x) 1, Q = 0
        gtb = partial_transpose(g, (2, 2), 1)
        viol = max(viol, -_min_eig(gtb))
        rho = np.diag([0.5, 0.5])
        val = float(np.real(np.trace(g @ np.kron(rho, np.eye(2)))))
        viol = max(viol, abs(val - 1.0))
        return WitnessReport(target=1.0, primal_value=1.0, dual_value=val,
                             max_violation=viol, ok=viol <= tol)

    # primal witness for the max-entanglement SDP
    y = g - np.diag([0.0, lam_minus, lam_minus, 0.0])
    viol = max(viol, -_min_eig(y - g))
    viol = max(viol, -_min_eig(partial_transpose(y, (2, 2), 1)))
    tr_b = partial_trace(y, (2, 2), (0,))
    primal_value = float(np.max(np.linalg.eigvalsh(tr_b)))
    viol = max(viol, abs(primal_value - target))

    # dual witness for the max-entanglement SDP
    a = np.sqrt(disc)
    b = (a - (2.0 * n - 1.0) * gamma) / (2.0 * a)
    rho = np.diag([b, 1.0 - b])
    c = np.sqrt(1.0 - gamma) / a
    p_ab = np.array([
        [b, 0, 0, c],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [c, 0, 0, 1.0 - b],
    ])
    q_ab = np.array([
        [0, 0, 0, 0],
        [0, b, -c, 0],
        [0, -c, 1.0 - b, 0],
        [0, 0, 0, 0.0],
    ])
    for psd in (p_ab, q_ab, rho):
        viol = max(viol, -_min_eig(psd))
    viol = max(viol, -_min_eig(np.kron(rho, np.eye(2))
                               - (p_ab + partial_transpose(q_ab, (2, 2), 1))))
    viol = max(viol, max(0.0, float(np.trace(rho)) - 1.0))
    dual_value = float(np.real(np.trace(g @ p_ab)))
    viol = max(viol, abs(dual_value - target))

    # dual witness for the max-Rains SDP (same optimal value)
    c1 = 4.0 * (np.sqrt(1.0 - gamma) + gamma * (1.0 - n))
    c2 = 4.0 * (2.0 * np.sqrt(1.0 - gamma) + gamma)
    c3 = np.sqrt(disc)
    rad = c1 ** 2 + c2 * ((4.0 * n - 3.0) * gamma - c3)
    best = None
    for sign in (+1.0, -1.0):
        # root selection: evaluate both candidates, keep feasible one
        if rad < 0:
            continue
        aa = (c1 + sign * np.sqrt(rad)) / c2
        if not (0.0 <= aa <= 1.0):
            continue
        rho_r = np.diag([aa, 1.0 - aa])
        r_ab = np.array([
            [aa, 0, 0, 2.0 * aa * (1.0 - aa)],
            [0, aa * (1.0 - 2.0 * aa), 0, 0],
            [0, 0, -(1.0 - aa) * (1.0 - 2.0 * aa), 0],
            [2.0 * aa * (1.0 - aa), 0, 0, 1.0 - aa],
        ])
        rtb = partial_transpose(r_ab, (2, 2), 1)
        bound = np.kron(rho_r, np.eye(2))
        feas = max(-_min_eig(bound - rtb), -_min_eig(rtb + bound),
                   -_min_eig(rho_r), max(0.0, float(np.trace(rho_r)) - 1.0))
        val = float(np.real(np.trace(g @ r_ab)))
        if best is None or (feas <= tol and abs(val - target) < abs(best[1] - target)):
            best = (feas, val)
    if best is None:
        viol = max(viol, np.inf)
    else:
        viol = max(viol, best[0], abs(best[1] - target))

    return WitnessReport(target=target, primal_value=primal_value,
                         dual_value=dual_value, max_violation=viol,
                         ok=viol <= tol)
