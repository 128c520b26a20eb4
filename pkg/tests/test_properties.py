"""Property-based suites: entropy invariances, CMI non-negativity,
Rains-objective concavity, population-reflection symmetries."""

import numpy as np
from hypothesis import given, settings, strategies as st
from scipy.stats import unitary_group

from gadcap.bounds_classical import (c_beta_analytic, c_cov_ub, holevo_gadc,
                                     mutual_info_gadc, mutual_info_objective)
from gadcap.bounds_quantum import _rains_inner, eps_adeg_ub
from gadcap.bounds_twoway import max_rains_analytic
from gadcap.gadc import GadcParams
from gadcap.mathcore import cmi, entropy_vn

finite = {"allow_nan": False, "allow_infinity": False}
gammas = st.floats(min_value=0.05, max_value=0.95, **finite)
pops = st.floats(min_value=0.0, max_value=1.0, **finite)
seeds = st.integers(min_value=0, max_value=2**31 - 1)


def random_density(rng, d):
    a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


@given(seeds, st.integers(min_value=2, max_value=4))
@settings(max_examples=40, deadline=None)
def test_entropy_unitary_invariance(seed, d):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, d)
    u = unitary_group.rvs(d, random_state=seed)
    a = entropy_vn(rho)
    b = entropy_vn(u @ rho @ u.conj().T)
    assert abs(a - b) < 1e-9


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_entropy_additive_on_products(seed):
    rng = np.random.default_rng(seed)
    ra, rb = random_density(rng, 2), random_density(rng, 3)
    total = entropy_vn(np.kron(ra, rb))
    assert abs(total - entropy_vn(ra) - entropy_vn(rb)) < 1e-9


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_entropy_nonnegative_bounded(seed):
    rng = np.random.default_rng(seed)
    rho = random_density(rng, 4)
    s = entropy_vn(rho)
    assert -1e-10 <= s <= 2.0 + 1e-10


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_cmi_nonnegative(seed):
    # strong subadditivity on random 3-qubit states
    rng = np.random.default_rng(seed)
    rho = random_density(rng, 8)
    assert cmi(rho, (2, 2, 2), (0,), (1,), (2,)) >= -1e-9


@given(gammas, pops, st.floats(min_value=-0.99, max_value=0.99, **finite),
       st.floats(min_value=-0.99, max_value=0.99, **finite))
@settings(max_examples=60, deadline=None)
def test_mutual_info_objective_concave_midpoint(gamma, n, z1, z2):
    p = GadcParams(gamma, n)
    mid = mutual_info_objective(p, 0.5 * (z1 + z2))
    assert mid >= 0.5 * (mutual_info_objective(p, z1)
                         + mutual_info_objective(p, z2)) - 1e-9


@given(gammas, pops,
       st.floats(min_value=0.02, max_value=0.98, **finite),
       st.floats(min_value=0.02, max_value=0.98, **finite))
@settings(max_examples=12, deadline=None)
def test_rains_objective_concave_midpoint(gamma, n, q1, q2):
    p = GadcParams(gamma, n)
    f = lambda q: _rains_inner(p, q, restarts=6)
    mid = f(0.5 * (q1 + q2))
    assert mid >= 0.5 * (f(q1) + f(q2)) - 1e-6


@given(gammas, pops)
@settings(max_examples=30, deadline=None)
def test_population_reflection_symmetry_closed_forms(gamma, n):
    a, b = GadcParams(gamma, n), GadcParams(gamma, 1.0 - n)
    assert c_beta_analytic(a) == c_beta_analytic(b)
    # rounding of 1-n costs one ulp before the (2n-1)^2 term
    assert abs(max_rains_analytic(a) - max_rains_analytic(b)) < 1e-12
    assert abs(c_cov_ub(a) - c_cov_ub(b)) < 1e-12


@given(gammas, st.floats(min_value=0.05, max_value=0.95, **finite))
@settings(max_examples=10, deadline=None)
def test_population_reflection_symmetry_optimized(gamma, n):
    a, b = GadcParams(gamma, n), GadcParams(gamma, 1.0 - n)
    assert abs(holevo_gadc(a).chi - holevo_gadc(b).chi) < 1e-8
    assert abs(mutual_info_gadc(a) - mutual_info_gadc(b)) < 1e-8


@given(st.floats(min_value=0.5, max_value=1.0, **finite), pops)
@settings(max_examples=10, deadline=None)
def test_adeg_epsilon_vanishes_in_antidegradable_region(gamma, n):
    assert eps_adeg_ub(GadcParams(gamma, n)) <= 1e-4
