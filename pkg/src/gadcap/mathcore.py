"""Dense complex linear algebra and entropy functionals.

All entropic quantities are in bits (base-2 logarithms).  Matrices are plain
numpy arrays; multipartite operators use row-major (kron) subsystem ordering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

ComplexMatrix = np.ndarray

EIG_CLIP = 1e-12
SUPPORT_TOL = 1e-8

I2 = np.eye(2)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]])
PAULI_Y = np.array([[0.0, -1.0j], [0.0 + 1.0j, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]])


@dataclass
class Spectrum:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""

    values: np.ndarray
    vectors: np.ndarray  # columns are eigenvectors, aligned with values


def tensor(*ops: np.ndarray) -> np.ndarray:
    """Kronecker product of any number of operators."""
    out = np.asarray(ops[0])
    for op in ops[1:]:
        out = np.kron(out, np.asarray(op))
    return out


def _reshape_multi(m: np.ndarray, dims: Sequence[int]) -> np.ndarray:
    d = list(dims)
    return np.asarray(m).reshape(d + d)


def partial_trace(m: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out all subsystems not listed in ``keep`` (indices into dims)."""
    n = len(dims)
    keep = sorted(keep)
    t = _reshape_multi(m, dims)
    # contract traced-out subsystems pairwise
    traced = 0
    for sys in range(n):
        if sys in keep:
            continue
        ax = sys - traced
        t = np.trace(t, axis1=ax, axis2=ax + (n - traced))
        traced += 1
    dk = int(np.prod([dims[k] for k in keep])) if keep else 1
    return t.reshape(dk, dk)


def partial_transpose(m: np.ndarray, dims: Sequence[int], sys: int) -> np.ndarray:
    """Transpose subsystem ``sys`` of a multipartite operator."""
    n = len(dims)
    t = _reshape_multi(m, dims)
    t = np.swapaxes(t, sys, sys + n)
    d = int(np.prod(dims))
    return t.reshape(d, d)


def eig_hermitian(m: np.ndarray) -> Spectrum:
    """Eigendecomposition with eigenvalues sorted in descending order."""
    vals, vecs = np.linalg.eigh(m)
    order = np.argsort(vals)[::-1]
    return Spectrum(values=vals[order], vectors=vecs[:, order])


def _clipped_eigvals(rho: np.ndarray) -> np.ndarray:
    vals = np.linalg.eigvalsh(rho)
    vals = np.where(np.abs(vals) < EIG_CLIP, 0.0, vals)
    return vals


def entropy_vn(rho: np.ndarray) -> float:
    """Von Neumann entropy in bits; tiny negative eigenvalues are clipped."""
    vals = _clipped_eigvals(rho)
    pos = vals[vals > 0]
    return float(-np.sum(pos * np.log2(pos)))


def h2(x: float) -> float:
    """Binary entropy in bits."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return float(-x * np.log2(x) - (1.0 - x) * np.log2(1.0 - x))


def g(x: float) -> float:
    """Bosonic-style entropy functional (1+x)log2(1+x) - x log2 x."""
    if x <= 0.0:
        return 0.0
    return float((1.0 + x) * np.log2(1.0 + x) - x * np.log2(x))


def relative_entropy(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Quantum relative entropy D(rho || sigma) in bits.

    Returns ``np.inf`` when the support of rho is not contained in the
    support of sigma (detected by projecting rho onto sigma's null space).
    """
    srho = eig_hermitian(rho)
    ssig = eig_hermitian(sigma)
    null = ssig.vectors[:, np.abs(ssig.values) <= EIG_CLIP]
    if null.shape[1] > 0:
        overlap = np.linalg.norm(null.conj().T @ rho @ null)
        if overlap > SUPPORT_TOL:
            return np.inf
    # Tr[rho log rho]
    pv = srho.values[srho.values > EIG_CLIP]
    t1 = float(np.sum(pv * np.log2(pv)))
    # Tr[rho log sigma] on sigma's support
    t2 = 0.0
    for lam, v in zip(ssig.values, ssig.vectors.T):
        if lam > EIG_CLIP:
            t2 += float(np.real(v.conj() @ rho @ v)) * float(np.log2(lam))
    return t1 - t2


def cmi(rho: np.ndarray, dims: Sequence[int], a: Sequence[int],
        b: Sequence[int], e: Sequence[int]) -> float:
    """Conditional mutual information I(A;B|E) = H(AE)+H(BE)-H(E)-H(ABE)."""
    a, b, e = list(a), list(b), list(e)
    h_ae = entropy_vn(partial_trace(rho, dims, a + e))
    h_be = entropy_vn(partial_trace(rho, dims, b + e))
    h_e = entropy_vn(partial_trace(rho, dims, e)) if e else 0.0
    h_abe = entropy_vn(partial_trace(rho, dims, a + b + e))
    return h_ae + h_be - h_e - h_abe


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values."""
    return float(np.sum(np.linalg.svd(m, compute_uv=False)))


def spectral_norm(m: np.ndarray) -> float:
    """Largest singular value."""
    return float(np.max(np.linalg.svd(m, compute_uv=False)))


_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_max(f: Callable[[float], float], lo: float, hi: float,
               seed_points: int = 200, tol: float = 1e-10) -> tuple[float, float]:
    """Maximize a univariate function on [lo, hi].

    Seeds with a uniform grid, then refines the best bracket by golden-section
    search down to an argument tolerance of ``tol``.  Returns (argmax, max).
    """
    xs = np.linspace(lo, hi, seed_points)
    ys = np.array([f(x) for x in xs])
    k = int(np.argmax(ys))
    a = xs[max(k - 1, 0)]
    b = xs[min(k + 1, seed_points - 1)]
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while abs(b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)
