"""Shared fixtures and independent oracle helpers for the test suite.

The helpers here deliberately avoid the library's own code paths where they
serve as oracles: partial traces are index-summed by explicit loops, and
expected entropies come straight from scalar arithmetic.
"""

import math

import numpy as np
import pytest

from chronon_lab.states import (
    BipartiteState,
    ClassicalQuantumState,
    DensityMatrix,
)


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def dagger(a):
    return a.conj().T


def random_hermitian(dim, rng):
    k = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (k + dagger(k)) / 2


def random_unitary(dim, rng):
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph


def random_density_mat(dim, rng, pure=False):
    if pure:
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v /= np.linalg.norm(v)
        return np.outer(v, v.conj())
    k = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = k @ dagger(k)
    return rho / np.trace(rho).real


def random_density(dim, rng, pure=False):
    return DensityMatrix(random_density_mat(dim, rng, pure=pure))


def random_cq(rng, dim=2, branches=3):
    probs = rng.random(branches)
    probs /= probs.sum()
    return ClassicalQuantumState(
        tuple((float(p), random_density(dim, rng)) for p in probs)
    )


def random_separable(rng, dim_a=2, dim_b=2, terms=3):
    """Convex mixture of product states."""
    weights = rng.random(terms)
    weights /= weights.sum()
    joint = np.zeros((dim_a * dim_b, dim_a * dim_b), dtype=complex)
    for w in weights:
        joint += w * np.kron(
            random_density_mat(dim_a, rng), random_density_mat(dim_b, rng)
        )
    return BipartiteState(joint=DensityMatrix(joint), dim_a=dim_a, dim_b=dim_b)


def random_entangled_pure(rng, dim=2):
    v = rng.normal(size=dim * dim) + 1j * rng.normal(size=dim * dim)
    v /= np.linalg.norm(v)
    return BipartiteState(
        joint=DensityMatrix(np.outer(v, v.conj())), dim_a=dim, dim_b=dim
    )


def bell_state():
    v = np.zeros(4, dtype=complex)
    v[0] = v[3] = 1.0 / math.sqrt(2)
    return BipartiteState(
        joint=DensityMatrix(np.outer(v, v.conj())), dim_a=2, dim_b=2
    )


def partial_trace_oracle(joint, dim_a, dim_b, keep):
    """Brute-force index-sum partial trace, independent of the library."""
    joint = np.asarray(joint)
    if keep == "A":
        out = np.zeros((dim_a, dim_a), dtype=complex)
        for i in range(dim_a):
            for k in range(dim_a):
                for j in range(dim_b):
                    out[i, k] += joint[i * dim_b + j, k * dim_b + j]
        return out
    out = np.zeros((dim_b, dim_b), dtype=complex)
    for j in range(dim_b):
        for l in range(dim_b):
            for i in range(dim_a):
                out[j, l] += joint[i * dim_b + j, i * dim_b + l]
    return out


def entropy_oracle(eigenvalues):
    """-sum w ln w over positive weights, plain scalar arithmetic."""
    return -sum(w * math.log(w) for w in eigenvalues if w > 1e-15)
