"""Entropy functionals: von Neumann, branch-conditional, and generalized
conditional entropy through the Cerf-Adami conditional density matrix.

All entropies are dimensionless and in nats; the Boltzmann factor enters
only when entropies are converted to energies or time quanta elsewhere.
Generalized conditional entropy may be negative for entangled joints.

The conditional density matrix is defined by the operator limit

    rho_{A|B} = lim_n [rho^(1/n) (id (x) rho_B)^(-1/n)]^n ,

whose closed form for a full-rank joint is exp(log rho - id (x) log rho_B).
For rank-deficient joints the limit degenerates to the exponential of the
*support-compressed* exponent P (log rho - id (x) log rho_B) P, evaluated
within the support of rho; this is the form implemented here, and it is the
one that preserves the identity S(A|B) = S(joint) - S(B) exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ConvergenceFailure, SingularState, SupportMismatch
from .states import BipartiteState, ClassicalQuantumState, DensityMatrix

DUAL_PATH_TOL = 1e-8
SUPPORT_CONTAINMENT_TOL = 1e-7


@dataclass(frozen=True)
class EntropyValue:
    """Entropy in nats (natural-log convention)."""

    nats: float

    def __post_init__(self):
        if not math.isfinite(self.nats):
            raise ValueError(f"entropy must be finite, got {self.nats}")


def von_neumann(rho: DensityMatrix) -> EntropyValue:
    """-sum_i w_i ln w_i over the spectrum's support; in [0, ln dim]."""
    w = np.linalg.eigvalsh(rho.mat)
    s = -sum(linalg.xlnx(float(x)) for x in w if x > 0.0)
    return EntropyValue(max(s, 0.0))


def cq_conditional(cq: ClassicalQuantumState) -> EntropyValue:
    """Branch-averaged entropy sum_i p_i S(Psi_i); never negative."""
    s = sum(p * von_neumann(state).nats for p, state in cq.branches)
    return EntropyValue(s)


def _exponent_and_support(bi: BipartiteState, cutoff: float):
    """Shared plumbing: exponent A = log rho - id (x) log rho_B plus the
    joint's support basis, with the containment check supp(rho) within
    supp(id (x) rho_B)."""
    rho = bi.joint.mat
    rho_b = linalg.partial_trace(rho, bi.dim_a, bi.dim_b, keep="B")
    log_joint, proj_joint = linalg.support_log(rho, cutoff)
    log_b, proj_b = linalg.support_log(rho_b, cutoff)
    embed_proj = np.kron(np.eye(bi.dim_a), proj_b)
    leak = linalg.frobenius(proj_joint - embed_proj @ proj_joint @ embed_proj)
    if leak > SUPPORT_CONTAINMENT_TOL:
        raise SupportMismatch(
            f"joint support leaks out of id (x) supp(rho_B) by {leak:.3e}"
        )
    exponent = log_joint - np.kron(np.eye(bi.dim_a), log_b)
    basis = linalg.support_basis(rho, cutoff)
    return rho, exponent, basis


def conditional_density(
    bi: BipartiteState, cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF
) -> np.ndarray:
    """Closed-form conditional density matrix on the joint's support.

    Computes exp(P A P) within the support of the joint, where
    A = support_log(rho) - id (x) support_log(rho_B) and P projects onto
    supp(rho).  Hermitian and positive there; eigenvalues may exceed 1
    (that excess is what makes conditional entropy negative).
    """
    _, exponent, basis = _exponent_and_support(bi, cutoff)
    compressed = linalg.dag(basis) @ exponent @ basis
    compressed = (compressed + linalg.dag(compressed)) / 2
    mu, u = np.linalg.eigh(compressed)
    w = basis @ u
    return (w * np.exp(mu)) @ linalg.dag(w)


def trotter_conditional_density(
    bi: BipartiteState, n: int, eps: float = 0.0
) -> np.ndarray:
    """Finite-n product approximant [rho^(1/n) (id (x) rho_B)^(-1/n)]^n.

    Requires a full-rank joint (and marginal); pass eps > 0 to mix with
    eps * I/d first when the input is rank-deficient.  Converges to
    conditional_density as n grows.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rho = bi.joint.mat
    d = rho.shape[0]
    if eps > 0.0:
        rho = (1.0 - eps) * rho + eps * np.eye(d) / d
    rho_b = linalg.partial_trace(rho, bi.dim_a, bi.dim_b, keep="B")
    w_joint = np.linalg.eigvalsh(rho)
    w_b = np.linalg.eigvalsh(rho_b)
    thr = linalg.DEFAULT_SUPPORT_CUTOFF
    if w_joint[0] <= thr * w_joint[-1] or w_b[0] <= thr * w_b[-1]:
        raise SingularState(
            "rank-deficient state; pass eps > 0 to regularize before the product"
        )
    root = linalg.matrix_func(rho, lambda x: x ** (1.0 / n))
    inv_root_b = np.kron(
        np.eye(bi.dim_a), linalg.matrix_func(rho_b, lambda x: x ** (-1.0 / n))
    )
    return np.linalg.matrix_power(root @ inv_root_b, n)


def generalized_conditional(
    bi: BipartiteState, cutoff: float = linalg.DEFAULT_SUPPORT_CUTOFF
) -> EntropyValue:
    """Conditional entropy S(A|B) = S(joint) - S(B), conditioning on the
    second factor.

    The value is cross-checked against the trace form
    -tr(rho log rho_{A|B}) built from the conditional density matrix; a
    disagreement beyond 1e-8 raises ConvergenceFailure.  Negative values
    occur exactly for the entangled ("anti-qubit") joints.
    """
    s_joint = von_neumann(bi.joint).nats
    s_b = von_neumann(bi.marginal_b()).nats
    primary = s_joint - s_b

    cond = conditional_density(bi, cutoff)
    log_cond, _ = linalg.support_log(cond, cutoff)
    dual = -float(np.trace(bi.joint.mat @ log_cond).real)
    if abs(primary - dual) > DUAL_PATH_TOL:
        raise ConvergenceFailure(
            f"conditional-entropy paths disagree: {primary} vs {dual}"
        )
    return EntropyValue(primary)
