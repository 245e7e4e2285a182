"""Validated quantum-state types and the measurement-completion observable.

The value types here are immutable carriers validated on construction:
state vectors, density matrices, classical-quantum mixtures and bipartite
joints.  The measurement-completion projector M is built from a pair of
correlated orthonormal bases (system factor first, apparatus second), so
that ``<Xi|M|Xi>`` is the probability that the pointer indicates the
correct value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import BasisSizeMismatch, ChrononError, DimensionMismatch, InvalidState

VALIDATION_ATOL = 1e-10


def _as_vector(amplitudes) -> np.ndarray:
    v = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
    if v.size == 0:
        raise InvalidState("empty amplitude vector")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise InvalidState("amplitudes contain NaN or Inf")
    return v


@dataclass(frozen=True)
class StateVector:
    """Normalized pure state."""

    amplitudes: np.ndarray

    def __post_init__(self):
        v = _as_vector(self.amplitudes)
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > VALIDATION_ATOL:
            raise InvalidState(f"state vector norm {norm} != 1")
        object.__setattr__(self, "amplitudes", v)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.size)

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator."""

    mat: np.ndarray

    def __post_init__(self):
        try:
            m = linalg.require_square(self.mat)
        except ChrononError as exc:
            raise InvalidState(str(exc)) from exc
        dev = linalg.frobenius(m - linalg.dag(m))
        if dev > VALIDATION_ATOL * max(1.0, linalg.frobenius(m)):
            raise InvalidState(f"density matrix not Hermitian (dev {dev:.3e})")
        tr = linalg.trace_real(m)
        if abs(tr - 1.0) > VALIDATION_ATOL:
            raise InvalidState(f"trace {tr} != 1")
        w = np.linalg.eigvalsh((m + linalg.dag(m)) / 2)
        if w[0] < -VALIDATION_ATOL:
            raise InvalidState(f"negative eigenvalue {w[0]:.3e}")
        object.__setattr__(self, "mat", np.asarray(m, dtype=np.complex128))

    @property
    def dim(self) -> int:
        return int(self.mat.shape[0])

    @classmethod
    def from_state_vector(cls, psi: StateVector) -> "DensityMatrix":
        return cls(psi.projector())


@dataclass(frozen=True)
class ClassicalQuantumState:
    """Mixture of quantum branches labelled by classical probabilities.

    branches is a tuple of (probability, DensityMatrix) pairs sharing one
    dimension; probabilities sum to one.
    """

    branches: tuple

    def __post_init__(self):
        br = tuple(self.branches)
        if not br:
            raise InvalidState("classical-quantum state needs at least one branch")
        dims = {state.dim for _, state in br}
        if len(dims) != 1:
            raise InvalidState(f"branch dimensions differ: {sorted(dims)}")
        probs = np.array([float(p) for p, _ in br])
        if np.any(probs < -VALIDATION_ATOL):
            raise InvalidState(f"negative branch probability {probs.min()}")
        if abs(probs.sum() - 1.0) > VALIDATION_ATOL:
            raise InvalidState(f"branch probabilities sum to {probs.sum()}")
        object.__setattr__(
            self, "branches", tuple((float(p), s) for p, s in br)
        )

    @property
    def dim(self) -> int:
        return self.branches[0][1].dim

    def mixture(self) -> DensityMatrix:
        """The register-averaged state sum_i p_i Psi_i."""
        acc = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for p, state in self.branches:
            acc += p * state.mat
        return DensityMatrix(acc)


@dataclass(frozen=True)
class BipartiteState:
    """Joint density matrix over two tensor factors of known dimensions.

    The second factor is the conditioning system for the conditional-entropy
    operations in :mod:`chronon_lab.entropy`.
    """

    joint: DensityMatrix
    dim_a: int
    dim_b: int

    def __post_init__(self):
        if self.dim_a < 1 or self.dim_b < 1:
            raise InvalidState("factor dimensions must be positive")
        if self.dim_a * self.dim_b != self.joint.dim:
            raise InvalidState(
                f"dim_a*dim_b = {self.dim_a * self.dim_b} != joint dim {self.joint.dim}"
            )

    def marginal_a(self) -> DensityMatrix:
        return DensityMatrix(
            linalg.partial_trace(self.joint.mat, self.dim_a, self.dim_b, keep="A")
        )

    def marginal_b(self) -> DensityMatrix:
        return DensityMatrix(
            linalg.partial_trace(self.joint.mat, self.dim_a, self.dim_b, keep="B")
        )


@dataclass(frozen=True)
class CorrelationBasis:
    """Paired orthonormal bases of system and apparatus over one index set."""

    system_basis: tuple
    apparatus_basis: tuple

    def __post_init__(self):
        sys_b = tuple(self.system_basis)
        app_b = tuple(self.apparatus_basis)
        if len(sys_b) != len(app_b):
            raise BasisSizeMismatch(
                f"{len(sys_b)} system vectors vs {len(app_b)} apparatus vectors"
            )
        if not sys_b:
            raise BasisSizeMismatch("empty correlation basis")
        for name, vecs in (("system", sys_b), ("apparatus", app_b)):
            dim = vecs[0].dim
            for i, u in enumerate(vecs):
                if u.dim != dim:
                    raise InvalidState(f"{name} basis vectors have mixed dimensions")
                for j, v in enumerate(vecs[:i]):
                    ip = abs(np.vdot(v.amplitudes, u.amplitudes))
                    if ip > VALIDATION_ATOL:
                        raise InvalidState(
                            f"{name} basis vectors {j},{i} not orthogonal (|<u,v>|={ip:.3e})"
                        )
        object.__setattr__(self, "system_basis", sys_b)
        object.__setattr__(self, "apparatus_basis", app_b)

    @property
    def size(self) -> int:
        return len(self.system_basis)


def build_measurement_operator(basis: CorrelationBasis) -> np.ndarray:
    """Projector onto span{psi_I (x) A_I}: the measurement-completion observable.

    Idempotent and Hermitian by construction; rank equals the basis size.
    """
    vecs = [
        np.kron(psi.amplitudes, app.amplitudes)
        for psi, app in zip(basis.system_basis, basis.apparatus_basis)
    ]
    d = vecs[0].size
    m = np.zeros((d, d), dtype=np.complex128)
    for v in vecs:
        m += np.outer(v, v.conj())
    return m


def measurement_probability(xi: StateVector, m: np.ndarray) -> float:
    """P = <Xi|M|Xi> for a projector M; lies in [0, 1]."""
    m = linalg.require_hermitian(m)
    if m.shape[0] != xi.dim:
        raise DimensionMismatch(f"operator dim {m.shape[0]} != state dim {xi.dim}")
    if linalg.frobenius(m @ m - m) > VALIDATION_ATOL * max(1.0, linalg.frobenius(m)):
        raise InvalidState("operator is not a projector")
    p = float(np.real(np.vdot(xi.amplitudes, m @ xi.amplitudes)))
    if p < -VALIDATION_ATOL or p > 1.0 + VALIDATION_ATOL:
        raise InvalidState(f"probability {p} outside [0,1]")
    return min(max(p, 0.0), 1.0)


def reduce_over_apparatus(xi: StateVector, dim_s: int, dim_a: int) -> DensityMatrix:
    """Density matrix assigned to the system by tracing out the apparatus."""
    if dim_s * dim_a != xi.dim:
        raise DimensionMismatch(
            f"dim_s*dim_a = {dim_s * dim_a} != state dim {xi.dim}"
        )
    joint = np.outer(xi.amplitudes, xi.amplitudes.conj())
    return DensityMatrix(linalg.partial_trace(joint, dim_s, dim_a, keep="A"))


def cq_embed(cq: ClassicalQuantumState) -> BipartiteState:
    """Embed a classical-quantum state as a bipartite joint.

    The classical register becomes the second tensor factor, realized as
    diagonal projectors |i><i| in the computational basis, so that the
    generalized conditional entropy of the embedding (conditioning on the
    second factor) equals the branch-averaged entropy.  The joint is
    block-diagonal across register sectors; tracing out the register
    returns the mixture sum_i p_i Psi_i.
    """
    n = len(cq.branches)
    d = cq.dim
    joint = np.zeros((d * n, d * n), dtype=np.complex128)
    for i, (p, state) in enumerate(cq.branches):
        reg = np.zeros((n, n), dtype=np.complex128)
        reg[i, i] = 1.0
        joint += p * np.kron(state.mat, reg)
    return BipartiteState(joint=DensityMatrix(joint), dim_a=d, dim_b=n)
