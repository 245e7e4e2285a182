"""JSON encodings for matrices and state files.

Matrix encoding (used everywhere):

    {"rows": n, "cols": m, "data": [[re, im], ...]}   # row-major

State files carry a "kind" discriminator:

    {"kind": "state_vector", "matrix": {... rows x 1 ...}}
    {"kind": "density",      "matrix": {...}}
    {"kind": "cq",           "branches": [{"p": 0.5, "matrix": {...}}, ...]}
    {"kind": "bipartite",    "dimA": a, "dimB": b, "matrix": {...}}

Correlation bases for the measurement operator:

    {"kind": "correlation_basis", "system": [matrix, ...], "apparatus": [matrix, ...]}
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InvalidState
from .states import (
    BipartiteState,
    ClassicalQuantumState,
    CorrelationBasis,
    DensityMatrix,
    StateVector,
)


def encode_matrix(m: np.ndarray) -> dict:
    m = np.atleast_2d(np.asarray(m, dtype=np.complex128))
    data = [[float(z.real), float(z.imag)] for z in m.reshape(-1)]
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]), "data": data}


def decode_matrix(obj: dict) -> np.ndarray:
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidState(f"malformed matrix object: {exc}") from exc
    if rows < 1 or cols < 1:
        raise InvalidState(f"matrix dimensions must be positive, got {rows}x{cols}")
    if len(data) != rows * cols:
        raise InvalidState(
            f"matrix data length {len(data)} != rows*cols = {rows * cols}"
        )
    flat = np.array([complex(re, im) for re, im in data], dtype=np.complex128)
    return flat.reshape(rows, cols)


def _decode_vector(obj: dict) -> np.ndarray:
    m = decode_matrix(obj)
    if m.shape[1] != 1:
        raise InvalidState(f"expected a column vector, got {m.shape}")
    return m.reshape(-1)


def encode_state(state) -> dict:
    if isinstance(state, StateVector):
        return {
            "kind": "state_vector",
            "matrix": encode_matrix(state.amplitudes.reshape(-1, 1)),
        }
    if isinstance(state, DensityMatrix):
        return {"kind": "density", "matrix": encode_matrix(state.mat)}
    if isinstance(state, ClassicalQuantumState):
        return {
            "kind": "cq",
            "branches": [
                {"p": p, "matrix": encode_matrix(s.mat)} for p, s in state.branches
            ],
        }
    if isinstance(state, BipartiteState):
        return {
            "kind": "bipartite",
            "dimA": state.dim_a,
            "dimB": state.dim_b,
            "matrix": encode_matrix(state.joint.mat),
        }
    raise InvalidState(f"cannot encode object of type {type(state).__name__}")


def decode_state(obj: dict):
    kind = obj.get("kind")
    if kind == "state_vector":
        return StateVector(_decode_vector(obj["matrix"]))
    if kind == "density":
        return DensityMatrix(decode_matrix(obj["matrix"]))
    if kind == "cq":
        branches = [
            (float(b["p"]), DensityMatrix(decode_matrix(b["matrix"])))
            for b in obj["branches"]
        ]
        return ClassicalQuantumState(tuple(branches))
    if kind == "bipartite":
        return BipartiteState(
            joint=DensityMatrix(decode_matrix(obj["matrix"])),
            dim_a=int(obj["dimA"]),
            dim_b=int(obj["dimB"]),
        )
    if kind == "correlation_basis":
        system = tuple(StateVector(_decode_vector(m)) for m in obj["system"])
        apparatus = tuple(StateVector(_decode_vector(m)) for m in obj["apparatus"])
        return CorrelationBasis(system_basis=system, apparatus_basis=apparatus)
    raise InvalidState(f"unknown state kind {kind!r}")


def load_state(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidState(f"{path}: invalid JSON: {exc}") from exc
    return decode_state(obj)


def save_state(path: str, state) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(encode_state(state), fh, indent=2, sort_keys=True)
        fh.write("\n")
