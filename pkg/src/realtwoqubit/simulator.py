"""Exact dense simulator for two-qubit circuits over {Ry, X, CZ}.

Kronecker convention: the first tensor factor acts on qubit 0, the left label
of the ket, so amplitudes are ordered (|00>, |01>, |10>, |11>) and a gate on
qubit 0 lifts to kron(M, I).  The convention test in the suite pins this down
via (Ry(-2t) x I)|v3> = cos(t) v3 + sin(t) v4.

This module doubles as the independent entropy route: reduced density
matrices, their closed-form eigenvalues, and the von Neumann entropy computed
from those eigenvalues.
"""

from __future__ import annotations

import math

import numpy as np

from .gates import Circuit, Gate
from .states import RealState

_I2 = np.eye(2)
_X2 = np.array([[0.0, 1.0], [1.0, 0.0]])
_CZ = np.diag([1.0, 1.0, 1.0, -1.0])

#: Eigenvalues below this contribute 0 to the entropy (0*log2(0) = 0 branch).
EIG_FLOOR = 1e-15


def ry_matrix(theta: float) -> np.ndarray:
    """[[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]])


def ry_matrix_deriv(theta: float) -> np.ndarray:
    """Entrywise derivative of ry_matrix with respect to theta."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return 0.5 * np.array([[-s, -c], [c, -s]])


def _lift(single: np.ndarray, qubit: int) -> np.ndarray:
    return np.kron(single, _I2) if qubit == 0 else np.kron(_I2, single)


def gate_matrix(gate: Gate) -> np.ndarray:
    """4x4 orthogonal matrix of a gate."""
    if gate.kind == "cz":
        return _CZ.copy()
    if gate.kind == "x":
        return _lift(_X2, gate.qubit)
    return _lift(ry_matrix(gate.angle), gate.qubit)


def apply(circuit: Circuit, state: RealState) -> RealState:
    """Run the circuit gate by gate, left to right."""
    vec = state.vector
    for gate in circuit:
        vec = gate_matrix(gate) @ vec
    return RealState.from_vector(vec)


def reduced_density_matrix(state: RealState, qubit: int = 0) -> np.ndarray:
    """2x2 reduced state of `qubit` (partial trace over the other qubit)."""
    if qubit not in (0, 1):
        raise ValueError(f"qubit must be 0 or 1, got {qubit!r}")
    w = state.vector.reshape(2, 2)
    return w @ w.T if qubit == 0 else w.T @ w


def reduced_eigenvalues(state: RealState, qubit: int = 0) -> tuple[float, float]:
    """Eigenvalues (descending) of the reduced density matrix.

    Closed-form quadratic for a symmetric 2x2 matrix, clamped to [0, 1];
    identical for either qubit.
    """
    rho = reduced_density_matrix(state, qubit)
    tr = rho[0, 0] + rho[1, 1]
    gap = math.sqrt(max((rho[0, 0] - rho[1, 1]) ** 2 + 4.0 * rho[0, 1] ** 2, 0.0))
    hi = min(max((tr + gap) / 2.0, 0.0), 1.0)
    lo = min(max((tr - gap) / 2.0, 0.0), 1.0)
    return hi, lo


def entanglement_entropy(state: RealState) -> float:
    """Von Neumann entropy (base 2) of either reduced density matrix.

    0 for product states, 1 for maximally entangled ones.
    """
    total = 0.0
    for lam in reduced_eigenvalues(state):
        if lam > EIG_FLOOR:
            total -= lam * math.log2(lam)
    return total
