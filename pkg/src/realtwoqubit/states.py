"""Real-amplitude two-qubit states and the Bell-basis change of coordinates.

A state is a unit vector (w1, w2, w3, w4) of amplitudes for |00>, |01>, |10>,
|11>.  The Bell basis used throughout is

    v1 = (|00> - |11>)/sqrt(2),   v2 = (|01> + |10>)/sqrt(2),
    v3 = (|00> + |11>)/sqrt(2),   v4 = (|01> - |10>)/sqrt(2),

an orthonormal basis of the real span, so the coordinate change is the
orthogonal matrix with these rows.  States that differ only by a global sign
are physically identical; nothing here canonicalizes the sign, and the
equality predicate compares up to +-1 explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

#: Default verification tolerance for equality predicates.
DEFAULT_TOL = 1e-10

#: Construction renormalizes inputs whose norm deviates from 1 by less than
#: this, and rejects anything worse.
NORM_SLACK = 1e-6

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _unit_components(values, label: str) -> tuple[float, float, float, float]:
    comps = tuple(float(v) for v in values)
    if len(comps) != 4:
        raise ValueError(f"expected 4 {label} components, got {len(comps)}")
    if not all(math.isfinite(c) for c in comps):
        raise ValueError(f"{label} components must be finite, got {comps}")
    norm = math.sqrt(sum(c * c for c in comps))
    if abs(norm - 1.0) >= NORM_SLACK:
        raise ValueError(f"{label} vector has norm {norm!r}, not within {NORM_SLACK} of 1")
    return tuple(c / norm for c in comps)


@dataclass(frozen=True)
class RealState:
    """Unit vector of real amplitudes for |00>, |01>, |10>, |11>."""

    w1: float
    w2: float
    w3: float
    w4: float

    def __post_init__(self):
        w1, w2, w3, w4 = _unit_components((self.w1, self.w2, self.w3, self.w4), "amplitude")
        object.__setattr__(self, "w1", w1)
        object.__setattr__(self, "w2", w2)
        object.__setattr__(self, "w3", w3)
        object.__setattr__(self, "w4", w4)

    @classmethod
    def from_vector(cls, vec) -> "RealState":
        values = [float(v) for v in vec]
        if len(values) != 4:
            raise ValueError(f"expected 4 amplitudes, got {len(values)}")
        return cls(*values)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.w1, self.w2, self.w3, self.w4])

    def to_dict(self) -> dict:
        return {"w": [self.w1, self.w2, self.w3, self.w4]}

    @classmethod
    def from_dict(cls, data: dict) -> "RealState":
        return cls.from_vector(data["w"])


@dataclass(frozen=True)
class BellCoords:
    """Coordinates (x1, x2, x3, x4) of a state in the Bell basis v1..v4."""

    x1: float
    x2: float
    x3: float
    x4: float

    def __post_init__(self):
        x1, x2, x3, x4 = _unit_components((self.x1, self.x2, self.x3, self.x4), "Bell coordinate")
        object.__setattr__(self, "x1", x1)
        object.__setattr__(self, "x2", x2)
        object.__setattr__(self, "x3", x3)
        object.__setattr__(self, "x4", x4)

    @classmethod
    def from_vector(cls, vec) -> "BellCoords":
        values = [float(v) for v in vec]
        if len(values) != 4:
            raise ValueError(f"expected 4 coordinates, got {len(values)}")
        return cls(*values)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3, self.x4])

    def to_dict(self) -> dict:
        return {"x": [self.x1, self.x2, self.x3, self.x4]}

    @classmethod
    def from_dict(cls, data: dict) -> "BellCoords":
        return cls.from_vector(data["x"])


# Rows are v1..v4 in computational coordinates; orthogonal, so the inverse
# change of basis is the transpose.
_BELL_ROWS = _INV_SQRT2 * np.array(
    [
        [1.0, 0.0, 0.0, -1.0],
        [0.0, 1.0, 1.0, 0.0],
        [1.0, 0.0, 0.0, 1.0],
        [0.0, 1.0, -1.0, 0.0],
    ]
)


def to_bell(state: RealState) -> BellCoords:
    """Bell coordinates of a state.

    x1 = (w1 - w4)/sqrt(2), x2 = (w2 + w3)/sqrt(2),
    x3 = (w1 + w4)/sqrt(2), x4 = (w2 - w3)/sqrt(2).
    """
    return BellCoords.from_vector(_BELL_ROWS @ state.vector)


def from_bell(coords: BellCoords) -> RealState:
    """The state with the given Bell coordinates (inverse of to_bell)."""
    return RealState.from_vector(_BELL_ROWS.T @ coords.vector)


def bell_basis_state(index: int) -> RealState:
    """The index-th Bell basis vector, index in 1..4 matching v1..v4."""
    if index not in (1, 2, 3, 4):
        raise ValueError(f"Bell basis index must be 1..4, got {index}")
    x = [0.0, 0.0, 0.0, 0.0]
    x[index - 1] = 1.0
    return from_bell(BellCoords(*x))


def concurrence(state: RealState) -> float:
    """2|w1*w4 - w2*w3|: 0 for product states, 1 for maximally entangled ones."""
    return 2.0 * abs(state.w1 * state.w4 - state.w2 * state.w3)


def sign_residual(a: RealState, b: RealState) -> float:
    """min(||a - b||, ||a + b||), the distance between states ignoring the global sign."""
    va, vb = a.vector, b.vector
    return min(float(np.linalg.norm(va - vb)), float(np.linalg.norm(va + vb)))


def states_equal_up_to_sign(a: RealState, b: RealState, tol: float = DEFAULT_TOL) -> bool:
    """True when a equals b or -b within tol."""
    return sign_residual(a, b) <= tol
