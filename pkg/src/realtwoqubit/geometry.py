"""Orbit geometry of real two-qubit states on the unit 3-sphere.

In Bell coordinates the sphere splits into two orthogonal planes,
span(v1, v2) and span(v3, v4).  Every circuit of Ry gates rotates each plane
rigidly (Ry(2s) x Ry(2t) rotates the (x1, x2) plane by s + t and the
(x3, x4) plane by t - s), so the plane radii are invariants.  Writing
r = sqrt(x1^2 + x2^2), the distance to the nearer maximally entangled circle

    d = min(arcsin r, pi/2 - arcsin r)  in  [0, pi/4]

labels the orbits:

* d = 0: the two circles E(v3, v4) and E(v1, v2), maximally entangled states;
* 0 < d < pi/4: a pair of tori, the sheet at distance d from E(v3, v4) and
  its mirror at distance d from E(v1, v2);
* d = pi/4: a single torus, exactly the product states.

The sign of w1*w4 - w2*w3 (half of cos 2d on the V34 sheet) tells the sheets
apart without computing distances twice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gates import Circuit, Gate
from .simulator import apply, ry_matrix, ry_matrix_deriv
from .states import BellCoords, RealState, from_bell, to_bell

QUARTER_PI = math.pi / 4.0
TWO_PI = 2.0 * math.pi

SHEET_V34 = "V34"
SHEET_V12 = "V12"
SHEET_BOTH = "BOTH"

MAX_ENTANGLED = "max_entangled"
GENERIC = "generic"
PRODUCT = "product"

#: Classification snaps to the orbit-family boundaries within this.
DEFAULT_CLASS_TOL = 1e-9

#: Below this sin(d) the torus angle `a` is undefined (states on a circle).
DEGENERATE_SIN_D = 1e-9

#: Slack allowed when validating a distance argument against [0, pi/4].
_DOMAIN_SLACK = 1e-12


class DegenerateAngleError(ValueError):
    """Torus angles requested on a maximally entangled circle, where `a` is undefined."""


@dataclass(frozen=True)
class OrbitClass:
    """Orbit label: kind in {max_entangled, generic, product}, distance d, sheet."""

    kind: str
    d: float
    sheet: str


@dataclass(frozen=True)
class TorusPoint:
    """Angles (a, b) of a state on its orbit sheet at distance d.

    On the V34 sheet, a is the angle in the (x1, x2) plane of radius sin(d)
    and b the angle in the (x3, x4) plane of radius cos(d); the V12 sheet
    mirrors the roles of the two planes.
    """

    d: float
    a: float
    b: float
    sheet: str


@dataclass(frozen=True)
class MeshPoint:
    """A sample of an orbit, projected into the unit ball by dropping x4 >= 0."""

    u1: float
    u2: float
    u3: float
    d: float
    sheet: str


def _checked_distance(d: float) -> float:
    d = float(d)
    if not (-_DOMAIN_SLACK <= d <= QUARTER_PI + _DOMAIN_SLACK):
        raise ValueError(f"distance {d!r} outside [0, pi/4]")
    return min(max(d, 0.0), QUARTER_PI)


def _plane_radii(coords: BellCoords) -> tuple[float, float]:
    return math.hypot(coords.x1, coords.x2), math.hypot(coords.x3, coords.x4)


def _delta(state: RealState) -> float:
    return state.w1 * state.w4 - state.w2 * state.w3


def entanglement_distance(state: RealState) -> float:
    """Distance to the nearer maximally entangled circle, in [0, pi/4].

    Equal to min(arcsin r, pi/2 - arcsin r) with r = sqrt(x1^2 + x2^2);
    evaluated as atan2(min(r12, r34), max(r12, r34)), the same fold computed
    stably at both circles, where the arcsin form loses half its digits.
    """
    r12, r34 = _plane_radii(to_bell(state))
    return math.atan2(min(r12, r34), max(r12, r34))


def classify(state: RealState, class_tol: float = DEFAULT_CLASS_TOL) -> OrbitClass:
    """Orbit class of a state.

    d <= class_tol is maximally entangled, |d - pi/4| <= class_tol is product
    (sheet BOTH, the two sheets coincide there), anything else is generic.
    The sheet comes from the sign of w1*w4 - w2*w3: positive on the V34 side,
    negative on V12.
    """
    d = entanglement_distance(state)
    if d <= class_tol:
        kind = MAX_ENTANGLED
    elif abs(d - QUARTER_PI) <= class_tol:
        kind = PRODUCT
    else:
        kind = GENERIC
    if kind == PRODUCT:
        sheet = SHEET_BOTH
    else:
        sheet = SHEET_V34 if _delta(state) > 0.0 else SHEET_V12
    return OrbitClass(kind, d, sheet)


def entropy_from_distance(d: float) -> float:
    """Entanglement entropy (base 2) shared by every state at distance d.

    Binary entropy of (1 + sin 2d)/2, which is the closed form

        1 - log2( ((1+sin 2d)^(1+sin 2d) / (1-sin 2d)^(-1+sin 2d))^(1/2) )

    evaluated stably at d = pi/4 (the 0*log2(0) limit is taken as 0).
    Raises ValueError outside [0, pi/4].
    """
    d = _checked_distance(d)
    p = (1.0 + math.sin(2.0 * d)) / 2.0
    total = 0.0
    for q in (p, 1.0 - p):
        if q > 1e-15:
            total -= q * math.log2(q)
    return total


def torus_angles(state: RealState) -> TorusPoint:
    """Angles of a state on its orbit sheet.

    Raises DegenerateAngleError when sin(d) < 1e-9: on the circles the
    small-radius plane carries no direction, so `a` is undefined.
    """
    coords = to_bell(state)
    r12, r34 = _plane_radii(coords)
    d = math.atan2(min(r12, r34), max(r12, r34))
    if math.sin(d) < DEGENERATE_SIN_D:
        raise DegenerateAngleError(
            f"state lies on a maximally entangled circle (sin d = {math.sin(d):.3e}); torus angle a is undefined"
        )
    if _delta(state) >= 0.0:
        return TorusPoint(d, math.atan2(coords.x2, coords.x1), math.atan2(coords.x4, coords.x3), SHEET_V34)
    return TorusPoint(d, math.atan2(coords.x4, coords.x3), math.atan2(coords.x2, coords.x1), SHEET_V12)


def parametrize(point: TorusPoint) -> RealState:
    """The state at angles (a, b) on the sheet at distance d.

    V34 sheet: (x1, x2, x3, x4) = (sin d cos a, sin d sin a, cos d cos b, cos d sin b);
    the V12 sheet swaps the roles of the two planes.  At d = 0 the a-plane
    has radius 0 and the point degenerates to the circle state with angle b.
    """
    d = _checked_distance(point.d)
    if point.sheet not in (SHEET_V34, SHEET_V12):
        raise ValueError(f"sheet must be {SHEET_V34!r} or {SHEET_V12!r}, got {point.sheet!r}")
    sd, cd = math.sin(d), math.cos(d)
    small = (sd * math.cos(point.a), sd * math.sin(point.a))
    large = (cd * math.cos(point.b), cd * math.sin(point.b))
    if point.sheet == SHEET_V34:
        x = (small[0], small[1], large[0], large[1])
    else:
        x = (large[0], large[1], small[0], small[1])
    return from_bell(BellCoords(*x))


def orbit_surface(state: RealState, s: float, t: float) -> RealState:
    """(Ry(2s) x Ry(2t)) |state|: the local-rotation surface through the state."""
    return apply(Circuit((Gate.ry(0, 2.0 * s), Gate.ry(1, 2.0 * t))), state)


def surface_gram_det(state: RealState, s: float, t: float) -> float:
    """Gram determinant |d_s phi|^2 |d_t phi|^2 - (d_s phi . d_t phi)^2.

    Tangents are analytic: d/ds Ry(2s) = 2 Ry'(2s), lifted through the
    Kronecker product.  Equals sin^2(2d) identically on the orbit at
    distance d, which is why the surface immerses exactly away from the
    maximally entangled circles.
    """
    w = state.vector
    r0, r1 = ry_matrix(2.0 * s), ry_matrix(2.0 * t)
    d0, d1 = 2.0 * ry_matrix_deriv(2.0 * s), 2.0 * ry_matrix_deriv(2.0 * t)
    tan_s = np.kron(d0, r1) @ w
    tan_t = np.kron(r0, d1) @ w
    ee = float(tan_s @ tan_s)
    gg = float(tan_t @ tan_t)
    ff = float(tan_s @ tan_t)
    return ee * gg - ff * ff


def immersion_defect(state: RealState, s: float, t: float) -> float:
    """|Gram determinant - sin^2(2d)| for the orbit surface through the state."""
    target = math.sin(2.0 * entanglement_distance(state)) ** 2
    return abs(surface_gram_det(state, s, t) - target)


def _angle_grid(n: int) -> list[float]:
    return [TWO_PI * i / n for i in range(n)]


def orbit_mesh(d: float, n_a: int, n_b: int) -> list[MeshPoint]:
    """Sample the whole orbit at distance d, projected into the unit ball.

    The projection keeps the x4 >= 0 half of the sphere and emits
    (u1, u2, u3) = (x1, x2, x3).  Generic d samples both sheets on an
    n_a x n_b angle grid; d = pi/4 emits the single product torus; d = 0
    emits the circle pair, where the circle lying in the x4 = 0 plane
    survives whole and the other is halved.
    """
    d = _checked_distance(d)
    n_a, n_b = int(n_a), int(n_b)
    if n_a < 2 or n_b < 2:
        raise ValueError(f"grid sizes must be at least 2, got ({n_a}, {n_b})")
    points: list[MeshPoint] = []
    if d <= _DOMAIN_SLACK:
        # E(v3,v4): (0, 0, cos t, sin t); the x4 >= 0 cut keeps half of it.
        for theta in _angle_grid(n_b):
            if math.sin(theta) >= 0.0:
                points.append(MeshPoint(0.0, 0.0, math.cos(theta), d, SHEET_V34))
        # E(v1,v2): (cos t, sin t, 0, 0) has x4 = 0 identically: kept whole.
        for theta in _angle_grid(n_b):
            points.append(MeshPoint(math.cos(theta), math.sin(theta), 0.0, d, SHEET_V12))
        return points
    sd, cd = math.sin(d), math.cos(d)
    if abs(d - QUARTER_PI) <= _DOMAIN_SLACK:
        for a in _angle_grid(n_a):
            for b in _angle_grid(n_b):
                if math.sin(b) >= 0.0:
                    points.append(MeshPoint(sd * math.cos(a), sd * math.sin(a), cd * math.cos(b), d, SHEET_BOTH))
        return points
    for a in _angle_grid(n_a):
        for b in _angle_grid(n_b):
            # V34 sheet: x4 = cos(d) sin(b)
            if math.sin(b) >= 0.0:
                points.append(MeshPoint(sd * math.cos(a), sd * math.sin(a), cd * math.cos(b), d, SHEET_V34))
            # V12 sheet: planes swapped, x4 = sin(d) sin(a)
            if math.sin(a) >= 0.0:
                points.append(MeshPoint(cd * math.cos(b), cd * math.sin(b), sd * math.cos(a), d, SHEET_V12))
    return points


def mesh_to_csv(points: list[MeshPoint]) -> str:
    """CSV rendering with header u1,u2,u3,d,sheet at full double precision."""
    lines = ["u1,u2,u3,d,sheet"]
    for p in points:
        lines.append(f"{p.u1!r},{p.u2!r},{p.u3!r},{p.d!r},{p.sheet}")
    return "\n".join(lines) + "\n"


def mesh_to_dict(d: float, points: list[MeshPoint]) -> dict:
    return {"d": d, "points": [{"u": [p.u1, p.u2, p.u3], "sheet": p.sheet} for p in points]}


def sample_orbit_states(d: float, count: int, rng: np.random.Generator) -> list[RealState]:
    """Random states on the orbit at distance d: uniform angles, fair-coin sheet."""
    d = _checked_distance(d)
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    out = []
    for _ in range(count):
        sheet = SHEET_V34 if rng.random() < 0.5 else SHEET_V12
        out.append(parametrize(TorusPoint(d, rng.uniform(0.0, TWO_PI), rng.uniform(0.0, TWO_PI), sheet)))
    return out
