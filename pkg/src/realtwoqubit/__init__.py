"""Orbit geometry and circuit synthesis for two-qubit states with real amplitudes."""

from .gates import Circuit, Gate
from .geometry import (
    DEFAULT_CLASS_TOL,
    DEGENERATE_SIN_D,
    GENERIC,
    MAX_ENTANGLED,
    PRODUCT,
    SHEET_BOTH,
    SHEET_V12,
    SHEET_V34,
    DegenerateAngleError,
    MeshPoint,
    OrbitClass,
    TorusPoint,
    classify,
    entanglement_distance,
    entropy_from_distance,
    immersion_defect,
    mesh_to_csv,
    mesh_to_dict,
    orbit_mesh,
    orbit_surface,
    parametrize,
    sample_orbit_states,
    surface_gram_det,
    torus_angles,
)
from .simulator import (
    apply,
    entanglement_entropy,
    gate_matrix,
    reduced_density_matrix,
    reduced_eigenvalues,
    ry_matrix,
    ry_matrix_deriv,
)
from .states import (
    DEFAULT_TOL,
    BellCoords,
    RealState,
    bell_basis_state,
    concurrence,
    from_bell,
    sign_residual,
    states_equal_up_to_sign,
    to_bell,
)
from .synthesis import (
    ConnectionPlan,
    OrbitMismatchError,
    cz_connect,
    intersection_state,
    local_connect,
    preparation_angles,
    prepare,
)

__version__ = "0.1.0"

__all__ = [
    "BellCoords",
    "Circuit",
    "ConnectionPlan",
    "DEFAULT_CLASS_TOL",
    "DEFAULT_TOL",
    "DEGENERATE_SIN_D",
    "DegenerateAngleError",
    "GENERIC",
    "Gate",
    "MAX_ENTANGLED",
    "MeshPoint",
    "OrbitClass",
    "OrbitMismatchError",
    "PRODUCT",
    "RealState",
    "SHEET_BOTH",
    "SHEET_V12",
    "SHEET_V34",
    "TorusPoint",
    "apply",
    "bell_basis_state",
    "classify",
    "concurrence",
    "cz_connect",
    "entanglement_distance",
    "entanglement_entropy",
    "entropy_from_distance",
    "from_bell",
    "gate_matrix",
    "immersion_defect",
    "intersection_state",
    "local_connect",
    "mesh_to_csv",
    "mesh_to_dict",
    "orbit_mesh",
    "orbit_surface",
    "parametrize",
    "preparation_angles",
    "prepare",
    "reduced_density_matrix",
    "reduced_eigenvalues",
    "ry_matrix",
    "ry_matrix_deriv",
    "sample_orbit_states",
    "sign_residual",
    "states_equal_up_to_sign",
    "surface_gram_det",
    "to_bell",
    "torus_angles",
]
