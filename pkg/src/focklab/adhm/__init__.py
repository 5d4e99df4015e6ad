"""ADHM laboratory: matrix data for framed sheaves on the plane, moment maps,
stability, the monad complex, torus fixed points, the moment-map descent flow
and tangent-space dimension counts."""

from .data import (
    ADHMData,
    from_json_dict,
    frobenius,
    gl_act,
    mu_complex,
    mu_real,
    quaternion_J,
    to_json_dict,
    torus_act,
    torus_potential,
)
from .fixed_points import TorusWeights, fixed_point_data
from .flow import (
    FlowOptions,
    FlowResult,
    UnstableDataError,
    kempf_ness_flow,
    random_stable_data,
    unitary_invariants,
)
from .monad import check_complex, monad_maps, sigma_at, tau_at, tau_sigma_coefficients
from .stability import stability_check
from .tangent import IllConditionedRankError, morse_index_numeric, tangent_dimension

__all__ = [
    "ADHMData",
    "FlowOptions",
    "FlowResult",
    "IllConditionedRankError",
    "TorusWeights",
    "UnstableDataError",
    "check_complex",
    "fixed_point_data",
    "from_json_dict",
    "frobenius",
    "gl_act",
    "kempf_ness_flow",
    "monad_maps",
    "morse_index_numeric",
    "mu_complex",
    "mu_real",
    "quaternion_J",
    "random_stable_data",
    "sigma_at",
    "stability_check",
    "tangent_dimension",
    "tau_at",
    "tau_sigma_coefficients",
    "to_json_dict",
    "torus_act",
    "torus_potential",
]
