"""Casimir forces between dispersive magnetodielectric layered media.

Thin wrapper over the compiled core; all public names live in `_core`.
Sign convention: positive = attractive, negative = repulsive.
"""

from casimirmd._core import (  # noqa: F401
    HBAR_C_EV_NM,
    INFINITE_RESPONSE,
    K_BOLTZMANN_EV_PER_K,
    CavityConfig,
    ConfigError,
    ConvergenceError,
    ForceResult,
    Layer,
    LayerStack,
    MaterialModel,
    OscillatorParams,
    QuadratureSettings,
    ReferenceScale,
    Response,
    RunConfig,
    ScanPoint,
    ScanResult,
    apply_parameter,
    crossover_distance,
    distance_scan,
    distance_si_um,
    extremal_repulsion,
    force_T0_cartesian,
    force_T0_polar,
    force_finite_T,
    force_unit_si,
    length_unit_nm,
    matsubara_term,
    parse_config,
    reduced_temperature,
    response_at_imag_freq,
    static_value,
    sweep_2d,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
