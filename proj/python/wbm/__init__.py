"""Wave Based Method for interior 2D Helmholtz problems."""

from ._wbm import (
    AnalyticField,
    BoundaryCondition,
    BoundaryCurve,
    BoundingBox,
    ExperimentConfig,
    ExperimentRecord,
    LinearSystem,
    SolveReport,
    WaveBasisSpec,
    bessel_j0,
    bessel_j1,
    bessel_y0,
    bessel_y1,
    evaluate_solution,
    collocation_system,
    condition_number,
    csv_header,
    evaluate,
    find_preset,
    format_config,
    hankel1_0,
    hankel1_1,
    load_config,
    parse_config,
    preset_names,
    run_single,
    run_sweep,
    solve,
    to_csv,
    weighted_residual_system,
)

__all__ = [name for name in dir() if not name.startswith("_")]
