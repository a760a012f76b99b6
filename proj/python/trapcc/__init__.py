"""Central configurations of the isosceles-trapezoid four-body problem."""

from ._core import (
    __version__,
    BoundaryResult,
    DistanceCubes,
    MassSolution,
    RegionLabel,
    ResidualReport,
    RigidityReport,
    SignTriple,
    Trajectory,
    TrapezoidConfiguration,
    CollisionError,
    DegenerateConfiguration,
    InvalidParameter,
    SingularSystem,
    SystemState,
    TrapccError,
    NegativeDiscriminant,
    NegativeRadicand,
    UnphysicalParameters,
    audit_published_formulas,
    build_configuration,
    cc_residual,
    classify,
    compare_exact_vs_approx,
    compute_distance_cubes,
    exact_boundary,
    f1_approx,
    f3_approx,
    g1_published,
    g3_published,
    init_relative_equilibrium,
    integrate,
    is_central_configuration,
    raster,
    rigidity_metrics,
    sign_functions,
    solve_masses,
    solve_masses_linear,
)

__all__ = [name for name in dir() if not name.startswith("_")]
