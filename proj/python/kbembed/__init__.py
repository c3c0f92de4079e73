"""Finite Blaschke products, Clark measures, model-space embedding measures
and their extreme points."""

from ._core import (
    Atom,
    AtomicMeasure,
    BlaschkeProduct,
    Extremality,
    ExtremalityReport,
    HerglotzData,
    IsometryCertificate,
    KbembedError,
    MaxMassResult,
    Polynomial,
    RationalSchur,
    SchurCheck,
    SchurRecovery,
    Solvability,
    Uniqueness,
    blaschke_from_json,
    boundary_fbp_interpolation,
    clark_measure,
    decomposition_oracle,
    factor_witness,
    from_blaschke,
    is_extreme,
    is_inner,
    max_mass,
    measure_from_json,
    measure_from_schur,
    measure_from_schur_rational,
    measure_to_csv,
    measures_match,
    mobius_precompose,
    mobius_pushforward,
    multiply,
    numerical_rank,
    pick_matrix,
    recover_fbp,
    reversed_poly,
    schur_check,
    schur_from_json,
    schur_from_measure,
    solvability,
    support_points,
    support_weight,
    theta_prime_fbp,
    theta_product,
    to_blaschke,
    to_json,
    to_quotient,
    uniqueness,
    verify_isometry,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
