//! Numerical verification toolkit for Hermite-Hadamard type operator
//! inequalities on finite-dimensional Hermitian matrices.
//!
//! The crate implements spectral functional calculus `f(A)`, Loewner-order
//! comparison, operator-valued Gauss-Legendre quadrature along matrix
//! segments, a catalog of scalar functions with operator-convexity metadata,
//! one checker per inequality, seeded random sampling, and a harness that
//! turns suite configurations into machine-readable pass/fail/margin reports.
//!
//! Core math is generic over the scalar type (`f32`/`f64`); the aliases
//! below pin the `f64` instantiations the harness and CLI use.

pub mod calculus;
pub mod eigen;
pub mod error;
pub mod functions;
pub mod harness;
pub mod inequalities;
pub mod interval;
pub mod matrix;
pub mod quadrature;
pub mod report;
pub mod sampling;
pub mod scalar;

pub use calculus::{
    apply_function, loewner_compare, quadratic_form, segment_point, OrderRelation, OrderVerdict,
};
pub use eigen::{spectral_decompose, SpectralDecomposition};
pub use error::{Error, Result};
pub use functions::{
    builtin_catalog, certify_operator_convex, check_synchronous, resolve_function, ConvexityClass,
    ConvexityStatus, ConvexityVerdict, Monotonicity, ScalarFunction, SynchronyClass,
    SynchronyVerdict,
};
pub use harness::{
    render_report, run_certify, run_example, run_suite, CertifyOutcome, FunctionSelection,
    ReportFormat, SuiteConfig, ALL_SUITES, THREADS_ENV,
};
pub use inequalities::{
    compute_mnp, probe_values, run_paper_example, ChainReport, CheckOutcome, Checker,
    FunctionalTriple, ProbeValues, SegmentData, SegmentProbe, Tolerances,
};
pub use interval::Interval;
pub use matrix::{HermitianMatrix, UnitVector};
pub use quadrature::{
    integrate_operator_segment, integrate_scalar_form, integrate_scalar_product_form,
    IntegralResult, QuadratureSpec, SegmentTable,
};
pub use report::{records_to_csv, records_to_json, CheckRecord, RunSummary, Subseeds, Verdict};
pub use sampling::{derive_subseed, random_hermitian, random_unit_vector, StreamTag};

/// `f64` instantiations used throughout the harness and CLI.
pub type HermitianMatrix64 = matrix::HermitianMatrix<f64>;
pub type UnitVector64 = matrix::UnitVector<f64>;
pub type SpectralDecomposition64 = eigen::SpectralDecomposition<f64>;
pub type ScalarFunction64 = functions::ScalarFunction<f64>;
pub type Interval64 = interval::Interval<f64>;
pub type Checker64 = inequalities::Checker<f64>;

/// `f32` instantiations, for callers that trade precision for speed.
pub type HermitianMatrix32 = matrix::HermitianMatrix<f32>;
pub type UnitVector32 = matrix::UnitVector<f32>;
pub type Interval32 = interval::Interval<f32>;
