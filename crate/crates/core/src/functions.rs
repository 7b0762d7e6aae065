//! Catalog of scalar functions with operator-convexity, sign and monotonicity
//! metadata, grid-based synchrony classification, and a randomized
//! operator-convexity certifier/falsifier.

use crate::calculus::{apply_function, segment_point};
use crate::eigen::spectral_decompose;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::matrix::HermitianMatrix;
use crate::sampling::{derive_subseed, random_hermitian, random_uniform, StreamTag};
use crate::scalar::Real;

/// Left-endpoint guard for functions singular at zero (`inverse`, `tlogt`).
pub const EPSILON_GUARD: f64 = 1e-3;

/// Grid resolution of the default synchrony check.
pub const SYNCHRONY_GRID: usize = 201;

/// Violation threshold of the convexity falsifier, relative to the scale of
/// the function values involved.
pub const CERTIFY_TOL: f64 = 1e-9;

const SIGN_GRID: usize = 1001;
const PRODUCT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexityClass {
    OperatorConvex,
    OperatorConcave,
    NotOperatorConvex,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monotonicity {
    Increasing,
    Decreasing,
    Nonmonotone,
}

/// Evaluation rule; a closed enum keeps functions `Clone + Send` and their
/// evaluation bitwise deterministic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionRule<T> {
    Affine { a: T, b: T },
    Square,
    Cube,
    Inverse,
    TLogT,
    Power { r: T },
}

impl<T: Real> FunctionRule<T> {
    pub fn eval(&self, t: T) -> T {
        match *self {
            FunctionRule::Affine { a, b } => a * t + b,
            FunctionRule::Square => t * t,
            FunctionRule::Cube => t * t * t,
            FunctionRule::Inverse => T::one() / t,
            FunctionRule::TLogT => t * t.ln(),
            FunctionRule::Power { r } => t.powf(r),
        }
    }
}

/// A catalog entry: evaluation rule plus the metadata the checkers use to
/// decide eligibility and expected inequality directions.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFunction<T> {
    pub id: String,
    pub domain: Interval<T>,
    pub rule: FunctionRule<T>,
    pub convexity_class: ConvexityClass,
    pub nonnegative_on_domain: bool,
    pub monotonicity: Monotonicity,
}

impl<T: Real> ScalarFunction<T> {
    fn validated(self) -> Result<Self> {
        let grid = self.domain.grid(SIGN_GRID);
        for &t in &grid {
            let v = self.rule.eval(t);
            if !v.is_finite() {
                return Err(Error::ConfigInvalid(format!(
                    "function {} is not finite at t = {}",
                    self.id, t
                )));
            }
            if self.nonnegative_on_domain && v < -T::of(PRODUCT_TOL) {
                return Err(Error::ConfigInvalid(format!(
                    "function {} tagged nonnegative but {}({}) = {}",
                    self.id, self.id, t, v
                )));
            }
        }
        Ok(self)
    }

    pub fn eval(&self, t: T) -> T {
        self.rule.eval(t)
    }

    pub fn is_operator_convex_tagged(&self) -> bool {
        self.convexity_class == ConvexityClass::OperatorConvex
    }
}

fn affine_monotonicity<T: Real>(a: T) -> Monotonicity {
    if a > T::zero() {
        Monotonicity::Increasing
    } else if a < T::zero() {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Nonmonotone
    }
}

fn affine_entry<T: Real>(
    id: &str,
    a: T,
    b: T,
    domain: Interval<T>,
    class: ConvexityClass,
) -> Result<ScalarFunction<T>> {
    let lo_val = a * domain.lo + b;
    let hi_val = a * domain.hi + b;
    let min_val = if lo_val < hi_val { lo_val } else { hi_val };
    ScalarFunction {
        id: id.to_string(),
        domain,
        rule: FunctionRule::Affine { a, b },
        convexity_class: class,
        nonnegative_on_domain: min_val >= -T::of(PRODUCT_TOL),
        monotonicity: affine_monotonicity(a),
    }
    .validated()
}

fn square_entry<T: Real>(domain: Interval<T>) -> Result<ScalarFunction<T>> {
    let monotonicity = if domain.lo >= T::zero() {
        Monotonicity::Increasing
    } else if domain.hi <= T::zero() {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Nonmonotone
    };
    ScalarFunction {
        id: "square".to_string(),
        domain,
        rule: FunctionRule::Square,
        convexity_class: ConvexityClass::OperatorConvex,
        nonnegative_on_domain: true,
        monotonicity,
    }
    .validated()
}

fn cube_entry<T: Real>(domain: Interval<T>) -> Result<ScalarFunction<T>> {
    ScalarFunction {
        id: "cube".to_string(),
        domain,
        rule: FunctionRule::Cube,
        convexity_class: ConvexityClass::NotOperatorConvex,
        nonnegative_on_domain: domain.lo >= -T::of(PRODUCT_TOL),
        monotonicity: Monotonicity::Increasing,
    }
    .validated()
}

/// Clips `[ε, ∞)` against the configured interval; `None` when empty.
fn positive_clip<T: Real>(config: &Interval<T>) -> Option<Interval<T>> {
    let lo = if config.lo > T::of(EPSILON_GUARD) {
        config.lo
    } else {
        T::of(EPSILON_GUARD)
    };
    if lo < config.hi {
        Some(Interval { lo, hi: config.hi })
    } else {
        None
    }
}

fn inverse_entry<T: Real>(domain: Interval<T>) -> Result<ScalarFunction<T>> {
    ScalarFunction {
        id: "inverse".to_string(),
        domain,
        rule: FunctionRule::Inverse,
        convexity_class: ConvexityClass::OperatorConvex,
        nonnegative_on_domain: true,
        monotonicity: Monotonicity::Decreasing,
    }
    .validated()
}

fn tlogt_entry<T: Real>(domain: Interval<T>) -> Result<ScalarFunction<T>> {
    let inv_e = T::of(std::f64::consts::E.recip());
    let monotonicity = if domain.lo >= inv_e {
        Monotonicity::Increasing
    } else if domain.hi <= inv_e {
        Monotonicity::Decreasing
    } else {
        Monotonicity::Nonmonotone
    };
    ScalarFunction {
        id: "tlogt".to_string(),
        domain,
        rule: FunctionRule::TLogT,
        convexity_class: ConvexityClass::OperatorConvex,
        // t·ln t dips below zero on (0, 1)
        nonnegative_on_domain: domain.lo >= T::one(),
        monotonicity,
    }
    .validated()
}

fn power_entry<T: Real>(id: &str, r: T, domain: Interval<T>) -> Result<ScalarFunction<T>> {
    if r < T::one() || r > T::two() {
        return Err(Error::ConfigInvalid(format!(
            "power exponent {r} outside [1, 2]"
        )));
    }
    ScalarFunction {
        id: id.to_string(),
        domain,
        rule: FunctionRule::Power { r },
        convexity_class: ConvexityClass::OperatorConvex,
        nonnegative_on_domain: true,
        monotonicity: Monotonicity::Increasing,
    }
    .validated()
}

/// The built-in catalog, with every domain clipped to the configured
/// interval. Entries whose natural domain misses the interval entirely
/// (e.g. `inverse` on `[-1, 0]`) are dropped.
pub fn builtin_catalog<T: Real>(config: Interval<T>) -> Vec<ScalarFunction<T>> {
    let mut entries = Vec::new();
    entries.push(
        affine_entry(
            "one",
            T::zero(),
            T::one(),
            config,
            ConvexityClass::OperatorConvex,
        )
        .unwrap(),
    );
    entries.push(
        affine_entry(
            "identity",
            T::one(),
            T::zero(),
            config,
            ConvexityClass::OperatorConvex,
        )
        .unwrap(),
    );
    // the concave-tagged affine twin
    entries.push(
        affine_entry(
            "negate",
            -T::one(),
            T::zero(),
            config,
            ConvexityClass::OperatorConcave,
        )
        .unwrap(),
    );
    entries.push(square_entry(config).unwrap());
    entries.push(cube_entry(config).unwrap());
    if let Some(domain) = positive_clip(&config) {
        entries.push(inverse_entry(domain).unwrap());
        entries.push(tlogt_entry(domain).unwrap());
        entries.push(power_entry("power:1.5", T::of(1.5), domain).unwrap());
    }
    entries
}

/// Resolves a function id against the catalog; `power:<r>` and
/// `affine:<a>:<b>` are parameterized forms.
pub fn resolve_function<T: Real>(id: &str, config: Interval<T>) -> Result<ScalarFunction<T>> {
    if let Some(found) = builtin_catalog(config).into_iter().find(|f| f.id == id) {
        return Ok(found);
    }
    if let Some(rest) = id.strip_prefix("power:") {
        let r: f64 = rest
            .parse()
            .map_err(|_| Error::ConfigInvalid(format!("bad power exponent in {id:?}")))?;
        let domain = positive_clip(&config).ok_or_else(|| {
            Error::ConfigInvalid(format!(
                "power functions need a positive interval, got [{}, {}]",
                config.lo, config.hi
            ))
        })?;
        return power_entry(id, T::of(r), domain);
    }
    if let Some(rest) = id.strip_prefix("affine:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() != 2 {
            return Err(Error::ConfigInvalid(format!(
                "expected affine:<a>:<b>, got {id:?}"
            )));
        }
        let a: f64 = parts[0]
            .parse()
            .map_err(|_| Error::ConfigInvalid(format!("bad affine slope in {id:?}")))?;
        let b: f64 = parts[1]
            .parse()
            .map_err(|_| Error::ConfigInvalid(format!("bad affine offset in {id:?}")))?;
        return affine_entry(
            id,
            T::of(a),
            T::of(b),
            config,
            ConvexityClass::OperatorConvex,
        );
    }
    Err(Error::ConfigInvalid(format!("unknown function id {id:?}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynchronyClass {
    Synchronous,
    Asynchronous,
    Neither,
}

/// Outcome of the grid-based synchrony check. Witnesses record grid pairs
/// whose product `(f(t)-f(s))(g(t)-g(s))` exceeds the threshold on either
/// side; a `Neither` verdict carries both.
#[derive(Debug, Clone, PartialEq)]
pub struct SynchronyVerdict<T> {
    pub class: SynchronyClass,
    /// Pair with product > 1e-12: rules out the asynchronous class.
    pub witness_positive: Option<(T, T)>,
    /// Pair with product < -1e-12: rules out the synchronous class.
    pub witness_negative: Option<(T, T)>,
}

/// Classifies a function pair as synchronous/asynchronous on `interval` by
/// evaluating the sign condition on all grid pairs.
pub fn check_synchronous<T: Real>(
    f: &ScalarFunction<T>,
    g: &ScalarFunction<T>,
    interval: Interval<T>,
    grid_points: usize,
) -> Result<SynchronyVerdict<T>> {
    if grid_points < 2 {
        return Err(Error::ParameterOutOfRange {
            name: "grid_points",
            value: grid_points as f64,
        });
    }
    for func in [f, g] {
        if !interval.is_subset_of(&func.domain) {
            return Err(Error::DomainViolation {
                eigenvalue: interval.lo.to_f64().unwrap_or(f64::NAN),
                domain_lo: func.domain.lo.to_f64().unwrap_or(f64::NAN),
                domain_hi: func.domain.hi.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let grid = interval.grid(grid_points);
    let fv: Vec<T> = grid.iter().map(|&t| f.eval(t)).collect();
    let gv: Vec<T> = grid.iter().map(|&t| g.eval(t)).collect();

    let tol = T::of(PRODUCT_TOL);
    let mut max_product = T::zero();
    let mut min_product = T::zero();
    let mut witness_positive = None;
    let mut witness_negative = None;
    for i in 0..grid.len() {
        for j in (i + 1)..grid.len() {
            let product = (fv[i] - fv[j]) * (gv[i] - gv[j]);
            if product > max_product {
                max_product = product;
                if product > tol {
                    witness_positive = Some((grid[i], grid[j]));
                }
            }
            if product < min_product {
                min_product = product;
                if product < -tol {
                    witness_negative = Some((grid[i], grid[j]));
                }
            }
        }
    }
    let class = if min_product >= -tol {
        SynchronyClass::Synchronous
    } else if max_product <= tol {
        SynchronyClass::Asynchronous
    } else {
        SynchronyClass::Neither
    };
    Ok(SynchronyVerdict {
        class,
        witness_positive,
        witness_negative,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexityStatus {
    NoViolationFound,
    Violated,
}

/// A stored convexity counterexample, re-checkable from its parts.
#[derive(Debug, Clone)]
pub struct ConvexityCounterexample<T> {
    pub a: HermitianMatrix<T>,
    pub b: HermitianMatrix<T>,
    pub lambda: T,
    pub min_eig_of_gap: T,
    pub trial: usize,
    pub seed_a: u64,
    pub seed_b: u64,
}

impl<T: Real> ConvexityCounterexample<T> {
    /// Recomputes the violated gap `min-eig((1-λ)f(A) + λf(B) - f((1-λ)A+λB))`
    /// by direct evaluation.
    pub fn recheck(&self, f: &ScalarFunction<T>) -> Result<T> {
        convexity_gap(f, &self.a, &self.b, self.lambda)
    }
}

#[derive(Debug, Clone)]
pub struct ConvexityVerdict<T> {
    pub status: ConvexityStatus,
    pub counterexample: Option<ConvexityCounterexample<T>>,
    pub trials_used: usize,
}

fn convexity_gap<T: Real>(
    f: &ScalarFunction<T>,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    lambda: T,
) -> Result<T> {
    let fa = apply_function(f, a)?;
    let fb = apply_function(f, b)?;
    let mid = segment_point(a, b, lambda)?;
    let f_mid = apply_function(f, &mid)?;
    let rhs = fa.linear_combination(T::one() - lambda, &fb, lambda)?;
    let gap = rhs.sub(&f_mid)?;
    Ok(spectral_decompose(&gap)?.min_eigenvalue())
}

/// Randomized search for an operator-convexity violation: draws `trials`
/// triples `(A, B, λ)` with spectra in `interval` and tests the midpoint and
/// a random-λ inequality. Deterministic given `seed`; returns the first
/// violation found.
pub fn certify_operator_convex<T: Real>(
    f: &ScalarFunction<T>,
    interval: Interval<T>,
    dim: usize,
    trials: usize,
    seed: u64,
) -> Result<ConvexityVerdict<T>> {
    if !interval.is_subset_of(&f.domain) {
        return Err(Error::DomainViolation {
            eigenvalue: interval.lo.to_f64().unwrap_or(f64::NAN),
            domain_lo: f.domain.lo.to_f64().unwrap_or(f64::NAN),
            domain_hi: f.domain.hi.to_f64().unwrap_or(f64::NAN),
        });
    }
    if dim == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "dim",
            value: 0.0,
        });
    }
    if trials == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "trials",
            value: 0.0,
        });
    }

    for trial in 0..trials {
        let seed_a = derive_subseed(seed, trial as u64, StreamTag::MatrixA);
        let seed_b = derive_subseed(seed, trial as u64, StreamTag::MatrixB);
        let a = random_hermitian::<T>(dim, interval, seed_a)?;
        let b = random_hermitian::<T>(dim, interval, seed_b)?;

        // scale from |f| over the sampled spectra: ‖f(A)‖ = max |f(λ_i)|
        let da = spectral_decompose(&a)?;
        let db = spectral_decompose(&b)?;
        let f_scale = da
            .eigenvalues()
            .iter()
            .chain(db.eigenvalues())
            .map(|&l| f.eval(interval.clamp(l)).abs())
            .fold(T::one(), |acc, v| if v > acc { v } else { acc });
        let threshold = -T::of(CERTIFY_TOL) * f_scale;

        let lambda_random: T =
            random_uniform(derive_subseed(seed, trial as u64, StreamTag::Lambda));
        for lambda in [T::half(), lambda_random] {
            let gap = convexity_gap(f, &a, &b, lambda)?;
            if gap < threshold {
                return Ok(ConvexityVerdict {
                    status: ConvexityStatus::Violated,
                    counterexample: Some(ConvexityCounterexample {
                        a,
                        b,
                        lambda,
                        min_eig_of_gap: gap,
                        trial,
                        seed_a,
                        seed_b,
                    }),
                    trials_used: trial + 1,
                });
            }
        }
    }
    Ok(ConvexityVerdict {
        status: ConvexityStatus::NoViolationFound,
        counterexample: None,
        trials_used: trials,
    })
}
