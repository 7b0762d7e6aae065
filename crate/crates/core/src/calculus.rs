//! Functional calculus and Loewner-order comparison on Hermitian matrices.

use crate::eigen::{spectral_decompose, SpectralDecomposition};
use crate::error::{Error, Result};
use crate::functions::ScalarFunction;
use crate::matrix::{inner, HermitianMatrix, UnitVector};
use crate::scalar::{tolerance_scale, Real};

/// Guard band (relative to endpoint magnitudes) within which an eigenvalue
/// may sit outside the function domain and still be clamped onto it.
pub const DOMAIN_GUARD_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderRelation {
    Leq,
    Geq,
    Equal,
    Incomparable,
}

/// Outcome of a Loewner-order comparison `A ? B`.
///
/// `witness_min_eig` is always the smallest eigenvalue of `B - A`, so
/// `Leq`/`Equal` verdicts can be re-checked from the verdict alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderVerdict<T> {
    pub relation: OrderRelation,
    pub witness_min_eig: T,
    pub tolerance_used: T,
}

impl<T: Real> OrderVerdict<T> {
    pub fn holds_leq(&self) -> bool {
        matches!(self.relation, OrderRelation::Leq | OrderRelation::Equal)
    }
}

/// `f(A) = U diag(f(λ_i)) U*`, after checking that the spectrum stays inside
/// the function domain (up to the guard band, within which eigenvalues are
/// clamped onto the domain before evaluation).
pub fn apply_function<T: Real>(
    f: &ScalarFunction<T>,
    a: &HermitianMatrix<T>,
) -> Result<HermitianMatrix<T>> {
    let d = spectral_decompose(a)?;
    apply_function_decomposed(f, &d)
}

/// Same as [`apply_function`] but reuses an existing decomposition.
pub fn apply_function_decomposed<T: Real>(
    f: &ScalarFunction<T>,
    d: &SpectralDecomposition<T>,
) -> Result<HermitianMatrix<T>> {
    check_spectrum_in_domain(f, d.eigenvalues())?;
    Ok(d.apply(|l| f.eval(f.domain.clamp(l))))
}

pub fn check_spectrum_in_domain<T: Real>(f: &ScalarFunction<T>, spectrum: &[T]) -> Result<()> {
    for &l in spectrum {
        if !f.domain.contains_guarded(l, T::of(DOMAIN_GUARD_TOL)) {
            return Err(Error::DomainViolation {
                eigenvalue: l.to_f64().unwrap_or(f64::NAN),
                domain_lo: f.domain.lo.to_f64().unwrap_or(f64::NAN),
                domain_hi: f.domain.hi.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(())
}

/// Compares `A` and `B` in the Loewner order with a relative tolerance:
/// `A ≤ B` iff `min-eig(B - A) >= -tol * max(1, ‖A‖, ‖B‖)`.
pub fn loewner_compare<T: Real>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    tol: T,
) -> Result<OrderVerdict<T>> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let norm_a = spectral_decompose(a)?.spectral_norm();
    let norm_b = spectral_decompose(b)?.spectral_norm();
    let diff = spectral_decompose(&b.sub(a)?)?;
    let tolerance_used = tol * tolerance_scale(&[norm_a, norm_b]);

    let min_eig = diff.min_eigenvalue();
    let max_eig = diff.max_eigenvalue();
    let leq = min_eig >= -tolerance_used;
    let geq = max_eig <= tolerance_used;
    let relation = match (leq, geq) {
        (true, true) => OrderRelation::Equal,
        (true, false) => OrderRelation::Leq,
        (false, true) => OrderRelation::Geq,
        (false, false) => OrderRelation::Incomparable,
    };
    Ok(OrderVerdict {
        relation,
        witness_min_eig: min_eig,
        tolerance_used,
    })
}

/// `⟨Ax, x⟩` for unit `x`; the imaginary part is round-off only and is
/// checked then discarded.
pub fn quadratic_form<T: Real>(a: &HermitianMatrix<T>, x: &UnitVector<T>) -> Result<T> {
    if a.dim() != x.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: x.dim(),
        });
    }
    let ax = a.matvec(x.entries());
    let form = inner(x.entries(), &ax);
    debug_assert!(
        form.im.abs() <= T::of(1e-12) * tolerance_scale(&[a.frobenius_norm()]),
        "quadratic form picked up a non-trivial imaginary part"
    );
    Ok(form.re)
}

/// The segment point `(1-t)A + tB`, `t ∈ [0, 1]`.
pub fn segment_point<T: Real>(
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    t: T,
) -> Result<HermitianMatrix<T>> {
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if !(T::zero()..=T::one()).contains(&t) {
        return Err(Error::ParameterOutOfRange {
            name: "t",
            value: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    a.linear_combination(T::one() - t, b, t)
}
