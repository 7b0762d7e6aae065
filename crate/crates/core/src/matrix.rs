//! Complex Hermitian matrices and unit vectors.
//!
//! A [`HermitianMatrix`] is stored exactly Hermitian: the constructor
//! symmetrizes its input as `(M + M*)/2`, so downstream spectral code never
//! sees round-off drift in the off-diagonal conjugate pairs.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Relative tolerance for accepting an input matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Tolerance on `|‖x‖ - 1|` for unit vectors.
pub const UNIT_TOL: f64 = 1e-12;

pub type C<T> = Complex<T>;

/// Finite-dimensional stand-in for a bounded selfadjoint operator.
///
/// Entries are stored row-major; the representation invariant is exact
/// Hermitian symmetry (`entry(i, j) == entry(j, i).conj()` bitwise) and a
/// real diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix<T> {
    dim: usize,
    data: Vec<C<T>>,
}

impl<T: Real> HermitianMatrix<T> {
    /// Builds a matrix from row-major complex entries, verifying approximate
    /// Hermitian symmetry and then symmetrizing exactly.
    pub fn new(dim: usize, entries: Vec<C<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ParameterOutOfRange {
                name: "dim",
                value: 0.0,
            });
        }
        if entries.len() != dim * dim {
            return Err(Error::DimMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFiniteEntries);
        }
        // max-norm asymmetry check before symmetrizing
        let mut max_abs = T::zero();
        let mut max_asym = T::zero();
        for i in 0..dim {
            for j in 0..dim {
                let z = entries[i * dim + j];
                let w = entries[j * dim + i].conj();
                let asym = (z - w).norm();
                if asym > max_asym {
                    max_asym = asym;
                }
                if z.norm() > max_abs {
                    max_abs = z.norm();
                }
            }
        }
        let scale = if max_abs > T::one() {
            max_abs
        } else {
            T::one()
        };
        if max_asym > T::of(HERMITIAN_TOL) * scale {
            return Err(Error::ParameterOutOfRange {
                name: "hermitian asymmetry",
                value: max_asym.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self::symmetrized(dim, entries))
    }

    /// Builds `(M + M*)/2` from arbitrary finite entries, skipping the
    /// asymmetry check.
    pub fn from_symmetrized(dim: usize, entries: Vec<C<T>>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(Error::DimMismatch {
                left: entries.len(),
                right: dim * dim,
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFiniteEntries);
        }
        Ok(Self::symmetrized(dim, entries))
    }

    /// Symmetrizes `(M + M*)/2` without the asymmetry check.
    pub(crate) fn symmetrized(dim: usize, mut entries: Vec<C<T>>) -> Self {
        for i in 0..dim {
            entries[i * dim + i] = C::new(entries[i * dim + i].re, T::zero());
            for j in (i + 1)..dim {
                let avg = (entries[i * dim + j] + entries[j * dim + i].conj()) * C::from(T::half());
                entries[i * dim + j] = avg;
                entries[j * dim + i] = avg.conj();
            }
        }
        Self { dim, data: entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = C::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_diagonal(diag: &[T]) -> Self {
        let dim = diag.len();
        let mut m = Self::zeros(dim);
        for (i, &d) in diag.iter().enumerate() {
            m.data[i * dim + i] = C::new(d, T::zero());
        }
        m
    }

    /// Builds from real row-major entries (must be symmetric).
    pub fn from_real_rows(dim: usize, rows: &[T]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|&r| C::new(r, T::zero())).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> C<T> {
        self.data[i * self.dim + j]
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }

    pub fn max_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    pub fn scale(&self, factor: T) -> Self {
        let f = C::from(factor);
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * f).collect(),
        }
    }

    /// `alpha*self + beta*other`, the segment arithmetic workhorse.
    pub fn linear_combination(&self, alpha: T, other: &Self, beta: T) -> Result<Self> {
        self.check_dim(other)?;
        let (ca, cb) = (C::from(alpha), C::from(beta));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a * ca + b * cb)
            .collect();
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    /// Symmetrized product `(AB + BA)/2`.
    ///
    /// For commuting arguments (e.g. two functions of the same operator) this
    /// equals the plain product up to round-off.
    pub fn sym_product(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut data = vec![C::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = C::new(T::zero(), T::zero());
                for k in 0..n {
                    acc = acc
                        + self.data[i * n + k] * other.data[k * n + j]
                        + other.data[i * n + k] * self.data[k * n + j];
                }
                data[i * n + j] = acc * C::from(T::half());
            }
        }
        Ok(Self::symmetrized(n, data))
    }

    pub fn matvec(&self, x: &[C<T>]) -> Vec<C<T>> {
        debug_assert_eq!(x.len(), self.dim);
        let n = self.dim;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = C::new(T::zero(), T::zero());
            for j in 0..n {
                acc = acc + self.data[i * n + j] * x[j];
            }
            out.push(acc);
        }
        out
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

/// `⟨x, y⟩ = Σ conj(x_i) y_i`.
pub fn inner<T: Real>(x: &[C<T>], y: &[C<T>]) -> C<T> {
    debug_assert_eq!(x.len(), y.len());
    x.iter()
        .zip(y)
        .fold(C::new(T::zero(), T::zero()), |acc, (a, b)| {
            acc + a.conj() * *b
        })
}

pub fn vector_norm<T: Real>(x: &[C<T>]) -> T {
    x.iter()
        .map(|z| z.norm_sqr())
        .fold(T::zero(), |a, b| a + b)
        .sqrt()
}

/// A complex vector with `‖x‖ = 1`, the probe all scalar inequalities are
/// quantified over.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector<T> {
    data: Vec<C<T>>,
}

impl<T: Real> UnitVector<T> {
    /// Validates that the entries already have unit norm.
    pub fn new(entries: Vec<C<T>>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::ParameterOutOfRange {
                name: "dim",
                value: 0.0,
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFiniteEntries);
        }
        let norm = vector_norm(&entries);
        if (norm - T::one()).abs() > T::of(UNIT_TOL) {
            return Err(Error::ParameterOutOfRange {
                name: "vector norm",
                value: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { data: entries })
    }

    /// Normalizes arbitrary nonzero entries to unit length.
    pub fn normalized(entries: Vec<C<T>>) -> Result<Self> {
        let norm = vector_norm(&entries);
        if !norm.is_finite() || norm <= T::zero() {
            return Err(Error::ParameterOutOfRange {
                name: "vector norm",
                value: norm.to_f64().unwrap_or(f64::NAN),
            });
        }
        let inv = T::one() / norm;
        Ok(Self {
            data: entries.into_iter().map(|z| z * C::from(inv)).collect(),
        })
    }

    /// Real standard basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut data = vec![C::new(T::zero(), T::zero()); dim];
        data[k] = C::new(T::one(), T::zero());
        Self { data }
    }

    pub fn from_real(entries: &[T]) -> Result<Self> {
        Self::normalized(entries.iter().map(|&r| C::new(r, T::zero())).collect())
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn entries(&self) -> &[C<T>] {
        &self.data
    }
}
