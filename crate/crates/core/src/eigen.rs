//! Spectral decomposition of Hermitian matrices.
//!
//! Uses cyclic Jacobi with complex rotations: every pivot is reduced through
//! the phase-normalized 2x2 real problem, so the accumulated transform stays
//! exactly unitary up to round-off. For the small dimensions this crate
//! targets (n <= a few dozen) Jacobi is both accurate and bitwise
//! deterministic for identical input bits.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::{HermitianMatrix, C};
use crate::scalar::Real;

/// Relative bound on the reconstruction residual and orthonormality defect.
pub const SPECTRAL_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and an orthonormal eigenbasis of a Hermitian
/// matrix, plus the Frobenius bound on the reconstruction error.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition<T> {
    eigenvalues: Vec<T>,
    /// Row-major; column `i` is the eigenvector of `eigenvalues[i]`.
    eigenvectors: Vec<C<T>>,
    residual: T,
}

impl<T: Real> SpectralDecomposition<T> {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, i: usize) -> Vec<C<T>> {
        let n = self.dim();
        (0..n).map(|k| self.eigenvectors[k * n + i]).collect()
    }

    pub fn min_eigenvalue(&self) -> T {
        self.eigenvalues[0]
    }

    pub fn max_eigenvalue(&self) -> T {
        self.eigenvalues[self.dim() - 1]
    }

    /// Spectral norm `max |λ_i|`.
    pub fn spectral_norm(&self) -> T {
        let lo = self.min_eigenvalue().abs();
        let hi = self.max_eigenvalue().abs();
        if lo > hi {
            lo
        } else {
            hi
        }
    }

    pub fn residual(&self) -> T {
        self.residual
    }

    /// Functional calculus: `U diag(rule(λ_i)) U*`.
    pub fn apply(&self, rule: impl Fn(T) -> T) -> HermitianMatrix<T> {
        let n = self.dim();
        let fvals: Vec<T> = self.eigenvalues.iter().map(|&l| rule(l)).collect();
        let mut data = vec![Complex::new(T::zero(), T::zero()); n * n];
        for i in 0..n {
            for j in i..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for m in 0..n {
                    acc = acc
                        + self.eigenvectors[i * n + m]
                            * self.eigenvectors[j * n + m].conj()
                            * Complex::from(fvals[m]);
                }
                data[i * n + j] = acc;
                data[j * n + i] = acc.conj();
            }
        }
        HermitianMatrix::symmetrized(n, data)
    }

    /// Spectral weights `w_i = |⟨u_i, x⟩|²` of a probe vector.
    ///
    /// Every quadratic form of a function of the operator is then the dot
    /// product `Σ f(λ_i) w_i`.
    pub fn probe_weights(&self, x: &[C<T>]) -> Vec<T> {
        let n = self.dim();
        debug_assert_eq!(x.len(), n);
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = Complex::new(T::zero(), T::zero());
            for k in 0..n {
                acc = acc + self.eigenvectors[k * n + i].conj() * x[k];
            }
            weights.push(acc.norm_sqr());
        }
        weights
    }

    /// `U diag(λ) U*`, for residual checks.
    pub fn reconstruct(&self) -> HermitianMatrix<T> {
        self.apply(|l| l)
    }

    /// `max |(U*U - I)_{ij}|`.
    pub fn orthonormality_defect(&self) -> T {
        let n = self.dim();
        let mut worst = T::zero();
        for i in 0..n {
            for j in 0..n {
                let mut acc = Complex::new(T::zero(), T::zero());
                for k in 0..n {
                    acc = acc + self.eigenvectors[k * n + i].conj() * self.eigenvectors[k * n + j];
                }
                if i == j {
                    acc = acc - Complex::new(T::one(), T::zero());
                }
                if acc.norm() > worst {
                    worst = acc.norm();
                }
            }
        }
        worst
    }
}

/// Decomposes a Hermitian matrix; deterministic for identical input bits.
pub fn spectral_decompose<T: Real>(a: &HermitianMatrix<T>) -> Result<SpectralDecomposition<T>> {
    let n = a.dim();
    let mut w: Vec<C<T>> = a.entries().to_vec();
    let mut v = vec![Complex::new(T::zero(), T::zero()); n * n];
    for i in 0..n {
        v[i * n + i] = Complex::new(T::one(), T::zero());
    }

    let frob = a.frobenius_norm();
    let stop = T::epsilon() * frob * T::of_usize(n.max(2));

    let mut converged = n <= 1 || frob == T::zero();
    let mut sweeps = 0;
    while !converged && sweeps < MAX_SWEEPS {
        if off_diagonal_norm(&w, n) <= stop {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut w, &mut v, n, p, q);
            }
        }
        sweeps += 1;
        if off_diagonal_norm(&w, n) <= stop {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::ConvergenceFailure {
            sweeps,
            off_norm: off_diagonal_norm(&w, n).to_f64().unwrap_or(f64::NAN),
        });
    }

    // ascending eigenvalue order, ties kept adjacent by the stable sort
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        w[i * n + i]
            .re
            .partial_cmp(&w[j * n + j].re)
            .expect("finite eigenvalues")
    });
    let eigenvalues: Vec<T> = order.iter().map(|&i| w[i * n + i].re).collect();
    let mut eigenvectors = vec![Complex::new(T::zero(), T::zero()); n * n];
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..n {
            eigenvectors[k * n + new_col] = v[k * n + old_col];
        }
    }

    let mut decomposition = SpectralDecomposition {
        eigenvalues,
        eigenvectors,
        residual: T::zero(),
    };
    let residual = decomposition
        .reconstruct()
        .sub(a)
        .expect("same dim")
        .frobenius_norm();
    decomposition.residual = residual;

    let scale = {
        let norm = decomposition.spectral_norm();
        if norm > T::one() {
            norm
        } else {
            T::one()
        }
    };
    if residual > T::of(SPECTRAL_TOL) * scale {
        return Err(Error::ConvergenceFailure {
            sweeps,
            off_norm: residual.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(decomposition)
}

fn off_diagonal_norm<T: Real>(w: &[C<T>], n: usize) -> T {
    let mut acc = T::zero();
    for p in 0..n {
        for q in p + 1..n {
            acc = acc + w[p * n + q].norm_sqr();
        }
    }
    (acc + acc).sqrt()
}

/// One complex Jacobi rotation annihilating the (p, q) pivot.
fn rotate<T: Real>(w: &mut [C<T>], v: &mut [C<T>], n: usize, p: usize, q: usize) {
    let b = w[p * n + q];
    let b_abs = b.norm();
    let app = w[p * n + p].re;
    let aqq = w[q * n + q].re;
    if b_abs <= T::epsilon() * T::half() * (app.abs() + aqq.abs()) || b_abs == T::zero() {
        w[p * n + q] = Complex::new(T::zero(), T::zero());
        w[q * n + p] = Complex::new(T::zero(), T::zero());
        return;
    }
    // phase-normalized real 2x2 problem [[app, |b|], [|b|, aqq]]
    let phase = b / Complex::from(b_abs);
    let theta = (aqq - app) / (T::two() * b_abs);
    let t = if theta == T::zero() {
        T::one()
    } else {
        let sign = if theta > T::zero() {
            T::one()
        } else {
            -T::one()
        };
        sign / (theta.abs() + (T::one() + theta * theta).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // U embeds as U[pp] = c, U[pq] = s, U[qp] = -s·conj(phase), U[qq] = c·conj(phase)
    let cs = Complex::from(c);
    let s_col = Complex::from(s) * phase.conj(); // multiplies column q in W·U
    let s_row = Complex::from(s) * phase; // multiplies row q in U*·W

    // rows p, q  (U* W)
    for k in 0..n {
        let wp = w[p * n + k];
        let wq = w[q * n + k];
        w[p * n + k] = wp * cs - wq * s_row;
        w[q * n + k] = wp * Complex::from(s) + wq * cs * phase;
    }
    // columns p, q  (W U)
    for k in 0..n {
        let wp = w[k * n + p];
        let wq = w[k * n + q];
        w[k * n + p] = wp * cs - wq * s_col;
        w[k * n + q] = wp * Complex::from(s) + wq * cs * phase.conj();
    }
    // closed forms for the rotated pivots keep the diagonal exactly real
    w[p * n + p] = Complex::new(app - t * b_abs, T::zero());
    w[q * n + q] = Complex::new(aqq + t * b_abs, T::zero());
    w[p * n + q] = Complex::new(T::zero(), T::zero());
    w[q * n + p] = Complex::new(T::zero(), T::zero());

    // accumulate V <- V U
    for k in 0..n {
        let vp = v[k * n + p];
        let vq = v[k * n + q];
        v[k * n + p] = vp * cs - vq * s_col;
        v[k * n + q] = vp * Complex::from(s) + vq * cs * phase.conj();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::inner;
    use approx::assert_abs_diff_eq;

    type M = HermitianMatrix<f64>;

    #[test]
    fn diagonal_input_sorts_ascending() {
        let a = M::from_diagonal(&[3.0, 1.0]);
        let d = spectral_decompose(&a).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0, 3.0]);
        // eigenvectors are the permuted standard basis
        assert_abs_diff_eq!(d.eigenvector(0)[1].re.abs(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(d.eigenvector(1)[0].re.abs(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn off_diagonal_two_by_two_closed_form() {
        // [[0,1],[1,0]] -> eigenvalues (-1, 1), vectors (1,-1)/√2 and (1,1)/√2
        let a = M::from_real_rows(2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let d = spectral_decompose(&a).unwrap();
        assert_abs_diff_eq!(d.eigenvalues()[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(d.eigenvalues()[1], 1.0, epsilon = 1e-14);
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let expect0 = [C::new(inv_sqrt2, 0.0), C::new(-inv_sqrt2, 0.0)];
        let expect1 = [C::new(inv_sqrt2, 0.0), C::new(inv_sqrt2, 0.0)];
        // up to a unit phase
        assert_abs_diff_eq!(
            inner(&expect0, &d.eigenvector(0)).norm(),
            1.0,
            epsilon = 1e-13
        );
        assert_abs_diff_eq!(
            inner(&expect1, &d.eigenvector(1)).norm(),
            1.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn identity_any_dim() {
        for n in 1..=8 {
            let d = spectral_decompose(&M::identity(n)).unwrap();
            assert!(d.eigenvalues().iter().all(|&l| l == 1.0));
            assert!(d.residual() <= SPECTRAL_TOL);
        }
    }

    #[test]
    fn complex_entries_reconstruct() {
        let a = M::new(
            3,
            vec![
                C::new(2.0, 0.0),
                C::new(1.0, 0.5),
                C::new(0.0, -1.0),
                C::new(1.0, -0.5),
                C::new(-1.0, 0.0),
                C::new(0.25, 0.75),
                C::new(0.0, 1.0),
                C::new(0.25, -0.75),
                C::new(0.5, 0.0),
            ],
        )
        .unwrap();
        let d = spectral_decompose(&a).unwrap();
        assert!(d.residual() < 1e-13);
        assert!(d.orthonormality_defect() < 1e-14);
        assert!(d.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn probe_weights_sum_to_one() {
        let a = M::from_real_rows(2, &[1.0, 0.5, 0.5, -1.0]).unwrap();
        let d = spectral_decompose(&a).unwrap();
        let x = crate::matrix::UnitVector::from_real(&[0.6, 0.8]).unwrap();
        let w = d.probe_weights(x.entries());
        assert_abs_diff_eq!(w.iter().sum::<f64>(), 1.0, epsilon = 1e-14);
        // quadratic form via weights equals direct evaluation
        let via_weights: f64 = w.iter().zip(d.eigenvalues()).map(|(wi, li)| wi * li).sum();
        let direct = {
            let ax = a.matvec(x.entries());
            inner(x.entries(), &ax).re
        };
        assert_abs_diff_eq!(via_weights, direct, epsilon = 1e-14);
    }

    #[test]
    fn zero_matrix_is_fine() {
        let d = spectral_decompose(&M::zeros(4)).unwrap();
        assert!(d.eigenvalues().iter().all(|&l| l == 0.0));
    }
}
