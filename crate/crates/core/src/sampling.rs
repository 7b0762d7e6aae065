//! Seeded generation of random Hermitian matrices with prescribed spectral
//! interval, random unit probe vectors, and counter-based sub-seed streams.
//!
//! Every drawn value is a pure function of `(master_seed, trial_index,
//! stream_tag)`, so parallel execution order cannot change any sample and a
//! single check can be replayed in isolation from its recorded sub-seeds.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::matrix::{vector_norm, HermitianMatrix, UnitVector, C};
use crate::scalar::Real;

/// Identifies the independent random stream of one drawn object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamTag {
    MatrixA,
    MatrixB,
    /// Probe vector for `x`-quantified checks, indexed by probe number.
    Probe(u32),
    /// Convex-combination weight in the convexity falsifier.
    Lambda,
}

impl StreamTag {
    pub fn code(self) -> u64 {
        match self {
            StreamTag::MatrixA => 1,
            StreamTag::MatrixB => 2,
            StreamTag::Lambda => 3,
            StreamTag::Probe(k) => 16 + k as u64,
        }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Counter-based sub-seed derivation; pure in its inputs.
pub fn derive_subseed(master_seed: u64, trial_index: u64, tag: StreamTag) -> u64 {
    let mut h = splitmix64(master_seed);
    h = splitmix64(h ^ splitmix64(trial_index.wrapping_add(0x51_7C_C1_B7_27_22_0A_95)));
    h = splitmix64(h ^ splitmix64(tag.code().wrapping_add(0x63_1E_2A_9D_4F_8B_13_57)));
    h
}

fn rng_for(sub_seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(sub_seed)
}

fn standard_normal<T: Real>(rng: &mut ChaCha8Rng) -> T {
    let v: f64 = StandardNormal.sample(rng);
    T::of(v)
}

fn complex_gaussian<T: Real>(rng: &mut ChaCha8Rng) -> C<T> {
    let re = standard_normal::<T>(rng);
    let im = standard_normal::<T>(rng);
    Complex::new(re, im)
}

/// Haar-distributed random Hermitian matrix with eigenvalues drawn uniformly
/// in `interval`: `Q diag(λ) Q*` where `Q` comes from the QR factorization of
/// a complex Ginibre matrix with the `R` diagonal kept nonnegative.
pub fn random_hermitian<T: Real>(
    dim: usize,
    interval: Interval<T>,
    sub_seed: u64,
) -> Result<HermitianMatrix<T>> {
    if dim == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "dim",
            value: 0.0,
        });
    }
    let mut rng = rng_for(sub_seed);
    let q = loop {
        if let Some(q) = haar_unitary_attempt::<T>(dim, &mut rng) {
            break q;
        }
    };
    let eigenvalues: Vec<T> = (0..dim)
        .map(|_| {
            let u: f64 = rng.random();
            interval.lo + interval.width() * T::of(u)
        })
        .collect();

    let mut data = vec![Complex::new(T::zero(), T::zero()); dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let mut acc = Complex::new(T::zero(), T::zero());
            for m in 0..dim {
                acc = acc + q[i * dim + m] * q[j * dim + m].conj() * Complex::from(eigenvalues[m]);
            }
            data[i * dim + j] = acc;
            data[j * dim + i] = acc.conj();
        }
    }
    Ok(HermitianMatrix::symmetrized(dim, data))
}

/// Modified Gram-Schmidt QR of a fresh Ginibre draw. Returns `None` on a
/// (measure-zero) near-rank-deficient draw so the caller can redraw from the
/// same stream.
fn haar_unitary_attempt<T: Real>(dim: usize, rng: &mut ChaCha8Rng) -> Option<Vec<C<T>>> {
    let mut g: Vec<C<T>> = (0..dim * dim).map(|_| complex_gaussian(rng)).collect();
    // column-by-column MGS with one re-orthogonalization pass
    for j in 0..dim {
        for _pass in 0..2 {
            for i in 0..j {
                let mut r = Complex::new(T::zero(), T::zero());
                for k in 0..dim {
                    r = r + g[k * dim + i].conj() * g[k * dim + j];
                }
                for k in 0..dim {
                    let correction = g[k * dim + i] * r;
                    g[k * dim + j] = g[k * dim + j] - correction;
                }
            }
        }
        let norm = (0..dim)
            .map(|k| g[k * dim + j].norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt();
        if norm < T::of(1e-8) {
            return None;
        }
        let inv = Complex::from(T::one() / norm);
        for k in 0..dim {
            g[k * dim + j] = g[k * dim + j] * inv;
        }
    }
    Some(g)
}

/// Complex Gaussian vector normalized to unit length.
pub fn random_unit_vector<T: Real>(dim: usize, sub_seed: u64) -> Result<UnitVector<T>> {
    if dim == 0 {
        return Err(Error::ParameterOutOfRange {
            name: "dim",
            value: 0.0,
        });
    }
    let mut rng = rng_for(sub_seed);
    loop {
        let entries: Vec<C<T>> = (0..dim).map(|_| complex_gaussian(&mut rng)).collect();
        if vector_norm(&entries) > T::of(1e-8) {
            return UnitVector::normalized(entries);
        }
    }
}

/// Uniform draw in `[0, 1)` for the falsifier's λ stream.
pub fn random_uniform<T: Real>(sub_seed: u64) -> T {
    let mut rng = rng_for(sub_seed);
    let u: f64 = rng.random();
    T::of(u)
}
