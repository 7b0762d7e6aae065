//! Composite Gauss-Legendre integration over `t ∈ [0, 1]` of operator- and
//! scalar-valued integrands along the segment between two Hermitian matrices.
//!
//! The segment is decomposed once per node; scalar forms are then spectral
//! dot products, so one table serves every function pair and probe vector.
//! Error estimates compare the requested rule against the same rule at half
//! panel width.

use crate::calculus::check_spectrum_in_domain;
use crate::eigen::{spectral_decompose, SpectralDecomposition};
use crate::error::{Error, Result};
use crate::functions::ScalarFunction;
use crate::matrix::{HermitianMatrix, UnitVector};
use crate::scalar::Real;

/// Composite rule: `panels` subdivisions of `[0, 1]`, each integrated by a
/// `nodes_per_panel`-point Gauss-Legendre rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureSpec {
    pub panels: usize,
    pub nodes_per_panel: usize,
}

impl QuadratureSpec {
    pub fn new(panels: usize, nodes_per_panel: usize) -> Result<Self> {
        if panels < 1 {
            return Err(Error::ParameterOutOfRange {
                name: "panels",
                value: panels as f64,
            });
        }
        if !(2..=16).contains(&nodes_per_panel) {
            return Err(Error::ParameterOutOfRange {
                name: "nodes_per_panel",
                value: nodes_per_panel as f64,
            });
        }
        if panels * nodes_per_panel > 1_000_000 {
            return Err(Error::ParameterOutOfRange {
                name: "total node count",
                value: (panels * nodes_per_panel) as f64,
            });
        }
        Ok(Self {
            panels,
            nodes_per_panel,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            panels: 8,
            nodes_per_panel: 8,
        }
    }
}

/// Integral value together with the two-resolution error estimate.
#[derive(Debug, Clone)]
pub struct IntegralResult<V, T> {
    pub value: V,
    pub error_estimate: T,
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre_nodes<T: Real>(k: usize) -> (Vec<T>, Vec<T>) {
    let mut nodes = vec![T::zero(); k];
    let mut weights = vec![T::zero(); k];
    let pi = T::of(std::f64::consts::PI);
    let kf = T::of_usize(k);
    for i in 0..k {
        // Chebyshev initial guess for the i-th root
        let mut x = (pi * (T::of_usize(i) + T::of(0.75)) / (kf + T::half())).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_eval(k, x);
            let step = p / dp;
            x = x - step;
            if step.abs() <= T::epsilon() * T::two() {
                break;
            }
        }
        let (_, dp) = legendre_eval(k, x);
        nodes[i] = x;
        weights[i] = T::two() / ((T::one() - x * x) * dp * dp);
    }
    // ascending node order
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| nodes[a].partial_cmp(&nodes[b]).unwrap());
    let nodes_sorted: Vec<T> = order.iter().map(|&i| nodes[i]).collect();
    let weights_sorted: Vec<T> = order.iter().map(|&i| weights[i]).collect();
    (nodes_sorted, weights_sorted)
}

/// `(P_k(x), P_k'(x))` via the three-term recurrence.
fn legendre_eval<T: Real>(k: usize, x: T) -> (T, T) {
    let mut p_prev = T::one();
    let mut p = x;
    if k == 0 {
        return (T::one(), T::zero());
    }
    for j in 2..=k {
        let jf = T::of_usize(j);
        let p_next = ((T::two() * jf - T::one()) * x * p - (jf - T::one()) * p_prev) / jf;
        p_prev = p;
        p = p_next;
    }
    let dp = kf_derivative(k, x, p, p_prev);
    (p, dp)
}

fn kf_derivative<T: Real>(k: usize, x: T, p_k: T, p_km1: T) -> T {
    let kf = T::of_usize(k);
    kf * (x * p_k - p_km1) / (x * x - T::one())
}

/// Composite node list on `[0, 1]`: `(t, weight)` pairs in ascending order.
fn composite_nodes<T: Real>(panels: usize, nodes_per_panel: usize) -> Vec<(T, T)> {
    let (xs, ws) = gauss_legendre_nodes::<T>(nodes_per_panel);
    let pf = T::of_usize(panels);
    let mut out = Vec::with_capacity(panels * nodes_per_panel);
    for p in 0..panels {
        let offset = T::of_usize(p);
        for (x, w) in xs.iter().zip(&ws) {
            let t = (offset + (*x + T::one()) * T::half()) / pf;
            out.push((t, *w * T::half() / pf));
        }
    }
    out
}

struct QuadNode<T> {
    weight: T,
    decomposition: SpectralDecomposition<T>,
}

/// Precomputed segment decompositions for the requested rule and its
/// half-width refinement, oriented `S(t) = (1-t)·left + t·right`.
pub struct SegmentTable<T> {
    dim: usize,
    coarse: Vec<QuadNode<T>>,
    fine: Vec<QuadNode<T>>,
}

/// Per-probe spectral weights at every node of both resolutions.
pub struct ProbeWeights<T> {
    coarse: Vec<Vec<T>>,
    fine: Vec<Vec<T>>,
}

impl<T: Real> SegmentTable<T> {
    pub fn new(
        left: &HermitianMatrix<T>,
        right: &HermitianMatrix<T>,
        spec: QuadratureSpec,
    ) -> Result<Self> {
        if left.dim() != right.dim() {
            return Err(Error::DimMismatch {
                left: left.dim(),
                right: right.dim(),
            });
        }
        QuadratureSpec::new(spec.panels, spec.nodes_per_panel)?;
        let build = |panels: usize| -> Result<Vec<QuadNode<T>>> {
            composite_nodes::<T>(panels, spec.nodes_per_panel)
                .into_iter()
                .map(|(t, weight)| {
                    let point = left.linear_combination(T::one() - t, right, t)?;
                    Ok(QuadNode {
                        weight,
                        decomposition: spectral_decompose(&point)?,
                    })
                })
                .collect()
        };
        Ok(Self {
            dim: left.dim(),
            coarse: build(spec.panels)?,
            fine: build(spec.panels * 2)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_domains(&self, fns: &[&ScalarFunction<T>]) -> Result<()> {
        for node in self.coarse.iter().chain(&self.fine) {
            for f in fns {
                check_spectrum_in_domain(f, node.decomposition.eigenvalues())?;
            }
        }
        Ok(())
    }

    /// `∫ f(S(t)) dt` as a matrix, with its two-resolution error estimate
    /// measured in the spectral norm.
    pub fn operator_integral(
        &self,
        f: &ScalarFunction<T>,
    ) -> Result<IntegralResult<HermitianMatrix<T>, T>> {
        self.check_domains(&[f])?;
        let sum = |nodes: &[QuadNode<T>]| -> Result<HermitianMatrix<T>> {
            let mut acc = HermitianMatrix::zeros(self.dim);
            for node in nodes {
                let term = node
                    .decomposition
                    .apply(|l| f.eval(f.domain.clamp(l)))
                    .scale(node.weight);
                acc = acc.add(&term)?;
            }
            Ok(acc)
        };
        let coarse = sum(&self.coarse)?;
        let fine = sum(&self.fine)?;
        let error_estimate = spectral_decompose(&fine.sub(&coarse)?)?.spectral_norm();
        Ok(IntegralResult {
            value: coarse,
            error_estimate,
        })
    }

    /// Spectral weights of a probe vector at every node.
    pub fn probe(&self, x: &UnitVector<T>) -> Result<ProbeWeights<T>> {
        if x.dim() != self.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: x.dim(),
            });
        }
        let weights = |nodes: &[QuadNode<T>]| {
            nodes
                .iter()
                .map(|n| n.decomposition.probe_weights(x.entries()))
                .collect()
        };
        Ok(ProbeWeights {
            coarse: weights(&self.coarse),
            fine: weights(&self.fine),
        })
    }

    fn form_at<F: Fn(T) -> T>(node: &QuadNode<T>, weights: &[T], rule: &F) -> T {
        node.decomposition
            .eigenvalues()
            .iter()
            .zip(weights)
            .map(|(&l, &w)| rule(l) * w)
            .sum()
    }

    fn scalar_integral<F: Fn(&QuadNode<T>, &[T]) -> T>(
        &self,
        probe: &ProbeWeights<T>,
        integrand: F,
    ) -> IntegralResult<T, T> {
        let sum = |nodes: &[QuadNode<T>], w: &[Vec<T>]| -> T {
            nodes
                .iter()
                .zip(w)
                .map(|(n, nw)| integrand(n, nw) * n.weight)
                .sum()
        };
        let coarse = sum(&self.coarse, &probe.coarse);
        let fine = sum(&self.fine, &probe.fine);
        IntegralResult {
            value: coarse,
            error_estimate: (fine - coarse).abs(),
        }
    }

    /// `∫ ⟨f(S(t))x, x⟩ dt`.
    pub fn scalar_form_integral(
        &self,
        f: &ScalarFunction<T>,
        probe: &ProbeWeights<T>,
    ) -> Result<IntegralResult<T, T>> {
        self.check_domains(&[f])?;
        let rule = |l: T| f.eval(f.domain.clamp(l));
        Ok(self.scalar_integral(probe, |node, w| Self::form_at(node, w, &rule)))
    }

    /// `∫ ⟨f(S(t))x, x⟩·⟨g(S(t))x, x⟩ dt`.
    pub fn product_form_integral(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        probe: &ProbeWeights<T>,
    ) -> Result<IntegralResult<T, T>> {
        self.check_domains(&[f, g])?;
        let rf = |l: T| f.eval(f.domain.clamp(l));
        let rg = |l: T| g.eval(g.domain.clamp(l));
        Ok(self.scalar_integral(probe, |node, w| {
            Self::form_at(node, w, &rf) * Self::form_at(node, w, &rg)
        }))
    }

    /// `∫ ⟨f(S(t))·g(S(t)) x, x⟩ dt` — the operator-product form; `f(S)` and
    /// `g(S)` commute, so this is the spectral dot product of `f·g`.
    pub fn operator_product_form_integral(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        probe: &ProbeWeights<T>,
    ) -> Result<IntegralResult<T, T>> {
        self.check_domains(&[f, g])?;
        let rule = |l: T| f.eval(f.domain.clamp(l)) * g.eval(g.domain.clamp(l));
        Ok(self.scalar_integral(probe, |node, w| Self::form_at(node, w, &rule)))
    }
}

/// `∫₀¹ f((1-t)A + tB) dt` as a matrix.
pub fn integrate_operator_segment<T: Real>(
    f: &ScalarFunction<T>,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    spec: QuadratureSpec,
) -> Result<IntegralResult<HermitianMatrix<T>, T>> {
    SegmentTable::new(a, b, spec)?.operator_integral(f)
}

/// `∫₀¹ ⟨f(tA + (1-t)B)x, x⟩ dt` — the segment runs from `B` at `t = 0` to
/// `A` at `t = 1`.
pub fn integrate_scalar_form<T: Real>(
    f: &ScalarFunction<T>,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    x: &UnitVector<T>,
    spec: QuadratureSpec,
) -> Result<IntegralResult<T, T>> {
    let table = SegmentTable::new(b, a, spec)?;
    let probe = table.probe(x)?;
    table.scalar_form_integral(f, &probe)
}

/// `∫₀¹ ⟨f(tA+(1-t)B)x, x⟩·⟨g(tA+(1-t)B)x, x⟩ dt`.
pub fn integrate_scalar_product_form<T: Real>(
    f: &ScalarFunction<T>,
    g: &ScalarFunction<T>,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    x: &UnitVector<T>,
    spec: QuadratureSpec,
) -> Result<IntegralResult<T, T>> {
    let table = SegmentTable::new(b, a, spec)?;
    let probe = table.probe(x)?;
    table.product_form_integral(f, g, &probe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::resolve_function;
    use crate::interval::Interval;
    use approx::assert_abs_diff_eq;

    type M = HermitianMatrix<f64>;

    fn wide() -> Interval<f64> {
        Interval::of(-10.0, 10.0)
    }

    #[test]
    fn gauss_nodes_integrate_polynomials_exactly() {
        // k nodes are exact through degree 2k-1
        for k in 2..=16usize {
            let (xs, ws) = gauss_legendre_nodes::<f64>(k);
            assert_eq!(xs.len(), k);
            assert_abs_diff_eq!(ws.iter().sum::<f64>(), 2.0, epsilon = 1e-13);
            for deg in 0..(2 * k) {
                let num: f64 = xs
                    .iter()
                    .zip(&ws)
                    .map(|(&x, &w)| w * x.powi(deg as i32))
                    .sum();
                let exact = if deg % 2 == 1 {
                    0.0
                } else {
                    2.0 / (deg as f64 + 1.0)
                };
                assert_abs_diff_eq!(num, exact, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn composite_nodes_cover_unit_interval() {
        let ts: Vec<f64> = composite_nodes::<f64>(8, 8)
            .into_iter()
            .map(|(t, _)| t)
            .collect();
        assert_eq!(ts.len(), 64);
        assert!(ts.windows(2).all(|w| w[0] < w[1]));
        assert!(ts[0] > 0.0 && ts[63] < 1.0);
        let a = M::from_diagonal(&[0.0]);
        let b = M::from_diagonal(&[1.0]);
        // weights integrate 1 exactly
        let one = resolve_function::<f64>("one", wide()).unwrap();
        let x = UnitVector::basis(1, 0);
        let r = integrate_scalar_form(&one, &a, &b, &x, QuadratureSpec::default()).unwrap();
        assert_abs_diff_eq!(r.value, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn affine_operator_integral_closed_form() {
        // ∫ ((1-t)A + tB) dt = (A+B)/2, exactly for any rule
        let f = resolve_function::<f64>("affine:2:0.5", wide()).unwrap();
        let a = M::from_real_rows(2, &[1.0, 0.25, 0.25, -1.0]).unwrap();
        let b = M::from_real_rows(2, &[0.0, -0.5, -0.5, 2.0]).unwrap();
        let r = integrate_operator_segment(&f, &a, &b, QuadratureSpec::default()).unwrap();
        let expected = a
            .add(&b)
            .unwrap()
            .scale(0.5)
            .scale(2.0)
            .add(&M::identity(2).scale(0.5))
            .unwrap();
        assert!(r.value.sub(&expected).unwrap().max_norm() < 1e-12);
        assert!(r.error_estimate < 1e-12);
    }

    #[test]
    fn square_scalar_segment_dim_one() {
        let f = resolve_function::<f64>("square", wide()).unwrap();
        let a = M::from_diagonal(&[0.0]);
        let b = M::from_diagonal(&[1.0]);
        let r = integrate_operator_segment(&f, &a, &b, QuadratureSpec::default()).unwrap();
        assert_abs_diff_eq!(r.value.entry(0, 0).re, 1.0 / 3.0, epsilon = 1e-13);
    }

    #[test]
    fn square_operator_integral_matches_expansion() {
        // ∫ ((1-t)A+tB)² dt = (A² + (AB+BA)/2 + B²)/3
        let f = resolve_function::<f64>("square", wide()).unwrap();
        let a = M::from_real_rows(2, &[1.0, 0.5, 0.5, -0.5]).unwrap();
        let b = M::from_real_rows(2, &[0.25, -1.0, -1.0, 2.0]).unwrap();
        let r = integrate_operator_segment(&f, &a, &b, QuadratureSpec::default()).unwrap();
        let expected = a
            .sym_product(&a)
            .unwrap()
            .add(&a.sym_product(&b).unwrap())
            .unwrap()
            .add(&b.sym_product(&b).unwrap())
            .unwrap()
            .scale(1.0 / 3.0);
        let scale = expected.frobenius_norm().max(1.0);
        assert!(r.value.sub(&expected).unwrap().max_norm() <= 1e-10 * scale);
    }

    #[test]
    fn scalar_form_orientation_runs_from_b_to_a() {
        // f = identity, A = 0, B = 1: ∫ ⟨(tA+(1-t)B)x,x⟩ dt = ∫ (1-t) dt = 1/2
        let f = resolve_function::<f64>("identity", wide()).unwrap();
        let a = M::from_diagonal(&[0.0]);
        let b = M::from_diagonal(&[1.0]);
        let x = UnitVector::basis(1, 0);
        let r = integrate_scalar_form(&f, &a, &b, &x, QuadratureSpec::default()).unwrap();
        assert_abs_diff_eq!(r.value, 0.5, epsilon = 1e-14);
    }

    #[test]
    fn product_form_scalar_oracle_dim_one() {
        let id = resolve_function::<f64>("identity", wide()).unwrap();
        let sq = resolve_function::<f64>("square", wide()).unwrap();
        let a = M::from_diagonal(&[0.0]);
        let b = M::from_diagonal(&[1.0]);
        let x = UnitVector::basis(1, 0);
        // ∫ (1-t)·(1-t)² dt = 1/4
        let r =
            integrate_scalar_product_form(&id, &sq, &a, &b, &x, QuadratureSpec::default()).unwrap();
        assert_abs_diff_eq!(r.value, 0.25, epsilon = 1e-13);
        // ∫ (1-t)² dt = 1/3
        let r =
            integrate_scalar_product_form(&id, &id, &a, &b, &x, QuadratureSpec::default()).unwrap();
        assert_abs_diff_eq!(r.value, 1.0 / 3.0, epsilon = 1e-13);
        let one = resolve_function::<f64>("one", wide()).unwrap();
        let r = integrate_scalar_product_form(&one, &one, &a, &b, &x, QuadratureSpec::default())
            .unwrap();
        assert_abs_diff_eq!(r.value, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn two_point_rule_exact_for_affine_products() {
        let f = resolve_function::<f64>("affine:1:1", wide()).unwrap();
        let a = M::from_diagonal(&[0.0, 1.0]);
        let b = M::from_diagonal(&[1.0, -1.0]);
        let x = UnitVector::from_real(&[0.8, 0.6]).unwrap();
        let spec = QuadratureSpec::new(1, 2).unwrap();
        let r = integrate_scalar_form(&f, &a, &b, &x, spec).unwrap();
        assert!(r.error_estimate <= 1e-14);
    }

    #[test]
    fn error_estimate_decreases_under_refinement() {
        let inv = resolve_function::<f64>("inverse", Interval::of(0.5, 2.0)).unwrap();
        let a = M::from_real_rows(2, &[1.0, 0.3, 0.3, 1.5]).unwrap();
        let b = M::from_real_rows(2, &[0.7, -0.1, -0.1, 1.9]).unwrap();
        let x = UnitVector::from_real(&[0.6, 0.8]).unwrap();
        let mut last = f64::INFINITY;
        for panels in [1usize, 2, 4, 8] {
            let spec = QuadratureSpec::new(panels, 4).unwrap();
            let r = integrate_scalar_form(&inv, &a, &b, &x, spec).unwrap();
            let floored = r.error_estimate.max(1e-14);
            assert!(
                floored <= last,
                "error did not decrease: {} -> {}",
                last,
                r.error_estimate
            );
            last = floored;
        }
    }

    #[test]
    fn operator_segment_symmetric_in_endpoints() {
        let sq = resolve_function::<f64>("square", wide()).unwrap();
        let a = M::from_real_rows(2, &[1.0, 0.5, 0.5, -0.5]).unwrap();
        let b = M::from_real_rows(2, &[0.25, -1.0, -1.0, 2.0]).unwrap();
        let ab = integrate_operator_segment(&sq, &a, &b, QuadratureSpec::default()).unwrap();
        let ba = integrate_operator_segment(&sq, &b, &a, QuadratureSpec::default()).unwrap();
        assert!(ab.value.sub(&ba.value).unwrap().max_norm() < 1e-12);
    }

    #[test]
    fn spec_validation() {
        assert!(QuadratureSpec::new(0, 8).is_err());
        assert!(QuadratureSpec::new(1, 1).is_err());
        assert!(QuadratureSpec::new(1, 17).is_err());
        assert!(QuadratureSpec::new(100_000, 16).is_err());
        assert!(QuadratureSpec::new(8, 8).is_ok());
    }
}
