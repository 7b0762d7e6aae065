//! One checker per inequality: each computes its left- and right-hand sides
//! exactly as displayed, compares with the relative-plus-absolute tolerance
//! (augmented by quadrature error estimates where integrals appear), and
//! emits margin reports. A violation is data, not a crash.
//!
//! Section-2/3 checkers orient the segment as `tA + (1-t)B` (from `B` at
//! `t = 0` to `A` at `t = 1`); the refinement chain uses `(1-t)A + tB`. Both
//! orientations are recorded in the reports.
//!
//! The expensive work — eigendecompositions of the endpoints, the midpoint
//! and every quadrature node — is pair-independent and lives in
//! [`SegmentData`]; probing it with a unit vector yields spectral weights
//! from which every checker is a handful of dot products.

use crate::calculus::{apply_function_decomposed, loewner_compare, segment_point, OrderVerdict};
use crate::eigen::{spectral_decompose, SpectralDecomposition};
use crate::error::{Error, Result};
use crate::functions::{ScalarFunction, SynchronyClass, SynchronyVerdict};
use crate::interval::Interval;
use crate::matrix::{inner, HermitianMatrix, UnitVector};
use crate::quadrature::{IntegralResult, ProbeWeights, QuadratureSpec, SegmentTable};
use crate::report::{CheckRecord, Subseeds, Verdict};
use crate::sampling::{derive_subseed, random_hermitian, random_unit_vector, StreamTag};
use crate::scalar::{tolerance_scale, Real};

pub const ORIENT_SEC2: &str = "tA+(1-t)B";
pub const ORIENT_CHAIN: &str = "(1-t)A+tB";

/// The endpoint functionals of a function pair at `(A, B, x)`:
/// same-endpoint products (`m`), cross-endpoint products (`n`), and the form
/// of the operator-product sum (`p`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalTriple<T> {
    pub m_value: T,
    pub n_value: T,
    pub p_value: T,
}

/// Relative-plus-absolute tolerance policy, `tol = abs + rel·scale`.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances<T> {
    pub abs: T,
    pub rel: T,
}

impl<T: Real> Default for Tolerances<T> {
    fn default() -> Self {
        Self {
            abs: T::of(1e-9),
            rel: T::of(1e-9),
        }
    }
}

/// Checker-level outcome of one inequality instance.
#[derive(Debug, Clone)]
pub struct CheckOutcome<T> {
    pub id: String,
    pub orientation: &'static str,
    pub lhs: T,
    pub rhs: T,
    pub margin: T,
    pub tolerance: T,
    pub quad_error: T,
    pub verdict: Verdict,
}

impl<T: Real> CheckOutcome<T> {
    /// Lifts the outcome into a full report record.
    pub fn into_record(
        self,
        dim: usize,
        trial: usize,
        probe: usize,
        functions: Vec<String>,
        interval: Interval<T>,
        subseeds: Subseeds,
    ) -> CheckRecord {
        let f64_of = |v: T| v.to_f64().expect("finite report value");
        CheckRecord {
            id: self.id,
            dim,
            trial,
            probe,
            functions,
            interval: [f64_of(interval.lo), f64_of(interval.hi)],
            orientation: self.orientation.to_string(),
            lhs: f64_of(self.lhs),
            rhs: f64_of(self.rhs),
            margin: f64_of(self.margin),
            tolerance: f64_of(self.tolerance),
            quad_error: f64_of(self.quad_error),
            verdict: self.verdict,
            subseeds,
        }
    }
}

/// Pair-independent spectral data of one endpoint pair `(A, B)`: endpoint,
/// midpoint and quadrature-node decompositions. Built once per drawn pair and
/// shared by every function pair, probe vector and checker.
pub struct SegmentData<T> {
    a: HermitianMatrix<T>,
    b: HermitianMatrix<T>,
    da: SpectralDecomposition<T>,
    db: SpectralDecomposition<T>,
    dc: SpectralDecomposition<T>,
    /// Oriented `S(t) = tA + (1-t)B`.
    table: SegmentTable<T>,
}

impl<T: Real> SegmentData<T> {
    pub fn new(
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        quad: QuadratureSpec,
    ) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::DimMismatch {
                left: a.dim(),
                right: b.dim(),
            });
        }
        let midpoint = segment_point(a, b, T::half())?;
        Ok(Self {
            a: a.clone(),
            b: b.clone(),
            da: spectral_decompose(a)?,
            db: spectral_decompose(b)?,
            dc: spectral_decompose(&midpoint)?,
            table: SegmentTable::new(b, a, quad)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn endpoint_a(&self) -> &HermitianMatrix<T> {
        &self.a
    }

    pub fn endpoint_b(&self) -> &HermitianMatrix<T> {
        &self.b
    }

    pub fn decomposition_a(&self) -> &SpectralDecomposition<T> {
        &self.da
    }

    /// Spectral weights of `x` at the endpoints, midpoint and every
    /// quadrature node.
    pub fn probe(&self, x: &UnitVector<T>) -> Result<SegmentProbe<T>> {
        if x.dim() != self.dim() {
            return Err(Error::DimMismatch {
                left: self.dim(),
                right: x.dim(),
            });
        }
        Ok(SegmentProbe {
            wa: self.da.probe_weights(x.entries()),
            wb: self.db.probe_weights(x.entries()),
            wc: self.dc.probe_weights(x.entries()),
            quad: self.table.probe(x)?,
        })
    }
}

/// Spectral weights of one probe vector against a [`SegmentData`].
pub struct SegmentProbe<T> {
    wa: Vec<T>,
    wb: Vec<T>,
    wc: Vec<T>,
    quad: ProbeWeights<T>,
}

impl<T> SegmentProbe<T> {
    /// Weights against the spectrum of the first endpoint.
    pub fn endpoint_a_weights(&self) -> &[T] {
        &self.wa
    }
}

/// Per-(pair, probe) scalar data every checker reads from.
pub struct ProbeValues<T> {
    pub f_ax: T,
    pub g_ax: T,
    pub f_bx: T,
    pub g_bx: T,
    pub f_cx: T,
    pub g_cx: T,
    /// `⟨f(C)g(C)x, x⟩` at the midpoint `C = (A+B)/2`.
    pub fg_cx: T,
    pub mnp: FunctionalTriple<T>,
    /// `∫ ⟨f(S)x,x⟩⟨g(S)x,x⟩ dt` with its error estimate.
    pub int_uv: IntegralResult<T, T>,
    pub int_u: IntegralResult<T, T>,
    pub int_v: IntegralResult<T, T>,
    /// `∫ ⟨(f·g)(S)x, x⟩ dt`.
    pub int_fg: IntegralResult<T, T>,
}

fn clamped_eval<T: Real>(f: &ScalarFunction<T>, l: T) -> T {
    f.eval(f.domain.clamp(l))
}

fn spectral_form<T: Real>(f: &ScalarFunction<T>, d: &SpectralDecomposition<T>, w: &[T]) -> T {
    d.eigenvalues()
        .iter()
        .zip(w)
        .map(|(&l, &wi)| clamped_eval(f, l) * wi)
        .sum()
}

fn spectral_product_form<T: Real>(
    f: &ScalarFunction<T>,
    g: &ScalarFunction<T>,
    d: &SpectralDecomposition<T>,
    w: &[T],
) -> T {
    d.eigenvalues()
        .iter()
        .zip(w)
        .map(|(&l, &wi)| clamped_eval(f, l) * clamped_eval(g, l) * wi)
        .sum()
}

/// Evaluates all forms and segment integrals of a function pair at one probe.
pub fn probe_values<T: Real>(
    f: &ScalarFunction<T>,
    g: &ScalarFunction<T>,
    seg: &SegmentData<T>,
    sp: &SegmentProbe<T>,
) -> Result<ProbeValues<T>> {
    let f_ax = spectral_form(f, &seg.da, &sp.wa);
    let g_ax = spectral_form(g, &seg.da, &sp.wa);
    let f_bx = spectral_form(f, &seg.db, &sp.wb);
    let g_bx = spectral_form(g, &seg.db, &sp.wb);
    let f_cx = spectral_form(f, &seg.dc, &sp.wc);
    let g_cx = spectral_form(g, &seg.dc, &sp.wc);
    let fg_cx = spectral_product_form(f, g, &seg.dc, &sp.wc);
    let mnp = FunctionalTriple {
        m_value: f_ax * g_ax + f_bx * g_bx,
        n_value: f_ax * g_bx + f_bx * g_ax,
        p_value: spectral_product_form(f, g, &seg.da, &sp.wa)
            + spectral_product_form(f, g, &seg.db, &sp.wb),
    };
    Ok(ProbeValues {
        f_ax,
        g_ax,
        f_bx,
        g_bx,
        f_cx,
        g_cx,
        fg_cx,
        mnp,
        int_uv: seg.table.product_form_integral(f, g, &sp.quad)?,
        int_u: seg.table.scalar_form_integral(f, &sp.quad)?,
        int_v: seg.table.scalar_form_integral(g, &sp.quad)?,
        int_fg: seg.table.operator_product_form_integral(f, g, &sp.quad)?,
    })
}

/// The M/N/P functionals from first principles.
pub fn compute_mnp<T: Real>(
    f: &ScalarFunction<T>,
    g: &ScalarFunction<T>,
    a: &HermitianMatrix<T>,
    b: &HermitianMatrix<T>,
    x: &UnitVector<T>,
) -> Result<FunctionalTriple<T>> {
    let quad = QuadratureSpec {
        panels: 1,
        nodes_per_panel: 2,
    };
    let seg = SegmentData::new(a, b, quad)?;
    let sp = seg.probe(x)?;
    Ok(probe_values(f, g, &seg, &sp)?.mnp)
}

/// Report of the four operator-order links of the refinement chain
/// `f((A+B)/2) ≤ ½[f((3A+B)/4)+f((A+3B)/4)] ≤ ∫ f((1-t)A+tB) dt
///  ≤ ½[f((A+B)/2) + (f(A)+f(B))/2] ≤ (f(A)+f(B))/2`.
#[derive(Debug, Clone)]
pub struct ChainReport<T> {
    pub inequality_id: &'static str,
    pub links: Vec<OrderVerdict<T>>,
    /// `min-eig` slack of each link difference, in chain order.
    pub link_gaps: Vec<T>,
    /// The five operator stage values, in chain order.
    pub stages: Vec<HermitianMatrix<T>>,
    pub quad_error: T,
}

impl<T: Real> ChainReport<T> {
    pub fn passes(&self) -> bool {
        self.links.iter().all(|l| l.holds_leq())
    }

    /// Scalar stage values for dimension-1 instances.
    pub fn stage_scalars(&self) -> Option<Vec<T>> {
        if self.stages.iter().all(|s| s.dim() == 1) {
            Some(self.stages.iter().map(|s| s.entry(0, 0).re).collect())
        } else {
            None
        }
    }
}

/// Inequality checkers parameterized by tolerance policy and quadrature rule.
#[derive(Debug, Clone)]
pub struct Checker<T> {
    pub tols: Tolerances<T>,
    pub quad: QuadratureSpec,
}

impl<T: Real> Default for Checker<T> {
    fn default() -> Self {
        Self {
            tols: Tolerances::default(),
            quad: QuadratureSpec::default(),
        }
    }
}

impl<T: Real> Checker<T> {
    pub fn outcome(
        &self,
        id: impl Into<String>,
        orientation: &'static str,
        lhs: T,
        rhs: T,
        quad_error: T,
    ) -> CheckOutcome<T> {
        let margin = rhs - lhs;
        let scale = tolerance_scale(&[lhs.abs(), rhs.abs()]);
        let tolerance = self.tols.abs + self.tols.rel * scale + quad_error;
        let verdict = if margin >= -tolerance {
            Verdict::Pass
        } else {
            Verdict::Violation
        };
        CheckOutcome {
            id: id.into(),
            orientation,
            lhs,
            rhs,
            margin,
            tolerance,
            quad_error,
            verdict,
        }
    }

    fn require_operator_convex(&self, fns: &[&ScalarFunction<T>]) -> Result<()> {
        for f in fns {
            if !f.is_operator_convex_tagged() {
                return Err(Error::ConfigInvalid(format!(
                    "function {} is not tagged operator convex",
                    f.id
                )));
            }
        }
        Ok(())
    }

    fn require_nonnegative(&self, fns: &[&ScalarFunction<T>]) -> Result<()> {
        for f in fns {
            if !f.nonnegative_on_domain {
                return Err(Error::ConfigInvalid(format!(
                    "function {} is not nonnegative on its domain",
                    f.id
                )));
            }
        }
        Ok(())
    }

    pub fn segment(
        &self,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
    ) -> Result<SegmentData<T>> {
        SegmentData::new(a, b, self.quad)
    }

    /// Midpoint convexity of `φ(t) = ⟨f((1-t)A+tB)x, x⟩` on a uniform grid:
    /// every adjacent triple must satisfy `φ(mid) ≤ (φ(lo)+φ(hi))/2 + tol`.
    /// The reported margin is the minimum slack.
    pub fn check_phi_convexity(
        &self,
        f: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        x: &UnitVector<T>,
        grid_points: usize,
    ) -> Result<CheckOutcome<T>> {
        self.require_operator_convex(&[f])?;
        if grid_points < 3 {
            return Err(Error::ParameterOutOfRange {
                name: "grid_points",
                value: grid_points as f64,
            });
        }
        let unit = Interval::new(T::zero(), T::one())?;
        let grid = unit.grid(grid_points);
        let mut phi = Vec::with_capacity(grid.len());
        for &t in &grid {
            let point = segment_point(a, b, t)?;
            let d = spectral_decompose(&point)?;
            let w = d.probe_weights(x.entries());
            phi.push(spectral_form(f, &d, &w));
        }
        let mut worst: Option<(T, T, T)> = None; // (slack, lhs, rhs)
        for i in 0..grid.len().saturating_sub(2) {
            let lhs = phi[i + 1];
            let rhs = (phi[i] + phi[i + 2]) * T::half();
            let slack = rhs - lhs;
            if worst.map_or(true, |(s, _, _)| slack < s) {
                worst = Some((slack, lhs, rhs));
            }
        }
        let (_, lhs, rhs) = worst.expect("at least one triple");
        Ok(self.outcome("lemma-2.1", ORIENT_CHAIN, lhs, rhs, T::zero()))
    }

    /// The four-link refinement chain in the operator order.
    pub fn check_hh_chain(
        &self,
        f: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
    ) -> Result<ChainReport<T>> {
        self.require_operator_convex(&[f])?;
        let apply = |m: &HermitianMatrix<T>| -> Result<HermitianMatrix<T>> {
            apply_function_decomposed(f, &spectral_decompose(m)?)
        };
        let midpoint = segment_point(a, b, T::half())?;
        let quarter = segment_point(a, b, T::of(0.25))?;
        let three_quarter = segment_point(a, b, T::of(0.75))?;

        let f_mid = apply(&midpoint)?;
        let f_quarters = apply(&quarter)?
            .add(&apply(&three_quarter)?)?
            .scale(T::half());
        let integral = SegmentTable::new(a, b, self.quad)?.operator_integral(f)?;
        let f_ends = apply(a)?.add(&apply(b)?)?.scale(T::half());
        let f_upper = f_mid.add(&f_ends)?.scale(T::half());

        let stages = vec![f_mid, f_quarters, integral.value, f_upper, f_ends];
        let base_tol = self.tols.abs + self.tols.rel;
        let mut links = Vec::with_capacity(4);
        let mut link_gaps = Vec::with_capacity(4);
        for i in 0..4 {
            // links touching the integral carry its error estimate
            let link_tol = if i == 1 || i == 2 {
                base_tol + integral.error_estimate
            } else {
                base_tol
            };
            let verdict = loewner_compare(&stages[i], &stages[i + 1], link_tol)?;
            link_gaps.push(verdict.witness_min_eig);
            links.push(verdict);
        }
        Ok(ChainReport {
            inequality_id: "thm1-chain",
            links,
            link_gaps,
            stages,
            quad_error: integral.error_estimate,
        })
    }

    /// Product-of-forms upper bound `∫ u·v ≤ M/3 + N/6`, for nonnegative
    /// operator convex pairs.
    pub fn check_product_upper(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        x: &UnitVector<T>,
    ) -> Result<CheckOutcome<T>> {
        self.require_operator_convex(&[f, g])?;
        self.require_nonnegative(&[f, g])?;
        let seg = self.segment(a, b)?;
        let pv = probe_values(f, g, &seg, &seg.probe(x)?)?;
        Ok(self.product_upper_outcome(&pv))
    }

    pub fn product_upper_outcome(&self, pv: &ProbeValues<T>) -> CheckOutcome<T> {
        let third = T::one() / T::of(3.0);
        let sixth = T::one() / T::of(6.0);
        let rhs = third * pv.mnp.m_value + sixth * pv.mnp.n_value;
        self.outcome(
            "thm3-2.2",
            ORIENT_SEC2,
            pv.int_uv.value,
            rhs,
            pv.int_uv.error_estimate,
        )
    }

    /// Midpoint product bound `u(½)·v(½) ≤ ½∫u·v + M/12 + N/6`.
    pub fn check_midpoint_product(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        x: &UnitVector<T>,
    ) -> Result<CheckOutcome<T>> {
        self.require_operator_convex(&[f, g])?;
        let seg = self.segment(a, b)?;
        let pv = probe_values(f, g, &seg, &seg.probe(x)?)?;
        Ok(self.midpoint_product_outcome(&pv))
    }

    pub fn midpoint_product_outcome(&self, pv: &ProbeValues<T>) -> CheckOutcome<T> {
        let twelfth = T::one() / T::of(12.0);
        let sixth = T::one() / T::of(6.0);
        let lhs = pv.f_cx * pv.g_cx;
        let rhs = T::half() * pv.int_uv.value + twelfth * pv.mnp.m_value + sixth * pv.mnp.n_value;
        self.outcome(
            "thm4-2.7",
            ORIENT_SEC2,
            lhs,
            rhs,
            T::half() * pv.int_uv.error_estimate,
        )
    }

    /// Cross bound `u(½)∫v + v(½)∫u ≤ ½∫u·v + M/12 + N/6 + u(½)v(½)`.
    pub fn check_cross_product(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        x: &UnitVector<T>,
    ) -> Result<CheckOutcome<T>> {
        self.require_operator_convex(&[f, g])?;
        let seg = self.segment(a, b)?;
        let pv = probe_values(f, g, &seg, &seg.probe(x)?)?;
        Ok(self.cross_product_outcome(&pv))
    }

    pub fn cross_product_outcome(&self, pv: &ProbeValues<T>) -> CheckOutcome<T> {
        let twelfth = T::one() / T::of(12.0);
        let sixth = T::one() / T::of(6.0);
        let lhs = pv.f_cx * pv.int_v.value + pv.g_cx * pv.int_u.value;
        let rhs = T::half() * pv.int_uv.value
            + twelfth * pv.mnp.m_value
            + sixth * pv.mnp.n_value
            + pv.f_cx * pv.g_cx;
        let quad_error = pv.f_cx.abs() * pv.int_v.error_estimate
            + pv.g_cx.abs() * pv.int_u.error_estimate
            + T::half() * pv.int_uv.error_estimate;
        self.outcome("thm5-2.9", ORIENT_SEC2, lhs, rhs, quad_error)
    }

    /// Correlation inequality for a single operator: synchronous pairs give
    /// `⟨f(A)g(A)x,x⟩ ≥ ⟨f(A)x,x⟩⟨g(A)x,x⟩`, asynchronous pairs the reverse.
    pub fn check_cebysev(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        x: &UnitVector<T>,
        synchrony: &SynchronyVerdict<T>,
    ) -> Result<CheckOutcome<T>> {
        let d = spectral_decompose(a)?;
        let w = d.probe_weights(x.entries());
        self.cebysev_outcome(f, g, &d, &w, synchrony)
    }

    /// Variant taking a precomputed decomposition and probe weights.
    pub fn cebysev_outcome(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        d: &SpectralDecomposition<T>,
        w: &[T],
        synchrony: &SynchronyVerdict<T>,
    ) -> Result<CheckOutcome<T>> {
        let f_ax = spectral_form(f, d, w);
        let g_ax = spectral_form(g, d, w);
        let fg_ax = spectral_product_form(f, g, d, w);
        let (lhs, rhs) = match synchrony.class {
            SynchronyClass::Synchronous => (f_ax * g_ax, fg_ax),
            SynchronyClass::Asynchronous => (fg_ax, f_ax * g_ax),
            SynchronyClass::Neither => {
                return Err(Error::ConfigInvalid(
                    "pair is neither synchronous nor asynchronous".to_string(),
                ))
            }
        };
        Ok(self.outcome("thm6-3.1", ORIENT_SEC2, lhs, rhs, T::zero()))
    }

    /// The two endpoint-functional chain links, oriented by synchrony:
    /// synchronous `N ≤ M ≤ P`, asynchronous `N ≥ M ≥ P`.
    pub fn check_mnp_chain(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        x: &UnitVector<T>,
        synchrony: &SynchronyVerdict<T>,
    ) -> Result<(CheckOutcome<T>, CheckOutcome<T>)> {
        let seg = self.segment(a, b)?;
        let pv = probe_values(f, g, &seg, &seg.probe(x)?)?;
        self.mnp_chain_outcomes(&pv, synchrony)
    }

    pub fn mnp_chain_outcomes(
        &self,
        pv: &ProbeValues<T>,
        synchrony: &SynchronyVerdict<T>,
    ) -> Result<(CheckOutcome<T>, CheckOutcome<T>)> {
        let FunctionalTriple {
            m_value: m,
            n_value: n,
            p_value: p,
        } = pv.mnp;
        match synchrony.class {
            SynchronyClass::Synchronous => Ok((
                self.outcome("chain-3.2-nm", ORIENT_SEC2, n, m, T::zero()),
                self.outcome("chain-3.2-mp", ORIENT_SEC2, m, p, T::zero()),
            )),
            SynchronyClass::Asynchronous => Ok((
                self.outcome("chain-3.3-nm", ORIENT_SEC2, m, n, T::zero()),
                self.outcome("chain-3.3-mp", ORIENT_SEC2, p, m, T::zero()),
            )),
            SynchronyClass::Neither => Err(Error::ConfigInvalid(
                "pair is neither synchronous nor asynchronous".to_string(),
            )),
        }
    }

    /// The synchrony-specialized bounds. Each display that replaces a product
    /// of forms by the form of an operator product is also recorded in its
    /// product-of-forms variant under a `-forms` suffix.
    pub fn check_remark_bounds(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        a: &HermitianMatrix<T>,
        b: &HermitianMatrix<T>,
        x: &UnitVector<T>,
        synchrony: &SynchronyVerdict<T>,
    ) -> Result<Vec<CheckOutcome<T>>> {
        self.require_operator_convex(&[f, g])?;
        let seg = self.segment(a, b)?;
        let pv = probe_values(f, g, &seg, &seg.probe(x)?)?;
        self.remark_outcomes(f, g, &seg, &pv, x, synchrony)
    }

    pub fn remark_outcomes(
        &self,
        f: &ScalarFunction<T>,
        g: &ScalarFunction<T>,
        seg: &SegmentData<T>,
        pv: &ProbeValues<T>,
        x: &UnitVector<T>,
        synchrony: &SynchronyVerdict<T>,
    ) -> Result<Vec<CheckOutcome<T>>> {
        let quarter = T::of(0.25);
        let half = T::half();
        let nonneg = f.nonnegative_on_domain && g.nonnegative_on_domain;
        let FunctionalTriple {
            m_value: _,
            n_value: n,
            p_value: p,
        } = pv.mnp;
        let mut out = Vec::new();
        match synchrony.class {
            SynchronyClass::Synchronous => {
                if nonneg {
                    // extended right-hand side P/2
                    out.push(self.outcome(
                        "rem-3.4",
                        ORIENT_SEC2,
                        pv.int_uv.value,
                        half * p,
                        pv.int_uv.error_estimate,
                    ));
                }
                out.push(self.outcome(
                    "rem-3.5",
                    ORIENT_SEC2,
                    pv.f_cx * pv.g_cx,
                    half * pv.int_fg.value + quarter * p,
                    half * pv.int_fg.error_estimate,
                ));
                out.push(self.outcome(
                    "rem-3.5-forms",
                    ORIENT_SEC2,
                    pv.f_cx * pv.g_cx,
                    half * pv.int_uv.value + quarter * p,
                    half * pv.int_uv.error_estimate,
                ));
                let lhs_cross = pv.f_cx * pv.int_v.value + pv.g_cx * pv.int_u.value;
                let cross_err = pv.f_cx.abs() * pv.int_v.error_estimate
                    + pv.g_cx.abs() * pv.int_u.error_estimate;
                out.push(self.outcome(
                    "rem-3.6",
                    ORIENT_SEC2,
                    lhs_cross,
                    half * pv.int_fg.value + quarter * p + pv.fg_cx,
                    half * pv.int_fg.error_estimate + cross_err,
                ));
                out.push(self.outcome(
                    "rem-3.6-forms",
                    ORIENT_SEC2,
                    lhs_cross,
                    half * pv.int_uv.value + quarter * p + pv.f_cx * pv.g_cx,
                    half * pv.int_uv.error_estimate + cross_err,
                ));
            }
            SynchronyClass::Asynchronous => {
                if nonneg {
                    // extended right-hand side N/2
                    out.push(self.outcome(
                        "rem-3.7",
                        ORIENT_SEC2,
                        pv.int_fg.value,
                        half * n,
                        pv.int_fg.error_estimate,
                    ));
                    out.push(self.outcome(
                        "rem-3.7-forms",
                        ORIENT_SEC2,
                        pv.int_uv.value,
                        half * n,
                        pv.int_uv.error_estimate,
                    ));
                }
                out.push(self.outcome(
                    "rem-3.8",
                    ORIENT_SEC2,
                    pv.fg_cx,
                    half * pv.int_uv.value + quarter * n,
                    half * pv.int_uv.error_estimate,
                ));
                out.push(self.outcome(
                    "rem-3.8-forms",
                    ORIENT_SEC2,
                    pv.f_cx * pv.g_cx,
                    half * pv.int_uv.value + quarter * n,
                    half * pv.int_uv.error_estimate,
                ));
                // displayed LHS pairs midpoint operators with operator-valued
                // segment integrals; the real part of the form is compared
                let int_f_op = seg.table.operator_integral(f)?;
                let int_g_op = seg.table.operator_integral(g)?;
                let f_c = apply_function_decomposed(f, &seg.dc)?;
                let g_c = apply_function_decomposed(g, &seg.dc)?;
                let lhs_display = {
                    let gi_x = int_g_op.value.matvec(x.entries());
                    let fi_x = int_f_op.value.matvec(x.entries());
                    let term1 = inner(x.entries(), &f_c.matvec(&gi_x));
                    let term2 = inner(x.entries(), &g_c.matvec(&fi_x));
                    (term1 + term2).re
                };
                let rhs_cross = half * pv.int_uv.value + quarter * n + pv.f_cx * pv.g_cx;
                out.push(self.outcome(
                    "rem-3.9",
                    ORIENT_SEC2,
                    lhs_display,
                    rhs_cross,
                    half * pv.int_uv.error_estimate
                        + int_f_op.error_estimate
                        + int_g_op.error_estimate,
                ));
                let lhs_forms = pv.f_cx * pv.int_v.value + pv.g_cx * pv.int_u.value;
                out.push(self.outcome(
                    "rem-3.9-forms",
                    ORIENT_SEC2,
                    lhs_forms,
                    rhs_cross,
                    half * pv.int_uv.error_estimate
                        + pv.f_cx.abs() * pv.int_v.error_estimate
                        + pv.g_cx.abs() * pv.int_u.error_estimate,
                ));
            }
            SynchronyClass::Neither => {
                return Err(Error::ConfigInvalid(
                    "pair is neither synchronous nor asynchronous".to_string(),
                ))
            }
        }
        Ok(out)
    }
}

/// Runs the worked example: `f = identity`, `g = square` — the
/// product-of-forms bound against `P/2` on spectra in `[0, 1]`, and the
/// midpoint operator-product bound against `½∫u·v + N/4` on spectra in
/// `[-1, 0]`. One probe vector per trial.
pub fn run_paper_example<T: Real>(
    dim: usize,
    trials: usize,
    seed: u64,
) -> Result<Vec<CheckRecord>> {
    if dim == 0 || trials == 0 {
        return Err(Error::ConfigInvalid(
            "example needs dim >= 1 and trials >= 1".to_string(),
        ));
    }
    let checker = Checker::<T>::default();
    let mut records = Vec::with_capacity(trials * 2);
    for (case, interval) in [
        ("example-3-sync", Interval::<T>::of(0.0, 1.0)),
        ("example-3-async", Interval::<T>::of(-1.0, 0.0)),
    ] {
        let f = crate::functions::resolve_function::<T>("identity", interval)?;
        let g = crate::functions::resolve_function::<T>("square", interval)?;
        for trial in 0..trials {
            let seed_a = derive_subseed(seed, trial as u64, StreamTag::MatrixA);
            let seed_b = derive_subseed(seed, trial as u64, StreamTag::MatrixB);
            let seed_x = derive_subseed(seed, trial as u64, StreamTag::Probe(0));
            let a = random_hermitian::<T>(dim, interval, seed_a)?;
            let b = random_hermitian::<T>(dim, interval, seed_b)?;
            let x = random_unit_vector::<T>(dim, seed_x)?;
            let seg = checker.segment(&a, &b)?;
            let pv = probe_values(&f, &g, &seg, &seg.probe(&x)?)?;
            let outcome = if case == "example-3-sync" {
                checker.outcome(
                    case,
                    ORIENT_SEC2,
                    pv.int_uv.value,
                    T::half() * pv.mnp.p_value,
                    pv.int_uv.error_estimate,
                )
            } else {
                checker.outcome(
                    case,
                    ORIENT_SEC2,
                    pv.fg_cx,
                    T::half() * pv.int_uv.value + T::of(0.25) * pv.mnp.n_value,
                    T::half() * pv.int_uv.error_estimate,
                )
            };
            records.push(outcome.into_record(
                dim,
                trial,
                0,
                vec![f.id.clone(), g.id.clone()],
                interval,
                Subseeds {
                    a: Some(seed_a),
                    b: Some(seed_b),
                    x: Some(seed_x),
                },
            ));
        }
    }
    Ok(records)
}
