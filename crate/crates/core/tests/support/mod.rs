//! Independent dimension-1 oracle: every checker's sides recomputed with
//! plain scalar arithmetic and a dense trapezoid rule, with no shared code
//! path into the library's quadrature or spectral machinery.

// shared by several test targets; not every target uses every item
#![allow(dead_code)]

pub const TRAPEZOID_POINTS: usize = 100_000;

/// Dense trapezoid rule over `[0, 1]`.
pub fn trapezoid(h: impl Fn(f64) -> f64) -> f64 {
    let n = TRAPEZOID_POINTS;
    let step = 1.0 / n as f64;
    let mut acc = 0.5 * (h(0.0) + h(1.0));
    for i in 1..n {
        acc += h(i as f64 * step);
    }
    acc * step
}

/// Scalar endpoint data for the oracle; `s(t) = t·a + (1-t)·b`.
#[derive(Debug, Clone, Copy)]
pub struct ScalarPair {
    pub a: f64,
    pub b: f64,
}

impl ScalarPair {
    fn seg(&self, t: f64) -> f64 {
        t * self.a + (1.0 - t) * self.b
    }

    fn mid(&self) -> f64 {
        0.5 * (self.a + self.b)
    }
}

type F<'f> = &'f dyn Fn(f64) -> f64;

fn mnp(f: F, g: F, p: ScalarPair) -> (f64, f64, f64) {
    let (fa, fb, ga, gb) = (f(p.a), f(p.b), g(p.a), g(p.b));
    (
        fa * ga + fb * gb,
        fa * gb + fb * ga,
        fa * ga + fb * gb, // dim-1 operator product form collapses onto M
    )
}

/// `(lhs, rhs)` of one checker id at a scalar instance.
pub fn oracle_sides(id: &str, f: F, g: F, p: ScalarPair) -> (f64, f64) {
    let (m, n, pp) = mnp(f, g, p);
    let int_uv = trapezoid(|t| f(p.seg(t)) * g(p.seg(t)));
    let int_u = trapezoid(|t| f(p.seg(t)));
    let int_v = trapezoid(|t| g(p.seg(t)));
    let c = p.mid();
    match id {
        "thm3-2.2" => (int_uv, m / 3.0 + n / 6.0),
        "thm4-2.7" => (f(c) * g(c), 0.5 * int_uv + m / 12.0 + n / 6.0),
        "thm5-2.9" => (
            f(c) * int_v + g(c) * int_u,
            0.5 * int_uv + m / 12.0 + n / 6.0 + f(c) * g(c),
        ),
        // single-operator correlation at `a`: both sides coincide in dim 1
        "thm6-3.1-sync" => (f(p.a) * g(p.a), f(p.a) * g(p.a)),
        "thm6-3.1-async" => (f(p.a) * g(p.a), f(p.a) * g(p.a)),
        "chain-3.2-nm" => (n, m),
        "chain-3.2-mp" => (m, pp),
        "chain-3.3-nm" => (m, n),
        "chain-3.3-mp" => (pp, m),
        "rem-3.4" => (int_uv, 0.5 * pp),
        "rem-3.5" | "rem-3.5-forms" => (f(c) * g(c), 0.5 * int_uv + 0.25 * pp),
        "rem-3.6" | "rem-3.6-forms" => (
            f(c) * int_v + g(c) * int_u,
            0.5 * int_uv + 0.25 * pp + f(c) * g(c),
        ),
        "rem-3.7" | "rem-3.7-forms" => (int_uv, 0.5 * n),
        "rem-3.8" | "rem-3.8-forms" => (f(c) * g(c), 0.5 * int_uv + 0.25 * n),
        "rem-3.9" | "rem-3.9-forms" => (
            f(c) * int_v + g(c) * int_u,
            0.5 * int_uv + 0.25 * n + f(c) * g(c),
        ),
        other => panic!("oracle has no formula for {other}"),
    }
}

/// The five operator-chain stage values at a scalar instance, chain
/// orientation `(1-t)a + t·b`.
pub fn oracle_chain_stages(f: F, p: ScalarPair) -> [f64; 5] {
    let c = p.mid();
    let s2 = 0.5 * (f((3.0 * p.a + p.b) / 4.0) + f((p.a + 3.0 * p.b) / 4.0));
    let s3 = trapezoid(|t| f((1.0 - t) * p.a + t * p.b));
    let ends = 0.5 * (f(p.a) + f(p.b));
    [f(c), s2, s3, 0.5 * (f(c) + ends), ends]
}

/// Minimum midpoint-convexity slack of `φ(t) = f((1-t)a + tb)` on a uniform
/// grid, mirroring the `lemma-2.1` checker.
pub fn oracle_phi_min_slack(f: F, p: ScalarPair, grid_points: usize) -> f64 {
    let phi: Vec<f64> = (0..grid_points)
        .map(|i| {
            let t = i as f64 / (grid_points - 1) as f64;
            f((1.0 - t) * p.a + t * p.b)
        })
        .collect();
    let mut worst = f64::INFINITY;
    for i in 0..grid_points - 2 {
        worst = worst.min(0.5 * (phi[i] + phi[i + 2]) - phi[i + 1]);
    }
    worst
}

/// Draws a deterministic scalar in `[lo, hi]` through the library's own
/// dim-1 sampler, so oracle instances match checker instances bit for bit.
pub fn draw_scalar(lo: f64, hi: f64, sub_seed: u64) -> f64 {
    let interval = hhverify_core::Interval64::new(lo, hi).unwrap();
    hhverify_core::random_hermitian::<f64>(1, interval, sub_seed)
        .unwrap()
        .entry(0, 0)
        .re
}
