//! Suite orchestration: configuration, trial scheduling, report collection.
//!
//! The runner may parallelize across `(dim, trial)` tasks; all randomness is
//! confined to counter-based sub-seed derivation and records are sorted into
//! a canonical order afterwards, so serial and parallel runs produce
//! byte-identical reports.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functions::{
    certify_operator_convex, check_synchronous, resolve_function, ConvexityClass, ConvexityStatus,
    ConvexityVerdict, ScalarFunction, SynchronyClass, SynchronyVerdict, SYNCHRONY_GRID,
};
use crate::inequalities::{
    probe_values, run_paper_example, Checker, SegmentData, SegmentProbe, Tolerances, ORIENT_CHAIN,
    ORIENT_SEC2,
};
use crate::interval::Interval;
use crate::matrix::UnitVector;
use crate::quadrature::QuadratureSpec;
use crate::report::{CheckRecord, RunSummary, Subseeds, Verdict};
use crate::sampling::{derive_subseed, random_hermitian, random_unit_vector, StreamTag};

/// Environment variable capping worker count (`0` = automatic).
pub const THREADS_ENV: &str = "HHVERIFY_THREADS";

/// Grid resolution of the `lemma-2.1` midpoint-convexity suite.
pub const PHI_GRID_POINTS: usize = 101;

/// All suite identifiers, in canonical report order.
pub const ALL_SUITES: &[&str] = &[
    "thm1-chain",
    "lemma-2.1",
    "thm3-2.2",
    "thm4-2.7",
    "thm5-2.9",
    "thm6-3.1",
    "chain-3.2",
    "chain-3.3",
    "rem-3.4",
    "rem-3.5",
    "rem-3.6",
    "rem-3.7",
    "rem-3.8",
    "rem-3.9",
    "example-3",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionSelection {
    /// A single `(f, g)` pair; single-function suites use `f`.
    Pair(String, String),
    /// Every eligible combination from the built-in catalog.
    Sweep,
}

/// Full run configuration. Defaults follow the harness conventions:
/// dims `[1, 2, 4, 8]`, 250 trials, 8 probes, sweep over the catalog,
/// `[0, 1]` for synchronous-oriented suites and `[-1, 0]` for
/// asynchronous-oriented ones.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub suites: Vec<String>,
    pub dims: Vec<usize>,
    pub trials: usize,
    pub probes: usize,
    /// `None` keeps each suite's default interval.
    pub interval: Option<(f64, f64)>,
    pub functions: FunctionSelection,
    pub seed: u64,
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub quad: QuadratureSpec,
    /// Run sign-sensitive suites on signed pairs as well (results recorded,
    /// never asserted by the default pools).
    pub include_signed: bool,
    /// Worker cap; `None` defers to `HHVERIFY_THREADS`, 0 = automatic.
    pub threads: Option<usize>,
    pub report_path: Option<std::path::PathBuf>,
    pub format: ReportFormat,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suites: vec!["all".to_string()],
            dims: vec![1, 2, 4, 8],
            trials: 250,
            probes: 8,
            interval: None,
            functions: FunctionSelection::Sweep,
            seed: 42,
            tol_abs: 1e-9,
            tol_rel: 1e-9,
            quad: QuadratureSpec::default(),
            include_signed: false,
            threads: None,
            report_path: None,
            format: ReportFormat::Json,
        }
    }
}

/// How one suite consumes samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SuiteShape {
    /// Operator-order chain on `(A, B)`, single function, no probe vector.
    OperatorChain,
    /// Midpoint-convexity grid on `(A, B, x)`, single function.
    PhiGrid,
    /// Form inequality on `(A, B, x)` pairs.
    PairProbe,
    /// Single-operator inequality on `(A, x)`.
    SingleMatrixProbe,
    /// Synchrony-specialized bounds on `(A, B, x)`, filtered by id prefix.
    Remark,
    /// The pinned worked-example runner.
    Example,
}

#[derive(Debug, Clone, Copy)]
struct SuiteSpec {
    id: &'static str,
    shape: SuiteShape,
    /// Defaults to `[-1, 0]` instead of `[0, 1]`.
    negative_default: bool,
}

fn suite_spec(id: &str) -> Option<SuiteSpec> {
    let spec = match id {
        "thm1-chain" => SuiteSpec {
            id: "thm1-chain",
            shape: SuiteShape::OperatorChain,
            negative_default: false,
        },
        "lemma-2.1" => SuiteSpec {
            id: "lemma-2.1",
            shape: SuiteShape::PhiGrid,
            negative_default: false,
        },
        "thm3-2.2" => SuiteSpec {
            id: "thm3-2.2",
            shape: SuiteShape::PairProbe,
            negative_default: false,
        },
        "thm4-2.7" => SuiteSpec {
            id: "thm4-2.7",
            shape: SuiteShape::PairProbe,
            negative_default: false,
        },
        "thm5-2.9" => SuiteSpec {
            id: "thm5-2.9",
            shape: SuiteShape::PairProbe,
            negative_default: false,
        },
        "thm6-3.1" => SuiteSpec {
            id: "thm6-3.1",
            shape: SuiteShape::SingleMatrixProbe,
            negative_default: false,
        },
        "chain-3.2" => SuiteSpec {
            id: "chain-3.2",
            shape: SuiteShape::PairProbe,
            negative_default: false,
        },
        "chain-3.3" => SuiteSpec {
            id: "chain-3.3",
            shape: SuiteShape::PairProbe,
            negative_default: true,
        },
        "rem-3.4" => SuiteSpec {
            id: "rem-3.4",
            shape: SuiteShape::Remark,
            negative_default: false,
        },
        "rem-3.5" => SuiteSpec {
            id: "rem-3.5",
            shape: SuiteShape::Remark,
            negative_default: false,
        },
        "rem-3.6" => SuiteSpec {
            id: "rem-3.6",
            shape: SuiteShape::Remark,
            negative_default: false,
        },
        "rem-3.7" => SuiteSpec {
            id: "rem-3.7",
            shape: SuiteShape::Remark,
            negative_default: true,
        },
        "rem-3.8" => SuiteSpec {
            id: "rem-3.8",
            shape: SuiteShape::Remark,
            negative_default: true,
        },
        "rem-3.9" => SuiteSpec {
            id: "rem-3.9",
            shape: SuiteShape::Remark,
            negative_default: true,
        },
        "example-3" => SuiteSpec {
            id: "example-3",
            shape: SuiteShape::Example,
            negative_default: false,
        },
        _ => return None,
    };
    Some(spec)
}

/// One (function pair, suite) work item after eligibility filtering.
struct PairJob {
    f: ScalarFunction<f64>,
    g: ScalarFunction<f64>,
    synchrony: Option<SynchronyVerdict<f64>>,
}

/// Execution plan of one suite: its interval and eligible function jobs.
struct SuitePlan {
    suite: SuiteSpec,
    order: usize,
    interval: Interval<f64>,
    jobs: Vec<PairJob>,
    skips: Vec<CheckRecord>,
}

fn skip_record(suite: &SuiteSpec, interval: Interval<f64>, functions: Vec<String>) -> CheckRecord {
    CheckRecord {
        id: suite.id.to_string(),
        dim: 0,
        trial: 0,
        probe: 0,
        functions,
        interval: [interval.lo, interval.hi],
        orientation: match suite.shape {
            SuiteShape::OperatorChain | SuiteShape::PhiGrid => ORIENT_CHAIN.to_string(),
            _ => ORIENT_SEC2.to_string(),
        },
        lhs: 0.0,
        rhs: 0.0,
        margin: 0.0,
        tolerance: 0.0,
        quad_error: 0.0,
        verdict: Verdict::Skip,
        subseeds: Subseeds::default(),
    }
}

/// Checks whether a (suite, pair) combination meets the suite preconditions;
/// `Err(reason)` means it must be skipped.
fn eligibility(
    suite: &SuiteSpec,
    interval: Interval<f64>,
    f: &ScalarFunction<f64>,
    g: Option<&ScalarFunction<f64>>,
    synchrony: Option<&SynchronyVerdict<f64>>,
    include_signed: bool,
) -> std::result::Result<(), String> {
    let mut fns = vec![f];
    if let Some(g) = g {
        fns.push(g);
    }
    for func in &fns {
        if !interval.is_subset_of(&func.domain) {
            return Err(format!(
                "interval escapes domain of {} (singular endpoint guard)",
                func.id
            ));
        }
    }
    let need_convex = !matches!(suite.shape, SuiteShape::SingleMatrixProbe)
        && !matches!(suite.id, "chain-3.2" | "chain-3.3");
    if need_convex {
        for func in &fns {
            if func.convexity_class != ConvexityClass::OperatorConvex {
                return Err(format!("{} is not tagged operator convex", func.id));
            }
        }
    }
    let nonneg = fns.iter().all(|func| func.nonnegative_on_domain);
    let nonneg_required = matches!(suite.id, "thm3-2.2" | "rem-3.4" | "rem-3.7");
    let nonneg_default = matches!(
        suite.id,
        "thm4-2.7" | "thm5-2.9" | "rem-3.5" | "rem-3.6" | "rem-3.8" | "rem-3.9"
    );
    if nonneg_required && !nonneg {
        return Err("pair is not nonnegative on the interval".to_string());
    }
    if nonneg_default && !nonneg && !include_signed {
        return Err("signed pair excluded from the default pool".to_string());
    }
    if let Some(sync) = synchrony {
        let want = match suite.id {
            "thm6-3.1" => None, // any definite class
            "chain-3.2" | "rem-3.4" | "rem-3.5" | "rem-3.6" => Some(SynchronyClass::Synchronous),
            "chain-3.3" | "rem-3.7" | "rem-3.8" | "rem-3.9" => Some(SynchronyClass::Asynchronous),
            _ => None,
        };
        match want {
            Some(class) if sync.class != class => {
                return Err(format!(
                    "pair synchrony is {:?}, suite needs {:?}",
                    sync.class, class
                ));
            }
            None if suite.id == "thm6-3.1" && sync.class == SynchronyClass::Neither => {
                return Err("pair is neither synchronous nor asynchronous".to_string());
            }
            _ => {}
        }
    }
    Ok(())
}

fn needs_synchrony(id: &str) -> bool {
    matches!(
        id,
        "thm6-3.1"
            | "chain-3.2"
            | "chain-3.3"
            | "rem-3.4"
            | "rem-3.5"
            | "rem-3.6"
            | "rem-3.7"
            | "rem-3.8"
            | "rem-3.9"
    )
}

fn single_function_suite(shape: SuiteShape) -> bool {
    matches!(shape, SuiteShape::OperatorChain | SuiteShape::PhiGrid)
}

fn resolve_suites(requested: &[String]) -> Result<Vec<SuiteSpec>> {
    let mut out = Vec::new();
    for name in requested {
        if name == "all" {
            for id in ALL_SUITES {
                out.push(suite_spec(id).expect("known id"));
            }
        } else {
            out.push(
                suite_spec(name)
                    .ok_or_else(|| Error::ConfigInvalid(format!("unknown suite id {name:?}")))?,
            );
        }
    }
    if out.is_empty() {
        return Err(Error::ConfigInvalid("no suites selected".to_string()));
    }
    // de-duplicate, keeping canonical order stable
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(s.id));
    Ok(out)
}

fn validate(config: &SuiteConfig) -> Result<()> {
    if config.trials == 0 {
        return Err(Error::ConfigInvalid("trials must be >= 1".to_string()));
    }
    if config.probes == 0 {
        return Err(Error::ConfigInvalid("probes must be >= 1".to_string()));
    }
    if config.dims.is_empty() || config.dims.iter().any(|&d| d == 0) {
        return Err(Error::ConfigInvalid(
            "dims must be a non-empty list of positive integers".to_string(),
        ));
    }
    if !(config.tol_abs.is_finite() && config.tol_rel.is_finite())
        || config.tol_abs < 0.0
        || config.tol_rel < 0.0
    {
        return Err(Error::ConfigInvalid(
            "tolerances must be finite and nonnegative".to_string(),
        ));
    }
    QuadratureSpec::new(config.quad.panels, config.quad.nodes_per_panel)?;
    if let Some((lo, hi)) = config.interval {
        Interval::<f64>::new(lo, hi)?;
    }
    Ok(())
}

/// Builds the per-suite execution plans (intervals, resolved functions,
/// synchrony verdicts, eligibility skips). Pure; does no sampling.
fn build_plans(config: &SuiteConfig) -> Result<Vec<SuitePlan>> {
    let suites = resolve_suites(&config.suites)?;
    let mut plans = Vec::with_capacity(suites.len());
    for (order, suite) in suites.into_iter().enumerate() {
        let interval = match config.interval {
            Some((lo, hi)) => Interval::new(lo, hi)?,
            None => {
                if suite.negative_default {
                    Interval::of(-1.0, 0.0)
                } else {
                    Interval::of(0.0, 1.0)
                }
            }
        };
        if suite.shape == SuiteShape::Example {
            plans.push(SuitePlan {
                suite,
                order,
                interval,
                jobs: Vec::new(),
                skips: Vec::new(),
            });
            continue;
        }

        let candidates: Vec<(ScalarFunction<f64>, Option<ScalarFunction<f64>>)> =
            match (&config.functions, single_function_suite(suite.shape)) {
                (FunctionSelection::Pair(f_id, _), true) => {
                    vec![(resolve_function(f_id, interval)?, None)]
                }
                (FunctionSelection::Pair(f_id, g_id), false) => vec![(
                    resolve_function(f_id, interval)?,
                    Some(resolve_function(g_id, interval)?),
                )],
                (FunctionSelection::Sweep, true) => {
                    crate::functions::builtin_catalog::<f64>(interval)
                        .into_iter()
                        .map(|f| (f, None))
                        .collect()
                }
                (FunctionSelection::Sweep, false) => {
                    let catalog = crate::functions::builtin_catalog::<f64>(interval);
                    let mut pairs = Vec::new();
                    for i in 0..catalog.len() {
                        for j in i..catalog.len() {
                            pairs.push((catalog[i].clone(), Some(catalog[j].clone())));
                        }
                    }
                    pairs
                }
            };

        let mut jobs = Vec::new();
        let mut skips = Vec::new();
        for (f, g) in candidates {
            let synchrony = if needs_synchrony(suite.id) {
                let g_ref = g.as_ref().unwrap_or(&f);
                if interval.is_subset_of(&f.domain) && interval.is_subset_of(&g_ref.domain) {
                    Some(check_synchronous(&f, g_ref, interval, SYNCHRONY_GRID)?)
                } else {
                    None
                }
            } else {
                None
            };
            let fn_ids = match &g {
                Some(g) => vec![f.id.clone(), g.id.clone()],
                None => vec![f.id.clone()],
            };
            match eligibility(
                &suite,
                interval,
                &f,
                g.as_ref(),
                synchrony.as_ref(),
                config.include_signed,
            ) {
                Ok(()) => {
                    // single-function suites carry the function in both slots
                    let g_slot = g.unwrap_or_else(|| f.clone());
                    jobs.push(PairJob {
                        f,
                        g: g_slot,
                        synchrony,
                    });
                }
                Err(_reason) => skips.push(skip_record(&suite, interval, fn_ids)),
            }
        }
        plans.push(SuitePlan {
            suite,
            order,
            interval,
            jobs,
            skips,
        });
    }
    Ok(plans)
}

/// Worker-count resolution: explicit config beats the environment variable;
/// 0 or absent means automatic.
fn thread_count(config: &SuiteConfig) -> usize {
    if let Some(k) = config.threads {
        return k;
    }
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(0)
}

/// Runs the configured suites and returns the summary and sorted records.
pub fn run_suite(config: &SuiteConfig) -> Result<(RunSummary, Vec<CheckRecord>)> {
    let started = Instant::now();
    validate(config)?;
    let plans = build_plans(config)?;

    let checker = Checker::<f64> {
        tols: Tolerances {
            abs: config.tol_abs,
            rel: config.tol_rel,
        },
        quad: config.quad,
    };

    let tasks: Vec<(usize, usize)> = config
        .dims
        .iter()
        .flat_map(|&dim| (0..config.trials).map(move |trial| (dim, trial)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count(config))
        .build()
        .map_err(|e| Error::ConfigInvalid(format!("thread pool: {e}")))?;

    let mut keyed: Vec<(SortKey, CheckRecord)> = pool
        .install(|| {
            tasks
                .par_iter()
                .map(|&(dim, trial)| run_task(config, &checker, &plans, dim, trial))
                .collect::<Result<Vec<Vec<(SortKey, CheckRecord)>>>>()
        })?
        .into_iter()
        .flatten()
        .collect();

    // example suites run their own trial loops
    for plan in &plans {
        if plan.suite.shape == SuiteShape::Example {
            for &dim in &config.dims {
                for record in run_paper_example::<f64>(dim, config.trials, config.seed)? {
                    keyed.push((
                        SortKey {
                            order: plan.order,
                            dim: record.dim,
                            trial: record.trial,
                            probe: record.probe,
                            id: record.id.clone(),
                            pair: record.functions.join(","),
                        },
                        record,
                    ));
                }
            }
        }
        for skip in &plan.skips {
            keyed.push((
                SortKey {
                    order: plan.order,
                    dim: 0,
                    trial: 0,
                    probe: 0,
                    id: skip.id.clone(),
                    pair: skip.functions.join(","),
                },
                skip.clone(),
            ));
        }
    }

    keyed.sort_by(|(ka, _), (kb, _)| ka.cmp(kb));
    let records: Vec<CheckRecord> = keyed.into_iter().map(|(_, r)| r).collect();
    let summary = RunSummary::from_records(&records, started.elapsed().as_secs_f64());
    Ok((summary, records))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct SortKey {
    order: usize,
    dim: usize,
    trial: usize,
    probe: usize,
    id: String,
    pair: String,
}

/// Everything drawn and checked for one `(dim, trial)` cell.
fn run_task(
    config: &SuiteConfig,
    checker: &Checker<f64>,
    plans: &[SuitePlan],
    dim: usize,
    trial: usize,
) -> Result<Vec<(SortKey, CheckRecord)>> {
    let seed_a = derive_subseed(config.seed, trial as u64, StreamTag::MatrixA);
    let seed_b = derive_subseed(config.seed, trial as u64, StreamTag::MatrixB);
    let probe_seeds: Vec<u64> = (0..config.probes)
        .map(|p| derive_subseed(config.seed, trial as u64, StreamTag::Probe(p as u32)))
        .collect();

    // draws and segment tables per distinct interval
    struct IntervalData {
        interval: Interval<f64>,
        seg: SegmentData<f64>,
        probes: Vec<(UnitVector<f64>, SegmentProbe<f64>)>,
    }
    let mut interval_data: BTreeMap<(u64, u64), IntervalData> = BTreeMap::new();
    let mut records = Vec::new();

    for plan in plans {
        if plan.suite.shape == SuiteShape::Example || plan.jobs.is_empty() {
            continue;
        }
        let key = (plan.interval.lo.to_bits(), plan.interval.hi.to_bits());
        if !interval_data.contains_key(&key) {
            let a = random_hermitian::<f64>(dim, plan.interval, seed_a)?;
            let b = random_hermitian::<f64>(dim, plan.interval, seed_b)?;
            let seg = SegmentData::new(&a, &b, config.quad)?;
            let mut probes = Vec::with_capacity(config.probes);
            for &sx in &probe_seeds {
                let x = random_unit_vector::<f64>(dim, sx)?;
                let sp = seg.probe(&x)?;
                probes.push((x, sp));
            }
            interval_data.insert(
                key,
                IntervalData {
                    interval: plan.interval,
                    seg,
                    probes,
                },
            );
        }
        let data = &interval_data[&key];

        for job in &plan.jobs {
            let fn_ids: Vec<String> = if single_function_suite(plan.suite.shape) {
                vec![job.f.id.clone()]
            } else {
                vec![job.f.id.clone(), job.g.id.clone()]
            };
            let mut push = |probe: usize, record: CheckRecord| {
                records.push((
                    SortKey {
                        order: plan.order,
                        dim,
                        trial,
                        probe,
                        id: record.id.clone(),
                        pair: fn_ids.join(","),
                    },
                    record,
                ));
            };
            match plan.suite.shape {
                SuiteShape::OperatorChain => {
                    let report = checker.check_hh_chain(
                        &job.f,
                        data.seg.endpoint_a(),
                        data.seg.endpoint_b(),
                    )?;
                    for (i, link) in report.links.iter().enumerate() {
                        // the link's own Loewner tolerance, not a recomputed
                        // scalar one, decides the verdict
                        let outcome = crate::inequalities::CheckOutcome {
                            id: format!("thm1-chain-l{}", i + 1),
                            orientation: ORIENT_CHAIN,
                            lhs: 0.0,
                            rhs: link.witness_min_eig,
                            margin: link.witness_min_eig,
                            tolerance: link.tolerance_used,
                            quad_error: if i == 1 || i == 2 {
                                report.quad_error
                            } else {
                                0.0
                            },
                            verdict: if link.holds_leq() {
                                Verdict::Pass
                            } else {
                                Verdict::Violation
                            },
                        };
                        push(
                            0,
                            outcome.into_record(
                                dim,
                                trial,
                                0,
                                fn_ids.clone(),
                                data.interval,
                                Subseeds {
                                    a: Some(seed_a),
                                    b: Some(seed_b),
                                    x: None,
                                },
                            ),
                        );
                    }
                }
                SuiteShape::PhiGrid => {
                    for (p, (x, _)) in data.probes.iter().enumerate() {
                        let outcome = checker.check_phi_convexity(
                            &job.f,
                            data.seg.endpoint_a(),
                            data.seg.endpoint_b(),
                            x,
                            PHI_GRID_POINTS,
                        )?;
                        push(
                            p,
                            outcome.into_record(
                                dim,
                                trial,
                                p,
                                fn_ids.clone(),
                                data.interval,
                                Subseeds {
                                    a: Some(seed_a),
                                    b: Some(seed_b),
                                    x: Some(probe_seeds[p]),
                                },
                            ),
                        );
                    }
                }
                SuiteShape::SingleMatrixProbe => {
                    let sync = job.synchrony.as_ref().expect("synchrony precomputed");
                    for (p, (_, sp)) in data.probes.iter().enumerate() {
                        let outcome = checker.cebysev_outcome(
                            &job.f,
                            &job.g,
                            data.seg.decomposition_a(),
                            sp.endpoint_a_weights(),
                            sync,
                        )?;
                        push(
                            p,
                            outcome.into_record(
                                dim,
                                trial,
                                p,
                                fn_ids.clone(),
                                data.interval,
                                Subseeds {
                                    a: Some(seed_a),
                                    b: None,
                                    x: Some(probe_seeds[p]),
                                },
                            ),
                        );
                    }
                }
                SuiteShape::PairProbe | SuiteShape::Remark => {
                    for (p, (x, sp)) in data.probes.iter().enumerate() {
                        let pv = probe_values(&job.f, &job.g, &data.seg, sp)?;
                        let subseeds = Subseeds {
                            a: Some(seed_a),
                            b: Some(seed_b),
                            x: Some(probe_seeds[p]),
                        };
                        let outcomes = match plan.suite.id {
                            "thm3-2.2" => vec![checker.product_upper_outcome(&pv)],
                            "thm4-2.7" => vec![checker.midpoint_product_outcome(&pv)],
                            "thm5-2.9" => vec![checker.cross_product_outcome(&pv)],
                            "chain-3.2" | "chain-3.3" => {
                                let sync = job.synchrony.as_ref().expect("synchrony precomputed");
                                let (nm, mp) = checker.mnp_chain_outcomes(&pv, sync)?;
                                vec![nm, mp]
                            }
                            rem_id => {
                                let sync = job.synchrony.as_ref().expect("synchrony precomputed");
                                checker
                                    .remark_outcomes(&job.f, &job.g, &data.seg, &pv, x, sync)?
                                    .into_iter()
                                    .filter(|o| o.id.as_str().starts_with(rem_id))
                                    .collect()
                            }
                        };
                        for outcome in outcomes {
                            push(
                                p,
                                outcome.into_record(
                                    dim,
                                    trial,
                                    p,
                                    fn_ids.clone(),
                                    data.interval,
                                    subseeds,
                                ),
                            );
                        }
                    }
                }
                SuiteShape::Example => unreachable!(),
            }
        }
    }
    Ok(records)
}

/// Outcome of the convexity-certification command.
#[derive(Debug, Clone)]
pub struct CertifyOutcome {
    pub function_id: String,
    pub convexity_class: ConvexityClass,
    pub verdict: ConvexityVerdict<f64>,
    /// Whether the verdict is consistent with the catalog tag.
    pub matches_catalog: bool,
}

/// Runs the convexity certifier against the catalog tag of `function_id`.
pub fn run_certify(
    function_id: &str,
    interval: (f64, f64),
    dim: usize,
    trials: usize,
    seed: u64,
) -> Result<CertifyOutcome> {
    let interval = Interval::new(interval.0, interval.1)?;
    let f = resolve_function::<f64>(function_id, interval)?;
    if !interval.is_subset_of(&f.domain) {
        return Err(Error::ConfigInvalid(format!(
            "interval [{}, {}] escapes the domain of {} ([{}, {}])",
            interval.lo, interval.hi, f.id, f.domain.lo, f.domain.hi
        )));
    }
    let verdict = certify_operator_convex(&f, interval, dim, trials, seed)?;
    let matches_catalog = !matches!(
        (f.convexity_class, verdict.status),
        (ConvexityClass::OperatorConvex, ConvexityStatus::Violated)
            | (
                ConvexityClass::NotOperatorConvex,
                ConvexityStatus::NoViolationFound
            )
    );
    Ok(CertifyOutcome {
        function_id: f.id.clone(),
        convexity_class: f.convexity_class,
        verdict,
        matches_catalog,
    })
}

/// The `example` command: the worked-example suite across dims 1..4,
/// 250 trials per interval case.
pub fn run_example(seed: u64) -> Result<(RunSummary, Vec<CheckRecord>)> {
    let started = Instant::now();
    let mut records = Vec::new();
    for dim in 1..=4usize {
        records.extend(run_paper_example::<f64>(dim, 250, seed)?);
    }
    records.sort_by(|a, b| (a.dim, &a.id, a.trial, a.probe).cmp(&(b.dim, &b.id, b.trial, b.probe)));
    let summary = RunSummary::from_records(&records, started.elapsed().as_secs_f64());
    Ok((summary, records))
}

/// Serializes records in the configured format.
pub fn render_report(records: &[CheckRecord], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => crate::report::records_to_json(records),
        ReportFormat::Csv => crate::report::records_to_csv(records),
    }
}
