//! Exhaustive verification over all small signed graphs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::{check_bounds_with, check_deletion_lemmas_with, LemmaSelection, TheoremReport};
use super::enumerate::{enumerate_codes, graph_from_code, signature_representatives, ENUMERATION_CAP};
use crate::error::{invalid, Error, Result};
use crate::graph::SignedGraph;
use crate::inertia::graph_inertia;

/// Largest order run without an explicit opt-in.
pub const DEFAULT_MAX_N: usize = 7;

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOptions {
    pub max_n: usize,
    /// Enumerate connected skeletons only; otherwise every simple graph,
    /// including ones with isolated vertices.
    pub connected_only: bool,
    /// Required for `max_n == 8`, which takes minutes.
    pub allow_n8: bool,
    /// Random disjoint unions of enumerated graphs checked in addition,
    /// when `connected_only` is set.
    pub union_samples: usize,
    /// Probability that the single-vertex deletion checks run on a given
    /// signed graph. Pendant deletion and the local-stat identities always
    /// run.
    pub vertex_deletion_rate: f64,
    pub seed: u64,
    /// Stop before exceeding this many signed graphs.
    pub max_signatures: Option<u64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: DEFAULT_MAX_N,
            connected_only: true,
            allow_n8: false,
            union_samples: 200,
            vertex_deletion_rate: 1.0,
            seed: 0x5eed,
            max_signatures: None,
        }
    }
}

/// Attained × extremal cross-tabulation for one equality.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CrossTab {
    pub attained_extremal: u64,
    pub attained_not_extremal: u64,
    pub missed_extremal: u64,
    pub missed_not_extremal: u64,
}

impl CrossTab {
    fn record(&mut self, attained: bool, extremal: bool) {
        match (attained, extremal) {
            (true, true) => self.attained_extremal += 1,
            (true, false) => self.attained_not_extremal += 1,
            (false, true) => self.missed_extremal += 1,
            (false, false) => self.missed_not_extremal += 1,
        }
    }

    fn merge(&mut self, o: &CrossTab) {
        self.attained_extremal += o.attained_extremal;
        self.attained_not_extremal += o.attained_not_extremal;
        self.missed_extremal += o.missed_extremal;
        self.missed_not_extremal += o.missed_not_extremal;
    }

    pub fn attained(&self) -> u64 {
        self.attained_extremal + self.attained_not_extremal
    }

    /// Attainment and the extremal verdict coincide.
    pub fn is_biconditional(&self) -> bool {
        self.attained_not_extremal == 0 && self.missed_extremal == 0
    }
}

/// Equality census over the graphs whose components all have order ≥ 2.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EqualityCensus {
    pub positive: CrossTab,
    pub negative: CrossTab,
    pub nullity: CrossTab,
    /// Graphs attaining the strict bound on i₊, i₋ or η where it applies.
    /// Reported as data only.
    pub strict_positive: u64,
    pub strict_negative: u64,
    pub strict_nullity: u64,
    /// Every graph attaining some weak equality or judged extremal.
    pub cases: Vec<TheoremReport>,
}

impl EqualityCensus {
    fn record(&mut self, r: &TheoremReport) {
        let f = r.equality_flags();
        if r.equality_judged() {
            let v = r.extremal.verdict;
            self.positive.record(f.positive, v);
            self.negative.record(f.negative, v);
            self.nullity.record(f.nullity, v);
            if f.any() || v {
                self.cases.push(r.clone());
            }
        }
        if r.strict_applicable() {
            let sb = r.strict_bound();
            let pos = num_rational::Rational64::from_integer(r.inertia.positive as i64);
            let neg = num_rational::Rational64::from_integer(r.inertia.negative as i64);
            self.strict_positive += u64::from(pos == sb);
            self.strict_negative += u64::from(neg == sb);
            self.strict_nullity += u64::from(r.effective_nullity() + 1 == r.nullity_bound());
        }
    }

    fn merge(&mut self, o: EqualityCensus) {
        self.positive.merge(&o.positive);
        self.negative.merge(&o.negative);
        self.nullity.merge(&o.nullity);
        self.strict_positive += o.strict_positive;
        self.strict_negative += o.strict_negative;
        self.strict_nullity += o.strict_nullity;
        self.cases.extend(o.cases);
    }
}

/// A failing graph with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub report: TheoremReport,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OrderStats {
    pub skeletons: u64,
    pub signatures: u64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct SuiteSummary {
    pub max_n: usize,
    pub connected_only: bool,
    /// Underlying graphs (skeletons) processed.
    pub graphs_checked: u64,
    /// Signed graphs processed, unions included.
    pub signatures_checked: u64,
    pub unions_checked: u64,
    pub lemma_checks: u64,
    pub per_order: BTreeMap<usize, OrderStats>,
    pub violations: Vec<Violation>,
    pub census: EqualityCensus,
    /// The signature cap stopped the run early.
    pub truncated: bool,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(&mut self, o: SuiteSummary) {
        self.graphs_checked += o.graphs_checked;
        self.signatures_checked += o.signatures_checked;
        self.unions_checked += o.unions_checked;
        self.lemma_checks += o.lemma_checks;
        for (n, s) in o.per_order {
            let e = self.per_order.entry(n).or_default();
            e.skeletons += s.skeletons;
            e.signatures += s.signatures;
        }
        self.violations.extend(o.violations);
        self.census.merge(o.census);
    }
}

/// Checks one signed graph: bounds, equality reconciliation and the
/// selected deletion lemmas.
fn check_signed(g: &SignedGraph, select: LemmaSelection, out: &mut SuiteSummary) {
    let inertia = graph_inertia(g);
    let report = check_bounds_with(g, inertia).expect("suite graphs have order >= 2");
    let lemmas = check_deletion_lemmas_with(g, inertia, select);
    out.signatures_checked += 1;
    out.lemma_checks += lemmas.checks;
    out.census.record(&report);
    let mut reasons: Vec<String> = report.failures().into_iter().map(String::from).collect();
    reasons.extend(lemmas.failures.iter().map(|f| f.to_string()));
    if !reasons.is_empty() {
        out.violations.push(Violation { report, reasons });
    }
}

fn unit_rng(seed: u64, n: usize, code: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).rotate_left(56) ^ code.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn check_skeleton(n: usize, code: u64, opts: &SuiteOptions) -> SuiteSummary {
    let mut out = SuiteSummary::default();
    let mut rng = unit_rng(opts.seed, n, code);
    let skeleton = graph_from_code(n, code);
    let reps = signature_representatives(&skeleton).expect("small skeletons have small theta");
    out.graphs_checked = 1;
    for g in reps {
        let select = LemmaSelection {
            vertex_deletion: rng.gen_bool(opts.vertex_deletion_rate),
            ..LemmaSelection::ALL
        };
        check_signed(&g, select, &mut out);
    }
    out.per_order.insert(n, OrderStats { skeletons: 1, signatures: out.signatures_checked });
    out
}

fn validate(opts: &SuiteOptions) -> Result<()> {
    if opts.max_n < 2 {
        return Err(invalid(format!("max_n must be at least 2, got {}", opts.max_n)));
    }
    if opts.max_n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            requested: opts.max_n,
            cap: ENUMERATION_CAP,
            guidance: "the exhaustive suite stops at 8 vertices",
        });
    }
    if opts.max_n == 8 && !opts.allow_n8 {
        return Err(Error::CapExceeded {
            requested: 8,
            cap: DEFAULT_MAX_N,
            guidance: "n = 8 needs an explicit opt-in (allow_n8 / --include-n8) and takes roughly an hour on one core",
        });
    }
    if !(0.0..=1.0).contains(&opts.vertex_deletion_rate) {
        return Err(invalid("vertex_deletion_rate must lie in [0, 1]"));
    }
    Ok(())
}

/// Runs the exhaustive suite for orders `2..=opts.max_n`.
///
/// Work is split per skeleton and merged in enumeration order, so the
/// summary is deterministic for a given seed.
pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteSummary> {
    validate(opts)?;
    let mut units: Vec<(usize, u64)> = Vec::new();
    for n in 2..=opts.max_n {
        units.extend(enumerate_codes(n, opts.connected_only)?.into_iter().map(|c| (n, c)));
    }

    let mut truncated = false;
    if let Some(cap) = opts.max_signatures {
        let mut budget = 0u64;
        let mut keep = 0;
        for &(n, code) in &units {
            let reps = signature_representatives(&graph_from_code(n, code))?.total();
            if budget + reps > cap {
                truncated = true;
                break;
            }
            budget += reps;
            keep += 1;
        }
        units.truncate(keep);
    }

    let parts: Vec<SuiteSummary> = units
        .par_iter()
        .map(|&(n, code)| check_skeleton(n, code, opts))
        .collect();
    let mut summary = SuiteSummary {
        max_n: opts.max_n,
        connected_only: opts.connected_only,
        truncated,
        ..Default::default()
    };
    for part in parts {
        summary.merge(part);
    }

    if opts.connected_only && !truncated {
        summary.merge(check_unions(opts));
    }
    Ok(summary)
}

/// Disjoint unions of two random enumerated signed graphs whose total order
/// stays within `max_n`.
fn check_unions(opts: &SuiteOptions) -> SuiteSummary {
    let mut out = SuiteSummary::default();
    if opts.max_n < 4 || opts.union_samples == 0 {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(0x0417_1075));
    let pools: Vec<Vec<u64>> = (0..=opts.max_n - 2)
        .map(|n| if n >= 2 { enumerate_codes(n, true).unwrap_or_default() } else { Vec::new() })
        .collect();
    let random_signed = |rng: &mut ChaCha8Rng, n: usize| {
        let code = pools[n][rng.gen_range(0..pools[n].len())];
        let reps = signature_representatives(&graph_from_code(n, code)).expect("small theta");
        let mask = rng.gen_range(0..reps.total());
        reps.nth_signature(mask)
    };
    for _ in 0..opts.union_samples {
        let a = rng.gen_range(2..=opts.max_n - 2);
        let b = rng.gen_range(2..=opts.max_n - a);
        let g = random_signed(&mut rng, a).disjoint_union(&random_signed(&mut rng, b));
        check_signed(&g, LemmaSelection::ALL, &mut out);
        out.unions_checked += 1;
    }
    out
}
