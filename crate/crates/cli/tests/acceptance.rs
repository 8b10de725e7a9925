//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Every comparison is exact; no tolerances are involved.

use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sginertia::families::{cycle_inertia_formula, make_cycle, make_path, CycleSpec};
use sginertia::format::to_sg;
use sginertia::inertia::{
    adjacency_matrix, char_poly, graph_inertia, inertia_by_congruence, inertia_from_char_poly,
};
use sginertia::structure::{contraction_tree, is_cycle_disjoint, negate, switch};
use sginertia::verify::{
    check_deletion_lemmas_with, check_interlacing, enumerate_underlying_graphs, run_suite,
    signature_representatives, CrossTab, LemmaSelection, SuiteOptions, SuiteSummary,
};
use sginertia::{Inertia, Sign, SignedGraph};

const SEED: u64 = 0x5eed_acce;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

/// Every signed graph (one per signature class) on `lo..=hi` vertices.
fn signed_universe(lo: usize, hi: usize, connected_only: bool) -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in lo..=hi {
        for skeleton in enumerate_underlying_graphs(n, connected_only).unwrap() {
            out.extend(signature_representatives(&skeleton).unwrap());
        }
    }
    out
}

fn random_signed_graph(rng: &mut ChaCha8Rng, max_n: usize) -> SignedGraph {
    let n = rng.gen_range(1..=max_n);
    let density: f64 = rng.gen_range(0.1..0.9);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                let s = if rng.gen_bool(0.5) { Sign::Positive } else { Sign::Negative };
                edges.push((u, v, s));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

fn closed_forms() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 3..=32 {
        for balanced in [true, false] {
            let spec = CycleSpec::new(n, balanced).unwrap();
            checked += 1;
            if graph_inertia(&make_cycle(spec)) != cycle_inertia_formula(spec) {
                bad.push(spec.to_string());
            }
        }
    }
    for n in 1..=32 {
        checked += 1;
        if graph_inertia(&make_path(n).unwrap()) != Inertia::new(n / 2, n / 2, n % 2) {
            bad.push(format!("P{n}"));
        }
    }
    outcome(bad.is_empty(), format!("{checked} cycles and paths, mismatches: {bad:?}"))
}

fn oracle_agreement() -> Outcome {
    let agree = |g: &SignedGraph| {
        let a = adjacency_matrix(g);
        inertia_by_congruence(&a) == inertia_from_char_poly(&char_poly(&a).unwrap()).unwrap()
    };
    let universe = signed_universe(1, 6, false);
    let exhaustive_bad = universe.iter().filter(|g| !agree(g)).count();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random_bad = (0..1000).filter(|_| !agree(&random_signed_graph(&mut rng, 10))).count();
    outcome(
        exhaustive_bad + random_bad == 0,
        format!(
            "{} enumerated graphs (n <= 6) with {exhaustive_bad} disagreements, \
             1000 random graphs (n <= 10) with {random_bad}",
            universe.len()
        ),
    )
}

fn theorem_violations(summary: &SuiteSummary) -> Outcome {
    let theorem: Vec<_> = summary
        .violations
        .iter()
        .filter(|v| v.report.failures().iter().any(|f| !f.contains("equality")))
        .collect();
    outcome(
        theorem.is_empty() && !summary.truncated,
        format!(
            "{} skeletons, {} signed graphs, {} random unions, {} bound violations",
            summary.graphs_checked,
            summary.signatures_checked,
            summary.unions_checked,
            theorem.len()
        ),
    )
}

fn tab(t: &CrossTab) -> String {
    format!(
        "{}/{}/{}/{}",
        t.attained_extremal, t.attained_not_extremal, t.missed_extremal, t.missed_not_extremal
    )
}

fn equality_characterization(summary: &SuiteSummary) -> Outcome {
    let c = &summary.census;
    let mismatches = summary
        .violations
        .iter()
        .filter(|v| v.report.failures().iter().any(|f| f.contains("equality")))
        .count();
    let ok = c.positive.is_biconditional()
        && c.negative.is_biconditional()
        && c.nullity.is_biconditional()
        && c.positive.attained() > 0
        && mismatches == 0;
    outcome(
        ok,
        format!(
            "eq&extremal/eq&not/extremal&not-eq/neither: i+ {} i- {} eta {}",
            tab(&c.positive),
            tab(&c.negative),
            tab(&c.nullity)
        ),
    )
}

fn lemma_suite(summary: &SuiteSummary) -> Outcome {
    let select = LemmaSelection {
        vertex_deletion: false,
        pendant_deletion: true,
        local_stats: true,
        additivity: true,
    };
    let mut checks = 0;
    let mut failures = Vec::new();
    let universe = signed_universe(2, 7, false);
    for g in &universe {
        let report = check_deletion_lemmas_with(g, graph_inertia(g), select);
        checks += report.checks;
        failures.extend(report.failures);
    }
    let suite_lemma_failures = summary
        .violations
        .iter()
        .filter(|v| v.reasons.len() > v.report.failures().len())
        .count();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut interlacing_bad = 0;
    for _ in 0..10_000 {
        let g = random_signed_graph(&mut rng, 10);
        let keep = random_subset(&mut rng, g.order());
        if !check_interlacing(&adjacency_matrix(&g), &keep).unwrap().passes() {
            interlacing_bad += 1;
        }
    }
    outcome(
        failures.is_empty() && suite_lemma_failures == 0 && interlacing_bad == 0,
        format!(
            "{checks} pendant/local/additivity checks over {} graphs (n <= 7, all skeletons), \
             {} suite lemma checks, 10000 monotonicity samples; failures {} + {suite_lemma_failures} + {interlacing_bad}",
            universe.len(),
            summary.lemma_checks,
            failures.len()
        ),
    )
}

fn structural_invariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut switching_bad = 0;
    for _ in 0..1000 {
        let g = random_signed_graph(&mut rng, 10);
        let set = random_subset(&mut rng, g.order());
        if graph_inertia(&switch(&g, &set).unwrap()) != graph_inertia(&g) {
            switching_bad += 1;
        }
    }
    let negation = signed_universe(1, 6, false);
    let negation_bad = negation
        .iter()
        .filter(|g| graph_inertia(&negate(g)) != graph_inertia(g).swapped())
        .count();
    let mut trees = 0;
    let mut tree_bad = 0;
    for g in signed_universe(1, 7, true).iter().filter(|g| is_cycle_disjoint(g)) {
        trees += 1;
        match contraction_tree(g) {
            Ok(t) if t.is_tree() && t.cycle_count() == g.cyclomatic_number() => {}
            _ => tree_bad += 1,
        }
    }
    outcome(
        switching_bad + negation_bad + tree_bad == 0,
        format!(
            "1000 switchings ({switching_bad} bad), {} negations n <= 6 ({negation_bad} bad), \
             {trees} contraction trees n <= 7 ({tree_bad} bad)",
            negation.len()
        ),
    )
}

fn spot_values() -> Outcome {
    let dir = std::env::temp_dir().join(format!("sginertia-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("c4_balanced", make_cycle(CycleSpec::new(4, true).unwrap()), "(1,1,2)"),
        ("c3_unbalanced", make_cycle(CycleSpec::new(3, false).unwrap()), "(2,1,0)"),
        ("c6_unbalanced", make_cycle(CycleSpec::new(6, false).unwrap()), "(2,2,2)"),
        ("p2", make_path(2).unwrap(), "(1,1,0)"),
    ];
    let mut bad = Vec::new();
    for (name, g, expected) in cases {
        let path = dir.join(format!("{name}.sg"));
        std::fs::write(&path, to_sg(&g)).unwrap();
        let analyze = || {
            Command::new(env!("CARGO_BIN_EXE_sginertia"))
                .args(["analyze", "--machine"])
                .arg(&path)
                .output()
                .expect("sginertia binary runs")
        };
        let (first, second) = (analyze(), analyze());
        let field = format!(" inertia={expected} ");
        let ok = first.status.success()
            && first.stdout == second.stdout
            && String::from_utf8_lossy(&first.stdout).contains(&field);
        if !ok {
            bad.push(name);
        }
    }
    outcome(bad.is_empty(), format!("4 graphs analyzed twice in machine format, mismatches: {bad:?}"))
}

fn main() -> ExitCode {
    // `cargo test` passes harness flags such as `--nocapture`; none apply.
    let start = Instant::now();
    let suite = run_suite(&SuiteOptions { max_n: 7, ..SuiteOptions::default() })
        .expect("suite options are valid");
    let suite_time = start.elapsed();

    let mut all = true;
    let mut report = |id: usize, name: &str, run: &dyn Fn() -> Outcome| {
        let t = Instant::now();
        let o = run();
        all &= o.passed;
        println!(
            "criterion {id} {name}: {} ({}; {:.1?})",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed()
        );
    };
    report(1, "closed-form cycle and path inertia", &closed_forms);
    report(2, "elimination vs characteristic polynomial", &oracle_agreement);
    report(3, "exhaustive bound verification n <= 7", &|| {
        let mut o = theorem_violations(&suite);
        o.detail.push_str(&format!(", suite {suite_time:.1?}"));
        o
    });
    report(4, "equality cases = extremal family", &|| equality_characterization(&suite));
    report(5, "deletion lemmas and interlacing", &|| lemma_suite(&suite));
    report(6, "switching, negation, contraction trees", &structural_invariants);
    report(7, "spot values via analyze --machine", &spot_values);

    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
