//! Command implementations behind the `sginertia` binary.
//!
//! Every command returns a [`CommandOutcome`] instead of printing, so the
//! binary is a thin shell and the commands can be tested in-process.
//!
//! Exit codes: `0` pass, `1` a mathematically meaningful negative result
//! (a bound violation, a graph that is not cycle-disjoint, a formula
//! disagreement), `2` usage, parse or I/O errors.

use std::fmt::Write as _;
use std::path::Path;

use sginertia::families::{
    cycle_inertia_formula, make_cycle, make_path, path_inertia_formula, CycleSpec,
};
use sginertia::format::{parse_sg, to_sg};
use sginertia::inertia::graph_inertia;
use sginertia::structure::{contraction_tree, is_balanced, is_cycle_disjoint};
use sginertia::verify::{
    check_bounds, report_record, report_table, run_suite, summary_records, summary_table,
    SuiteOptions, TheoremReport,
};
use sginertia::{Error, ParseError, SignedGraph};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Result of one command: an exit code plus what goes to stdout/stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn pass(stdout: String) -> Self {
        CommandOutcome { exit_code: EXIT_PASS, stdout, stderr: String::new() }
    }

    fn negative(stdout: String, stderr: impl Into<String>) -> Self {
        CommandOutcome { exit_code: EXIT_NEGATIVE, stdout, stderr: stderr.into() }
    }

    fn usage(stderr: impl Into<String>) -> Self {
        let mut stderr = stderr.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandOutcome { exit_code: EXIT_USAGE, stdout: String::new(), stderr }
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, CommandOutcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CommandOutcome::usage(format!("error: cannot read {}: {e}", path.display())))?;
    parse_sg(&text).map_err(|e| parse_failure(&path.display().to_string(), &e))
}

/// `source:line:column: message`, the usual compiler-style location.
fn parse_failure(source: &str, e: &ParseError) -> CommandOutcome {
    CommandOutcome::usage(format!("{source}:{}:{}: {}", e.line, e.column, e.message))
}

fn component_balance(g: &SignedGraph) -> Vec<bool> {
    g.connected_components()
        .iter()
        .map(|c| is_balanced(&g.induced_subgraph(c).expect("component vertices are in range").0))
        .collect()
}

fn analysis_outcome(g: &SignedGraph, machine: bool) -> CommandOutcome {
    let report = match check_bounds(g) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::usage(format!("error: {e}")),
    };
    let balance = component_balance(g);
    let disjoint = is_cycle_disjoint(g);
    let stdout = if machine {
        let flags: Vec<&str> = balance.iter().map(|&b| if b { "true" } else { "false" }).collect();
        format!(
            "{} component_balanced={} cycle_disjoint={disjoint}\n",
            report_record(&report),
            flags.join(",")
        )
    } else {
        human_analysis(&report, &balance, disjoint)
    };
    if report.passes() {
        CommandOutcome::pass(stdout)
    } else {
        let failures = report.failures().join(", ");
        CommandOutcome::negative(stdout, format!("bound violation: {failures}\n"))
    }
}

fn human_analysis(report: &TheoremReport, balance: &[bool], disjoint: bool) -> String {
    let mut out = String::from("signed graph\n");
    out.push_str(&report_table(report));
    let list: Vec<&str> = balance
        .iter()
        .map(|&b| if b { "balanced" } else { "unbalanced" })
        .collect();
    writeln!(out, "  {:<24} {}", "component balance", list.join(", ")).unwrap();
    writeln!(out, "  {:<24} {disjoint}", "cycle-disjoint").unwrap();
    out
}

/// Analyzes the `.sg` document `text`; `source` names it in diagnostics.
pub fn analyze_text(text: &str, source: &str, machine: bool) -> CommandOutcome {
    match parse_sg(text) {
        Ok(g) => analysis_outcome(&g, machine),
        Err(e) => parse_failure(source, &e),
    }
}

/// `sginertia analyze`: parameters, exact inertia, bound statuses and the
/// extremal verdict of one graph. Exits 1 iff a bound is violated.
pub fn cmd_analyze(path: &Path, machine: bool) -> CommandOutcome {
    match read_graph(path) {
        Ok(g) => analysis_outcome(&g, machine),
        Err(outcome) => outcome,
    }
}

/// Options of `sginertia verify`.
#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub max_n: usize,
    pub connected_only: bool,
    pub include_n8: bool,
    pub sample_unions: usize,
    pub lemma_rate: f64,
    pub seed: u64,
    pub report: Option<std::path::PathBuf>,
    pub machine: bool,
}

impl Default for VerifyArgs {
    fn default() -> Self {
        let d = SuiteOptions::default();
        VerifyArgs {
            max_n: d.max_n,
            connected_only: d.connected_only,
            include_n8: false,
            sample_unions: d.union_samples,
            lemma_rate: d.vertex_deletion_rate,
            seed: d.seed,
            report: None,
            machine: false,
        }
    }
}

/// `sginertia verify`: the exhaustive suite. Exits 0 iff zero violations.
pub fn cmd_verify(args: &VerifyArgs) -> CommandOutcome {
    if !(0.0..=1.0).contains(&args.lemma_rate) {
        return CommandOutcome::usage("error: --lemma-rate must lie in [0, 1]");
    }
    let opts = SuiteOptions {
        max_n: args.max_n,
        connected_only: args.connected_only,
        allow_n8: args.include_n8,
        union_samples: args.sample_unions,
        vertex_deletion_rate: args.lemma_rate,
        seed: args.seed,
        ..SuiteOptions::default()
    };
    let summary = match run_suite(&opts) {
        Ok(s) => s,
        Err(e) => return CommandOutcome::usage(format!("error: {e}")),
    };
    let records = summary_records(&summary);
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, &records) {
            return CommandOutcome::usage(format!("error: cannot write {}: {e}", path.display()));
        }
    }
    let stdout = if args.machine { records } else { summary_table(&summary) };
    if summary.passed() {
        CommandOutcome::pass(stdout)
    } else {
        let n = summary.violations.len();
        CommandOutcome::negative(stdout, format!("{n} violation(s) found\n"))
    }
}

/// Which family `sginertia family` generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Cycle,
    Path,
}

/// `sginertia family`: emits the `.sg` encoding of a cycle or path, with
/// the closed-form and computed inertia as leading `#` comments so the
/// output stays a valid `.sg` document.
pub fn cmd_family(kind: FamilyKind, n: usize, unbalanced: bool) -> CommandOutcome {
    let (graph, name, formula) = match kind {
        FamilyKind::Cycle => {
            let spec = match CycleSpec::new(n, !unbalanced) {
                Ok(s) => s,
                Err(e) => return CommandOutcome::usage(format!("error: {e}")),
            };
            (make_cycle(spec), spec.to_string(), cycle_inertia_formula(spec))
        }
        FamilyKind::Path => {
            if unbalanced {
                return CommandOutcome::usage("error: paths are acyclic and always balanced; drop --unbalanced");
            }
            match (make_path(n), path_inertia_formula(n)) {
                (Ok(g), Ok(f)) => (g, format!("P{n}"), f),
                (Err(e), _) | (_, Err(e)) => return CommandOutcome::usage(format!("error: {e}")),
            }
        }
    };
    let computed = graph_inertia(&graph);
    let mut out = String::new();
    writeln!(out, "# {name}").unwrap();
    writeln!(out, "# formula inertia {formula}").unwrap();
    writeln!(out, "# computed inertia {computed}").unwrap();
    out.push_str(&to_sg(&graph));
    if formula == computed {
        CommandOutcome::pass(out)
    } else {
        CommandOutcome::negative(out, format!("formula {formula} disagrees with computed {computed}\n"))
    }
}

fn contraction_outcome(g: &SignedGraph) -> CommandOutcome {
    match contraction_tree(g) {
        Ok(tree) => {
            let mut out = String::new();
            writeln!(out, "nodes {} edges {}", tree.nodes.len(), tree.edges.len()).unwrap();
            for (i, node) in tree.nodes.iter().enumerate() {
                writeln!(out, "node {i} {node}").unwrap();
            }
            for (a, b) in &tree.edges {
                writeln!(out, "edge {a} {b}").unwrap();
            }
            CommandOutcome::pass(out)
        }
        Err(Error::UnsupportedStructure(why)) => CommandOutcome::negative(String::new(), format!("{why}\n")),
        Err(e) => CommandOutcome::usage(format!("error: {e}")),
    }
}

/// Contraction tree of the `.sg` document `text`.
pub fn contract_text(text: &str, source: &str) -> CommandOutcome {
    match parse_sg(text) {
        Ok(g) => contraction_outcome(&g),
        Err(e) => parse_failure(source, &e),
    }
}

/// `sginertia contract`: the tree obtained by contracting every cycle.
/// Exits 1 when two cycles share a vertex.
pub fn cmd_contract(path: &Path) -> CommandOutcome {
    match read_graph(path) {
        Ok(g) => contraction_outcome(&g),
        Err(outcome) => outcome,
    }
}
