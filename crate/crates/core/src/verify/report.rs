//! Line-oriented `key=value` records and human-readable tables.
//!
//! A graph record is one line. Its `sg` field is the `.sg` serialization
//! with `,` between tokens and `;` between lines, so values never contain
//! spaces.

use std::fmt::Write as _;

use super::checks::TheoremReport;
use super::suite::{CrossTab, SuiteSummary};
use crate::error::ParseError;
use crate::format::parse_sg;
use crate::graph::SignedGraph;

/// `.sg` text packed into a single space-free token.
pub fn sg_token(g: &SignedGraph) -> String {
    let mut out = format!("{},{}", g.order(), g.size());
    for (u, v, s) in g.edges() {
        write!(out, ";{u},{v},{s}").unwrap();
    }
    out
}

/// Inverse of [`sg_token`].
pub fn parse_sg_token(token: &str) -> Result<SignedGraph, ParseError> {
    parse_sg(&token.replace(',', " ").replace(';', "\n"))
}

fn opt(b: Option<bool>) -> &'static str {
    match b {
        None => "n/a",
        Some(true) => "pass",
        Some(false) => "FAIL",
    }
}

fn pass(b: bool) -> &'static str {
    opt(Some(b))
}

/// One `key=value` line describing a theorem report.
pub fn report_record(r: &TheoremReport) -> String {
    let s = r.statuses();
    let f = r.equality_flags();
    let reason = r.extremal.reason.map_or("none", |x| x.code());
    format!(
        "sg={} n={} m={} c={} p={} theta={} isolated={} inertia={} rank={} \
         intersecting_cycles={} weak_bound={} strict_applicable={} strict_bound={} nullity_bound={} \
         thm_pos_weak={} thm_pos_strict={} thm_neg_weak={} thm_neg_strict={} \
         nullity_weak={} nullity_strict={} eq_pos={} eq_neg={} eq_null={} equality_judged={} \
         extremal={} extremal_reason={}",
        sg_token(&r.graph),
        r.n,
        r.edges,
        r.components,
        r.p,
        r.theta,
        r.isolated,
        r.inertia,
        r.inertia.rank(),
        r.intersecting_cycles,
        r.weak_bound(),
        r.strict_applicable(),
        r.strict_bound(),
        r.nullity_bound(),
        pass(s.positive_weak),
        opt(s.positive_strict),
        pass(s.negative_weak),
        opt(s.negative_strict),
        pass(s.nullity_weak),
        opt(s.nullity_strict),
        f.positive,
        f.negative,
        f.nullity,
        r.equality_judged(),
        r.extremal.verdict,
        reason,
    )
}

/// Human-readable multi-line rendering of a report.
pub fn report_table(r: &TheoremReport) -> String {
    let s = r.statuses();
    let f = r.equality_flags();
    let mut out = String::new();
    let mut row = |k: &str, v: String| writeln!(out, "  {k:<24} {v}").unwrap();
    row("order n", r.n.to_string());
    row("edges m", r.edges.to_string());
    row("components c", r.components.to_string());
    row("cyclomatic number", r.theta.to_string());
    row("pendant vertices p", r.p.to_string());
    row("isolated vertices", r.isolated.to_string());
    row("inertia (i+, i-, eta)", r.inertia.to_string());
    row("cycles share a vertex", r.intersecting_cycles.to_string());
    row("(n-p)/2 - theta", r.weak_bound().to_string());
    row("strict bound applies", r.strict_applicable().to_string());
    row("(n-p+1)/2 - theta", r.strict_bound().to_string());
    row("p + 2 theta", r.nullity_bound().to_string());
    row("i+ lower bound", format!("{} / strict {}", pass(s.positive_weak), opt(s.positive_strict)));
    row("i- lower bound", format!("{} / strict {}", pass(s.negative_weak), opt(s.negative_strict)));
    row("nullity upper bound", format!("{} / strict {}", pass(s.nullity_weak), opt(s.nullity_strict)));
    row(
        "equality i+/i-/eta",
        format!("{}/{}/{}{}", f.positive, f.negative, f.nullity,
                if r.equality_judged() { "" } else { " (not judged: isolated vertices)" }),
    );
    let verdict = match r.extremal.reason {
        None => "true".to_string(),
        Some(reason) => format!("false ({reason})"),
    };
    row("extremal family", verdict);
    out
}

fn crosstab_record(name: &str, t: &CrossTab) -> String {
    format!(
        "census theorem={name} attained_extremal={} attained_not_extremal={} missed_extremal={} missed_not_extremal={}",
        t.attained_extremal, t.attained_not_extremal, t.missed_extremal, t.missed_not_extremal
    )
}

/// Machine-readable suite summary: a `summary` line, per-order lines,
/// census lines, then one `violation` line per failing graph.
pub fn summary_records(s: &SuiteSummary) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "summary max_n={} connected_only={} graphs={} signatures={} unions={} lemma_checks={} violations={} truncated={}",
        s.max_n, s.connected_only, s.graphs_checked, s.signatures_checked, s.unions_checked,
        s.lemma_checks, s.violations.len(), s.truncated
    )
    .unwrap();
    for (n, o) in &s.per_order {
        writeln!(out, "order n={n} skeletons={} signatures={}", o.skeletons, o.signatures).unwrap();
    }
    writeln!(out, "{}", crosstab_record("positive", &s.census.positive)).unwrap();
    writeln!(out, "{}", crosstab_record("negative", &s.census.negative)).unwrap();
    writeln!(out, "{}", crosstab_record("nullity", &s.census.nullity)).unwrap();
    writeln!(
        out,
        "census strict_positive={} strict_negative={} strict_nullity={}",
        s.census.strict_positive, s.census.strict_negative, s.census.strict_nullity
    )
    .unwrap();
    for case in &s.census.cases {
        writeln!(out, "equality {}", report_record(case)).unwrap();
    }
    for v in &s.violations {
        writeln!(out, "violation reasons={} {}", v.reasons.join("|").replace(' ', "_"), report_record(&v.report)).unwrap();
    }
    out
}

/// Human-readable suite summary.
pub fn summary_table(s: &SuiteSummary) -> String {
    let mut out = String::new();
    writeln!(out, "exhaustive verification, orders 2..={} ({})", s.max_n,
             if s.connected_only { "connected skeletons" } else { "all skeletons" }).unwrap();
    writeln!(out, "{:>4} {:>10} {:>12}", "n", "skeletons", "signatures").unwrap();
    for (n, o) in &s.per_order {
        writeln!(out, "{n:>4} {:>10} {:>12}", o.skeletons, o.signatures).unwrap();
    }
    writeln!(out, "random disjoint unions: {}", s.unions_checked).unwrap();
    writeln!(out, "lemma instances: {}", s.lemma_checks).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "equality census (graphs with all components of order >= 2)").unwrap();
    writeln!(out, "{:<10} {:>10} {:>14} {:>10} {:>14}", "bound", "eq&extr", "eq&not-extr", "extr&neq", "neither").unwrap();
    for (name, t) in [("i+", &s.census.positive), ("i-", &s.census.negative), ("eta", &s.census.nullity)] {
        writeln!(out, "{name:<10} {:>10} {:>14} {:>10} {:>14}", t.attained_extremal,
                 t.attained_not_extremal, t.missed_extremal, t.missed_not_extremal).unwrap();
    }
    writeln!(out, "strict-bound equality (data only): i+ {}, i- {}, eta {}",
             s.census.strict_positive, s.census.strict_negative, s.census.strict_nullity).unwrap();
    for case in &s.census.cases {
        let spec: Vec<String> = case.extremal.components.iter().map(|c| c.to_string()).collect();
        writeln!(out, "  equality: {} [{}]", sg_token(&case.graph), spec.join(" + ")).unwrap();
    }
    writeln!(out).unwrap();
    if s.truncated {
        writeln!(out, "TRUNCATED: signature cap reached").unwrap();
    }
    if s.violations.is_empty() {
        writeln!(out, "checked {} signed graphs: no violations", s.signatures_checked).unwrap();
    } else {
        writeln!(out, "{} VIOLATIONS", s.violations.len()).unwrap();
        for v in &s.violations {
            writeln!(out, "  {} : {}", sg_token(&v.report.graph), v.reasons.join(", ")).unwrap();
        }
    }
    out
}
