//! Per-graph theorem and lemma checkers.
//!
//! All bound comparisons are exact: bounds with halves are kept as
//! rationals.

use num_rational::Rational64;

use crate::error::{invalid, Result};
use crate::families::{is_extremal_family, ExtremalCertificate};
use crate::graph::{SignedGraph, VertexLocalStats};
use crate::inertia::{graph_inertia, inertia_by_congruence, Inertia, SymmetricExactMatrix};
use crate::structure::has_intersecting_cycles;

/// Parameters, bounds and verdicts for one signed graph.
///
/// Only raw quantities are stored; every bound, status and equality flag is
/// derived from them on demand.
///
/// Isolated vertices are set aside before judging the inequalities: they
/// add one to the order and to the nullity, and nothing else. The equality
/// characterization is only judged when there are none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub graph: SignedGraph,
    pub n: usize,
    pub edges: usize,
    pub components: usize,
    pub p: usize,
    pub theta: usize,
    pub isolated: usize,
    pub inertia: Inertia,
    /// Two distinct cycles share a vertex.
    pub intersecting_cycles: bool,
    pub extremal: ExtremalCertificate,
}

/// Pass/fail per inequality. Strict variants are `None` when they do not
/// apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TheoremStatuses {
    pub positive_weak: bool,
    pub positive_strict: Option<bool>,
    pub negative_weak: bool,
    pub negative_strict: Option<bool>,
    pub nullity_weak: bool,
    pub nullity_strict: Option<bool>,
}

impl TheoremStatuses {
    pub fn all_pass(&self) -> bool {
        self.positive_weak
            && self.negative_weak
            && self.nullity_weak
            && self.positive_strict != Some(false)
            && self.negative_strict != Some(false)
            && self.nullity_strict != Some(false)
    }
}

/// Which quantities attain their weak bound exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EqualityFlags {
    pub positive: bool,
    pub negative: bool,
    pub nullity: bool,
}

impl EqualityFlags {
    pub fn any(&self) -> bool {
        self.positive || self.negative || self.nullity
    }
}

fn rational(x: usize) -> Rational64 {
    Rational64::from_integer(x as i64)
}

impl TheoremReport {
    fn effective_order(&self) -> usize {
        self.n - self.isolated
    }

    /// η with the isolated vertices removed.
    pub fn effective_nullity(&self) -> usize {
        self.inertia.zero - self.isolated
    }

    /// (n − p)/2 − θ
    pub fn weak_bound(&self) -> Rational64 {
        Rational64::new(self.effective_order() as i64 - self.p as i64, 2) - rational(self.theta)
    }

    /// (n − p + 1)/2 − θ
    pub fn strict_bound(&self) -> Rational64 {
        Rational64::new(self.effective_order() as i64 - self.p as i64 + 1, 2) - rational(self.theta)
    }

    /// p ≥ 1, or p = 0 with two cycles sharing a vertex.
    pub fn strict_applicable(&self) -> bool {
        self.p >= 1 || (self.intersecting_cycles && self.theta >= 2)
    }

    /// p + 2θ
    pub fn nullity_bound(&self) -> usize {
        self.p + 2 * self.theta
    }

    pub fn statuses(&self) -> TheoremStatuses {
        let pos = rational(self.inertia.positive);
        let neg = rational(self.inertia.negative);
        let eta = self.effective_nullity();
        let strict = self.strict_applicable();
        let sb = self.strict_bound();
        TheoremStatuses {
            positive_weak: pos >= self.weak_bound(),
            positive_strict: strict.then(|| pos >= sb),
            negative_weak: neg >= self.weak_bound(),
            negative_strict: strict.then(|| neg >= sb),
            nullity_weak: eta <= self.nullity_bound(),
            nullity_strict: strict.then(|| eta < self.nullity_bound()),
        }
    }

    pub fn equality_flags(&self) -> EqualityFlags {
        let wb = self.weak_bound();
        EqualityFlags {
            positive: rational(self.inertia.positive) == wb,
            negative: rational(self.inertia.negative) == wb,
            nullity: self.effective_nullity() == self.nullity_bound(),
        }
    }

    /// Every component has at least two vertices.
    pub fn equality_judged(&self) -> bool {
        self.isolated == 0
    }

    /// Each equality flag agrees with the extremal verdict (vacuous when
    /// equality is not judged).
    pub fn equality_consistent(&self) -> bool {
        if !self.equality_judged() {
            return true;
        }
        let f = self.equality_flags();
        let v = self.extremal.verdict;
        f.positive == v && f.negative == v && f.nullity == v
    }

    pub fn passes(&self) -> bool {
        self.statuses().all_pass() && self.equality_consistent()
    }

    /// Short names of everything that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let s = self.statuses();
        let mut out = Vec::new();
        let checks = [
            (s.positive_weak, "positive-weak"),
            (s.positive_strict != Some(false), "positive-strict"),
            (s.negative_weak, "negative-weak"),
            (s.negative_strict != Some(false), "negative-strict"),
            (s.nullity_weak, "nullity-weak"),
            (s.nullity_strict != Some(false), "nullity-strict"),
        ];
        out.extend(checks.iter().filter(|(ok, _)| !ok).map(|&(_, name)| name));
        if self.equality_judged() {
            let f = self.equality_flags();
            let v = self.extremal.verdict;
            if f.positive != v {
                out.push("positive-equality-mismatch");
            }
            if f.negative != v {
                out.push("negative-equality-mismatch");
            }
            if f.nullity != v {
                out.push("nullity-equality-mismatch");
            }
        }
        out
    }
}

/// Computes all parameters, inertia and bounds for `g` (order ≥ 2).
pub fn check_bounds(g: &SignedGraph) -> Result<TheoremReport> {
    check_bounds_with(g, graph_inertia(g))
}

/// As [`check_bounds`], reusing an inertia already computed for `g`.
pub(crate) fn check_bounds_with(g: &SignedGraph, inertia: Inertia) -> Result<TheoremReport> {
    if g.order() < 2 {
        return Err(invalid(format!(
            "bounds are stated for order at least 2, got {}",
            g.order()
        )));
    }
    Ok(TheoremReport {
        graph: g.clone(),
        n: g.order(),
        edges: g.size(),
        components: g.component_count(),
        p: g.pendant_count(),
        theta: g.cyclomatic_number(),
        isolated: (0..g.order()).filter(|&v| g.neighbors(v).is_empty()).count(),
        inertia,
        intersecting_cycles: has_intersecting_cycles(g),
        extremal: is_extremal_family(g),
    })
}

/// A failed lemma instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemmaFailure {
    /// Deleting `vertex` increased i₊ or i₋.
    Monotonicity { vertex: usize, whole: Inertia, after: Inertia },
    /// Deleting pendant `pendant` and its neighbor did not lower i₊ and i₋
    /// by exactly one each.
    PendantDeletion { pendant: usize, neighbor: usize, whole: Inertia, after: Inertia },
    /// d(x) ≥ m + s − r failed.
    DegreeInequality(VertexLocalStats),
    /// θ(Γ − x) ≠ θ(Γ) − d(x) + s.
    CyclomaticIdentity { stats: VertexLocalStats, theta: usize, theta_after: usize },
    /// Inertia is not the sum over components.
    Additivity { whole: Inertia, sum: Inertia },
}

impl std::fmt::Display for LemmaFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LemmaFailure::Monotonicity { vertex, whole, after } => {
                write!(f, "monotonicity vertex={vertex} whole={whole} after={after}")
            }
            LemmaFailure::PendantDeletion { pendant, neighbor, whole, after } => write!(
                f,
                "pendant-deletion pendant={pendant} neighbor={neighbor} whole={whole} after={after}"
            ),
            LemmaFailure::DegreeInequality(s) => write!(
                f,
                "degree-inequality vertex={} d={} s={} m={} r={}",
                s.vertex, s.degree, s.components_after_deletion, s.two_degree_neighbors,
                s.components_with_two_degree_neighbors
            ),
            LemmaFailure::CyclomaticIdentity { stats, theta, theta_after } => write!(
                f,
                "cyclomatic-identity vertex={} theta={theta} theta_after={theta_after} d={} s={}",
                stats.vertex, stats.degree, stats.components_after_deletion
            ),
            LemmaFailure::Additivity { whole, sum } => {
                write!(f, "additivity whole={whole} sum={sum}")
            }
        }
    }
}

/// Which lemma families to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaSelection {
    /// Single-vertex deletion monotonicity for every vertex.
    pub vertex_deletion: bool,
    pub pendant_deletion: bool,
    pub local_stats: bool,
    pub additivity: bool,
}

impl LemmaSelection {
    pub const ALL: LemmaSelection = LemmaSelection {
        vertex_deletion: true,
        pendant_deletion: true,
        local_stats: true,
        additivity: true,
    };
}

impl Default for LemmaSelection {
    fn default() -> Self {
        Self::ALL
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LemmaReport {
    /// Individual lemma instances evaluated.
    pub checks: u64,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs every deletion lemma on `g`.
pub fn check_deletion_lemmas(g: &SignedGraph) -> LemmaReport {
    check_deletion_lemmas_with(g, graph_inertia(g), LemmaSelection::ALL)
}

pub fn check_deletion_lemmas_with(g: &SignedGraph, whole: Inertia, select: LemmaSelection) -> LemmaReport {
    let mut report = LemmaReport::default();
    let n = g.order();

    if select.vertex_deletion {
        for x in 0..n {
            let (rest, _) = g.delete_vertices(&[x]).expect("vertex in range");
            let after = graph_inertia(&rest);
            report.checks += 1;
            if after.positive > whole.positive || after.negative > whole.negative {
                report.failures.push(LemmaFailure::Monotonicity { vertex: x, whole, after });
            }
        }
    }

    if select.pendant_deletion {
        for u in g.pendant_vertices() {
            let v = g.neighbors(u)[0].0;
            let (rest, _) = g.delete_vertices(&[u, v]).expect("vertices in range");
            let after = graph_inertia(&rest);
            report.checks += 1;
            if whole.positive != after.positive + 1
                || whole.negative != after.negative + 1
                || whole.zero != after.zero
            {
                report.failures.push(LemmaFailure::PendantDeletion { pendant: u, neighbor: v, whole, after });
            }
        }
    }

    if select.local_stats && n >= 2 && g.is_connected() {
        let theta = g.cyclomatic_number();
        for x in 0..n {
            let stats = g.vertex_local_stats(x).expect("connected, order >= 2");
            let (rest, _) = g.delete_vertices(&[x]).expect("vertex in range");
            let theta_after = rest.cyclomatic_number();
            report.checks += 2;
            if !stats.degree_inequality_holds() {
                report.failures.push(LemmaFailure::DegreeInequality(stats));
            }
            if theta_after + stats.degree != theta + stats.components_after_deletion {
                report.failures.push(LemmaFailure::CyclomaticIdentity { stats, theta, theta_after });
            }
        }
    }

    if select.additivity {
        let comps = g.connected_components();
        if comps.len() > 1 {
            let sum = comps
                .iter()
                .map(|c| graph_inertia(&g.induced_subgraph(c).expect("valid component").0))
                .fold(Inertia::default(), |a, b| a + b);
            report.checks += 1;
            if sum != whole {
                report.failures.push(LemmaFailure::Additivity { whole, sum });
            }
        }
    }
    report
}

/// Inertia-level interlacing for a principal submatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InterlacingCheck {
    pub whole: Inertia,
    pub sub: Inertia,
}

impl InterlacingCheck {
    /// i₊(B) ≤ i₊(A) and i₋(B) ≤ i₋(A).
    pub fn passes(&self) -> bool {
        self.sub.positive <= self.whole.positive && self.sub.negative <= self.whole.negative
    }
}

pub fn check_interlacing(a: &SymmetricExactMatrix, keep: &[usize]) -> Result<InterlacingCheck> {
    let b = a.principal_submatrix(keep)?;
    Ok(InterlacingCheck {
        whole: inertia_by_congruence(a),
        sub: inertia_by_congruence(&b),
    })
}
