//! Signed cycles and paths, their closed-form inertia, and the recognizer
//! for the graphs attaining the lower bounds with equality.

use std::fmt;

use crate::error::{invalid, Result};
use crate::graph::{Sign, SignedGraph};
use crate::inertia::Inertia;
use crate::structure::is_balanced;

/// A signed cycle up to switching: its length and whether it is balanced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleSpec {
    length: usize,
    balanced: bool,
}

impl CycleSpec {
    pub fn new(length: usize, balanced: bool) -> Result<Self> {
        if length < 3 {
            return Err(invalid(format!("a cycle needs length at least 3, got {length}")));
        }
        Ok(CycleSpec { length, balanced })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn balanced(&self) -> bool {
        self.balanced
    }

    /// Balanced with length ≡ 0 (mod 4), or unbalanced with length ≡ 2.
    pub fn is_extremal(&self) -> bool {
        matches!((self.length % 4, self.balanced), (0, true) | (2, false))
    }
}

impl fmt::Display for CycleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.balanced { "balanced" } else { "unbalanced" };
        write!(f, "C{}({tag})", self.length)
    }
}

/// Cycle 0–1–…–(n−1)–0, all positive, except the closing edge (n−1, 0)
/// when the spec is unbalanced.
pub fn make_cycle(spec: CycleSpec) -> SignedGraph {
    let n = spec.length;
    SignedGraph::new(
        n,
        (0..n).map(|i| {
            let s = if !spec.balanced && i == n - 1 { Sign::Negative } else { Sign::Positive };
            (i, (i + 1) % n, s)
        }),
    )
    .expect("cycle edges are valid")
}

/// All-positive path 0–1–…–(n−1).
pub fn make_path(n: usize) -> Result<SignedGraph> {
    if n == 0 {
        return Err(invalid("a path needs at least one vertex"));
    }
    SignedGraph::new(n, (1..n).map(|i| (i - 1, i, Sign::Positive)))
}

/// Inertia of a signed cycle, by residue of the length mod 4.
pub fn cycle_inertia_formula(spec: CycleSpec) -> Inertia {
    let n = spec.length;
    let h = n / 2;
    let (pos, neg) = match (spec.balanced, n % 4) {
        (true, 0) | (false, 2) => (h - 1, h - 1),
        (true, 2) | (false, 0) => (h, h),
        (true, 1) | (false, 3) => (h + 1, h),
        (true, 3) | (false, 1) => (h, h + 1),
        _ => unreachable!(),
    };
    Inertia::new(pos, neg, n - pos - neg)
}

/// Inertia of a signed path on `n` vertices: (⌊n/2⌋, ⌊n/2⌋, n mod 2).
pub fn path_inertia_formula(n: usize) -> Result<Inertia> {
    if n == 0 {
        return Err(invalid("a path needs at least one vertex"));
    }
    Ok(Inertia::new(n / 2, n / 2, n % 2))
}

/// Why a graph is not in the extremal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NotExtremal {
    IsolatedVertex,
    ComponentNotCycle,
    WrongResidue,
}

impl NotExtremal {
    pub fn code(self) -> &'static str {
        match self {
            NotExtremal::IsolatedVertex => "isolated-vertex",
            NotExtremal::ComponentNotCycle => "component-not-cycle",
            NotExtremal::WrongResidue => "wrong-residue",
        }
    }
}

impl fmt::Display for NotExtremal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalCertificate {
    /// Cycle descriptions of the components that are cycles, in component
    /// order. Complete when the verdict is true.
    pub components: Vec<CycleSpec>,
    pub verdict: bool,
    /// The first failing condition, in component order.
    pub reason: Option<NotExtremal>,
}

/// Decides whether `g` is a disjoint union of cycles, each balanced of
/// length ≡ 0 (mod 4) or unbalanced of length ≡ 2 (mod 4).
///
/// Only component balance is consulted, never individual edge signs.
pub fn is_extremal_family(g: &SignedGraph) -> ExtremalCertificate {
    let mut components = Vec::new();
    let mut reason = None;
    for comp in g.connected_components() {
        let failure = if comp.len() < 2 {
            Some(NotExtremal::IsolatedVertex)
        } else if comp.len() < 3 || comp.iter().any(|&v| g.neighbors(v).len() != 2) {
            Some(NotExtremal::ComponentNotCycle)
        } else {
            let (sub, _) = g.induced_subgraph(&comp).expect("component vertices are valid");
            let spec = CycleSpec::new(comp.len(), is_balanced(&sub)).expect("length >= 3");
            components.push(spec);
            (!spec.is_extremal()).then_some(NotExtremal::WrongResidue)
        };
        if reason.is_none() {
            reason = failure;
        }
    }
    ExtremalCertificate {
        components,
        verdict: reason.is_none(),
        reason,
    }
}
