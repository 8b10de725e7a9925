//! Small-graph enumeration up to isomorphism, and switching-class
//! signature representatives.
//!
//! Graphs on `k` vertices are produced by attaching a new vertex, with every
//! possible neighborhood, to each isomorphism class on `k − 1` vertices and
//! keeping one canonical form per class. Connected graphs always have a
//! non-cut vertex, so extending connected classes by a nonempty
//! neighborhood reaches every connected class.

use std::collections::BTreeSet;

use crate::error::{invalid, Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::structure::non_forest_edges;

/// Largest order the enumerator accepts.
pub const ENUMERATION_CAP: usize = 8;

/// Packed upper-triangle adjacency: the pair `(i, j)`, `i < j`, in
/// lexicographic position `k` occupies bit `M − 1 − k`, so comparing codes
/// compares the adjacency bit-strings lexicographically.
pub type GraphCode = u64;

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j < n);
    let m = n * (n - 1) / 2;
    let k = i * (2 * n - i - 1) / 2 + (j - i - 1);
    (m - 1 - k) as u32
}

fn encode(n: usize, adj: &[u32], label: &[usize]) -> GraphCode {
    let mut code = 0;
    for u in 0..n {
        let mut rest = adj[u] >> (u + 1);
        let mut v = u + 1;
        while rest != 0 {
            if rest & 1 == 1 {
                let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
                code |= 1 << pair_bit(n, a, b);
            }
            rest >>= 1;
            v += 1;
        }
    }
    code
}

fn decode(n: usize, code: GraphCode) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn adjacency_masks(g: &SignedGraph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &(w, _)| m | 1 << w))
        .collect()
}

/// Splits cells by neighbor counts into other cells until stable. The
/// result depends only on the partition, never on vertex labels.
fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    'restart: loop {
        for w in 0..cells.len() {
            let wmask = cells[w].iter().fold(0u32, |m, &v| m | 1 << v);
            for x in 0..cells.len() {
                if cells[x].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[x]
                    .iter()
                    .map(|&v| ((adj[v] & wmask).count_ones(), v))
                    .collect();
                if keyed.iter().all(|k| k.0 == keyed[0].0) {
                    continue;
                }
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (count, v) in keyed {
                    if last != Some(count) {
                        parts.push(Vec::new());
                        last = Some(count);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(x..=x, parts);
                continue 'restart;
            }
        }
        return;
    }
}

fn search(n: usize, adj: &[u32], mut cells: Vec<Vec<usize>>, best: &mut Option<GraphCode>) {
    refine(adj, &mut cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let mut label = vec![0; n];
            for (pos, cell) in cells.iter().enumerate() {
                label[cell[0]] = pos;
            }
            let code = encode(n, adj, &label);
            if best.is_none_or(|b| code < b) {
                *best = Some(code);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = Vec::with_capacity(cells.len() + 1);
                next.extend_from_slice(&cells[..i]);
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search(n, adj, next, best);
            }
        }
    }
}

fn canonical_code_of_masks(n: usize, adj: &[u32]) -> GraphCode {
    if n <= 1 {
        return 0;
    }
    let mut best = None;
    search(n, adj, vec![(0..n).collect()], &mut best);
    best.unwrap()
}

/// Canonical code of the underlying graph of `g`: equal for two graphs iff
/// they are isomorphic (signs ignored). Requires `g.order() <= 11`.
pub fn canonical_code(g: &SignedGraph) -> Result<GraphCode> {
    if g.order() > 11 {
        return Err(invalid("canonical codes are limited to 11 vertices"));
    }
    Ok(canonical_code_of_masks(g.order(), &adjacency_masks(g)))
}

/// The all-positive graph with the given code.
pub fn graph_from_code(n: usize, code: GraphCode) -> SignedGraph {
    let adj = decode(n, code);
    SignedGraph::new(
        n,
        (0..n).flat_map(|i| {
            let row = adj[i];
            ((i + 1)..n)
                .filter(move |&j| row >> j & 1 == 1)
                .map(move |j| (i, j, Sign::Positive))
        }),
    )
    .expect("decoded adjacency is simple")
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("enumeration needs at least one vertex"));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            requested: n,
            cap: ENUMERATION_CAP,
            guidance: "exhaustive enumeration beyond 8 vertices is not supported; sample instead",
        });
    }
    Ok(())
}

/// Sorted canonical codes of all graphs (or all connected graphs) on `n`
/// vertices.
pub fn enumerate_codes(n: usize, connected_only: bool) -> Result<Vec<GraphCode>> {
    check_order(n)?;
    let mut level: BTreeSet<GraphCode> = BTreeSet::from([0]);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let mut adj = decode(k - 1, code);
            adj.push(0);
            let first = if connected_only { 1 } else { 0 };
            for nbrs in first..(1u32 << (k - 1)) {
                adj[k - 1] = nbrs;
                for (v, row) in adj.iter_mut().enumerate().take(k - 1) {
                    *row = (*row & !(1 << (k - 1))) | ((nbrs >> v & 1) << (k - 1));
                }
                next.insert(canonical_code_of_masks(k, &adj));
            }
        }
        level = next;
    }
    Ok(level.into_iter().collect())
}

/// One all-positive representative per isomorphism class of simple graphs
/// on `n` vertices, ordered by canonical code.
pub fn enumerate_underlying_graphs(n: usize, connected_only: bool) -> Result<Vec<SignedGraph>> {
    Ok(enumerate_codes(n, connected_only)?
        .into_iter()
        .map(|c| graph_from_code(n, c))
        .collect())
}

/// Iterator over the 2^θ signatures that are positive on a fixed BFS
/// spanning forest. Every signature of the skeleton is switching
/// equivalent to exactly one of them.
#[derive(Debug, Clone)]
pub struct SignatureRepresentatives {
    skeleton: SignedGraph,
    free_edges: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl SignatureRepresentatives {
    pub fn total(&self) -> u64 {
        self.end
    }

    /// The representative with the given bitmask over the non-forest edges.
    pub fn nth_signature(&self, mask: u64) -> SignedGraph {
        let free = &self.free_edges;
        self.skeleton.map_signs(|u, v, _| match free.binary_search(&(u, v)) {
            Ok(k) if mask >> k & 1 == 1 => Sign::Negative,
            _ => Sign::Positive,
        })
    }
}

impl Iterator for SignatureRepresentatives {
    type Item = SignedGraph;

    fn next(&mut self) -> Option<SignedGraph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.nth_signature(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

/// Switching-class representatives of all signatures on the underlying
/// graph of `g`.
pub fn signature_representatives(g: &SignedGraph) -> Result<SignatureRepresentatives> {
    let free_edges = non_forest_edges(g);
    if free_edges.len() >= 63 {
        return Err(invalid(format!(
            "cyclomatic number {} is too large to enumerate signatures",
            free_edges.len()
        )));
    }
    Ok(SignatureRepresentatives {
        end: 1 << free_edges.len(),
        skeleton: g.map_signs(|_, _, _| Sign::Positive),
        free_edges,
        next: 0,
    })
}
