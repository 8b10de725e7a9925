//! Signed-graph data model and the purely combinatorial parameters.
//!
//! Vertices are dense indices `0..n`. Every edge carries a [`Sign`], which is
//! also the corresponding entry of the signed adjacency matrix.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use crate::error::{invalid, Error, Result};

/// Edge sign, stored as the matrix entry it stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Sign {
    Negative = -1,
    Positive = 1,
}

impl Sign {
    pub fn value(self) -> i8 {
        self as i8
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A simple undirected graph with a ±1 sign on every edge.
///
/// Immutable after construction. Neighbor lists are kept sorted, so edge
/// lookup is a binary search and `sign(u, v) == sign(v, u)` by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    neighbors: Vec<Vec<(usize, Sign)>>,
    size: usize,
}

impl SignedGraph {
    /// Builds a graph on `order` vertices, rejecting self-loops, parallel
    /// edges and out-of-range endpoints.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut neighbors: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); order];
        let mut size = 0;
        for (u, v, s) in edges {
            if u >= order || v >= order {
                return Err(invalid(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{order}"
                )));
            }
            if u == v {
                return Err(invalid(format!("self-loop at vertex {u}")));
            }
            neighbors[u].push((v, s));
            neighbors[v].push((u, s));
            size += 1;
        }
        for (u, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(invalid(format!("parallel edge ({u}, {})", w[0].0)));
            }
        }
        Ok(SignedGraph { neighbors, size })
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        SignedGraph {
            neighbors: vec![Vec::new(); order],
            size: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(invalid(format!(
                "vertex {v} out of range for a graph of order {}",
                self.order()
            )))
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.neighbors[v].len())
    }

    /// Sorted `(neighbor, sign)` pairs of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.neighbors[v]
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let list = self.neighbors.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    /// Edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&(v, _)| v > u)
                .map(move |&(v, s)| (u, v, s))
        })
    }

    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.neighbors[v].len() == 1)
            .collect()
    }

    /// p(Γ): the number of degree-1 vertices.
    pub fn pendant_count(&self) -> usize {
        self.neighbors.iter().filter(|l| l.len() == 1).count()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &(w, _) in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// θ = |E| − |V| + c.
    pub fn cyclomatic_number(&self) -> usize {
        self.size + self.component_count() - self.order()
    }

    /// Induced subgraph on the vertices not in `removed`.
    ///
    /// Returns the subgraph together with `kept`, where `kept[i]` is the
    /// original index of new vertex `i`.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        let n = self.order();
        let mut gone = vec![false; n];
        for &v in removed {
            self.check_vertex(v)?;
            gone[v] = true;
        }
        Ok(self.induced(|v| !gone[v]))
    }

    /// Induced subgraph on the given vertices (any order, duplicates ignored).
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(SignedGraph, Vec<usize>)> {
        let n = self.order();
        let mut kept = vec![false; n];
        for &v in keep {
            self.check_vertex(v)?;
            kept[v] = true;
        }
        Ok(self.induced(|v| kept[v]))
    }

    fn induced(&self, keep: impl Fn(usize) -> bool) -> (SignedGraph, Vec<usize>) {
        let n = self.order();
        let mut new_index = vec![usize::MAX; n];
        let mut kept = Vec::new();
        for (v, slot) in new_index.iter_mut().enumerate() {
            if keep(v) {
                *slot = kept.len();
                kept.push(v);
            }
        }
        let mut neighbors = Vec::with_capacity(kept.len());
        let mut degree_sum = 0;
        for &old in &kept {
            let list: Vec<(usize, Sign)> = self.neighbors[old]
                .iter()
                .filter(|&&(w, _)| new_index[w] != usize::MAX)
                .map(|&(w, s)| (new_index[w], s))
                .collect();
            degree_sum += list.len();
            neighbors.push(list);
        }
        let graph = SignedGraph {
            neighbors,
            size: degree_sum / 2,
        };
        (graph, kept)
    }

    /// Same underlying graph with each edge sign replaced by `f(u, v, sign)`.
    pub fn map_signs(&self, mut f: impl FnMut(usize, usize, Sign) -> Sign) -> SignedGraph {
        let edges: Vec<_> = self.edges().map(|(u, v, s)| (u, v, f(u, v, s))).collect();
        let mut neighbors: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); self.order()];
        for (u, v, s) in edges {
            neighbors[u].push((v, s));
            neighbors[v].push((u, s));
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        SignedGraph {
            neighbors,
            size: self.size,
        }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.order();
        let mut neighbors = self.neighbors.clone();
        neighbors.extend(
            other
                .neighbors
                .iter()
                .map(|l| l.iter().map(|&(w, s)| (w + shift, s)).collect()),
        );
        SignedGraph {
            neighbors,
            size: self.size + other.size,
        }
    }

    /// Lemma quantities `(d, s, m, r)` for vertex `x` of a connected graph.
    pub fn vertex_local_stats(&self, x: usize) -> Result<VertexLocalStats> {
        self.check_vertex(x)?;
        if self.order() < 2 {
            return Err(Error::Precondition(
                "vertex statistics need a graph of order at least 2".into(),
            ));
        }
        if !self.is_connected() {
            return Err(Error::Precondition(
                "vertex statistics need a connected graph".into(),
            ));
        }
        let (rest, kept) = self.delete_vertices(&[x])?;
        let comps = rest.connected_components();
        let mut comp_of = vec![usize::MAX; self.order()];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[kept[v]] = ci;
            }
        }
        let two_degree: Vec<usize> = self.neighbors[x]
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| self.neighbors[w].len() == 2)
            .collect();
        let mut touched: Vec<usize> = two_degree.iter().map(|&w| comp_of[w]).collect();
        touched.sort_unstable();
        touched.dedup();
        Ok(VertexLocalStats {
            vertex: x,
            degree: self.neighbors[x].len(),
            components_after_deletion: comps.len(),
            two_degree_neighbors: two_degree.len(),
            components_with_two_degree_neighbors: touched.len(),
        })
    }
}

/// Local quantities around a vertex `x` of a connected signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexLocalStats {
    pub vertex: usize,
    /// d(x)
    pub degree: usize,
    /// s: components of Γ − x
    pub components_after_deletion: usize,
    /// m: neighbors of x having degree 2 in Γ
    pub two_degree_neighbors: usize,
    /// r: components of Γ − x containing one of those neighbors
    pub components_with_two_degree_neighbors: usize,
}

impl VertexLocalStats {
    /// d(x) ≥ m + s − r
    pub fn degree_inequality_holds(&self) -> bool {
        self.degree + self.components_with_two_degree_neighbors
            >= self.two_degree_neighbors + self.components_after_deletion
    }
}
