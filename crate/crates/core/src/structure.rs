//! Cycle signs, balance, switching, negation, blocks and the contraction
//! tree of a cycle-disjoint signed graph.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::graph::{Sign, SignedGraph};

/// A cycle of a host graph together with its sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    /// Cyclic vertex sequence; the closing edge is `last -> first`.
    pub vertices: Vec<usize>,
    pub sign: Sign,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.sign.is_positive()
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}{}[", self.vertices.len(), self.sign)?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Product of the edge signs around `cycle`, after checking that it is a
/// cycle of `g` (length ≥ 3, distinct vertices, consecutive ones adjacent).
pub fn cycle_sign(g: &SignedGraph, cycle: &[usize]) -> Result<Sign> {
    if cycle.len() < 3 {
        return Err(invalid(format!("a cycle needs at least 3 vertices, got {}", cycle.len())));
    }
    let distinct: BTreeSet<_> = cycle.iter().collect();
    if distinct.len() != cycle.len() {
        return Err(invalid("cycle repeats a vertex"));
    }
    let mut sign = Sign::Positive;
    for (i, &u) in cycle.iter().enumerate() {
        let v = cycle[(i + 1) % cycle.len()];
        let s = g
            .sign(u, v)
            .ok_or_else(|| invalid(format!("{u} and {v} are not adjacent")))?;
        sign = sign * s;
    }
    Ok(sign)
}

/// Returns a ±1 potential `p` with `sign(uv) = p(u)·p(v)` on every edge, or
/// `None` when no such potential exists.
pub fn balancing_potential(g: &SignedGraph) -> Option<Vec<Sign>> {
    let n = g.order();
    let mut potential: Vec<Option<Sign>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Positive);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let pu = potential[u].unwrap();
            for &(w, s) in g.neighbors(u) {
                let want = pu * s;
                match potential[w] {
                    None => {
                        potential[w] = Some(want);
                        queue.push_back(w);
                    }
                    Some(pw) if pw != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(potential.into_iter().map(Option::unwrap).collect())
}

/// True iff every cycle is positive.
pub fn is_balanced(g: &SignedGraph) -> bool {
    balancing_potential(g).is_some()
}

/// BFS spanning forest: `parent[v]` is `None` for roots.
fn spanning_forest(g: &SignedGraph) -> Vec<Option<usize>> {
    let n = g.order();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
    }
    parent
}

/// Edges `(u, v)` with `u < v` that are not in the BFS spanning forest used
/// by [`fundamental_cycles`], in lexicographic order. There are exactly θ.
pub fn non_forest_edges(g: &SignedGraph) -> Vec<(usize, usize)> {
    let parent = spanning_forest(g);
    g.edges()
        .filter(|&(u, v, _)| parent[v] != Some(u) && parent[u] != Some(v))
        .map(|(u, v, _)| (u, v))
        .collect()
}

/// One cycle per non-forest edge of a BFS spanning forest: a basis of the
/// cycle space.
pub fn fundamental_cycles(g: &SignedGraph) -> Vec<CycleWitness> {
    let parent = spanning_forest(g);
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while let Some(p) = parent[v] {
            path.push(p);
            v = p;
        }
        path
    };
    non_forest_edges(g)
        .into_iter()
        .map(|(u, v)| {
            let pu = path_to_root(u);
            let pv = path_to_root(v);
            let on_pv: BTreeSet<usize> = pv.iter().copied().collect();
            let meet = pu.iter().position(|x| on_pv.contains(x)).unwrap();
            let lca = pu[meet];
            let mut vertices: Vec<usize> = pu[..=meet].to_vec();
            let back = pv.iter().position(|&x| x == lca).unwrap();
            vertices.extend(pv[..back].iter().rev());
            let sign = cycle_sign(g, &vertices).expect("fundamental cycle is a cycle");
            CycleWitness { vertices, sign }
        })
        .collect()
}

/// Negates every edge with exactly one endpoint in `set`.
pub fn switch(g: &SignedGraph, set: &[usize]) -> Result<SignedGraph> {
    let mut inside = vec![false; g.order()];
    for &v in set {
        if v >= g.order() {
            return Err(invalid(format!("vertex {v} out of range")));
        }
        inside[v] = true;
    }
    Ok(g.map_signs(|u, v, s| if inside[u] != inside[v] { s.flip() } else { s }))
}

/// −Γ: every edge sign flipped.
pub fn negate(g: &SignedGraph) -> SignedGraph {
    g.map_signs(|_, _, s| s.flip())
}

/// Blocks (maximal 2-connected subgraphs and bridges) and cut vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Each block as a sorted vertex set; blocks sorted. Isolated vertices
    /// belong to no block.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    /// θ of each block: its edge count minus its order plus one.
    pub fn block_cyclomatic_numbers(&self, g: &SignedGraph) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|b| {
                let edges = b
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &u)| b[i + 1..].iter().map(move |&v| (u, v)))
                    .filter(|&(u, v)| g.has_edge(u, v))
                    .count();
                edges + 1 - b.len()
            })
            .collect()
    }
}

struct BlockSearch<'a> {
    g: &'a SignedGraph,
    time: usize,
    disc: Vec<usize>,
    low: Vec<usize>,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl BlockSearch<'_> {
    const UNSEEN: usize = usize::MAX;

    fn dfs(&mut self, u: usize, parent: Option<usize>) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for &(w, _) in self.g.neighbors(u) {
            if Some(w) == parent {
                continue;
            }
            if self.disc[w] == Self::UNSEEN {
                children += 1;
                self.edge_stack.push((u, w));
                self.dfs(w, Some(u));
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[u] = true;
                    }
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block.into_iter().collect());
                }
            } else if self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
    }
}

/// Hopcroft–Tarjan biconnected components.
pub fn block_decomposition(g: &SignedGraph) -> BlockDecomposition {
    let n = g.order();
    let mut search = BlockSearch {
        g,
        time: 0,
        disc: vec![BlockSearch::UNSEEN; n],
        low: vec![0; n],
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for v in 0..n {
        if search.disc[v] == BlockSearch::UNSEEN {
            search.dfs(v, None);
        }
    }
    let mut blocks = search.blocks;
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| search.is_cut[v]).collect(),
    }
}

/// True iff no two distinct cycles share a vertex: every block has
/// cyclomatic number at most 1 and no vertex lies on two cyclic blocks.
pub fn is_cycle_disjoint(g: &SignedGraph) -> bool {
    cyclic_blocks(g).is_some()
}

/// The blocks with cyclomatic number 1, or `None` when some block has more
/// or two such blocks meet in a (cut) vertex.
fn cyclic_blocks(g: &SignedGraph) -> Option<Vec<Vec<usize>>> {
    let decomposition = block_decomposition(g);
    let thetas = decomposition.block_cyclomatic_numbers(g);
    let mut on_cycle = vec![false; g.order()];
    let mut cyclic = Vec::new();
    for (block, theta) in decomposition.blocks.into_iter().zip(thetas) {
        match theta {
            0 => {}
            1 => {
                for &v in &block {
                    if std::mem::replace(&mut on_cycle[v], true) {
                        return None;
                    }
                }
                cyclic.push(block);
            }
            _ => return None,
        }
    }
    Some(cyclic)
}

/// True iff two distinct cycles of `g` have a common vertex.
pub fn has_intersecting_cycles(g: &SignedGraph) -> bool {
    !is_cycle_disjoint(g)
}

/// A node of the contraction tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeNode {
    /// A host vertex lying on no cycle.
    Vertex(usize),
    /// A contracted cycle.
    Cycle(CycleWitness),
}

impl fmt::Display for TreeNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeNode::Vertex(v) => write!(f, "v{v}"),
            TreeNode::Cycle(c) => write!(f, "{c}"),
        }
    }
}

/// The tree obtained from a connected cycle-disjoint graph by contracting
/// every cycle into a single node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionTree {
    /// Ordered by the smallest host vertex each node covers.
    pub nodes: Vec<TreeNode>,
    /// Pairs of node indices `(a, b)` with `a < b`, sorted.
    pub edges: Vec<(usize, usize)>,
    /// `mapping[v]` is the node containing host vertex `v`.
    pub mapping: Vec<usize>,
}

impl ContractionTree {
    pub fn cycle_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, TreeNode::Cycle(_)))
            .count()
    }

    /// Connected with |edges| = |nodes| − 1.
    pub fn is_tree(&self) -> bool {
        let k = self.nodes.len();
        if k == 0 || self.edges.len() != k - 1 {
            return false;
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    count += 1;
                    stack.push(b);
                }
            }
        }
        count == k
    }
}

/// Orders the vertices of a cycle block cyclically, starting at its
/// smallest vertex.
fn walk_cycle(g: &SignedGraph, block: &[usize]) -> Vec<usize> {
    let in_block = |v: usize| block.binary_search(&v).is_ok();
    let start = block[0];
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .map(|&(w, _)| w)
            .find(|&w| w != prev && in_block(w) && (w != start || order.len() == block.len()))
            .expect("a cycle block is 2-regular within itself");
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Contracts each cycle of a connected cycle-disjoint graph to one node.
pub fn contraction_tree(g: &SignedGraph) -> Result<ContractionTree> {
    if g.is_empty() {
        return Err(Error::Precondition("contraction tree of the empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("contraction tree needs a connected graph".into()));
    }
    let blocks = cyclic_blocks(g).ok_or_else(|| {
        Error::UnsupportedStructure(
            "graph is not cycle-disjoint: two distinct cycles share a vertex".into(),
        )
    })?;

    let n = g.order();
    let mut cycle_of = vec![None; n];
    let mut cycles = Vec::new();
    for block in &blocks {
        let vertices = walk_cycle(g, block);
        let sign = cycle_sign(g, &vertices)?;
        for &v in &vertices {
            cycle_of[v] = Some(cycles.len());
        }
        cycles.push(CycleWitness { vertices, sign });
    }

    let mut nodes = Vec::new();
    let mut mapping = vec![usize::MAX; n];
    let mut cycle_node = vec![usize::MAX; cycles.len()];
    for v in 0..n {
        mapping[v] = match cycle_of[v] {
            None => {
                nodes.push(TreeNode::Vertex(v));
                nodes.len() - 1
            }
            Some(c) => {
                if cycle_node[c] == usize::MAX {
                    nodes.push(TreeNode::Cycle(cycles[c].clone()));
                    cycle_node[c] = nodes.len() - 1;
                }
                cycle_node[c]
            }
        };
    }

    let edges: BTreeSet<(usize, usize)> = g
        .edges()
        .map(|(u, v, _)| (mapping[u], mapping[v]))
        .filter(|(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    let tree = ContractionTree {
        nodes,
        edges: edges.into_iter().collect(),
        mapping,
    };
    if !tree.is_tree() {
        return Err(Error::UnsupportedStructure(
            "contracted graph is not a tree".into(),
        ));
    }
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    fn graph(n: usize, edges: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn unsigned(n: usize, edges: &[(usize, usize)]) -> SignedGraph {
        SignedGraph::new(n, edges.iter().map(|&(u, v)| (u, v, Positive))).unwrap()
    }

    fn bowtie() -> SignedGraph {
        unsigned(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
    }

    fn cycle(n: usize) -> SignedGraph {
        unsigned(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn cycle_signs() {
        let c3 = cycle(3);
        assert_eq!(cycle_sign(&c3, &[0, 1, 2]).unwrap(), Positive);
        let c3m = graph(3, &[(0, 1, Positive), (1, 2, Positive), (0, 2, Negative)]);
        assert_eq!(cycle_sign(&c3m, &[0, 1, 2]).unwrap(), Negative);
        let c4 = graph(4, &[(0, 1, Negative), (1, 2, Positive), (2, 3, Negative), (0, 3, Positive)]);
        assert_eq!(cycle_sign(&c4, &[0, 1, 2, 3]).unwrap(), Positive);
        assert!(cycle_sign(&c4, &[0, 1, 3]).is_err());
        assert!(cycle_sign(&c4, &[0, 1]).is_err());
        assert!(cycle_sign(&c4, &[0, 1, 2, 1]).is_err());
    }

    #[test]
    fn balance() {
        assert!(is_balanced(&bowtie()));
        let tree = graph(4, &[(0, 1, Negative), (1, 2, Negative), (1, 3, Positive)]);
        assert!(is_balanced(&tree));
        let c5 = graph(5, &[(0, 1, Positive), (1, 2, Positive), (2, 3, Positive), (3, 4, Positive), (0, 4, Negative)]);
        assert!(!is_balanced(&c5));
    }

    #[test]
    fn switching() {
        let c4 = graph(4, &[(0, 1, Negative), (1, 2, Positive), (2, 3, Positive), (0, 3, Positive)]);
        assert_eq!(switch(&c4, &[]).unwrap(), c4);
        assert_eq!(switch(&c4, &[0, 1, 2, 3]).unwrap(), c4);
        let e = graph(2, &[(0, 1, Positive)]);
        assert_eq!(switch(&e, &[0]).unwrap(), graph(2, &[(0, 1, Negative)]));
        assert!(switch(&e, &[2]).is_err());
    }

    #[test]
    fn negation() {
        let c4 = cycle(4);
        let n4 = negate(&c4);
        assert!(n4.edges().all(|(_, _, s)| s == Negative));
        assert!(is_balanced(&n4));
        assert_eq!(negate(&n4), c4);
        assert!(!is_balanced(&negate(&cycle(3))));
    }

    #[test]
    fn blocks() {
        let d = block_decomposition(&bowtie());
        assert_eq!(d.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(d.cut_vertices, vec![0]);

        let tree = unsigned(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]);
        let d = block_decomposition(&tree);
        assert_eq!(d.blocks, vec![vec![0, 1], vec![1, 2], vec![1, 3], vec![3, 4]]);
        assert_eq!(d.cut_vertices, vec![1, 3]);

        let d = block_decomposition(&cycle(6));
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4, 5]]);
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn cycle_disjointness() {
        assert!(!is_cycle_disjoint(&bowtie()));
        let unicyclic = unsigned(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        assert!(is_cycle_disjoint(&unicyclic));
        let k4 = unsigned(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(!is_cycle_disjoint(&k4));
        assert_eq!(block_decomposition(&k4).block_cyclomatic_numbers(&k4), vec![3]);
        // edge-disjoint triangles joined by a bridge are vertex-disjoint
        let bridged = unsigned(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        assert!(is_cycle_disjoint(&bridged));
    }

    #[test]
    fn fundamental_cycles_are_cycles() {
        let k4 = unsigned(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let basis = fundamental_cycles(&k4);
        assert_eq!(basis.len(), 3);
        for c in &basis {
            assert!(c.len() >= 3);
            assert_eq!(cycle_sign(&k4, &c.vertices).unwrap(), c.sign);
        }
    }

    #[test]
    fn contraction_single_cycle() {
        let t = contraction_tree(&cycle(5)).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert!(t.edges.is_empty());
        assert_eq!(t.cycle_count(), 1);
        assert_eq!(t.mapping, vec![0; 5]);
    }

    #[test]
    fn contraction_bridged_triangles() {
        let g = unsigned(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
        let t = contraction_tree(&g).unwrap();
        assert_eq!(t.nodes.len(), 2);
        assert_eq!(t.edges, vec![(0, 1)]);
    }

    #[test]
    fn contraction_pendant_path() {
        let g = unsigned(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let t = contraction_tree(&g).unwrap();
        assert_eq!(t.nodes.len(), 3);
        assert_eq!(t.edges, vec![(0, 1), (1, 2)]);
        assert_eq!(t.nodes[1], TreeNode::Vertex(4));
        match &t.nodes[0] {
            TreeNode::Cycle(c) => assert_eq!(c.vertices, vec![0, 1, 2, 3]),
            other => panic!("expected a cycle node, got {other}"),
        }
    }

    #[test]
    fn contraction_errors() {
        assert!(matches!(contraction_tree(&bowtie()), Err(Error::UnsupportedStructure(_))));
        assert!(matches!(
            contraction_tree(&unsigned(4, &[(0, 1), (2, 3)])),
            Err(Error::Precondition(_))
        ));
    }
}
