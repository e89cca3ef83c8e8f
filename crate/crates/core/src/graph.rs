//! Simple connected undirected graphs and the generator families used
//! throughout the crate.
//!
//! Vertices are dense `0..n` ids. Every [`Graph`] is validated on
//! construction: no self-loops, no duplicate edges, and a single connected
//! component. Adjacency lists are kept sorted ascending so that every
//! traversal built on top of them is deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("empty graph: no edges given")]
    Empty,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("invalid size {n} for {family}: need at least {min}")]
    InvalidSize {
        family: &'static str,
        n: usize,
        min: usize,
    },
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

/// A simple, connected, undirected, unweighted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `vertex_count` vertices from an undirected edge list.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let graph = Graph {
            adjacency,
            edge_count: edges.len(),
        };
        let components = graph.component_count();
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }
        Ok(graph)
    }

    /// Parses the line-oriented edge-list format: two whitespace-separated
    /// vertex ids per line, `#` comments and blank lines ignored. The vertex
    /// count is one more than the largest id seen.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| GraphError::Parse {
                line: idx + 1,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(parse_err(format!(
                    "expected two vertex ids, found {} fields",
                    fields.len()
                )));
            }
            let mut ids = [0usize; 2];
            for (slot, field) in ids.iter_mut().zip(&fields) {
                *slot = field
                    .parse()
                    .map_err(|_| parse_err(format!("invalid vertex id {field:?}")))?;
            }
            edges.push((ids[0], ids[1]));
        }
        let vertex_count = edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .ok_or(GraphError::Empty)?;
        Self::from_edges(vertex_count, &edges)
    }

    /// Serializes to the edge-list format, one `u v` line per edge with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Largest vertex degree, `d` in the bound formulas.
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Undirected edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count == n * (n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.vertex_count()
    }

    /// Breadth-first distances from `source`; `usize::MAX` marks unreachable
    /// vertices (never present in a validated graph).
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.vertex_count()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> usize {
        (0..self.vertex_count())
            .map(|s| self.distances_from(s).into_iter().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    /// Sum of graph distances over all ordered pairs, the smallest total
    /// path length any routing can achieve.
    pub fn total_distance(&self) -> u64 {
        (0..self.vertex_count())
            .map(|s| self.distances_from(s).into_iter().map(|d| d as u64).sum::<u64>())
            .sum()
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        components
    }

    /// Induced subgraph on the vertex range `0..k`, which must be connected.
    pub fn induced_prefix(&self, k: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = self.edges().filter(|&(_, v)| v < k).collect();
        Self::from_edges(k, &edges)
    }
}

fn require(family: &'static str, n: usize, min: usize) -> Result<(), GraphError> {
    if n < min {
        Err(GraphError::InvalidSize { family, n, min })
    } else {
        Ok(())
    }
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    require("complete graph", n, 2)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    require("path graph", n, 2)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    require("cycle graph", n, 3)?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Star with hub 0 and `n - 1` leaves.
pub fn star_graph(n: usize) -> Result<Graph, GraphError> {
    require("star graph", n, 2)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Random tree: each vertex after the first attaches to a uniformly chosen
/// earlier vertex, then labels are shuffled.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    require("random tree", n, 2)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let edges: Vec<_> = (1..n)
        .map(|v| (labels[rng.gen_range(0..v)], labels[v]))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Erdős–Rényi style sample, then random edges joining distinct components
/// until the graph is connected.
pub fn random_connected_graph(
    n: usize,
    edge_probability: f64,
    seed: u64,
) -> Result<Graph, GraphError> {
    require("random connected graph", n, 2)?;
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(GraphError::InvalidProbability(edge_probability));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_probability) {
                edges.insert((u, v));
            }
        }
    }
    let mut uf = UnionFind::new(n);
    for &(u, v) in &edges {
        uf.union(u, v);
    }
    while uf.components > 1 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if uf.find(u) != uf.find(v) {
            uf.union(u, v);
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edges(n, &edges)
}

/// Every labeled tree on `n` vertices, decoded from all Prüfer sequences.
pub fn labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let count = if n <= 2 { 1 } else { (n as u64).pow(n as u32 - 2) };
    (0..count).map(move |mut index| {
        let mut seq = vec![0usize; n.saturating_sub(2)];
        for slot in seq.iter_mut().rev() {
            *slot = (index % n as u64) as usize;
            index /= n as u64;
        }
        tree_from_prufer(n, &seq)
    })
}

fn tree_from_prufer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("leaf exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).expect("Prüfer decoding yields a tree")
}

struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn handshake(g: &Graph) -> bool {
        (0..g.vertex_count()).map(|v| g.degree(v)).sum::<usize>() == 2 * g.edge_count()
    }

    #[test]
    fn parses_path() {
        let g = Graph::from_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parse_skips_comments_and_blanks() {
        let g = Graph::from_edge_list("# header\n\n2 0\n  # indented\n1 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Graph::from_edge_list("0 1\n2 3"),
            Err(GraphError::Disconnected { components: 2 })
        );
        assert_eq!(Graph::from_edge_list("0 0"), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list("0 1\n1 0"),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::from_edge_list("# nothing\n"), Err(GraphError::Empty));
        assert!(matches!(
            Graph::from_edge_list("0 1\n1 x"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::from_edge_list("0 1 2"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        // vertex 1 never mentioned: isolated
        assert!(matches!(
            Graph::from_edge_list("0 2"),
            Err(GraphError::Disconnected { .. })
        ));
    }

    #[test]
    fn complete_graphs() {
        let k4 = complete_graph(4).unwrap();
        assert_eq!((k4.edge_count(), k4.max_degree()), (6, 3));
        let k17 = complete_graph(17).unwrap();
        assert_eq!((k17.edge_count(), k17.max_degree()), (136, 16));
        assert!(complete_graph(1).is_err());
        assert_eq!(complete_graph(6).unwrap().max_degree(), 5);
    }

    #[test]
    fn families() {
        let s5 = star_graph(5).unwrap();
        assert_eq!((s5.edge_count(), s5.max_degree()), (4, 4));
        assert_eq!(star_graph(7).unwrap().max_degree(), 6);
        assert_eq!(path_graph(2).unwrap().max_degree(), 1);
        assert_eq!(random_tree(9, 1).unwrap().edge_count(), 8);
        assert!(cycle_graph(2).is_err());
        assert_eq!(cycle_graph(7).unwrap().diameter(), 3);
        assert_eq!(path_graph(5).unwrap().diameter(), 4);
    }

    #[test]
    fn random_graphs_are_deterministic() {
        assert_eq!(
            random_connected_graph(9, 0.2, 5).unwrap(),
            random_connected_graph(9, 0.2, 5).unwrap()
        );
        assert_eq!(random_tree(12, 3).unwrap(), random_tree(12, 3).unwrap());
        assert!(random_connected_graph(5, 1.5, 0).is_err());
        assert_eq!(random_connected_graph(6, 0.0, 2).unwrap().edge_count(), 5);
    }

    #[test]
    fn labeled_tree_counts_match_cayley() {
        for n in 2..=6 {
            let trees: Vec<_> = labeled_trees(n).collect();
            let expected = if n == 2 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(trees.len(), expected);
            assert!(trees.iter().all(Graph::is_tree));
        }
        let distinct: BTreeSet<Vec<(usize, usize)>> =
            labeled_trees(5).map(|t| t.edges().collect()).collect();
        assert_eq!(distinct.len(), 125);
    }

    #[test]
    fn induced_prefix_of_complete_graph() {
        let k = complete_graph(8).unwrap().induced_prefix(7).unwrap();
        assert_eq!(k, complete_graph(7).unwrap());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn generated_graphs_hold_invariants(n in 2usize..16, p in 0.0f64..1.0, seed: u64) {
                let g = random_connected_graph(n, p, seed).unwrap();
                prop_assert!(handshake(&g));
                prop_assert!(2 * g.edge_count() <= n * g.max_degree());
                for u in 0..n {
                    for &v in g.neighbors(u) {
                        prop_assert!(g.has_edge(v, u));
                    }
                }
                let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
                prop_assert_eq!(back, g);
            }

            #[test]
            fn random_trees_are_trees(n in 2usize..30, seed: u64) {
                let t = random_tree(n, seed).unwrap();
                prop_assert!(t.is_tree());
                prop_assert!(handshake(&t));
            }
        }
    }
}
