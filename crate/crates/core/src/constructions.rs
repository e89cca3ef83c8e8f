//! Builders for the routing families: geodesic routings, spanning-tree
//! routings, the long-Hamiltonian-path routing on `K_n` where Cheeger beats
//! Poincaré, and its Eulerian-trail variants.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{complete_graph, Graph, GraphError};
use crate::routing::{Path, Routing};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("{what} requires a complete graph")]
    NotComplete { what: &'static str },
    #[error("{what} requires n >= {min}, got {n}")]
    TooSmall {
        what: &'static str,
        n: usize,
        min: usize,
    },
    #[error("tree does not span the graph: {0}")]
    NotSpanning(String),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("graph has a vertex of odd degree ({0}), no Eulerian circuit")]
    OddDegree(usize),
    #[error("path {0} is not the routing's path for its endpoints")]
    PathNotInRouting(Path),
    #[error("long path length {length} unavailable on K_{n} (allowed 1..={max})")]
    LongPathLength { n: usize, length: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Breadth-first parents from `source`, scanning neighbors in ascending id
/// order; the first discoverer becomes the parent.
fn bfs_parents(graph: &Graph, source: usize) -> Vec<Option<usize>> {
    let n = graph.vertex_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    seen[source] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in graph.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    parent
}

fn path_from_parents(parent: &[Option<usize>], source: usize, target: usize) -> Path {
    let mut vertices = vec![target];
    let mut cur = target;
    while cur != source {
        cur = parent[cur].expect("target reachable from source");
        vertices.push(cur);
    }
    vertices.reverse();
    Path::new(vertices)
}

/// Shortest path for every ordered pair, read off the deterministic BFS
/// tree of each source.
pub fn geodesic_routing(graph: &Graph) -> Routing {
    let n = graph.vertex_count();
    let mut routing = Routing::empty(n);
    for x in 0..n {
        let parent = bfs_parents(graph, x);
        for y in 0..n {
            if y != x {
                routing.set(x, y, path_from_parents(&parent, x, y));
            }
        }
    }
    routing
}

/// A spanning tree of a host graph, with parents rooted at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    tree: Graph,
    parent: Vec<Option<usize>>,
}

impl SpanningTree {
    /// Validates `edges` as a spanning tree of `host`.
    pub fn from_edges(host: &Graph, edges: &[(usize, usize)]) -> Result<Self, ConstructionError> {
        let n = host.vertex_count();
        if edges.len() + 1 != n {
            return Err(ConstructionError::NotSpanning(format!(
                "{} edges for {n} vertices",
                edges.len()
            )));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !host.has_edge(u, v)) {
            return Err(ConstructionError::NotSpanning(format!(
                "edge {{{u},{v}}} not in host"
            )));
        }
        let tree = Graph::from_edges(n, edges)
            .map_err(|e| ConstructionError::NotSpanning(e.to_string()))?;
        let parent = bfs_parents(&tree, 0);
        Ok(SpanningTree { tree, parent })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// `d_T`, the tree's maximum degree.
    pub fn max_degree(&self) -> usize {
        self.tree.max_degree()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.tree.edges().collect()
    }

    /// True when every tree edge belongs to `host` and the vertex sets agree.
    pub fn spans(&self, host: &Graph) -> bool {
        self.tree.vertex_count() == host.vertex_count()
            && self.tree.edges().all(|(u, v)| host.has_edge(u, v))
    }
}

fn check_root(graph: &Graph, root: usize) -> Result<(), ConstructionError> {
    if root >= graph.vertex_count() {
        Err(ConstructionError::VertexOutOfRange(root))
    } else {
        Ok(())
    }
}

pub fn bfs_tree(graph: &Graph, root: usize) -> Result<SpanningTree, ConstructionError> {
    check_root(graph, root)?;
    let edges: Vec<_> = bfs_parents(graph, root)
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.map(|p| (p, v)))
        .collect();
    SpanningTree::from_edges(graph, &edges)
}

/// Depth-first tree, descending into the lowest unvisited neighbor first.
pub fn dfs_tree(graph: &Graph, root: usize) -> Result<SpanningTree, ConstructionError> {
    check_root(graph, root)?;
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    let mut edges = Vec::with_capacity(n - 1);
    let mut stack = vec![(root, 0usize)];
    seen[root] = true;
    while let Some((u, next)) = stack.last_mut() {
        let u = *u;
        match graph.neighbors(u)[*next..].iter().position(|&v| !seen[v]) {
            Some(offset) => {
                let v = graph.neighbors(u)[*next + offset];
                *next += offset + 1;
                seen[v] = true;
                edges.push((u, v));
                stack.push((v, 0));
            }
            None => {
                stack.pop();
            }
        }
    }
    SpanningTree::from_edges(graph, &edges)
}

/// The Hamiltonian path `0, 1, ..., n-1` in a complete graph.
pub fn hamiltonian_path_tree(graph: &Graph) -> Result<SpanningTree, ConstructionError> {
    if !graph.is_complete() {
        return Err(ConstructionError::NotComplete {
            what: "hamiltonian path tree",
        });
    }
    let edges: Vec<_> = (1..graph.vertex_count()).map(|v| (v - 1, v)).collect();
    SpanningTree::from_edges(graph, &edges)
}

/// All edges at `hub` in a complete graph.
pub fn star_tree(graph: &Graph, hub: usize) -> Result<SpanningTree, ConstructionError> {
    if !graph.is_complete() {
        return Err(ConstructionError::NotComplete { what: "star tree" });
    }
    check_root(graph, hub)?;
    let edges: Vec<_> = (0..graph.vertex_count())
        .filter(|&v| v != hub)
        .map(|v| (hub, v))
        .collect();
    SpanningTree::from_edges(graph, &edges)
}

/// Uniformly random spanning tree via the Aldous–Broder random walk.
pub fn random_spanning_tree(graph: &Graph, seed: u64) -> SpanningTree {
    let n = graph.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = vec![false; n];
    let mut cur = rng.gen_range(0..n);
    seen[cur] = true;
    let mut remaining = n - 1;
    let mut edges = Vec::with_capacity(n - 1);
    while remaining > 0 {
        let next = *graph
            .neighbors(cur)
            .choose(&mut rng)
            .expect("connected graph has no isolated vertex");
        if !seen[next] {
            seen[next] = true;
            edges.push((cur, next));
            remaining -= 1;
        }
        cur = next;
    }
    SpanningTree::from_edges(graph, &edges).expect("walk tree spans the graph")
}

/// The unique tree path for every ordered pair.
pub fn spanning_tree_routing(
    graph: &Graph,
    tree: &SpanningTree,
) -> Result<Routing, ConstructionError> {
    if !tree.spans(graph) {
        return Err(ConstructionError::NotSpanning(
            "tree edges or vertex count disagree with the graph".into(),
        ));
    }
    Ok(geodesic_routing(tree.tree()))
}

/// Bottleneck of a tree routing from cut sizes: removing a tree edge leaves
/// sides of `k` and `n - k` vertices, and each orientation carries `k(n-k)`
/// paths.
pub fn cut_product_bottleneck(tree: &SpanningTree) -> usize {
    let n = tree.tree().vertex_count();
    let parent = tree.parent();
    let order = bfs_order(tree.tree());
    let mut subtree = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            subtree[p] += subtree[v];
        }
    }
    (0..n)
        .filter(|&v| parent[v].is_some())
        .map(|v| subtree[v] * (n - subtree[v]))
        .max()
        .unwrap_or(0)
}

fn bfs_order(graph: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(graph.vertex_count());
    let mut seen = vec![false; graph.vertex_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in graph.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    order
}

fn complete_geodesics_with(n: usize, long: Path) -> Routing {
    let (x0, y0) = (long.source().unwrap(), long.target().unwrap());
    let mut routing = Routing::from_fn(n, |x, y| Path::new(vec![x, y]));
    routing.set(x0, y0, long);
    routing
}

/// Single-edge geodesics on `K_n`, except `(0, n-1)` which follows the
/// Hamiltonian path `0, 1, ..., n-1`. Gives `γ* = n-1` and `b = 2`.
pub fn counterexample_routing(n: usize) -> Result<Routing, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooSmall {
            what: "counterexample routing",
            n,
            min: 3,
        });
    }
    Ok(complete_geodesics_with(n, Path::new((0..n).collect())))
}

/// Closed Eulerian circuit from `start` by Hierholzer's method, always taking
/// the lowest-id unused edge. Returns `|E| + 1` vertices, first = last.
pub fn eulerian_circuit(graph: &Graph, start: usize) -> Result<Vec<usize>, ConstructionError> {
    check_root(graph, start)?;
    let n = graph.vertex_count();
    if let Some(v) = (0..n).find(|&v| graph.degree(v) % 2 == 1) {
        return Err(ConstructionError::OddDegree(v));
    }
    let mut used = vec![false; n * n];
    let mut cursor = vec![0usize; n];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(graph.edge_count() + 1);
    while let Some(&u) = stack.last() {
        let nbrs = graph.neighbors(u);
        while cursor[u] < nbrs.len() && used[u * n + nbrs[cursor[u]]] {
            cursor[u] += 1;
        }
        if let Some(&v) = nbrs.get(cursor[u]) {
            used[u * n + v] = true;
            used[v * n + u] = true;
            stack.push(v);
        } else {
            circuit.push(u);
            stack.pop();
        }
    }
    circuit.reverse();
    Ok(circuit)
}

/// The Eulerian circuit of `K_n` (odd `n`) or of `K_{n-1}` on vertices
/// `0..n-1` (even `n`).
fn complete_circuit(n: usize) -> Result<Vec<usize>, ConstructionError> {
    let m = if n % 2 == 1 { n } else { n - 1 };
    eulerian_circuit(&complete_graph(m)?, 0)
}

/// Routing on `K_n` whose one long path is an Eulerian circuit with its final
/// edge dropped (odd `n`), or the same on the induced `K_{n-1}` (even `n`).
/// All other pairs use single-edge geodesics.
pub fn eulerian_counterexample_routing(n: usize) -> Result<Routing, ConstructionError> {
    if n < 7 {
        return Err(ConstructionError::TooSmall {
            what: "eulerian counterexample routing",
            n,
            min: 7,
        });
    }
    let mut circuit = complete_circuit(n)?;
    circuit.pop();
    Ok(complete_geodesics_with(n, Path::new(circuit)))
}

/// Variant with a long path of exactly `length` edges: the first window of
/// the Eulerian circuit (cyclically) whose endpoints differ. All other pairs
/// use single-edge geodesics, so `b = 2` whenever `length >= 2`.
pub fn long_path_counterexample_routing(
    n: usize,
    length: usize,
) -> Result<Routing, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooSmall {
            what: "long path routing",
            n,
            min: 3,
        });
    }
    let mut circuit = complete_circuit(n)?;
    circuit.pop();
    let edges = circuit.len();
    let max = edges - 1;
    if length == 0 || length > max {
        return Err(ConstructionError::LongPathLength { n, length, max });
    }
    let window = (0..edges)
        .map(|offset| {
            (0..=length)
                .map(|i| circuit[(offset + i) % edges])
                .collect::<Vec<_>>()
        })
        .find(|w| w[0] != w[length])
        .ok_or(ConstructionError::LongPathLength { n, length, max })?;
    Ok(complete_geodesics_with(n, Path::new(window)))
}

/// A random valid routing: each pair gets the simple path found by a
/// depth-first search that visits neighbors in shuffled order.
pub fn random_routing(graph: &Graph, seed: u64) -> Routing {
    let n = graph.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Routing::from_fn(n, |x, y| random_simple_path(graph, x, y, &mut rng))
}

fn random_simple_path(graph: &Graph, x: usize, y: usize, rng: &mut ChaCha8Rng) -> Path {
    // depth-first search never revisits a vertex, so the stack at the moment
    // y is reached is a simple x-y path
    let mut seen = vec![false; graph.vertex_count()];
    let shuffled = |v: usize, rng: &mut ChaCha8Rng| {
        let mut nbrs = graph.neighbors(v).to_vec();
        nbrs.shuffle(rng);
        nbrs
    };
    seen[x] = true;
    let mut stack = vec![(x, shuffled(x, rng))];
    loop {
        let (u, candidates) = stack.last_mut().expect("y reachable from x");
        if *u == y {
            break;
        }
        match candidates.pop() {
            Some(v) if !seen[v] => {
                seen[v] = true;
                let nbrs = shuffled(v, rng);
                stack.push((v, nbrs));
            }
            Some(_) => {}
            None => {
                stack.pop();
            }
        }
    }
    Path::new(stack.into_iter().map(|(v, _)| v).collect())
}

/// Whether every sub-segment `v_i..v_j` (with `v_i != v_j`) of `path` is the
/// routing's own path between its endpoints.
pub fn is_subordinate(routing: &Routing, path: &Path) -> Result<bool, ConstructionError> {
    let owned = match (path.source(), path.target()) {
        (Some(x), Some(y)) => routing.get(x, y) == Some(path),
        _ => false,
    };
    if !owned {
        return Err(ConstructionError::PathNotInRouting(path.clone()));
    }
    let v = path.vertices();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] == v[j] {
                continue;
            }
            match routing.get(v[i], v[j]) {
                Some(p) if p.vertices() == path.segment(i, j) => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}
