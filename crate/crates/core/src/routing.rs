//! Oriented trails and canonical-path routings.
//!
//! A [`Routing`] assigns one [`Path`] to every ordered pair `(x, y)` with
//! `x != y`. Routings may be assembled incrementally or parsed from text, so
//! they can be incomplete or invalid; [`Routing::validate`] reports every
//! violation against a host [`Graph`]. The statistics (`γ*`, `b`, `M`, ...)
//! are computed over whatever paths are present.

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::Graph;

/// A vertex sequence `v_0, ..., v_m`. Validity as a trail is checked against
/// a host graph by [`Path::check`] and by [`Routing::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn source(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn target(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Directed edges `(v_i, v_{i+1})` in traversal order.
    pub fn directed_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// True when no vertex repeats.
    pub fn is_simple(&self) -> bool {
        let mut seen = HashSet::with_capacity(self.0.len());
        self.0.iter().all(|v| seen.insert(*v))
    }

    /// Contiguous sub-path `v_i, ..., v_j`.
    pub fn segment(&self, i: usize, j: usize) -> &[usize] {
        &self.0[i..=j]
    }

    /// Checks adjacency of consecutive vertices and the no-repeated-edge rule.
    pub fn check(&self, graph: &Graph) -> Result<(), PathDefect> {
        let n = graph.vertex_count();
        if let Some(&v) = self.0.iter().find(|&&v| v >= n) {
            return Err(PathDefect::VertexOutOfRange(v));
        }
        let mut used = HashSet::with_capacity(self.0.len());
        for (u, v) in self.directed_edges() {
            if !graph.has_edge(u, v) {
                return Err(PathDefect::NotAdjacent(u, v));
            }
            if !used.insert((u.min(v), u.max(v))) {
                return Err(PathDefect::RepeatedEdge(u.min(v), u.max(v)));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathDefect {
    VertexOutOfRange(usize),
    NotAdjacent(usize, usize),
    RepeatedEdge(usize, usize),
}

/// One reason a routing fails validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexCountMismatch { routing: usize, graph: usize },
    MissingPair { x: usize, y: usize },
    EmptyPath { x: usize, y: usize },
    EndpointMismatch { x: usize, y: usize },
    Defect { x: usize, y: usize, defect: PathDefect },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::VertexCountMismatch { routing, graph } => write!(
                f,
                "routing covers {routing} vertices but graph has {graph}"
            ),
            Violation::MissingPair { x, y } => write!(f, "pair ({x},{y}): missing path"),
            Violation::EmptyPath { x, y } => write!(f, "pair ({x},{y}): empty path"),
            Violation::EndpointMismatch { x, y } => {
                write!(f, "pair ({x},{y}): path does not run from {x} to {y}")
            }
            Violation::Defect { x, y, defect } => match defect {
                PathDefect::VertexOutOfRange(v) => {
                    write!(f, "pair ({x},{y}): vertex {v} out of range")
                }
                PathDefect::NotAdjacent(u, v) => {
                    write!(f, "pair ({x},{y}): {u} and {v} are not adjacent")
                }
                PathDefect::RepeatedEdge(u, v) => {
                    write!(f, "pair ({x},{y}): repeated edge {{{u},{v}}}")
                }
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RoutingParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: pair ({x},{y}) given more than once")]
    DuplicatePair { line: usize, x: usize, y: usize },
    #[error("line {line}: pair ({x},{y}) outside a graph on {vertex_count} vertices")]
    PairOutOfRange {
        line: usize,
        x: usize,
        y: usize,
        vertex_count: usize,
    },
}

/// Directed edge loads: how many canonical paths traverse each `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLoads {
    n: usize,
    counts: Vec<u32>,
}

impl EdgeLoads {
    pub fn new(n: usize) -> Self {
        EdgeLoads {
            n,
            counts: vec![0; n * n],
        }
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.counts[u * self.n + v]
    }

    pub fn add_path(&mut self, path: &Path) {
        for (u, v) in path.directed_edges() {
            self.counts[u * self.n + v] += 1;
        }
    }

    pub fn remove_path(&mut self, path: &Path) {
        for (u, v) in path.directed_edges() {
            self.counts[u * self.n + v] -= 1;
        }
    }

    /// Maximum over directed edges.
    pub fn max(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Number of directed edges carrying the maximum load.
    pub fn argmax_count(&self) -> usize {
        let m = self.max();
        if m == 0 {
            return 0;
        }
        self.counts.iter().filter(|&&c| c == m).count()
    }

    /// Maximum over undirected edges of the load in both directions.
    pub fn max_undirected(&self) -> u32 {
        let mut best = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                best = best.max(self.get(u, v) + self.get(v, u));
            }
        }
        best
    }
}

/// A (possibly partial) assignment of canonical paths to ordered pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routing {
    n: usize,
    paths: Vec<Option<Path>>,
}

impl Routing {
    /// An empty routing on `n` vertices; every pair starts missing.
    pub fn empty(n: usize) -> Self {
        Routing {
            n,
            paths: vec![None; n * n],
        }
    }

    /// Builds a routing from a function producing the path for each pair.
    pub fn from_fn(n: usize, mut path_for: impl FnMut(usize, usize) -> Path) -> Self {
        let mut r = Self::empty(n);
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    r.set(x, y, path_for(x, y));
                }
            }
        }
        r
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Assigns the path for `(x, y)`; diagonal pairs are ignored.
    pub fn set(&mut self, x: usize, y: usize, path: Path) {
        if x != y {
            self.paths[x * self.n + y] = Some(path);
        }
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&Path> {
        if x >= self.n || y >= self.n {
            return None;
        }
        self.paths[x * self.n + y].as_ref()
    }

    /// Present paths with their pair, in `(x, y)` lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Path)> + '_ {
        self.paths
            .iter()
            .enumerate()
            .filter_map(move |(i, p)| p.as_ref().map(|p| ((i / self.n, i % self.n), p)))
    }

    /// Checks completeness, endpoints, adjacency and the trail property.
    pub fn validate(&self, graph: &Graph) -> Result<(), Vec<Violation>> {
        let mut violations = Vec::new();
        if self.n != graph.vertex_count() {
            violations.push(Violation::VertexCountMismatch {
                routing: self.n,
                graph: graph.vertex_count(),
            });
            return Err(violations);
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if x == y {
                    continue;
                }
                let Some(path) = self.get(x, y) else {
                    violations.push(Violation::MissingPair { x, y });
                    continue;
                };
                if path.is_empty() {
                    violations.push(Violation::EmptyPath { x, y });
                    continue;
                }
                if path.source() != Some(x) || path.target() != Some(y) {
                    violations.push(Violation::EndpointMismatch { x, y });
                }
                if let Err(defect) = path.check(graph) {
                    violations.push(Violation::Defect { x, y, defect });
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(violations)
        }
    }

    /// `γ*`: length of the longest canonical path.
    pub fn gamma_star(&self) -> usize {
        self.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }

    pub fn edge_loads(&self) -> EdgeLoads {
        let mut loads = EdgeLoads::new(self.n);
        for (_, p) in self.iter() {
            loads.add_path(p);
        }
        loads
    }

    /// `b`: the bottleneck number, maximum load over directed edges.
    pub fn bottleneck(&self) -> usize {
        self.edge_loads().max() as usize
    }

    /// Edge-forwarding index: maximum load over undirected edges. A trail
    /// using both orientations of one edge counts once per orientation.
    pub fn forwarding_index(&self) -> usize {
        self.edge_loads().max_undirected() as usize
    }

    /// `M`: total length of all canonical paths.
    pub fn total_length(&self) -> u64 {
        self.iter().map(|(_, p)| p.len() as u64).sum()
    }

    /// `γ̄ = M / n²`, counting the `n` empty diagonal paths.
    pub fn average_length(&self) -> Ratio<u64> {
        Ratio::new(self.total_length(), (self.n * self.n) as u64)
    }

    /// Pigeonhole floor `⌈M / 2|E|⌉` on the bottleneck number.
    pub fn pigeonhole_floor(&self, graph: &Graph) -> u64 {
        self.total_length().div_ceil(2 * graph.edge_count() as u64)
    }

    /// Parses `x y : v_0 ... v_m` lines for a graph on `vertex_count` vertices.
    pub fn parse(text: &str, vertex_count: usize) -> Result<Self, RoutingParseError> {
        let mut routing = Self::empty(vertex_count);
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| RoutingParseError::Syntax {
                line: line_no,
                message: message.to_string(),
            };
            let (head, body) = line
                .split_once(':')
                .ok_or_else(|| syntax("expected `x y : v_0 ... v_m`"))?;
            let parse_ids = |s: &str| -> Result<Vec<usize>, RoutingParseError> {
                s.split_whitespace()
                    .map(|t| t.parse().map_err(|_| syntax(&format!("invalid vertex id {t:?}"))))
                    .collect()
            };
            let pair = parse_ids(head)?;
            let [x, y] = pair[..] else {
                return Err(syntax("expected exactly two ids before `:`"));
            };
            if x >= vertex_count || y >= vertex_count || x == y {
                return Err(RoutingParseError::PairOutOfRange {
                    line: line_no,
                    x,
                    y,
                    vertex_count,
                });
            }
            if routing.get(x, y).is_some() {
                return Err(RoutingParseError::DuplicatePair { line: line_no, x, y });
            }
            routing.set(x, y, Path::new(parse_ids(body)?));
        }
        Ok(routing)
    }

    /// Serializes every present path as `x y : v_0 ... v_m`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((x, y), p) in self.iter() {
            let _ = writeln!(out, "{x} {y} : {p}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph};

    fn geodesics_on_complete(n: usize) -> Routing {
        Routing::from_fn(n, |x, y| Path::new(vec![x, y]))
    }

    fn path3_routing() -> Routing {
        Routing::from_fn(3, |x, y| {
            if x < y {
                Path::new((x..=y).collect())
            } else {
                Path::new((y..=x).rev().collect())
            }
        })
    }

    #[test]
    fn validate_geodesics_on_k4() {
        let g = complete_graph(4).unwrap();
        assert_eq!(geodesics_on_complete(4).validate(&g), Ok(()));
    }

    #[test]
    fn validate_reports_repeated_edge_and_missing_pair() {
        let g = complete_graph(4).unwrap();
        let mut r = geodesics_on_complete(4);
        r.set(0, 1, Path::new(vec![0, 1, 0, 1]));
        r.paths[2 * 4] = None;
        let errs = r.validate(&g).unwrap_err();
        assert!(errs.contains(&Violation::Defect {
            x: 0,
            y: 1,
            defect: PathDefect::RepeatedEdge(0, 1)
        }));
        assert!(errs.contains(&Violation::MissingPair { x: 2, y: 0 }));
        assert_eq!(errs.len(), 2);
    }

    #[test]
    fn validate_other_defects() {
        let g = path_graph(3).unwrap();
        let mut r = path3_routing();
        r.set(0, 2, Path::new(vec![0, 2]));
        r.set(2, 1, Path::new(vec![2, 1, 0]));
        r.set(1, 0, Path::new(vec![1]));
        let errs = r.validate(&g).unwrap_err();
        assert_eq!(
            errs,
            vec![
                Violation::Defect {
                    x: 0,
                    y: 2,
                    defect: PathDefect::NotAdjacent(0, 2)
                },
                Violation::EmptyPath { x: 1, y: 0 },
                Violation::EndpointMismatch { x: 2, y: 1 },
            ]
        );
        assert_eq!(
            Routing::empty(2).validate(&g),
            Err(vec![Violation::VertexCountMismatch {
                routing: 2,
                graph: 3
            }])
        );
    }

    #[test]
    fn trails_may_repeat_vertices() {
        let g = complete_graph(4).unwrap();
        let p = Path::new(vec![0, 1, 2, 0, 3]);
        assert_eq!(p.check(&g), Ok(()));
        assert!(!p.is_simple());
    }

    #[test]
    fn statistics_on_path3() {
        let r = path3_routing();
        assert_eq!(r.gamma_star(), 2);
        assert_eq!(r.bottleneck(), 2);
        assert_eq!(r.forwarding_index(), 4);
        assert_eq!(r.total_length(), 8);
    }

    #[test]
    fn statistics_on_complete_geodesics() {
        for n in 2..8 {
            let r = geodesics_on_complete(n);
            assert_eq!(r.gamma_star(), 1);
            assert_eq!(r.bottleneck(), 1);
            assert_eq!(r.forwarding_index(), 2);
            assert_eq!(r.total_length(), (n * (n - 1)) as u64);
            assert_eq!(r.average_length(), Ratio::new(n as u64 - 1, n as u64));
        }
        assert_eq!(geodesics_on_complete(2).average_length(), Ratio::new(1, 2));
    }

    #[test]
    fn both_orientations_count_separately() {
        // a single trail can never use both orientations of one edge
        let g = complete_graph(4).unwrap();
        assert_eq!(
            Path::new(vec![0, 1, 0]).check(&g),
            Err(PathDefect::RepeatedEdge(0, 1))
        );
        let mut loads = EdgeLoads::new(3);
        loads.add_path(&Path::new(vec![0, 1]));
        loads.add_path(&Path::new(vec![1, 0]));
        assert_eq!(loads.max(), 1);
        assert_eq!(loads.max_undirected(), 2);
        assert_eq!(loads.argmax_count(), 2);
    }

    #[test]
    fn parse_and_serialize() {
        let text = "# routing\n0 1 : 0 1\n1 0 : 1 0\n";
        let r = Routing::parse(text, 2).unwrap();
        assert_eq!(r.validate(&path_graph(2).unwrap()), Ok(()));
        assert_eq!(Routing::parse(&r.to_text(), 2).unwrap(), r);

        let r = path3_routing();
        assert_eq!(Routing::parse(&r.to_text(), 3).unwrap(), r);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Routing::parse("0 1 0 1", 2),
            Err(RoutingParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            Routing::parse("0 1 : 0 1\n0 1 : 0 1", 2),
            Err(RoutingParseError::DuplicatePair { line: 2, .. })
        ));
        assert!(matches!(
            Routing::parse("0 5 : 0 5", 2),
            Err(RoutingParseError::PairOutOfRange { .. })
        ));
        assert!(matches!(
            Routing::parse("0 1 : 0 z", 2),
            Err(RoutingParseError::Syntax { .. })
        ));
        // parses, but fails validation as incomplete
        let r = Routing::parse("0 1 : 0 1", 2).unwrap();
        assert_eq!(
            r.validate(&path_graph(2).unwrap()),
            Err(vec![Violation::MissingPair { x: 1, y: 0 }])
        );
    }

    #[test]
    fn violation_messages_name_the_pair() {
        let v = Violation::Defect {
            x: 3,
            y: 1,
            defect: PathDefect::RepeatedEdge(0, 1),
        };
        assert_eq!(v.to_string(), "pair (3,1): repeated edge {0,1}");
    }
}
