//! The Poincaré and Cheeger eigenvalue bounds for a routing, their
//! comparison, and executable checkers for the sufficient conditions under
//! which Poincaré wins.
//!
//! Every comparison that is an integer or rational inequality is evaluated
//! exactly; floating point is used only for the reported bound values.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::{is_subordinate, spanning_tree_routing, ConstructionError, SpanningTree};
use crate::graph::Graph;
use crate::routing::Routing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("graph is not a tree ({edges} edges on {vertices} vertices)")]
    NotATree { vertices: usize, edges: usize },
    #[error("tree has maximum degree {0}; need at least 2")]
    DegreeTooSmall(usize),
}

/// Which bound is smaller (better) for a routing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Winner {
    Poincare,
    Cheeger,
    Tie,
}

/// The routing statistics and bounds for one `(graph, routing)` pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub max_degree: u64,
    pub gamma_star: u64,
    pub bottleneck: u64,
    pub forwarding_index: u64,
    pub total_length: u64,
    #[serde(with = "fraction")]
    pub gamma_bar: Ratio<i128>,
    pub gamma_bar_approx: f64,
    #[serde(with = "fraction")]
    pub poincare_exact: Ratio<i128>,
    pub poincare: f64,
    #[serde(with = "fraction")]
    pub cheeger_exact: Ratio<i128>,
    pub cheeger: f64,
    /// `4 d² b`
    pub comparison_lhs: u64,
    /// `γ* |E|`
    pub comparison_rhs: u64,
    pub winner: Winner,
    pub pigeonhole_floor: u64,
}

impl BoundsReport {
    /// True when the Poincaré bound is no worse than Cheeger's.
    pub fn poincare_not_worse(&self) -> bool {
        self.comparison_lhs >= self.comparison_rhs
    }
}

/// Serde helper rendering rationals as `"p/q"` strings.
pub mod fraction {
    use num_rational::Ratio;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &Ratio<i128>, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", value.numer(), value.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<i128>, D::Error> {
        let text = String::deserialize(d)?;
        parse(&text).ok_or_else(|| D::Error::custom(format!("invalid fraction {text:?}")))
    }

    pub fn parse(text: &str) -> Option<Ratio<i128>> {
        let (p, q) = text.split_once('/')?;
        let (p, q): (i128, i128) = (p.trim().parse().ok()?, q.trim().parse().ok()?);
        (q != 0).then(|| Ratio::new(p, q))
    }
}

pub(crate) fn to_f64(r: &Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

struct Params {
    edges: i128,
    d: i128,
    gamma_star: i128,
    b: i128,
}

impl Params {
    fn new(graph: &Graph, routing: &Routing) -> Self {
        Params {
            edges: graph.edge_count() as i128,
            d: graph.max_degree() as i128,
            gamma_star: routing.gamma_star() as i128,
            b: routing.bottleneck() as i128,
        }
    }

    fn poincare(&self) -> Ratio<i128> {
        poincare_from(self.edges, self.d, self.gamma_star, self.b)
    }

    fn cheeger(&self) -> Ratio<i128> {
        cheeger_from(self.edges, self.d, self.b)
    }
}

/// `1 - 2|E| / (d² γ* b)`.
pub fn poincare_from(edges: i128, d: i128, gamma_star: i128, b: i128) -> Ratio<i128> {
    let den = d * d * gamma_star * b;
    Ratio::new(den - 2 * edges, den)
}

/// `1 - |E|² / (2 d⁴ b²)`.
pub fn cheeger_from(edges: i128, d: i128, b: i128) -> Ratio<i128> {
    let den = 2 * d.pow(4) * b * b;
    Ratio::new(den - edges * edges, den)
}

pub fn poincare_exact(graph: &Graph, routing: &Routing) -> Ratio<i128> {
    Params::new(graph, routing).poincare()
}

pub fn cheeger_exact(graph: &Graph, routing: &Routing) -> Ratio<i128> {
    Params::new(graph, routing).cheeger()
}

/// Poincaré upper bound on `β_1`; may be negative.
pub fn poincare_bound(graph: &Graph, routing: &Routing) -> f64 {
    to_f64(&poincare_exact(graph, routing))
}

/// Cheeger upper bound on `β_1`.
pub fn cheeger_bound(graph: &Graph, routing: &Routing) -> f64 {
    to_f64(&cheeger_exact(graph, routing))
}

/// Full report for a valid routing.
pub fn compare(graph: &Graph, routing: &Routing) -> BoundsReport {
    let p = Params::new(graph, routing);
    let loads = routing.edge_loads();
    let lhs = (4 * p.d * p.d * p.b) as u64;
    let rhs = (p.gamma_star * p.edges) as u64;
    let winner = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Winner::Poincare,
        std::cmp::Ordering::Equal => Winner::Tie,
        std::cmp::Ordering::Less => Winner::Cheeger,
    };
    let avg = routing.average_length();
    let gamma_bar = Ratio::new(*avg.numer() as i128, *avg.denom() as i128);
    let (poincare_exact, cheeger_exact) = (p.poincare(), p.cheeger());
    BoundsReport {
        vertex_count: graph.vertex_count() as u64,
        edge_count: graph.edge_count() as u64,
        max_degree: graph.max_degree() as u64,
        gamma_star: p.gamma_star as u64,
        bottleneck: p.b as u64,
        forwarding_index: loads.max_undirected() as u64,
        total_length: routing.total_length(),
        gamma_bar_approx: to_f64(&gamma_bar),
        gamma_bar,
        poincare: to_f64(&poincare_exact),
        poincare_exact,
        cheeger: to_f64(&cheeger_exact),
        cheeger_exact,
        comparison_lhs: lhs,
        comparison_rhs: rhs,
        winner,
        pigeonhole_floor: routing.pigeonhole_floor(graph),
    }
}

/// Average-length criterion: `8 γ̄ ≥ γ*` implies `4 d² b ≥ γ* |E|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub premise: bool,
    pub conclusion: bool,
    pub holds: bool,
}

pub fn theorem1_check(graph: &Graph, routing: &Routing) -> Theorem1Report {
    let n = graph.vertex_count() as u64;
    let gamma_star = routing.gamma_star() as u64;
    // 8 M / n² ≥ γ*  ⟺  8 M ≥ γ* n²
    let premise = 8 * routing.total_length() >= gamma_star * n * n;
    let d = graph.max_degree() as u64;
    let conclusion = 4 * d * d * routing.bottleneck() as u64 >= gamma_star * graph.edge_count() as u64;
    Theorem1Report {
        premise,
        conclusion,
        holds: !premise || conclusion,
    }
}

/// `⌊(γ+1)/2⌋ · ((γ+1) - ⌊(γ+1)/2⌋)`: paths through the central edge of a
/// subordinate path of length `γ`.
pub fn central_cut_floor(gamma: u64) -> u64 {
    let half = gamma.div_ceil(2);
    half * (gamma + 1 - half)
}

/// Long-subordinate-path criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Report {
    /// Some longest path to which the routing is subordinate.
    pub subordinate_path: Option<Vec<usize>>,
    /// `γ* > 4|E|/d² - 2`
    pub length_premise: bool,
    pub premise: bool,
    pub central_cut_floor: u64,
    /// `b ≥ central_cut_floor`, checked whenever a subordinate longest path exists.
    pub cut_floor_holds: Option<bool>,
    /// `d² b > γ* |E|`
    pub conclusion: bool,
    pub holds: bool,
}

pub fn lemma1_check(graph: &Graph, routing: &Routing) -> Lemma1Report {
    let gamma_star = routing.gamma_star();
    let subordinate_path = routing
        .iter()
        .filter(|(_, p)| p.len() == gamma_star)
        .find(|(_, p)| is_subordinate(routing, p).unwrap_or(false))
        .map(|(_, p)| p.vertices().to_vec());
    let (g, e, d2) = (
        gamma_star as u64,
        graph.edge_count() as u64,
        (graph.max_degree() * graph.max_degree()) as u64,
    );
    let b = routing.bottleneck() as u64;
    // γ* > 4|E|/d² - 2  ⟺  d² γ* + 2 d² > 4 |E|
    let length_premise = d2 * g + 2 * d2 > 4 * e;
    let premise = subordinate_path.is_some() && length_premise;
    let floor = central_cut_floor(g);
    let cut_floor_holds = subordinate_path.as_ref().map(|_| b >= floor);
    let conclusion = d2 * b > g * e;
    Lemma1Report {
        holds: cut_floor_holds.unwrap_or(true) && (!premise || conclusion),
        subordinate_path,
        length_premise,
        premise,
        central_cut_floor: floor,
        cut_floor_holds,
        conclusion,
    }
}

/// Tree bottleneck bound `b_T ≥ (n-1)² / d_T²` with its cut-edge witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma2Report {
    pub vertex_count: u64,
    pub max_degree: u64,
    pub bottleneck: u64,
    /// `b_T d_T² ≥ (n-1)²`
    pub holds: bool,
    pub witness_edge: (usize, usize),
    pub witness_smaller_side: u64,
    /// `smaller side · d_T ≥ n - 1`
    pub witness_holds: bool,
}

pub fn lemma2_check(tree: &Graph) -> Result<Lemma2Report, BoundsError> {
    let n = tree.vertex_count();
    if !tree.is_tree() {
        return Err(BoundsError::NotATree {
            vertices: n,
            edges: tree.edge_count(),
        });
    }
    let d = tree.max_degree();
    if d < 2 {
        return Err(BoundsError::DegreeTooSmall(d));
    }
    let b = crate::constructions::geodesic_routing(tree).bottleneck() as u64;
    let (witness_edge, smaller) = max_balanced_cut(tree);
    let (n64, d64) = (n as u64, d as u64);
    Ok(Lemma2Report {
        vertex_count: n64,
        max_degree: d64,
        bottleneck: b,
        holds: b * d64 * d64 >= (n64 - 1) * (n64 - 1),
        witness_edge,
        witness_smaller_side: smaller as u64,
        witness_holds: smaller as u64 * d64 >= n64 - 1,
    })
}

/// Tree edge whose removal leaves the largest smaller side.
fn max_balanced_cut(tree: &Graph) -> ((usize, usize), usize) {
    let n = tree.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        let u = order[i];
        i += 1;
        for &v in tree.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                order.push(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().skip(1).rev() {
        size[parent[v]] += size[v];
    }
    order
        .iter()
        .skip(1)
        .map(|&v| {
            let edge = (parent[v].min(v), parent[v].max(v));
            (edge, size[v].min(n - size[v]))
        })
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .expect("tree with n >= 2 has an edge")
}

/// Spanning-tree routings satisfy `d² b ≥ γ* |E|`, strictly for `n ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Report {
    /// `d² b`
    pub lhs: u64,
    /// `γ* |E|`
    pub rhs: u64,
    pub strict_required: bool,
    pub holds: bool,
}

pub fn theorem2_from_routing(graph: &Graph, routing: &Routing) -> Theorem2Report {
    let d = graph.max_degree() as u64;
    let lhs = d * d * routing.bottleneck() as u64;
    let rhs = routing.gamma_star() as u64 * graph.edge_count() as u64;
    let strict_required = graph.vertex_count() >= 3;
    Theorem2Report {
        lhs,
        rhs,
        strict_required,
        holds: if strict_required { lhs > rhs } else { lhs >= rhs },
    }
}

pub fn theorem2_check(graph: &Graph, tree: &SpanningTree) -> Result<Theorem2Report, ConstructionError> {
    let routing = spanning_tree_routing(graph, tree)?;
    Ok(theorem2_from_routing(graph, &routing))
}

/// A routing for which Poincaré strictly beats Cheeger on any graph with at
/// least three vertices: paths along the BFS tree at vertex 0.
pub fn corollary1_witness(graph: &Graph) -> (SpanningTree, Theorem2Report) {
    let tree = crate::constructions::bfs_tree(graph, 0).expect("vertex 0 exists");
    let report = theorem2_check(graph, &tree).expect("bfs tree spans its graph");
    (tree, report)
}
