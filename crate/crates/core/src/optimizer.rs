//! Searching for routings that minimize `γ* b` (the Poincaré objective) or
//! `b` (the Cheeger objective).
//!
//! [`enumerate_optimal`] is an exact branch-and-bound over routings made of
//! simple paths, usable on tiny graphs. [`local_search`] is a first-improvement
//! descent from the geodesic routing for anything larger.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{cheeger_from, fraction, poincare_from, to_f64, Winner};
use crate::constructions::geodesic_routing;
use crate::graph::Graph;
use crate::routing::{EdgeLoads, Path, Routing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Objective {
    GammaStarTimesB,
    Bottleneck,
    Poincare,
    Cheeger,
}

impl Objective {
    /// The integer quantity each objective is monotone in.
    pub fn integer_key(self, gamma_star: u64, bottleneck: u64) -> u64 {
        match self {
            Objective::GammaStarTimesB | Objective::Poincare => gamma_star * bottleneck,
            Objective::Bottleneck | Objective::Cheeger => bottleneck,
        }
    }

    pub fn value(self, graph: &Graph, routing: &Routing) -> ObjectiveValue {
        let (g, b) = (routing.gamma_star() as u64, routing.bottleneck() as u64);
        let (e, d) = (graph.edge_count() as i128, graph.max_degree() as i128);
        match self {
            Objective::GammaStarTimesB | Objective::Bottleneck => {
                ObjectiveValue::Integer(self.integer_key(g, b))
            }
            Objective::Poincare => {
                ObjectiveValue::Real(to_f64(&poincare_from(e, d, g as i128, b as i128)))
            }
            Objective::Cheeger => ObjectiveValue::Real(to_f64(&cheeger_from(e, d, b as i128))),
        }
    }
}

impl FromStr for Objective {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gamma-b" | "gamma-star-times-b" => Ok(Objective::GammaStarTimesB),
            "b" | "bottleneck" => Ok(Objective::Bottleneck),
            "poincare" => Ok(Objective::Poincare),
            "cheeger" => Ok(Objective::Cheeger),
            other => Err(format!(
                "unknown objective {other:?} (expected gamma-b, b, poincare, cheeger)"
            )),
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::GammaStarTimesB => "gamma-b",
            Objective::Bottleneck => "b",
            Objective::Poincare => "poincare",
            Objective::Cheeger => "cheeger",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ObjectiveValue {
    Integer(u64),
    Real(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    pub max_vertices: usize,
    /// Budget on branch-and-bound nodes visited.
    pub max_evaluations: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices: 5,
            max_evaluations: 10_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptimizerError {
    #[error("graph has {n} vertices; exact search is limited to {limit} (use local search)")]
    TooManyVertices { n: usize, limit: usize },
    #[error("exact search exceeded {limit} evaluations (use local search)")]
    BudgetExceeded { limit: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub routing: Routing,
    pub objective: Objective,
    pub value: ObjectiveValue,
    /// Only exhaustive search proves optimality.
    pub optimal: bool,
    pub evaluations: u64,
}

/// All simple `x`-`y` paths in lexicographic order, optionally limited in
/// length and count.
pub fn simple_paths(
    graph: &Graph,
    x: usize,
    y: usize,
    max_len: Option<usize>,
    cap: Option<usize>,
) -> Vec<Path> {
    fn walk(
        graph: &Graph,
        y: usize,
        max_len: usize,
        cap: usize,
        stack: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Path>,
    ) {
        let u = *stack.last().unwrap();
        if u == y {
            out.push(Path::new(stack.clone()));
            return;
        }
        if stack.len() > max_len {
            return;
        }
        for &v in graph.neighbors(u) {
            if out.len() >= cap {
                return;
            }
            if !on_path[v] {
                on_path[v] = true;
                stack.push(v);
                walk(graph, y, max_len, cap, stack, on_path, out);
                stack.pop();
                on_path[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; graph.vertex_count()];
    on_path[x] = true;
    walk(
        graph,
        y,
        max_len.unwrap_or(usize::MAX),
        cap.unwrap_or(usize::MAX),
        &mut vec![x],
        &mut on_path,
        &mut out,
    );
    out
}

/// Which integer key to minimize and which side constraints to impose.
#[derive(Debug, Clone, Copy)]
struct SearchSpec {
    key: Objective,
    max_len: Option<u64>,
    max_gamma_b: Option<u64>,
}

struct BranchAndBound<'a> {
    spec: SearchSpec,
    n: usize,
    pairs: Vec<(usize, usize)>,
    options: Vec<Vec<Path>>,
    loads: Vec<u32>,
    choice: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    floor: u64,
    evaluations: u64,
    budget: u64,
    _graph: &'a Graph,
}

impl BranchAndBound<'_> {
    fn feasible(&self, gamma: u64, b: u64) -> bool {
        self.spec.max_len.is_none_or(|m| gamma <= m)
            && self.spec.max_gamma_b.is_none_or(|m| gamma * b <= m)
    }

    fn run(&mut self, depth: usize, gamma: u64, b: u64) -> Result<bool, OptimizerError> {
        if depth == self.pairs.len() {
            let key = self.spec.key.integer_key(gamma, b);
            self.best = Some((key, self.choice.clone()));
            return Ok(key <= self.floor);
        }
        for j in 0..self.options[depth].len() {
            self.evaluations += 1;
            if self.evaluations > self.budget {
                return Err(OptimizerError::BudgetExceeded { limit: self.budget });
            }
            let path = &self.options[depth][j];
            let new_gamma = gamma.max(path.len() as u64);
            let mut new_b = b;
            for (u, v) in path.directed_edges() {
                let slot = &mut self.loads[u * self.n + v];
                *slot += 1;
                new_b = new_b.max(*slot as u64);
            }
            let key = self.spec.key.integer_key(new_gamma, new_b);
            let promising = self.feasible(new_gamma, new_b)
                && self.best.as_ref().is_none_or(|(best, _)| key < *best);
            let mut done = false;
            if promising {
                self.choice[depth] = j;
                done = self.run(depth + 1, new_gamma, new_b)?;
            }
            for (u, v) in self.options[depth][j].directed_edges() {
                self.loads[u * self.n + v] -= 1;
            }
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

struct ExactOutcome {
    key: u64,
    routing: Routing,
    evaluations: u64,
}

fn exact_search(
    graph: &Graph,
    spec: SearchSpec,
    limits: SearchLimits,
) -> Result<Option<ExactOutcome>, OptimizerError> {
    let n = graph.vertex_count();
    if n > limits.max_vertices {
        return Err(OptimizerError::TooManyVertices {
            n,
            limit: limits.max_vertices,
        });
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let all: Vec<Vec<Path>> = pairs
        .iter()
        .map(|&(x, y)| simple_paths(graph, x, y, None, None))
        .collect();
    // fewest alternatives first; stable so ties keep pair order
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_by_key(|&i| all[i].len());
    let options: Vec<Vec<Path>> = order.iter().map(|&i| all[i].clone()).collect();
    pairs = order.iter().map(|&i| pairs[i]).collect();

    let b_floor = graph
        .total_distance()
        .div_ceil(2 * graph.edge_count() as u64)
        .max(1);
    let floor = spec.key.integer_key(graph.diameter() as u64, b_floor);

    let mut search = BranchAndBound {
        spec,
        n,
        choice: vec![0; pairs.len()],
        pairs,
        options,
        loads: vec![0; n * n],
        best: None,
        floor,
        evaluations: 0,
        budget: limits.max_evaluations,
        _graph: graph,
    };

    // the geodesic routing is a simple-path routing: seed the incumbent with it
    let geo = geodesic_routing(graph);
    let (g0, b0) = (geo.gamma_star() as u64, geo.bottleneck() as u64);
    if search.feasible(g0, b0) {
        let choice = search
            .pairs
            .iter()
            .zip(&search.options)
            .map(|(&(x, y), opts)| {
                let p = geo.get(x, y).unwrap();
                opts.iter().position(|o| o == p).expect("geodesic is simple")
            })
            .collect();
        let key = spec.key.integer_key(g0, b0);
        search.best = Some((key, choice));
        if key > floor {
            search.run(0, 0, 0)?;
        }
    } else {
        search.run(0, 0, 0)?;
    }

    Ok(search.best.as_ref().map(|(key, choice)| {
        let mut routing = Routing::empty(n);
        for ((&(x, y), opts), &j) in search.pairs.iter().zip(&search.options).zip(choice) {
            routing.set(x, y, opts[j].clone());
        }
        ExactOutcome {
            key: *key,
            routing,
            evaluations: search.evaluations,
        }
    }))
}

/// Exact optimum over all routings whose paths are simple.
pub fn enumerate_optimal(
    graph: &Graph,
    objective: Objective,
    limits: SearchLimits,
) -> Result<SearchResult, OptimizerError> {
    let spec = SearchSpec {
        key: objective,
        max_len: None,
        max_gamma_b: None,
    };
    let outcome = exact_search(graph, spec, limits)?.expect("unconstrained search has a solution");
    Ok(SearchResult {
        value: objective.value(graph, &outcome.routing),
        routing: outcome.routing,
        objective,
        optimal: true,
        evaluations: outcome.evaluations,
    })
}

/// Alternatives considered per pair in local search.
pub const LOCAL_SEARCH_CAP: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Score {
    primary: u64,
    saturated_edges: usize,
    total_length: u64,
}

struct LocalState {
    n: usize,
    paths: Vec<Path>,
    loads: EdgeLoads,
    length_histogram: Vec<usize>,
    total_length: u64,
}

impl LocalState {
    fn score(&self, objective: Objective) -> Score {
        let gamma = self
            .length_histogram
            .iter()
            .rposition(|&c| c > 0)
            .unwrap_or(0) as u64;
        Score {
            primary: objective.integer_key(gamma, self.loads.max() as u64),
            saturated_edges: self.loads.argmax_count(),
            total_length: self.total_length,
        }
    }

    fn swap(&mut self, idx: usize, path: Path) -> Path {
        let old = std::mem::replace(&mut self.paths[idx], path);
        self.loads.remove_path(&old);
        self.length_histogram[old.len()] -= 1;
        self.total_length -= old.len() as u64;
        let new = &self.paths[idx];
        self.loads.add_path(new);
        self.length_histogram[new.len()] += 1;
        self.total_length += new.len() as u64;
        old
    }

    fn into_routing(self) -> Routing {
        let n = self.n;
        let mut routing = Routing::empty(n);
        for (i, p) in self.paths.into_iter().enumerate() {
            let (x, y) = (p.source().unwrap(), p.target().unwrap());
            debug_assert_eq!(i, x * (n - 1) + if y > x { y - 1 } else { y });
            routing.set(x, y, p);
        }
        routing
    }
}

/// First-improvement descent from the geodesic routing. A move replaces one
/// pair's path by a simple path of length at most `γ*_geo + 2`; it is taken
/// when it lowers the objective, or keeps it and lowers the number of
/// saturated directed edges, or keeps both and shortens the total length.
/// `max_iters` caps the number of accepted moves.
pub fn local_search(graph: &Graph, objective: Objective, seed: u64, max_iters: usize) -> SearchResult {
    let n = graph.vertex_count();
    let geo = geodesic_routing(graph);
    let max_len = geo.gamma_star() + 2;
    let mut state = LocalState {
        n,
        paths: geo.iter().map(|(_, p)| p.clone()).collect(),
        loads: geo.edge_loads(),
        length_histogram: vec![0; n.max(max_len + 1)],
        total_length: geo.total_length(),
    };
    for p in &state.paths {
        state.length_histogram[p.len()] += 1;
    }
    let alternatives: Vec<Vec<Path>> = state
        .paths
        .iter()
        .map(|p| {
            simple_paths(
                graph,
                p.source().unwrap(),
                p.target().unwrap(),
                Some(max_len),
                Some(LOCAL_SEARCH_CAP),
            )
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..state.paths.len()).collect();
    let mut evaluations = 0u64;
    let mut accepted = 0usize;
    let mut current = state.score(objective);
    'passes: while accepted < max_iters {
        order.shuffle(&mut rng);
        let mut improved = false;
        for &idx in &order {
            for alt in &alternatives[idx] {
                if *alt == state.paths[idx] {
                    continue;
                }
                evaluations += 1;
                let old = state.swap(idx, alt.clone());
                let score = state.score(objective);
                if score < current {
                    current = score;
                    improved = true;
                    accepted += 1;
                    if accepted >= max_iters {
                        break 'passes;
                    }
                    break;
                }
                state.swap(idx, old);
            }
        }
        if !improved {
            break;
        }
    }
    let routing = state.into_routing();
    SearchResult {
        value: objective.value(graph, &routing),
        routing,
        objective,
        optimal: false,
        evaluations,
    }
}

/// Best achievable Poincaré and Cheeger bounds over simple-path routings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundComparison {
    pub min_gamma_b: u64,
    pub min_bottleneck: u64,
    #[serde(with = "fraction")]
    pub best_poincare_exact: Ratio<i128>,
    pub best_poincare: f64,
    #[serde(with = "fraction")]
    pub best_cheeger_exact: Ratio<i128>,
    pub best_cheeger: f64,
    pub winner: Winner,
    /// Some single routing attains both minima.
    pub shared_minimizer: bool,
    pub diameter: u64,
    /// Minimum of `γ* b` over routings with `γ* = diam(G)`.
    pub min_gamma_b_at_diameter: u64,
    /// True when the `γ* b` optimum needs paths longer than the diameter.
    pub needs_longer_paths: bool,
    pub evaluations: u64,
}

pub fn optimal_bound_comparison(
    graph: &Graph,
    limits: SearchLimits,
) -> Result<BoundComparison, OptimizerError> {
    let plain = |key| SearchSpec {
        key,
        max_len: None,
        max_gamma_b: None,
    };
    let gb = exact_search(graph, plain(Objective::GammaStarTimesB), limits)?.unwrap();
    let b = exact_search(graph, plain(Objective::Bottleneck), limits)?.unwrap();
    let shared = exact_search(
        graph,
        SearchSpec {
            key: Objective::Bottleneck,
            max_len: None,
            max_gamma_b: Some(gb.key),
        },
        limits,
    )?
    .expect("the γ*b optimum is feasible");
    let diameter = graph.diameter() as u64;
    let at_diameter = exact_search(
        graph,
        SearchSpec {
            key: Objective::GammaStarTimesB,
            max_len: Some(diameter),
            max_gamma_b: None,
        },
        limits,
    )?
    .expect("the geodesic routing has γ* = diameter");

    let (e, d) = (graph.edge_count() as i128, graph.max_degree() as i128);
    let best_poincare_exact = Ratio::new(d * d * gb.key as i128 - 2 * e, d * d * gb.key as i128);
    let best_cheeger_exact = cheeger_from(e, d, b.key as i128);
    let winner = match best_poincare_exact.cmp(&best_cheeger_exact) {
        std::cmp::Ordering::Less => Winner::Poincare,
        std::cmp::Ordering::Equal => Winner::Tie,
        std::cmp::Ordering::Greater => Winner::Cheeger,
    };
    Ok(BoundComparison {
        min_gamma_b: gb.key,
        min_bottleneck: b.key,
        best_poincare: to_f64(&best_poincare_exact),
        best_poincare_exact,
        best_cheeger: to_f64(&best_cheeger_exact),
        best_cheeger_exact,
        winner,
        shared_minimizer: shared.key == b.key,
        diameter,
        min_gamma_b_at_diameter: at_diameter.key,
        needs_longer_paths: gb.key < at_diameter.key,
        evaluations: gb.evaluations + b.evaluations + shared.evaluations + at_diameter.evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, random_connected_graph, star_graph};

    /// Plain odometer over every combination of simple paths.
    fn brute_force(graph: &Graph) -> (u64, u64) {
        let n = graph.vertex_count();
        let mut opts = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y {
                    opts.push(simple_paths(graph, x, y, None, None));
                }
            }
        }
        let mut idx = vec![0usize; opts.len()];
        let (mut best_gb, mut best_b) = (u64::MAX, u64::MAX);
        loop {
            let mut r = Routing::empty(n);
            for (o, &i) in opts.iter().zip(&idx) {
                let p = o[i].clone();
                r.set(p.source().unwrap(), p.target().unwrap(), p);
            }
            let (g, b) = (r.gamma_star() as u64, r.bottleneck() as u64);
            best_gb = best_gb.min(g * b);
            best_b = best_b.min(b);
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return (best_gb, best_b);
                }
                idx[k] += 1;
                if idx[k] < opts[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn simple_path_enumeration() {
        let k4 = complete_graph(4).unwrap();
        let paths = simple_paths(&k4, 0, 3, None, None);
        let as_vecs: Vec<Vec<usize>> = paths.iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(
            as_vecs,
            vec![
                vec![0, 1, 2, 3],
                vec![0, 1, 3],
                vec![0, 2, 1, 3],
                vec![0, 2, 3],
                vec![0, 3]
            ]
        );
        assert_eq!(simple_paths(&k4, 0, 3, Some(1), None).len(), 1);
        assert_eq!(simple_paths(&k4, 0, 3, None, Some(2)).len(), 2);
        assert_eq!(simple_paths(&cycle_graph(6).unwrap(), 0, 3, None, None).len(), 2);
    }

    #[test]
    fn complete_graph_optimum_is_geodesic() {
        let g = complete_graph(4).unwrap();
        let res = enumerate_optimal(&g, Objective::GammaStarTimesB, SearchLimits::default()).unwrap();
        assert_eq!(res.value, ObjectiveValue::Integer(1));
        assert!(res.optimal);
        assert_eq!(res.routing, geodesic_routing(&g));
        let res = enumerate_optimal(&complete_graph(5).unwrap(), Objective::Bottleneck, SearchLimits::default()).unwrap();
        assert_eq!(res.value, ObjectiveValue::Integer(1));
    }

    #[test]
    fn cycle4_matches_brute_force() {
        let g = cycle_graph(4).unwrap();
        let (gb, b) = brute_force(&g);
        let res = enumerate_optimal(&g, Objective::Bottleneck, SearchLimits::default()).unwrap();
        assert_eq!(res.value, ObjectiveValue::Integer(b));
        assert_eq!(res.routing.validate(&g), Ok(()));
        assert_eq!(res.routing.bottleneck() as u64, b);
        let res = enumerate_optimal(&g, Objective::GammaStarTimesB, SearchLimits::default()).unwrap();
        assert_eq!(res.value, ObjectiveValue::Integer(gb));
        // frozen from brute force: C4 needs b = 2, γ* b = 4
        assert_eq!((gb, b), (4, 2));
    }

    #[test]
    fn small_graphs_match_brute_force() {
        for seed in 0..6 {
            let g = random_connected_graph(4, 0.5, seed).unwrap();
            if g.is_complete() {
                continue;
            }
            let (gb, b) = brute_force(&g);
            let lim = SearchLimits::default();
            let r1 = enumerate_optimal(&g, Objective::GammaStarTimesB, lim).unwrap();
            let r2 = enumerate_optimal(&g, Objective::Bottleneck, lim).unwrap();
            assert_eq!(r1.value, ObjectiveValue::Integer(gb));
            assert_eq!(r2.value, ObjectiveValue::Integer(b));
        }
    }

    #[test]
    fn limits_are_enforced() {
        assert_eq!(
            enumerate_optimal(&complete_graph(6).unwrap(), Objective::Bottleneck, SearchLimits::default()),
            Err(OptimizerError::TooManyVertices { n: 6, limit: 5 })
        );
        let tight = SearchLimits {
            max_vertices: 5,
            max_evaluations: 3,
        };
        assert_eq!(
            enumerate_optimal(&cycle_graph(4).unwrap(), Objective::Bottleneck, tight),
            Err(OptimizerError::BudgetExceeded { limit: 3 })
        );
    }

    #[test]
    fn real_objectives_report_bounds() {
        let g = complete_graph(4).unwrap();
        let res = enumerate_optimal(&g, Objective::Poincare, SearchLimits::default()).unwrap();
        assert_eq!(res.value, ObjectiveValue::Real(-1.0 / 3.0));
    }

    #[test]
    fn local_search_keeps_optimal_geodesics() {
        let g = complete_graph(7).unwrap();
        let res = local_search(&g, Objective::GammaStarTimesB, 1, 100);
        assert_eq!(res.routing, geodesic_routing(&g));
        assert_eq!(res.value, ObjectiveValue::Integer(1));
        assert!(!res.optimal);
    }

    #[test]
    fn local_search_never_worsens() {
        for (g, seed) in [
            (cycle_graph(6).unwrap(), 0),
            (star_graph(6).unwrap(), 1),
            (random_connected_graph(8, 0.4, 7).unwrap(), 7),
            (random_connected_graph(10, 0.3, 3).unwrap(), 3),
        ] {
            let geo = geodesic_routing(&g);
            for obj in [Objective::GammaStarTimesB, Objective::Bottleneck] {
                let res = local_search(&g, obj, seed, 1000);
                assert_eq!(res.routing.validate(&g), Ok(()));
                let start = obj.integer_key(geo.gamma_star() as u64, geo.bottleneck() as u64);
                let ObjectiveValue::Integer(v) = res.value else { panic!() };
                assert!(v <= start);
                assert_eq!(v, obj.integer_key(res.routing.gamma_star() as u64, res.routing.bottleneck() as u64));
                let floor = g.total_distance().div_ceil(2 * g.edge_count() as u64);
                assert!(res.routing.bottleneck() as u64 >= floor);
            }
        }
    }

    #[test]
    fn local_search_is_deterministic() {
        let g = random_connected_graph(9, 0.35, 4).unwrap();
        assert_eq!(
            local_search(&g, Objective::Bottleneck, 5, 50),
            local_search(&g, Objective::Bottleneck, 5, 50)
        );
    }

    #[test]
    fn bound_comparison_examples() {
        let k4 = optimal_bound_comparison(&complete_graph(4).unwrap(), SearchLimits::default()).unwrap();
        assert_eq!(k4.best_poincare_exact, Ratio::new(-1, 3));
        assert_eq!(k4.winner, Winner::Poincare);
        assert!(k4.shared_minimizer);

        let p3 = optimal_bound_comparison(&path_graph(3).unwrap(), SearchLimits::default()).unwrap();
        assert!(p3.shared_minimizer);
        assert_eq!((p3.min_gamma_b, p3.min_bottleneck), (4, 2));

        let c5 = optimal_bound_comparison(&cycle_graph(5).unwrap(), SearchLimits::default()).unwrap();
        assert_eq!(c5.min_bottleneck, 3);
        assert!(!c5.needs_longer_paths);
    }

    #[test]
    fn objective_parsing() {
        assert_eq!("gamma-b".parse::<Objective>(), Ok(Objective::GammaStarTimesB));
        assert_eq!("b".parse::<Objective>(), Ok(Objective::Bottleneck));
        assert!("x".parse::<Objective>().is_err());
        for o in [Objective::GammaStarTimesB, Objective::Bottleneck, Objective::Poincare, Objective::Cheeger] {
            assert_eq!(o.to_string().parse::<Objective>(), Ok(o));
        }
    }
}
