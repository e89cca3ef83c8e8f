//! Randomized sweeps checking the bound theorems on sampled graphs and
//! routings. A failure means an implementation bug; each failure carries the
//! falsifying instance.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    compare, lemma1_check, lemma2_check, theorem1_check, theorem2_check,
};
use crate::constructions::{geodesic_routing, random_routing, random_spanning_tree, spanning_tree_routing};
use crate::graph::{random_connected_graph, random_tree, Graph};
use crate::report::BOUND_SLACK;
use crate::routing::Routing;
use crate::spectral::{tv_bound_check, SpectralError, WalkKernel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Lemma1,
    Lemma2,
    BoundsValidity,
    Tv,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "theorem1" => Suite::Theorem1,
            "theorem2" => Suite::Theorem2,
            "lemma1" => Suite::Lemma1,
            "lemma2" => Suite::Lemma2,
            "bounds-validity" => Suite::BoundsValidity,
            "tv" => Suite::Tv,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::BoundsValidity => "bounds-validity",
            Suite::Tv => "tv",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
    pub r_max: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 10,
            trials: 100,
            seed: 1,
            r_max: 50,
        }
    }
}

/// A falsifying instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub graph: Graph,
    pub routing_tag: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "routing {}: {}", self.routing_tag, self.detail)?;
        write!(f, "graph edges:\n{}", self.graph.to_edge_list())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub suite: Suite,
    pub checks: usize,
    pub failures: Vec<Failure>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn sample_graph(rng: &mut ChaCha8Rng, min_n: usize, max_n: usize) -> Graph {
    let n = rng.gen_range(min_n..=max_n.max(min_n));
    let p = rng.gen_range(0.05..0.95);
    random_connected_graph(n, p, rng.gen()).expect("valid sample parameters")
}

/// Geodesic, one random spanning-tree routing, and three random routings.
pub fn sample_routings(graph: &Graph, rng: &mut ChaCha8Rng) -> Vec<(String, Routing)> {
    let tree = random_spanning_tree(graph, rng.gen());
    let mut out = vec![
        ("geodesic".to_string(), geodesic_routing(graph)),
        (
            "random-spanning-tree".to_string(),
            spanning_tree_routing(graph, &tree).expect("tree spans"),
        ),
    ];
    for i in 0..3 {
        out.push((format!("random-{i}"), random_routing(graph, rng.gen())));
    }
    out
}

pub fn run_sweep(suite: Suite, config: &SweepConfig) -> Result<SweepSummary, SpectralError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = 0;
    let mut failures = Vec::new();
    let mut fail = |graph: &Graph, tag: &str, detail: String| {
        failures.push(Failure {
            graph: graph.clone(),
            routing_tag: tag.to_string(),
            detail,
        })
    };
    for _ in 0..config.trials {
        match suite {
            Suite::Theorem1 => {
                let g = sample_graph(&mut rng, 2, config.max_n);
                for (tag, r) in sample_routings(&g, &mut rng) {
                    checks += 1;
                    let t = theorem1_check(&g, &r);
                    if !t.holds {
                        fail(&g, &tag, format!("{t:?}"));
                    }
                }
            }
            Suite::Theorem2 => {
                let g = sample_graph(&mut rng, 2, config.max_n);
                let tree = random_spanning_tree(&g, rng.gen());
                checks += 1;
                let t = theorem2_check(&g, &tree).expect("tree spans");
                if !t.holds {
                    fail(&g, "random-spanning-tree", format!("{t:?}"));
                }
            }
            Suite::Lemma1 => {
                let g = sample_graph(&mut rng, 2, config.max_n);
                let tree = random_spanning_tree(&g, rng.gen());
                let r = spanning_tree_routing(&g, &tree).expect("tree spans");
                checks += 1;
                let l = lemma1_check(&g, &r);
                if !l.holds {
                    fail(&g, "random-spanning-tree", format!("{l:?}"));
                }
            }
            Suite::Lemma2 => {
                let n = rng.gen_range(3..=config.max_n.max(3));
                let t = random_tree(n, rng.gen()).expect("n >= 3");
                checks += 1;
                match lemma2_check(&t) {
                    Ok(l) if l.holds && l.witness_holds => {}
                    other => fail(&t, "tree", format!("{other:?}")),
                }
            }
            Suite::BoundsValidity => {
                let g = sample_graph(&mut rng, 2, config.max_n);
                let beta1 = WalkKernel::new(&g).spectrum()?.beta1;
                for (tag, r) in sample_routings(&g, &mut rng) {
                    checks += 1;
                    let rep = compare(&g, &r);
                    if beta1 > rep.poincare.min(rep.cheeger) + BOUND_SLACK {
                        fail(
                            &g,
                            &tag,
                            format!(
                                "beta1 {beta1} exceeds poincare {} / cheeger {}",
                                rep.poincare, rep.cheeger
                            ),
                        );
                    }
                }
            }
            Suite::Tv => {
                let g = sample_graph(&mut rng, 2, config.max_n);
                checks += 1;
                let tv = tv_bound_check(&g, 0, config.r_max)?;
                if !tv.holds {
                    let bad = tv.steps.iter().find(|s| s.distance > s.bound + crate::spectral::TV_SLACK);
                    fail(&g, "-", format!("{bad:?}"));
                }
            }
        }
    }
    Ok(SweepSummary {
        suite,
        checks,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small_sweeps() {
        let config = SweepConfig {
            max_n: 8,
            trials: 25,
            seed: 3,
            r_max: 20,
        };
        for suite in [
            Suite::Theorem1,
            Suite::Theorem2,
            Suite::Lemma1,
            Suite::Lemma2,
            Suite::BoundsValidity,
            Suite::Tv,
        ] {
            let s = run_sweep(suite, &config).unwrap();
            assert!(s.passed(), "{suite}: {:?}", s.failures.first());
            assert!(s.checks >= 25);
            assert_eq!(suite.to_string().parse::<Suite>(), Ok(suite));
        }
    }
}
