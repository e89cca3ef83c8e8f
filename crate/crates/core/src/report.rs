//! Structured analysis reports combining routing statistics, bounds,
//! spectrum and checker verdicts for one `(graph, routing)` pair.

use serde::{Deserialize, Serialize};

use crate::bounds::{
    compare, lemma1_check, lemma2_check, theorem1_check, theorem2_from_routing, BoundsReport,
    Lemma1Report, Lemma2Report, Theorem1Report, Theorem2Report,
};
use crate::graph::Graph;
use crate::routing::Routing;
use crate::spectral::{tv_bound_check, SpectralError, SpectralReport, TvReport, WalkKernel};

/// Slack when comparing the computed `β_1` against an upper bound.
pub const BOUND_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertex_count: u64,
    pub edge_count: u64,
    pub max_degree: u64,
    pub diameter: u64,
}

impl GraphSummary {
    pub fn of(graph: &Graph) -> Self {
        GraphSummary {
            vertex_count: graph.vertex_count() as u64,
            edge_count: graph.edge_count() as u64,
            max_degree: graph.max_degree() as u64,
            diameter: graph.diameter() as u64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValidity {
    pub poincare_holds: bool,
    pub cheeger_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckVerdicts {
    pub theorem1: Theorem1Report,
    pub lemma1: Lemma1Report,
    /// Present for spanning-tree routings.
    pub theorem2: Option<Theorem2Report>,
    /// Present when the graph is itself a tree with maximum degree ≥ 2.
    pub lemma2: Option<Lemma2Report>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub routing: String,
    pub bounds: BoundsReport,
    pub spectral: SpectralReport,
    pub validity: BoundValidity,
    pub checks: CheckVerdicts,
    pub tv: Option<TvReport>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Options for [`analyze`].
#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    /// Label recorded in the report.
    pub routing_tag: String,
    pub spanning_tree_routing: bool,
    /// `(start vertex, r_max)` for the total-variation series.
    pub tv: Option<(usize, usize)>,
}

/// Analyzes a routing that has already passed validation.
pub fn analyze(
    graph: &Graph,
    routing: &Routing,
    options: &AnalysisOptions,
) -> Result<AnalysisReport, SpectralError> {
    let bounds = compare(graph, routing);
    let spectral = WalkKernel::new(graph).spectrum()?;
    let validity = BoundValidity {
        poincare_holds: spectral.beta1 <= bounds.poincare + BOUND_SLACK,
        cheeger_holds: spectral.beta1 <= bounds.cheeger + BOUND_SLACK,
    };
    let checks = CheckVerdicts {
        theorem1: theorem1_check(graph, routing),
        lemma1: lemma1_check(graph, routing),
        theorem2: options
            .spanning_tree_routing
            .then(|| theorem2_from_routing(graph, routing)),
        lemma2: lemma2_check(graph).ok(),
    };
    let tv = options
        .tv
        .map(|(start, r_max)| tv_bound_check(graph, start, r_max))
        .transpose()?;
    Ok(AnalysisReport {
        graph: GraphSummary::of(graph),
        routing: options.routing_tag.clone(),
        bounds,
        spectral,
        validity,
        checks,
        tv,
    })
}
