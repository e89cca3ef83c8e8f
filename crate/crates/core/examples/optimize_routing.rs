//! Exact and heuristic routing optimization.
//!
//! Run with `cargo run --release --example optimize_routing`.

use canonical_paths::bounds::compare;
use canonical_paths::constructions::geodesic_routing;
use canonical_paths::graph::{complete_graph, cycle_graph, random_connected_graph};
use canonical_paths::optimizer::{
    enumerate_optimal, local_search, optimal_bound_comparison, Objective, SearchLimits,
};

fn main() {
    let limits = SearchLimits::default();
    for (name, g) in [
        ("C_5", cycle_graph(5).unwrap()),
        ("K_4", complete_graph(4).unwrap()),
        ("K_5", complete_graph(5).unwrap()),
        ("random G(5, 0.5)", random_connected_graph(5, 0.5, 11).unwrap()),
    ] {
        let gb = enumerate_optimal(&g, Objective::GammaStarTimesB, limits).unwrap();
        let b = enumerate_optimal(&g, Objective::Bottleneck, limits).unwrap();
        println!(
            "{name}: min γ*b = {:?}, min b = {:?} ({} + {} nodes)",
            gb.value, b.value, gb.evaluations, b.evaluations
        );
        let cmp = optimal_bound_comparison(&g, limits).unwrap();
        println!(
            "  best Poincaré {} vs best Cheeger {}: {:?}; one routing attains both: {}",
            cmp.best_poincare_exact, cmp.best_cheeger_exact, cmp.winner, cmp.shared_minimizer
        );
    }

    let g = random_connected_graph(14, 0.3, 5).unwrap();
    let start = compare(&g, &geodesic_routing(&g));
    let result = local_search(&g, Objective::Bottleneck, 1, 10_000);
    let end = compare(&g, &result.routing);
    println!(
        "\nlocal search on a random 14-vertex graph: b {} -> {}, Cheeger {:.6} -> {:.6}",
        start.bottleneck, end.bottleneck, start.cheeger, end.cheeger
    );
}
