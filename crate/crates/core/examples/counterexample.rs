//! The complete-graph routings for which Cheeger beats Poincaré, and the
//! sizes at which they start to win.
//!
//! Run with `cargo run --example counterexample`.

use canonical_paths::bounds::{compare, Winner};
use canonical_paths::constructions::{counterexample_routing, eulerian_counterexample_routing};
use canonical_paths::graph::complete_graph;

fn main() {
    println!("direct edges on K_n, except pair (0, n-1) routed along the path 0, 1, ..., n-1:");
    println!("{:>4} {:>4} {:>3} {:>8} {:>8}  winner", "n", "γ*", "b", "4d²b", "γ*|E|");
    for n in [8, 12, 16, 17, 20, 30] {
        let g = complete_graph(n).unwrap();
        let r = counterexample_routing(n).unwrap();
        let rep = compare(&g, &r);
        println!(
            "{:>4} {:>4} {:>3} {:>8} {:>8}  {:?}",
            n, rep.gamma_star, rep.bottleneck, rep.comparison_lhs, rep.comparison_rhs, rep.winner
        );
    }

    let g = complete_graph(17).unwrap();
    let rep = compare(&g, &counterexample_routing(17).unwrap());
    assert_eq!(rep.winner, Winner::Cheeger);
    println!(
        "\nK_17: Poincaré = {} ≈ {:.6}, Cheeger = {} ≈ {:.6}",
        rep.poincare_exact, rep.poincare, rep.cheeger_exact, rep.cheeger
    );

    println!("\nEulerian-circuit routing, which already wins at n = 7:");
    for n in 7..=12 {
        let g = complete_graph(n).unwrap();
        let r = eulerian_counterexample_routing(n).unwrap();
        r.validate(&g).expect("every path is a trail");
        let rep = compare(&g, &r);
        println!(
            "  K_{n:<2} γ* = {:>3}, b = {}, 4d²b = {:>4} < {:>4} = γ*|E|",
            rep.gamma_star, rep.bottleneck, rep.comparison_lhs, rep.comparison_rhs
        );
    }
}
