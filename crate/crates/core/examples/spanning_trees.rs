//! Spanning-tree routings always favour Poincaré. This prints both bounds
//! for the Hamiltonian-path tree and the star tree of odd complete graphs,
//! next to their closed forms.
//!
//! Run with `cargo run --example spanning_trees`.

use canonical_paths::bounds::{compare, theorem2_check};
use canonical_paths::constructions::{
    hamiltonian_path_tree, spanning_tree_routing, star_tree, SpanningTree,
};
use canonical_paths::graph::{complete_graph, Graph};

fn show(label: &str, g: &Graph, tree: &SpanningTree) {
    let r = spanning_tree_routing(g, tree).unwrap();
    let rep = compare(g, &r);
    let t2 = theorem2_check(g, tree).unwrap();
    println!(
        "  {label:<12} γ* = {:>2}  b = {:>3}  Poincaré = {:.8}  Cheeger = {:.8}  d²b = {} > {} = γ*|E|",
        rep.gamma_star, rep.bottleneck, rep.poincare, rep.cheeger, t2.lhs, t2.rhs
    );
}

fn main() {
    for m in [2, 4, 6] {
        let n = 2 * m + 1;
        let g = complete_graph(n).unwrap();
        let nf = n as f64;
        println!("K_{n}:");
        show("hamiltonian", &g, &hamiltonian_path_tree(&g).unwrap());
        println!(
            "  {:<12} closed forms: Poincaré = {:.8}  Cheeger = {:.8}",
            "",
            1.0 - 4.0 * nf / ((nf - 1.0).powi(3) * (nf + 1.0)),
            1.0 - 2.0 * nf * nf / ((nf - 1.0).powi(4) * (nf + 1.0).powi(2)),
        );
        show("star", &g, &star_tree(&g, 0).unwrap());
        println!(
            "  {:<12} closed forms: Poincaré = {:.8}  Cheeger = {:.8}",
            "",
            1.0 - nf / (2.0 * (nf - 1.0).powi(2)),
            1.0 - nf * nf / (8.0 * (nf - 1.0).powi(4)),
        );
    }
}
