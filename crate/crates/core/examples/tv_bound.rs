//! Exact total-variation distance from stationarity of the walk started at
//! vertex 0, against the spectral envelope `½ β_*^r sqrt((1-π(x))/π(x))`.
//!
//! Run with `cargo run --example tv_bound`.

use canonical_paths::graph::random_connected_graph;
use canonical_paths::spectral::tv_bound_check;

fn main() {
    let g = random_connected_graph(8, 0.4, 7).unwrap();
    print!("graph edges:\n{}", g.to_edge_list());
    let report = tv_bound_check(&g, 0, 20).unwrap();
    println!("β_* = {:.6}", report.beta_star);
    println!("{:>3} {:>12} {:>12}", "r", "TV", "bound");
    for step in &report.steps {
        println!("{:>3} {:>12.3e} {:>12.3e}", step.step, step.distance, step.bound);
    }
    println!("bound holds at every step: {}", report.holds);
}
