//! Walk spectra of a few small graphs, compared with the bounds a geodesic
//! routing certifies.
//!
//! Run with `cargo run --example spectrum`.

use canonical_paths::bounds::compare;
use canonical_paths::constructions::geodesic_routing;
use canonical_paths::graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph};
use canonical_paths::spectral::WalkKernel;

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("K_6", complete_graph(6).unwrap()),
        ("C_8", cycle_graph(8).unwrap()),
        ("P_6", path_graph(6).unwrap()),
        ("star_7", star_graph(7).unwrap()),
    ];
    for (name, g) in &graphs {
        let spectrum = WalkKernel::new(g).spectrum().unwrap();
        let rep = compare(g, &geodesic_routing(g));
        let values: Vec<String> = spectrum.eigenvalues.iter().map(|x| format!("{x:+.4}")).collect();
        println!("{name}: [{}]", values.join(", "));
        println!(
            "  β_1 = {:.6}  β_* = {:.6}  Poincaré = {:.6}  Cheeger = {:.6}\n",
            spectrum.beta1, spectrum.beta_star, rep.poincare, rep.cheeger
        );
    }
}
