//! Reading and writing the text formats for graphs and routings, and what
//! validation reports for a broken routing.
//!
//! Run with `cargo run --example routing_files`.

use canonical_paths::constructions::geodesic_routing;
use canonical_paths::graph::Graph;
use canonical_paths::routing::Routing;

fn main() {
    let g = Graph::from_edge_list("# a 4-cycle with a chord\n0 1\n1 2\n2 3\n3 0\n0 2\n").unwrap();
    let routing = geodesic_routing(&g);
    let text = routing.to_text();
    print!("geodesic routing:\n{text}");

    let back = Routing::parse(&text, g.vertex_count()).unwrap();
    assert_eq!(back, routing);

    // Route 1 -> 3 through a non-edge and 3 -> 1 around a repeated edge.
    let broken = text
        .replace("1 3 : 1 0 3", "1 3 : 1 3")
        .replace("3 1 : 3 0 1", "3 1 : 3 0 1 0 1");
    let broken = Routing::parse(&broken, g.vertex_count()).unwrap();
    match broken.validate(&g) {
        Ok(()) => println!("unexpectedly valid"),
        Err(violations) => {
            println!("\nbroken routing:");
            for v in violations {
                println!("  {v}");
            }
        }
    }
}
