//! Build graphs from spec strings and from edge lists.
//!
//! ```bash
//! cargo run -p circdepth --example build_graphs -- "cubic:5:1" "union:(path:3;cycle:4)"
//! ```

use circdepth::graph::{ladder_position, Rail};
use circdepth::{build_graph, Graph, GraphSpec};

fn describe(spec: &GraphSpec) {
    match build_graph(spec) {
        Ok(g) => {
            println!("{spec}: {} vertices, {} edges, degrees {:?}", g.num_vertices(), g.num_edges(), g.degree_sequence());
            let edges: Vec<String> = g.edges().map(|(u, v)| format!("{}-{}", g.label(u), g.label(v))).collect();
            println!("  {}", edges.join(" "));
        }
        Err(e) => println!("{spec}: {e}"),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs: Vec<String> = if args.is_empty() {
        ["path:4", "star:4", "ladderA:3", "ladderB:2", "ladderC:2", "ladderD:2", "cubic:4:1", "circulant:8:1,4"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    for s in &specs {
        match s.parse::<GraphSpec>() {
            Ok(spec) => describe(&spec),
            Err(e) => println!("{s}: {e}"),
        }
    }

    // rails of the Möbius ladder: y_k sits opposite x_k
    let n = 5;
    let rails: Vec<(usize, usize)> =
        (1..=n).map(|k| (ladder_position(n, 1, Rail::X, k).unwrap(), ladder_position(n, 1, Rail::Y, k).unwrap())).collect();
    println!("C_10(1,5) rungs {rails:?}");

    let g = Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    println!("hand-built square: connected {}, regular degree {:?}", g.is_connected(), g.regular_degree());
}
