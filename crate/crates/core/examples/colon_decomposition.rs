//! The colon-ideal direct sum at a pivot vertex, with a degree-by-degree
//! dimension check.
//!
//! ```bash
//! cargo run -p circdepth --example colon_decomposition -- ladderA:4 y4
//! ```

use circdepth::build_graph;
use circdepth::ideal::{colon_decomposition, verify_colon_decomposition_with_order};

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "ladderA:4".into());
    let pivot_label = args.next().unwrap_or_else(|| "y4".into());
    let g = build_graph(&spec.parse().expect("graph spec")).expect("buildable graph");
    let Some(pivot) = g.vertex_by_label(&pivot_label) else {
        eprintln!("no vertex {pivot_label} in {spec}; labels are {:?}", g.labels());
        std::process::exit(2);
    };

    let summands = colon_decomposition(&g, pivot).expect("connected graph");
    println!("(I : {pivot_label}) / I for {spec}");
    for s in &summands {
        let vars: Vec<&str> = s.ring_vars.iter().map(|v| g.label(v)).collect();
        let h = s.graph(&g);
        println!("  K[{}]/J [{}]   J has {} generators", vars.join(","), g.label(s.adjoined_var), h.num_edges());
    }

    let order: Vec<usize> = summands.iter().map(|s| s.adjoined_var).collect();
    for c in verify_colon_decomposition_with_order(&g, pivot, &order, 5).unwrap() {
        println!("  degree {}: quotient {:>4}  summands {:>4}  {}", c.degree, c.quotient, c.summands, if c.matches() { "=" } else { "!=" });
    }
}
