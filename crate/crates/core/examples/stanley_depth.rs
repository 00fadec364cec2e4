//! Exact Stanley depth with a witnessing interval partition.
//!
//! ```bash
//! cargo run --release -p circdepth --example stanley_depth -- ladderB:3
//! ```

use std::time::Duration;

use circdepth::sdepth::{char_poset, sdepth_exact, SolverOptions};
use circdepth::{build_graph, MonomialIdeal};

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cycle:5".into());
    let g = build_graph(&spec.parse().expect("graph spec")).expect("buildable graph");
    let ideal = MonomialIdeal::edge_ideal(&g);

    let poset = char_poset(&ideal).expect("at most 14 variables");
    let sizes: Vec<usize> = (0..=poset.max_rank()).map(|r| poset.rank(r).len()).collect();
    println!("{spec}: {} standard squarefree monomials, by degree {sizes:?}", poset.len());

    let options = SolverOptions { time_budget: Some(Duration::from_secs(30)), ..SolverOptions::default() };
    let r = sdepth_exact(&ideal, options).unwrap();
    println!("sdepth {:?} (upper bound {}, {} search nodes)", r.value, r.upper_bound, r.nodes);

    let name = |s: circdepth::VertexSet| {
        let v: Vec<&str> = s.iter().map(|i| g.label(i)).collect();
        format!("{{{}}}", v.join(","))
    };
    for iv in &r.witness.intervals {
        println!("  [{}, {}]", name(iv.lower), name(iv.upper));
    }
    assert!(r.witness.is_partition_of(&poset));
}
