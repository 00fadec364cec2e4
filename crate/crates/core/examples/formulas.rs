//! Closed-form depth, pdim and Stanley depth for each supported family.
//!
//! ```bash
//! cargo run -p circdepth --example formulas
//! ```

use circdepth::formulas::{formula_for_spec, ladder_invariants};
use circdepth::{GraphSpec, LadderFamily};

fn main() {
    println!("{:<8} {:>3} {:>6} {:>6} {:>8}", "family", "n", "depth", "pdim", "sdepth");
    for f in LadderFamily::ALL {
        for n in 2..=8 {
            let r = ladder_invariants(f, n).unwrap();
            println!("ladder{} {n:>3} {:>6} {:>6} {:>8}", f.letter(), r.depth.to_string(), r.pdim.to_string(), r.sdepth.to_string());
        }
    }

    println!();
    for n in 2..=8 {
        for a in 1..n {
            let spec = GraphSpec::CubicCirculant { n, a };
            let r = formula_for_spec(&spec).unwrap();
            println!("{spec:<10} depth {:<3} sdepth {:<8} {}", r.depth, r.sdepth.to_string(), r.source);
        }
    }

    for s in ["cycle:9", "union:(cubic:3:1;path:4)", "circulant:7:1,2"] {
        match formula_for_spec(&s.parse().unwrap()) {
            Ok(r) => println!("{s}: depth {} sdepth {}", r.depth, r.sdepth),
            Err(e) => println!("{s}: {e}"),
        }
    }
}
