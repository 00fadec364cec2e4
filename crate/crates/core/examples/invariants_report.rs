//! Evaluate one graph by every method and print the combined verdict, the
//! same path the `invariants` subcommand takes.
//!
//! ```bash
//! cargo run --release -p circdepth --example invariants_report -- ladderD:4
//! ```

use std::time::Duration;

use circdepth::cli::{evaluate, EvalPlan, Method};
use circdepth::homology::FieldSpec;

fn main() {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "cubic:5:2".into()).parse().expect("graph spec");
    let plan = EvalPlan::new(Method::All, FieldSpec::GF32003, Duration::from_secs(30), false);
    let e = evaluate(&spec, &plan).expect("evaluation");
    println!("{} on {} vertices", e.spec, e.vertices);
    if let Some(f) = &e.formula {
        println!("  formula: depth {} pdim {} sdepth {}", f.depth, f.pdim, f.sdepth);
    }
    if let Some(o) = &e.oracle {
        println!("  oracle:  depth {} pdim {} reg {}", o.depth(), o.pdim(), o.reg());
    }
    if let Some(s) = &e.solver {
        println!("  solver:  sdepth {:?}", s.value);
    }
    for n in &e.notes {
        println!("  note: {n}");
    }
    println!("  verdict {}", e.verdict().as_str());
}
