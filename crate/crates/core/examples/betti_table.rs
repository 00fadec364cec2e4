//! Graded Betti numbers of `S/I(G)` and the invariants read off them.
//!
//! ```bash
//! cargo run --release -p circdepth --example betti_table -- cycle:6 exact
//! ```

use circdepth::build_graph;
use circdepth::homology::{cross_field_check, hochster_betti_table, FieldSpec, InvariantReport};

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "cubic:4:1".into());
    let field: FieldSpec = args.next().as_deref().unwrap_or("2").parse().expect("field");
    let g = build_graph(&spec.parse().expect("graph spec")).expect("buildable graph");

    let table = hochster_betti_table(&g, field).expect("small enough graph");
    println!("{spec} over {field}");
    println!("{}", table.render());
    let r = InvariantReport::from_table(&table, field);
    println!("pdim {}  depth {}  reg {}", r.pdim(), r.depth(), r.reg());

    let cross = cross_field_check(&g).unwrap();
    if cross.agree() {
        println!("GF(2) and GF(32003) tables agree");
    } else {
        for d in &cross.differing {
            println!("beta_{},{}: {} over GF(2), {} over GF(32003)", d.i, d.j, d.gf2, d.gf32003);
        }
    }
}
