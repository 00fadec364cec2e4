//! Run the formula-vs-oracle-vs-solver suite from library code and
//! summarise verdicts per family.
//!
//! ```bash
//! cargo run --release -p circdepth --example verify_suite -- 6
//! ```

use std::collections::BTreeMap;
use std::time::Duration;

use circdepth::cli::{verify_suite, EvalPlan, Method, Verdict};
use circdepth::homology::FieldSpec;

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let plan = EvalPlan::new(Method::All, FieldSpec::GF2, Duration::from_secs(10), false);
    let rows = verify_suite(max_n, &plan).expect("suite runs");

    let mut tally: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for r in &rows {
        let slot = match r.verdict {
            Verdict::Match => 0,
            Verdict::BoundsConsistent => 1,
            Verdict::Mismatch => 2,
        };
        tally.entry(r.family.as_str()).or_default()[slot] += 1;
    }
    println!("{:<14} {:>6} {:>8} {:>9}", "family", "match", "bounds", "MISMATCH");
    for (f, [m, b, x]) in &tally {
        println!("{f:<14} {m:>6} {b:>8} {x:>9}");
    }
    for r in rows.iter().filter(|r| r.verdict == Verdict::Mismatch) {
        println!("MISMATCH {} {} ({})", r.family, r.params, r.theorem);
    }
}
