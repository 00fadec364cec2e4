//! Split `C_{2n}(a, n)` into connected circulant components.
//!
//! ```bash
//! cargo run -p circdepth --example decompose -- 6
//! ```

use circdepth::graph::{decompose_cubic_circulant, validate_report};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 2..=max_n {
        for a in 1..n {
            match decompose_cubic_circulant(n, a) {
                Ok(r) => println!(
                    "C_{}({a},{n})  t={}  {:<14} {}",
                    2 * n,
                    r.t,
                    r.summary(),
                    if validate_report(&r) { "ok" } else { "witness rejected" }
                ),
                Err(e) => println!("C_{}({a},{n})  {e}", 2 * n),
            }
        }
    }
}
