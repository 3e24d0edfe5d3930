//! How often `random(n, seed)` produces a valid lace graph.
//!
//! cargo run --release --example acceptance_rate -- [tries]

use lacegraph::io::corpus::acceptance_rate;

fn main() {
    let tries: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(20_000);
    for n in 1..=8 {
        let (ok, total) = acceptance_rate(n, tries, n as u64);
        println!("n={n}: {ok}/{total} ({:.3}%)", 100.0 * ok as f64 / total as f64);
    }
}
