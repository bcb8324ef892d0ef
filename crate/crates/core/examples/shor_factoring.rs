//! End-to-end factoring with per-attempt traces.
//!
//! `cargo run --example shor_factoring -- 21 5`

use ketsim::shor::{shor_factor, ShorConfig};

fn main() -> ketsim::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args
        .next()
        .map_or(15, |s| s.parse().expect("N must be an integer"));
    let seed: u64 = args
        .next()
        .map_or(1, |s| s.parse().expect("seed must be an integer"));

    let result = shor_factor(n, &ShorConfig::with_seed(seed))?;
    for (i, t) in result.traces.iter().enumerate() {
        println!(
            "attempt {}: x = {}, k = {:?}, denominators {:?}, r = {:?}, {:?}",
            i + 1,
            t.chosen_x,
            t.measured_k,
            t.convergent_denominators,
            t.accepted_r,
            t.failure_reason
        );
    }
    match result.factors {
        Some((a, b)) => println!("{n} = {a} × {b}"),
        None => println!("no factors found"),
    }
    Ok(())
}
