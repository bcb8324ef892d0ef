//! Outcome probabilities and seeded sampling.

use std::collections::BTreeMap;

use ketsim::measurement::{distribution, sample};
use ketsim::qft::qft_direct;
use ketsim::RandomStream;

fn main() -> ketsim::Result<()> {
    let v = qft_direct(1, 2)?;
    for (ket, p) in distribution(&v)?.entries() {
        println!("P({ket}) = {p}");
    }

    let mut rng = RandomStream::new(42);
    let mut counts = BTreeMap::new();
    for _ in 0..10_000 {
        *counts.entry(sample(&v, &mut rng)?.to_string()).or_insert(0) += 1;
    }
    println!("10000 draws with seed {}: {counts:?}", rng.seed());
    Ok(())
}
