//! Quantum order finding for x = 7 mod 15: the first register peaks at multiples of 2^q / r.

use ketsim::shor::{
    brute_force_order, first_register_distribution, order_find_quantum, order_finding_state,
};
use ketsim::RandomStream;

fn main() -> ketsim::Result<()> {
    let (n, x, q) = (15, 7, 8);
    let state = order_finding_state(n, x, q)?;
    println!(
        "{} nonzero terms over {} qubits",
        state.len(),
        state.width()
    );
    for (k, p) in first_register_distribution(&state, q) {
        println!(
            "k = {k:3}  p = {p:.6}  k/2^q = {}",
            k as f64 / (1u64 << q) as f64
        );
    }
    let mut rng = RandomStream::new(3);
    let k = order_find_quantum(n, x, q, &mut rng)?;
    println!("sampled k = {k}; true order = {}", brute_force_order(x, n)?);
    Ok(())
}
