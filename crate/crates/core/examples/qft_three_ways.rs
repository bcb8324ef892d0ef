//! The QFT as a gate circuit, as a direct sum and as a product of one-qubit factors.

use ketsim::qft::{build_qft_circuit, qft_direct, qft_product_form, run_circuit};
use ketsim::StateVector;

fn main() -> ketsim::Result<()> {
    let q = 3;
    let circuit = build_qft_circuit(q)?;
    print!("{}", circuit.to_text());
    let counts = circuit.counts();
    println!("{} H/R steps, {} swaps\n", counts.h_and_r, counts.swaps);

    for j in 0..(1u64 << q) {
        let via_circuit = run_circuit(&circuit, &StateVector::basis_ket(q, j)?)?;
        let direct = qft_direct(j, q)?;
        let product = qft_product_form(j, q)?;
        println!(
            "j={j}: circuit vs direct {:.1e}, product vs direct {:.1e}",
            via_circuit.max_abs_diff(&direct)?,
            product.max_abs_diff(&direct)?
        );
    }
    println!("\nQFT|5> = {}", qft_direct(5, q)?);
    Ok(())
}
