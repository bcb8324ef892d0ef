//! Hadamard, controlled phase and swap as rewrite rules on individual kets.

use ketsim::gates::{apply_single, apply_two, hadamard, rotation, swap};
use ketsim::StateVector;

fn main() -> ketsim::Result<()> {
    let v = StateVector::basis_ket(3, 0b110)?;
    println!("start         {v}");

    let v = apply_single(&hadamard(), 3, &v)?;
    println!("H on 3        {v}");

    // phase e^{iπ/2^{j-i}} only where both qubits are set
    let v = apply_two(&rotation(1)?, 2, 3, &v)?;
    println!("R(2,3)        {v}");

    let v = apply_two(&swap(), 1, 3, &v)?;
    println!("SWAP(1,3)     {v}");
    println!("norm          {:.15}", v.norm());

    // positions must be ordered
    if let Err(e) = apply_two(&swap(), 3, 1, &v) {
        println!("SWAP(3,1)     error: {e}");
    }
    Ok(())
}
