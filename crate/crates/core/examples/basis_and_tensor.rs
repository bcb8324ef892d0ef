//! Building sparse states: kets, superpositions, tensor products.

use ketsim::{Amplitude, BasisState, StateVector};

fn main() -> ketsim::Result<()> {
    let ket: BasisState = "101".parse()?;
    println!("{ket} has index {} and bits {:?}", ket.index(), ket.bits());

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let plus = StateVector::from_terms(
        1,
        [(0, Amplitude::new(s, 0.0)), (1, Amplitude::new(s, 0.0))],
    )?;
    let one = StateVector::basis_ket(1, 1)?;

    // |+> ⊗ |1> keeps two terms; widths add
    let joint = plus.tensor(&one)?;
    println!(
        "|+>|1> = {joint}  (width {}, norm {:.3})",
        joint.width(),
        joint.norm()
    );

    // cancellation is exact after canonicalization
    let minus = plus.scale(Amplitude::new(-1.0, 0.0));
    println!("|+> - |+> has {} terms", plus.add(&minus)?.len());
    Ok(())
}
