//! Turning a measured k into candidate orders and then into factors.

use ketsim::shor::{convergent_denominators, scan_denominators, DenominatorScan};

fn main() {
    let (n, x, q) = (15, 7, 8);
    for k in [0, 64, 128, 192] {
        let dens = convergent_denominators(k, q);
        let verdict = match scan_denominators(n, x, &dens) {
            DenominatorScan::Accepted { r, factors } => format!("r = {r}, factors {factors:?}"),
            DenominatorScan::Rejected(why) => format!("rejected: {why:?}"),
        };
        println!("k = {k:3}: denominators {dens:?} -> {verdict}");
    }
}
