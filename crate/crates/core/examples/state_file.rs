//! Reading and writing the JSON state format used by `ketsim qft --state-file`.

use ketsim::qft::{build_qft_circuit, run_circuit};
use ketsim::statefile::{parse_state, render_state};

fn main() -> ketsim::Result<()> {
    let json = r#"[
        {"basis": "00", "re": 0.7071067811865476, "im": 0},
        {"basis": "10", "re": 0.7071067811865476, "im": 0}
    ]"#;
    let v = parse_state(json)?;
    let out = run_circuit(&build_qft_circuit(v.width())?, &v)?;
    println!("{}", render_state(&out));
    Ok(())
}
