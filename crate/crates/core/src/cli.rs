//! Command-line front end. Commands render into an [`Output`] so they can be
//! driven in-process; the `ketsim` binary only prints it and exits.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::measurement::RandomStream;
use crate::qft::{build_qft_circuit, gate_counts, qft_direct, qft_product_form, run_circuit};
use crate::shor::{
    brute_force_order, convergent_denominators, default_qubits, gcd, mod_pow, order_find_quantum,
    scan_denominators, shor_factor, DenominatorScan, ShorConfig, ShorTrace,
};
use crate::state::StateVector;
use crate::statefile::read_state_file;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_EXHAUSTED: i32 = 2;

/// Input states for `qft --state-file` may be off by this much in norm.
pub const STATE_FILE_NORM_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(
    name = "ketsim",
    version,
    about = "Sparse quantum circuit simulation: QFT and Shor factoring"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Gate-by-gate circuit simulation
    Circuit,
    /// Direct sum over output kets (basis input only)
    Direct,
    /// Tensor product of single-qubit factors (basis input only)
    Product,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor an odd composite with Shor's algorithm
    Factor {
        n: u64,
        #[arg(long)]
        seed: Option<u64>,
        /// Maximum number of random x to try
        #[arg(long)]
        attempts: Option<usize>,
        /// Qubits per register (default ⌈log2 N²⌉)
        #[arg(long)]
        qubits: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Apply the quantum Fourier transform to a basis ket or a state file
    Qft {
        #[arg(long)]
        qubits: Option<usize>,
        #[arg(
            long,
            conflicts_with = "state_file",
            required_unless_present = "state_file"
        )]
        basis: Option<u64>,
        #[arg(long)]
        state_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Circuit)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Run one simulated order-finding measurement for x modulo N
    Order {
        n: u64,
        x: u64,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        qubits: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// List the QFT circuit and its gate counts
    Gates {
        #[arg(long)]
        qubits: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Serialize)]
struct Envelope<'a, R: Serialize> {
    command: &'a str,
    inputs: Value,
    seed: Option<u64>,
    result: R,
    #[serde(skip_serializing_if = "Option::is_none")]
    traces: Option<&'a [ShorTrace]>,
}

/// Rounds to 12 significant digits and folds negative zero into zero.
pub fn round_amplitude(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return 0.0;
    }
    let r: f64 = format!("{x:.11e}")
        .parse()
        .expect("float formats round-trip");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    match &cli.command {
        Command::Factor {
            n,
            seed,
            attempts,
            qubits,
            json,
        } => cmd_factor(*n, *seed, *attempts, *qubits, *json),
        Command::Qft {
            qubits,
            basis,
            state_file,
            method,
            json,
        } => cmd_qft(*qubits, *basis, state_file.as_deref(), *method, *json),
        Command::Order {
            n,
            x,
            seed,
            qubits,
            json,
        } => cmd_order(*n, *x, *seed, *qubits, *json),
        Command::Gates { qubits, json } => cmd_gates(*qubits, *json),
    }
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(rand::random)
}

fn emit<R: Serialize>(
    command: &str,
    inputs: Value,
    seed: Option<u64>,
    result: R,
    traces: Option<&[ShorTrace]>,
) -> String {
    let env = Envelope {
        command,
        inputs,
        seed,
        result,
        traces,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("envelope serializes");
    s.push('\n');
    s
}

fn failure(command: &str, inputs: Value, seed: Option<u64>, json: bool, err: &Error) -> Output {
    let kind = match err {
        Error::Input(e) => e.kind(),
        _ => "InvalidArgument",
    };
    let message = err.to_string();
    let stdout = if json {
        emit(
            command,
            inputs,
            seed,
            json!({ "error": { "kind": kind, "message": message } }),
            None,
        )
    } else {
        String::new()
    };
    Output {
        stdout,
        stderr: format!("error: {message}\n"),
        code: EXIT_INVALID,
    }
}

fn fmt_pair(p: Option<(u64, u64)>) -> String {
    p.map_or_else(|| "-".to_string(), |(a, b)| format!("{a} x {b}"))
}

pub fn cmd_factor(
    n: u64,
    seed: Option<u64>,
    attempts: Option<usize>,
    qubits: Option<usize>,
    json: bool,
) -> Output {
    let seed = resolve_seed(seed);
    let inputs = json!({ "n": n, "attempts": attempts, "qubits": qubits });
    let config = ShorConfig {
        qubits_override: qubits,
        max_attempts_override: attempts,
        seed,
    };
    let outcome = match shor_factor(n, &config) {
        Ok(o) => o,
        Err(e) => return failure("factor", inputs, Some(seed), json, &e),
    };
    let q = config.qubits(n);
    let allowed = config.attempts(n);
    let code = if outcome.factors.is_some() {
        EXIT_OK
    } else {
        EXIT_EXHAUSTED
    };
    let stdout = if json {
        let result = json!({
            "n": n,
            "qubits": q,
            "max_attempts": allowed,
            "attempts_used": outcome.traces.len(),
            "factors": outcome.factors,
        });
        emit("factor", inputs, Some(seed), result, Some(&outcome.traces))
    } else {
        let mut s = format!("N = {n}, q = {q}, up to {allowed} attempts, seed {seed}\n");
        for (i, t) in outcome.traces.iter().enumerate() {
            let _ = write!(s, "attempt {}: x = {}", i + 1, t.chosen_x);
            if let Some(g) = t.gcd_shortcut {
                let _ = write!(s, ", gcd(x, N) = {g}");
            }
            if let Some(k) = t.measured_k {
                let _ = write!(s, ", k = {k}, denominators {:?}", t.convergent_denominators);
            }
            if let Some(r) = t.accepted_r {
                let _ = write!(s, ", r = {r}");
            }
            match (t.factors, t.failure_reason) {
                (Some(f), _) => {
                    let _ = writeln!(s, " -> {}", fmt_pair(Some(f)));
                }
                (None, Some(reason)) => {
                    let _ = writeln!(s, " -> {reason:?}");
                }
                (None, None) => s.push('\n'),
            }
        }
        match outcome.factors {
            Some((a, b)) => {
                let _ = writeln!(s, "factors: {a} {b}");
            }
            None => s.push_str("no factors found\n"),
        }
        s
    };
    let stderr = if code == EXIT_EXHAUSTED {
        format!("no factor of {n} found in {allowed} attempts\n")
    } else {
        String::new()
    };
    Output {
        stdout,
        stderr,
        code,
    }
}

#[derive(Serialize)]
struct TermOut {
    basis: String,
    re: f64,
    im: f64,
    probability: f64,
}

fn qft_state(
    qubits: Option<usize>,
    basis: Option<u64>,
    state_file: Option<&std::path::Path>,
    method: Method,
) -> Result<(usize, StateVector), Error> {
    let arg = |m: &str| Error::StateFile(m.to_string());
    match (basis, state_file) {
        (Some(j), None) => {
            let q = qubits.ok_or_else(|| arg("--basis requires --qubits"))?;
            let out = match method {
                Method::Circuit => {
                    run_circuit(&build_qft_circuit(q)?, &StateVector::basis_ket(q, j)?)?
                }
                Method::Direct => qft_direct(j, q)?,
                Method::Product => qft_product_form(j, q)?,
            };
            Ok((q, out))
        }
        (None, Some(path)) => {
            if method != Method::Circuit {
                return Err(arg("--method direct and product take --basis input only"));
            }
            let input = read_state_file(path)?;
            if let Some(q) = qubits {
                if q != input.width() {
                    return Err(Error::WidthMismatch {
                        left: q,
                        right: input.width(),
                    });
                }
            }
            let norm = input.norm();
            if (norm - 1.0).abs() > STATE_FILE_NORM_TOLERANCE {
                return Err(Error::NotNormalized(norm));
            }
            let q = input.width();
            Ok((q, run_circuit(&build_qft_circuit(q)?, &input)?))
        }
        _ => Err(arg("exactly one of --basis and --state-file is required")),
    }
}

pub fn cmd_qft(
    qubits: Option<usize>,
    basis: Option<u64>,
    state_file: Option<&std::path::Path>,
    method: Method,
    json: bool,
) -> Output {
    let inputs = json!({
        "qubits": qubits,
        "basis": basis,
        "state_file": state_file.map(|p| p.display().to_string()),
        "method": method,
    });
    let (q, out) = match qft_state(qubits, basis, state_file, method) {
        Ok(v) => v,
        Err(e) => return failure("qft", inputs, None, json, &e),
    };
    let terms: Vec<TermOut> = out
        .kets()
        .map(|(ket, a)| TermOut {
            basis: ket.to_string(),
            re: round_amplitude(a.re),
            im: round_amplitude(a.im),
            probability: round_amplitude(a.norm_sqr()),
        })
        .collect();
    let stdout = if json {
        emit(
            "qft",
            inputs,
            None,
            json!({ "qubits": q, "method": method, "norm": round_amplitude(out.norm()), "terms": terms }),
            None,
        )
    } else {
        let mut s = String::new();
        for t in &terms {
            let _ = writeln!(s, "e[{}]  {}  {}  p={}", t.basis, t.re, t.im, t.probability);
        }
        s
    };
    Output {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}

pub fn cmd_order(n: u64, x: u64, seed: Option<u64>, qubits: Option<usize>, json: bool) -> Output {
    let seed = resolve_seed(seed);
    let inputs = json!({ "n": n, "x": x, "qubits": qubits });
    if n < 3 || x == 0 || x >= n {
        let message = format!("need N >= 3 and 0 < x < N, got N = {n}, x = {x}");
        return Output {
            stdout: if json {
                emit(
                    "order",
                    inputs,
                    Some(seed),
                    json!({ "error": { "kind": "InvalidArgument", "message": message } }),
                    None,
                )
            } else {
                String::new()
            },
            stderr: format!("error: {message}\n"),
            code: EXIT_INVALID,
        };
    }
    let g = gcd(x, n);
    if g != 1 {
        let stdout = if json {
            emit(
                "order",
                inputs,
                Some(seed),
                json!({ "gcd_shortcut": g, "factors": [g, n / g] }),
                None,
            )
        } else {
            format!("gcd({x}, {n}) = {g}: shortcut factor {g} x {}\n", n / g)
        };
        return Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        };
    }
    let q = qubits.unwrap_or_else(|| default_qubits(n));
    let mut rng = RandomStream::new(seed);
    let k = match order_find_quantum(n, x, q, &mut rng) {
        Ok(k) => k,
        Err(e) => return failure("order", inputs, Some(seed), json, &e),
    };
    let denominators = convergent_denominators(k, q);
    let candidate_r = denominators
        .iter()
        .copied()
        .find(|&d| mod_pow(x, d, n) == 1);
    let factors = match scan_denominators(n, x, &denominators) {
        DenominatorScan::Accepted { factors, .. } => Some(factors),
        DenominatorScan::Rejected(_) => None,
    };
    let order = brute_force_order(x, n).expect("x is coprime to n");
    let stdout = if json {
        emit(
            "order",
            inputs,
            Some(seed),
            json!({
                "n": n,
                "x": x,
                "qubits": q,
                "measured_k": k,
                "convergent_denominators": denominators,
                "candidate_r": candidate_r,
                "factors": factors,
                "brute_force_order": order,
            }),
            None,
        )
    } else {
        let mut s = format!("N = {n}, x = {x}, q = {q}, seed {seed}\n");
        let _ = writeln!(s, "measured k = {k} (k / 2^q = {k}/{})", 1u64 << q);
        let _ = writeln!(s, "convergent denominators: {denominators:?}");
        match candidate_r {
            Some(r) => {
                let _ = writeln!(s, "candidate r = {r}");
            }
            None => s.push_str("candidate r: none\n"),
        }
        let _ = writeln!(s, "factors: {}", fmt_pair(factors));
        let _ = writeln!(s, "brute-force order = {order}");
        s
    };
    Output {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}

pub fn cmd_gates(qubits: usize, json: bool) -> Output {
    let inputs = json!({ "qubits": qubits });
    let (circuit, counts) =
        match build_qft_circuit(qubits).and_then(|c| Ok((c, gate_counts(qubits)?))) {
            Ok(v) => v,
            Err(e) => return failure("gates", inputs, None, json, &e),
        };
    let stdout = if json {
        let steps: Vec<String> = circuit.steps().iter().map(|s| s.to_string()).collect();
        emit(
            "gates",
            inputs,
            None,
            json!({ "qubits": qubits, "steps": steps, "counts": counts }),
            None,
        )
    } else {
        format!(
            "{}counts: h_and_r={} swaps={}\n",
            circuit.to_text(),
            counts.h_and_r,
            counts.swaps
        )
    };
    Output {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}
