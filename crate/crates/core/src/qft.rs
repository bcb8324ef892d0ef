//! The quantum Fourier transform: the gate circuit used by the simulator,
//! plus the direct sum and the product form, which serve as independent
//! references for it.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gates::{apply_single, apply_two, hadamard, rotation, swap};
use crate::state::{Amplitude, BasisState, StateVector};

/// One positioned gate in a circuit. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GateApplication {
    Hadamard(usize),
    /// Controlled phase between `i < j`, with distance `d = j - i`.
    Rotation(usize, usize),
    Swap(usize, usize),
}

impl GateApplication {
    pub fn positions(&self) -> (usize, Option<usize>) {
        match *self {
            Self::Hadamard(i) => (i, None),
            Self::Rotation(i, j) | Self::Swap(i, j) => (i, Some(j)),
        }
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        match *self {
            Self::Hadamard(i) => apply_single(&hadamard(), i, v),
            Self::Rotation(i, j) => {
                if j <= i {
                    return Err(Error::PositionOrder(i, j));
                }
                apply_two(&rotation((j - i) as u32)?, i, j, v)
            }
            Self::Swap(i, j) => apply_two(&swap(), i, j, v),
        }
    }
}

impl fmt::Display for GateApplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Hadamard(i) => write!(f, "H {i}"),
            Self::Rotation(i, j) => write!(f, "R {i} {j}"),
            Self::Swap(i, j) => write!(f, "SWAP {i} {j}"),
        }
    }
}

impl FromStr for GateApplication {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let mut parts = s.split_whitespace();
        let name = parts.next().ok_or_else(|| "empty step".to_string())?;
        let nums = parts
            .map(|p| p.parse::<usize>().map_err(|e| format!("{p:?}: {e}")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        match (name, nums.as_slice()) {
            ("H", &[i]) => Ok(Self::Hadamard(i)),
            ("R", &[i, j]) if i < j => Ok(Self::Rotation(i, j)),
            ("SWAP", &[i, j]) if i < j => Ok(Self::Swap(i, j)),
            _ => Err(format!("unrecognized step {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    width: usize,
    steps: Vec<GateApplication>,
}

impl Circuit {
    pub fn new(width: usize, steps: Vec<GateApplication>) -> Result<Self> {
        if width == 0 {
            return Err(Error::ZeroQubits);
        }
        for step in &steps {
            let (i, j) = step.positions();
            for p in std::iter::once(i).chain(j) {
                if p < 1 || p > width {
                    return Err(Error::PositionOutOfRange { position: p, width });
                }
            }
            if let Some(j) = j {
                if i >= j {
                    return Err(Error::PositionOrder(i, j));
                }
            }
        }
        Ok(Self { width, steps })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn steps(&self) -> &[GateApplication] {
        &self.steps
    }

    /// The same steps acting on the leading qubits of a wider register.
    pub fn widened(&self, width: usize) -> Result<Self> {
        if width < self.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: width,
            });
        }
        Ok(Self {
            width,
            steps: self.steps.clone(),
        })
    }

    pub fn counts(&self) -> GateCounts {
        let swaps = self
            .steps
            .iter()
            .filter(|s| matches!(s, GateApplication::Swap(..)))
            .count();
        GateCounts {
            h_and_r: self.steps.len() - swaps,
            swaps,
        }
    }

    /// One step per line: `H 1`, `R 1 3`, `SWAP 1 3`.
    pub fn to_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }
}

/// H at each qubit followed by its rotations against every later qubit,
/// then the swap layer that reverses qubit order.
pub fn build_qft_circuit(q: usize) -> Result<Circuit> {
    if q < 1 {
        return Err(Error::ZeroQubits);
    }
    let mut steps = Vec::with_capacity(q * (q + 1) / 2 + q / 2);
    for i in 1..=q {
        steps.push(GateApplication::Hadamard(i));
        for j in i + 1..=q {
            steps.push(GateApplication::Rotation(i, j));
        }
    }
    for i in 1..=q / 2 {
        steps.push(GateApplication::Swap(i, q + 1 - i));
    }
    Circuit::new(q, steps)
}

pub fn run_circuit(c: &Circuit, v: &StateVector) -> Result<StateVector> {
    if c.width != v.width() {
        return Err(Error::WidthMismatch {
            left: c.width,
            right: v.width(),
        });
    }
    c.steps
        .iter()
        .try_fold(v.clone(), |acc, step| step.apply(&acc))
}

fn check_basis(j: u64, q: usize) -> Result<()> {
    if q < 1 {
        return Err(Error::ZeroQubits);
    }
    BasisState::new(q, j).map(|_| ())
}

/// `e^{2πi·num/den}`, reducing `num` first so large products keep their precision.
fn unit_phase(num: u128, den: u128) -> Amplitude {
    let reduced = (num % den) as f64 / den as f64;
    Amplitude::from_polar(1.0, 2.0 * PI * reduced)
}

/// `QFT e[j] = 1/√n Σ_k e^{2πijk/n} e[k]` evaluated term by term.
pub fn qft_direct(j: u64, q: usize) -> Result<StateVector> {
    check_basis(j, q)?;
    let n = 1u128 << q;
    let scale = 1.0 / (n as f64).sqrt();
    StateVector::from_terms(
        q,
        (0..n as u64).map(|k| (k, unit_phase(u128::from(j) * u128::from(k), n) * scale)),
    )
}

/// The tensor product `⊗_{m=1..q} (e[0] + e^{2πij/2^m} e[1]) / √2`.
pub fn qft_product_form(j: u64, q: usize) -> Result<StateVector> {
    check_basis(j, q)?;
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut acc: Option<StateVector> = None;
    for m in 1..=q {
        let factor = StateVector::from_terms(
            1,
            [
                (0, Amplitude::new(scale, 0.0)),
                (1, unit_phase(u128::from(j), 1u128 << m) * scale),
            ],
        )?;
        acc = Some(match acc {
            None => factor,
            Some(prev) => prev.tensor(&factor)?,
        });
    }
    Ok(acc.expect("q >= 1"))
}

/// Classical DFT with `1/√n` normalization and a positive exponent.
pub fn dft_oracle(amplitudes: &[Amplitude]) -> Result<Vec<Amplitude>> {
    let n = amplitudes.len();
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n));
    }
    let scale = 1.0 / (n as f64).sqrt();
    Ok((0..n)
        .map(|k| {
            amplitudes
                .iter()
                .enumerate()
                .map(|(j, &a)| a * unit_phase((j * k) as u128, n as u128))
                .sum::<Amplitude>()
                * scale
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GateCounts {
    pub h_and_r: usize,
    pub swaps: usize,
}

pub fn gate_counts(q: usize) -> Result<GateCounts> {
    if q < 1 {
        return Err(Error::ZeroQubits);
    }
    Ok(GateCounts {
        h_and_r: q * (q + 1) / 2,
        swaps: q / 2,
    })
}
