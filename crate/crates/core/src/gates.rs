//! One- and two-qubit gates as rewrite rules on basis kets, lifted to act at
//! arbitrary positions of a register.
//!
//! A gate is stored as the images of the basis kets it rewrites. Applying it
//! at position `i` rewrites bit `i` of every term through those images and
//! leaves the remaining bits alone, which is the action of
//! `I ⊗ ... ⊗ U ⊗ ... ⊗ I` without ever building that matrix.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};
use crate::state::{Amplitude, StateVector};

const UNITARITY_TOLERANCE: f64 = 1e-12;

fn zero() -> Amplitude {
    Amplitude::new(0.0, 0.0)
}

fn one() -> Amplitude {
    Amplitude::new(1.0, 0.0)
}

/// Checks that the columns of a `dim × dim` matrix (given column-major) are orthonormal.
fn columns_orthonormal<const D: usize>(cols: &[[Amplitude; D]; D]) -> bool {
    for a in 0..D {
        for b in 0..D {
            let dot: Amplitude = (0..D).map(|r| cols[a][r].conj() * cols[b][r]).sum();
            let expected = if a == b { one() } else { zero() };
            if (dot - expected).norm() > UNITARITY_TOLERANCE {
                return false;
            }
        }
    }
    true
}

fn image_column<const D: usize>(image: &StateVector, width: usize) -> Result<[Amplitude; D]> {
    if image.width() != width {
        return Err(Error::WidthMismatch {
            left: width,
            right: image.width(),
        });
    }
    let mut col = [zero(); D];
    for &(i, a) in image.terms() {
        col[i as usize] = a;
    }
    Ok(col)
}

fn column_state(col: &[Amplitude], width: usize) -> StateVector {
    StateVector::from_terms(width, col.iter().enumerate().map(|(i, &a)| (i as u64, a)))
        .expect("gate columns are in range")
}

/// `e[0] -> c1 e[0] + c2 e[1]`, `e[1] -> c3 e[0] + c4 e[1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SingleQubitGate {
    // columns[b][r]: amplitude of e[r] in the image of e[b]
    columns: [[Amplitude; 2]; 2],
}

impl SingleQubitGate {
    pub fn from_images(image0: &StateVector, image1: &StateVector) -> Result<Self> {
        let columns = [image_column(image0, 1)?, image_column(image1, 1)?];
        if !columns_orthonormal(&columns) {
            return Err(Error::NotUnitary);
        }
        Ok(Self { columns })
    }

    /// Image of `e[bit]`.
    pub fn image(&self, bit: u8) -> StateVector {
        column_state(&self.columns[usize::from(bit & 1)], 1)
    }

    /// Matrix entry `<row|U|col>`.
    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.columns[col][row]
    }
}

/// Images of `e[0,0]`, `e[0,1]`, `e[1,0]`, `e[1,1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitGate {
    columns: [[Amplitude; 4]; 4],
}

impl TwoQubitGate {
    pub fn from_images(images: [&StateVector; 4]) -> Result<Self> {
        let columns = [
            image_column(images[0], 2)?,
            image_column(images[1], 2)?,
            image_column(images[2], 2)?,
            image_column(images[3], 2)?,
        ];
        if !columns_orthonormal(&columns) {
            return Err(Error::NotUnitary);
        }
        Ok(Self { columns })
    }

    /// Image of `e[a, b]` where `pair = 2a + b`.
    pub fn image(&self, pair: u8) -> StateVector {
        column_state(&self.columns[usize::from(pair & 3)], 2)
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        self.columns[col][row]
    }
}

/// `H := {e[0] -> (e[0] + e[1])/√2, e[1] -> (e[0] - e[1])/√2}`
pub fn hadamard() -> SingleQubitGate {
    let s = Amplitude::new(FRAC_1_SQRT_2, 0.0);
    SingleQubitGate {
        columns: [[s, s], [s, -s]],
    }
}

/// Controlled phase: `e[1,1] -> exp(iπ/2^d) e[1,1]`, every other ket fixed.
pub fn rotation(d: u32) -> Result<TwoQubitGate> {
    if d < 1 {
        return Err(Error::InvalidRotation(d));
    }
    let phase = Amplitude::from_polar(1.0, PI / 2f64.powi(d as i32));
    let mut columns = [[zero(); 4]; 4];
    for (k, col) in columns.iter_mut().enumerate().take(3) {
        col[k] = one();
    }
    columns[3][3] = phase;
    Ok(TwoQubitGate { columns })
}

/// `Swap := {e[i, j] -> e[j, i]}`
pub fn swap() -> TwoQubitGate {
    let mut columns = [[zero(); 4]; 4];
    columns[0b00][0b00] = one();
    columns[0b01][0b10] = one();
    columns[0b10][0b01] = one();
    columns[0b11][0b11] = one();
    TwoQubitGate { columns }
}

fn check_position(position: usize, width: usize) -> Result<()> {
    if position < 1 || position > width {
        return Err(Error::PositionOutOfRange { position, width });
    }
    Ok(())
}

/// Applies `g` to the qubit at 1-based `position`.
pub fn apply_single(g: &SingleQubitGate, position: usize, v: &StateVector) -> Result<StateVector> {
    let width = v.width();
    check_position(position, width)?;
    let shift = width - position;
    let mask = 1u64 << shift;
    let mut raw = Vec::with_capacity(v.len() * 2);
    for &(index, amp) in v.terms() {
        let bit = ((index >> shift) & 1) as usize;
        let base = index & !mask;
        for (r, &entry) in g.columns[bit].iter().enumerate() {
            if entry != zero() {
                raw.push((base | ((r as u64) << shift), amp * entry));
            }
        }
    }
    Ok(StateVector::collect_unchecked(width, raw))
}

/// Applies `g` jointly to qubits `i < j`; qubit `i` plays the first slot of `g`.
pub fn apply_two(g: &TwoQubitGate, i: usize, j: usize, v: &StateVector) -> Result<StateVector> {
    let width = v.width();
    check_position(i, width)?;
    check_position(j, width)?;
    if i >= j {
        return Err(Error::PositionOrder(i, j));
    }
    let (si, sj) = (width - i, width - j);
    let mask = (1u64 << si) | (1u64 << sj);
    let mut raw = Vec::with_capacity(v.len() * 2);
    for &(index, amp) in v.terms() {
        let pair = (((index >> si) & 1) << 1 | ((index >> sj) & 1)) as usize;
        let base = index & !mask;
        for (r, &entry) in g.columns[pair].iter().enumerate() {
            if entry != zero() {
                let r = r as u64;
                raw.push((base | ((r >> 1) << si) | ((r & 1) << sj), amp * entry));
            }
        }
    }
    Ok(StateVector::collect_unchecked(width, raw))
}
