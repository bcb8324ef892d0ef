#![allow(dead_code)]

use std::collections::BTreeMap;
use std::f64::consts::PI;

use ketsim::gates::{SingleQubitGate, TwoQubitGate};
use ketsim::{Amplitude, StateVector};
use rand::Rng;

pub type Matrix = Vec<Vec<Amplitude>>;

pub fn c(re: f64, im: f64) -> Amplitude {
    Amplitude::new(re, im)
}

pub fn identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|r| {
            (0..dim)
                .map(|col| if r == col { c(1.0, 0.0) } else { c(0.0, 0.0) })
                .collect()
        })
        .collect()
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![c(0.0, 0.0); ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![c(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == c(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn matvec(m: &Matrix, v: &[Amplitude]) -> Vec<Amplitude> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn single_matrix(g: &SingleQubitGate) -> Matrix {
    (0..2)
        .map(|r| (0..2).map(|col| g.entry(r, col)).collect())
        .collect()
}

pub fn two_matrix(g: &TwoQubitGate) -> Matrix {
    (0..4)
        .map(|r| (0..4).map(|col| g.entry(r, col)).collect())
        .collect()
}

/// `I^{⊗(i-1)} ⊗ U ⊗ I^{⊗(n-i)}` for a `2^k × 2^k` block `u` starting at qubit `i`.
pub fn lift(u: &Matrix, i: usize, n: usize) -> Matrix {
    let k = u.len().trailing_zeros() as usize;
    let left = identity(1 << (i - 1));
    let right = identity(1 << (n - i + 1 - k));
    kron(&kron(&left, u), &right)
}

/// Two-qubit gate on `(i, j)`, `i < j`, as the adjacent lift on `(i, i+1)`
/// conjugated by the adjacent-swap chain that carries qubit `j` to `i + 1`.
pub fn lift_two(u: &Matrix, i: usize, j: usize, n: usize) -> Matrix {
    let sw = two_matrix(&ketsim::gates::swap());
    let mut carry = identity(1 << n);
    for p in (i + 1..j).rev() {
        carry = matmul(&lift(&sw, p, n), &carry);
    }
    let core = lift(u, i, n);
    let mut uncarry = identity(1 << n);
    for p in i + 1..j {
        uncarry = matmul(&lift(&sw, p, n), &uncarry);
    }
    matmul(&uncarry, &matmul(&core, &carry))
}

pub fn random_state<R: Rng>(rng: &mut R, width: usize, max_terms: usize) -> StateVector {
    let dim = 1u64 << width;
    let terms = rng.random_range(1..=max_terms.min(dim as usize));
    let raw: Vec<(u64, Amplitude)> = (0..terms)
        .map(|_| {
            (
                rng.random_range(0..dim),
                c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)),
            )
        })
        .collect();
    let v = StateVector::from_terms(width, raw).unwrap();
    if v.is_zero() {
        return StateVector::basis_ket(width, 0).unwrap();
    }
    v.scale(c(1.0 / v.norm(), 0.0))
}

pub fn max_diff(a: &[Amplitude], b: &[Amplitude]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Probability of measuring `k` in the first register, straight from the
/// double sum `(1/n) Σ_c Σ_k e^{2πick/n} e[k] e[x^c mod N]`.
pub fn direct_k_distribution(modulus: u64, x: u64, q: usize) -> Vec<f64> {
    let n = 1usize << q;
    let mut residues = Vec::with_capacity(n);
    let mut f = 1 % modulus;
    for _ in 0..n {
        residues.push(f);
        f = f * x % modulus;
    }
    (0..n)
        .map(|k| {
            let mut per_residue: BTreeMap<u64, Amplitude> = BTreeMap::new();
            for (c, &f) in residues.iter().enumerate() {
                let phase = 2.0 * PI * ((c * k) % n) as f64 / n as f64;
                *per_residue.entry(f).or_default() += Amplitude::from_polar(1.0 / n as f64, phase);
            }
            per_residue.values().map(|a| a.norm_sqr()).sum()
        })
        .collect()
}
