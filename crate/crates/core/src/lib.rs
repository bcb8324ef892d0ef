//! Sparse basis-state simulation of quantum algorithms.
//!
//! States are canonical linear combinations of computational basis kets
//! `e[x_1, ..., x_n]`; gates act by rewriting the bits of each term. On top of
//! that sit the quantum Fourier transform circuit with two independent
//! references for it, seeded measurement, and Shor's factoring algorithm with
//! its classical pre- and post-processing.
//!
//! ```
//! use ketsim::qft::{build_qft_circuit, qft_direct, run_circuit};
//! use ketsim::state::StateVector;
//!
//! let circuit = build_qft_circuit(3).unwrap();
//! let out = run_circuit(&circuit, &StateVector::basis_ket(3, 5).unwrap()).unwrap();
//! assert!(out.max_abs_diff(&qft_direct(5, 3).unwrap()).unwrap() < 1e-10);
//! ```

pub mod cli;
pub mod error;
pub mod gates;
pub mod measurement;
pub mod qft;
pub mod shor;
pub mod state;
pub mod statefile;

pub use error::{Error, InputError, Result};
pub use measurement::{RandomStream, UniformSource};
pub use state::{Amplitude, BasisState, StateVector};
