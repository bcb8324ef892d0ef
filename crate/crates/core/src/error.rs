use thiserror::Error;

/// Reasons an integer is rejected as a factoring target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("{0} is too small to factor")]
    TooSmall(u64),
    #[error("{0} is even; divide out factors of 2 first and factor the odd part")]
    EvenInput(u64),
    #[error("{0} is prime")]
    Prime(u64),
    #[error("{n} is a prime power ({base}^{exponent})")]
    PrimePower { n: u64, base: u64, exponent: u32 },
}

impl InputError {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::TooSmall(_) => "TooSmall",
            Self::EvenInput(_) => "EvenInput",
            Self::Prime(_) => "Prime",
            Self::PrimePower { .. } => "PrimePower",
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("register width {0} is outside the supported range 1..={max}", max = crate::state::MAX_WIDTH)]
    InvalidWidth(usize),
    #[error("basis index {index} does not fit in {width} qubits")]
    IndexOutOfRange { index: u64, width: usize },
    #[error("invalid bit string {0:?}")]
    InvalidBits(String),
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    #[error("qubit position {position} is outside 1..={width}")]
    PositionOutOfRange { position: usize, width: usize },
    #[error("two-qubit gate positions must satisfy i < j, got ({0}, {1})")]
    PositionOrder(usize, usize),
    #[error("rotation distance must be at least 1, got {0}")]
    InvalidRotation(u32),
    #[error("gate images do not form a unitary matrix")]
    NotUnitary,
    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),
    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("qubit count must be at least 1")]
    ZeroQubits,
    #[error("{x} is not coprime to {n} (gcd {gcd})")]
    NotCoprime { x: u64, n: u64, gcd: u64 },
    #[error("{qubits} qubits cannot hold residues modulo {n}")]
    RegisterTooSmall { qubits: usize, n: u64 },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("state file: {0}")]
    StateFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
