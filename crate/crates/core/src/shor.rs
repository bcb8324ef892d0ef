//! Shor's factoring algorithm: classical checks, simulated order finding on a
//! two-register state, continued-fraction recovery of the order, and factor
//! extraction from `x^r - 1 = (x^{r/2} - 1)(x^{r/2} + 1)`.

use serde::Serialize;

use crate::error::{Error, InputError, Result};
use crate::measurement::{sample, RandomStream, UniformSource};
use crate::qft::{build_qft_circuit, run_circuit};
use crate::state::{Amplitude, StateVector, MAX_WIDTH};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `x^c mod n` by square-and-multiply with 128-bit intermediates.
pub fn mod_pow(x: u64, mut c: u64, n: u64) -> u64 {
    assert!(n >= 1);
    let n = u128::from(n);
    let mut base = u128::from(x) % n;
    let mut acc = 1 % n;
    while c > 0 {
        if c & 1 == 1 {
            acc = acc * base % n;
        }
        base = base * base % n;
        c >>= 1;
    }
    acc as u64
}

/// Smallest `r >= 1` with `x^r ≡ 1 (mod n)`, by stepping through powers.
pub fn brute_force_order(x: u64, n: u64) -> Result<u64> {
    let g = gcd(x, n);
    if g != 1 || n < 2 {
        return Err(Error::NotCoprime { x, n, gcd: g });
    }
    let (mut power, mut r) = (x % n, 1);
    while power != 1 {
        power = (u128::from(power) * u128::from(x) % u128::from(n)) as u64;
        r += 1;
    }
    Ok(r)
}

/// Trial division up to `√n`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `⌊n^{1/b}⌋` by binary search.
pub fn integer_root(n: u64, b: u32) -> u64 {
    assert!(b >= 1);
    let fits = |r: u64| {
        u128::from(r)
            .checked_pow(b)
            .is_some_and(|p| p <= u128::from(n))
    };
    let (mut lo, mut hi) = (0u64, n.max(1));
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// `Some((base, exponent))` with the largest exponent `>= 2` such that `base^exponent == n`.
pub fn perfect_power(n: u64) -> Option<(u64, u32)> {
    if n < 4 {
        return None;
    }
    let max_exp = 63 - n.leading_zeros();
    (2..=max_exp).rev().find_map(|b| {
        let r = integer_root(n, b);
        (u128::from(r).pow(b) == u128::from(n)).then_some((r, b))
    })
}

/// Accepts odd composites that have at least two distinct prime factors.
pub fn validate_input(n: u64) -> Result<u64, InputError> {
    if n < 2 {
        return Err(InputError::TooSmall(n));
    }
    if n.is_multiple_of(2) {
        return Err(InputError::EvenInput(n));
    }
    if is_prime(n) {
        return Err(InputError::Prime(n));
    }
    if let Some((base, exponent)) = perfect_power(n) {
        // a perfect power of a composite base may still have two prime factors
        if let Some((p, e)) = prime_power_of(base) {
            return Err(InputError::PrimePower {
                n,
                base: p,
                exponent: exponent * e,
            });
        }
    }
    Ok(n)
}

fn prime_power_of(m: u64) -> Option<(u64, u32)> {
    if is_prime(m) {
        return Some((m, 1));
    }
    let (base, exponent) = perfect_power(m)?;
    is_prime(base).then_some((base, exponent))
}

/// `⌈log₂(n²)⌉`: the smallest `q` with `2^q >= n²`.
pub fn default_qubits(n: u64) -> usize {
    let sq = u128::from(n) * u128::from(n);
    (0..128).find(|&q| (1u128 << q) >= sq).unwrap_or(128)
}

/// `⌈160 ln(ln n) / 9⌉`, at least 1.
pub fn default_attempts(n: u64) -> usize {
    let raw = (160.0 * (n as f64).ln().ln() / 9.0).ceil();
    if raw.is_finite() && raw >= 1.0 {
        raw as usize
    } else {
        1
    }
}

fn check_register(q: usize, x: u64, n: u64) -> Result<()> {
    if q < 1 {
        return Err(Error::ZeroQubits);
    }
    if 2 * q > MAX_WIDTH {
        return Err(Error::InvalidWidth(2 * q));
    }
    let g = gcd(x, n);
    if g != 1 || n < 2 {
        return Err(Error::NotCoprime { x, n, gcd: g });
    }
    if (n - 1) >> q != 0 {
        return Err(Error::RegisterTooSmall { qubits: q, n });
    }
    Ok(())
}

/// `2^{-q/2} Σ_c e[c] e[x^c mod n]` over `2q` qubits, the first register
/// holding `c` and the second the residue.
pub fn prepare_registers(q: usize, x: u64, n: u64) -> Result<StateVector> {
    check_register(q, x, n)?;
    let count = 1u64 << q;
    let amp = Amplitude::new(1.0 / (count as f64).sqrt(), 0.0);
    let mut residue = 1 % n;
    let mut raw = Vec::with_capacity(count as usize);
    for c in 0..count {
        raw.push(((c << q) | residue, amp));
        residue = (u128::from(residue) * u128::from(x) % u128::from(n)) as u64;
    }
    StateVector::from_terms(2 * q, raw)
}

/// The prepared registers after the QFT on qubits `1..=q`.
pub fn order_finding_state(n: u64, x: u64, q: usize) -> Result<StateVector> {
    let state = prepare_registers(q, x, n)?;
    let circuit = build_qft_circuit(q)?.widened(2 * q)?;
    run_circuit(&circuit, &state)
}

/// Probability of each first-register value `k`, summed over the second register.
pub fn first_register_distribution(state: &StateVector, q: usize) -> Vec<(u64, f64)> {
    let mut out: Vec<(u64, f64)> = Vec::new();
    for (ket, amp) in state.kets() {
        let k = ket.leading(q);
        match out.last_mut() {
            Some((last, p)) if *last == k => *p += amp.norm_sqr(),
            _ => out.push((k, amp.norm_sqr())),
        }
    }
    out
}

/// Simulates one run of the quantum part and returns the measured `k`.
pub fn order_find_quantum<R: UniformSource + ?Sized>(
    n: u64,
    x: u64,
    q: usize,
    rng: &mut R,
) -> Result<u64> {
    let state = order_finding_state(n, x, q)?;
    Ok(sample(&state, rng)?.leading(q))
}

/// Denominators of the continued-fraction convergents of `k / 2^q`, in order.
pub fn convergent_denominators(k: u64, q: usize) -> Vec<u64> {
    assert!(q < 64 && k >> q == 0);
    let (mut num, mut den) = (u128::from(k), 1u128 << q);
    // k_{-2} = 1, k_{-1} = 0
    let (mut prev, mut cur) = (1u128, 0u128);
    let mut out = Vec::new();
    loop {
        let a = num / den;
        let next = a * cur + prev;
        out.push(next as u64);
        (prev, cur) = (cur, next);
        let rem = num - a * den;
        if rem == 0 {
            break;
        }
        (num, den) = (den, rem);
    }
    out
}

/// Why an attempt ended without the quantum route producing factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureReason {
    /// Every denominator with `x^d ≡ 1` was odd.
    OddOrder,
    /// Every even candidate gave `x^{d/2} ≡ ±1`, so only trivial factors follow.
    TrivialRoot,
    /// No denominator satisfied `x^d ≡ 1 (mod N)`.
    NoConvergentWorked,
    /// `gcd(x, N) > 1`; the factor came from Euclid's algorithm alone.
    GcdShortcut,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DenominatorScan {
    Accepted { r: u64, factors: (u64, u64) },
    Rejected(FailureReason),
}

/// Checks candidate orders in order and stops at the first that yields a
/// nontrivial split.
pub fn scan_denominators(n: u64, x: u64, denominators: &[u64]) -> DenominatorScan {
    let (mut any_order, mut any_even) = (false, false);
    for &d in denominators {
        if mod_pow(x, d, n) != 1 % n {
            continue;
        }
        any_order = true;
        if d % 2 != 0 {
            continue;
        }
        any_even = true;
        let half = mod_pow(x, d / 2, n);
        if half == n - 1 {
            continue;
        }
        let a1 = gcd(n, half + 1);
        let a2 = gcd(n, (half + n - 1) % n);
        if a1 > 1 && a1 < n && a2 > 1 && a2 < n {
            return DenominatorScan::Accepted {
                r: d,
                factors: (a1, a2),
            };
        }
    }
    DenominatorScan::Rejected(match (any_order, any_even) {
        (false, _) => FailureReason::NoConvergentWorked,
        (true, false) => FailureReason::OddOrder,
        (true, true) => FailureReason::TrivialRoot,
    })
}

/// `(gcd(N, x^{d/2}+1), gcd(N, x^{d/2}-1))` for the first qualifying denominator `d`.
pub fn extract_factors(n: u64, x: u64, denominators: &[u64]) -> Option<(u64, u64)> {
    match scan_denominators(n, x, denominators) {
        DenominatorScan::Accepted { factors, .. } => Some(factors),
        DenominatorScan::Rejected(_) => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ShorConfig {
    pub qubits_override: Option<usize>,
    pub max_attempts_override: Option<usize>,
    pub seed: u64,
}

impl ShorConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }

    pub fn qubits(&self, n: u64) -> usize {
        self.qubits_override.unwrap_or_else(|| default_qubits(n))
    }

    pub fn attempts(&self, n: u64) -> usize {
        self.max_attempts_override
            .unwrap_or_else(|| default_attempts(n))
            .max(1)
    }
}

/// Record of one pass through the driver loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShorTrace {
    pub chosen_x: u64,
    pub gcd_shortcut: Option<u64>,
    pub measured_k: Option<u64>,
    pub convergent_denominators: Vec<u64>,
    pub accepted_r: Option<u64>,
    pub factors: Option<(u64, u64)>,
    pub failure_reason: Option<FailureReason>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShorResult {
    pub factors: Option<(u64, u64)>,
    pub traces: Vec<ShorTrace>,
}

/// Runs one attempt with a fixed `x` (already known coprime or not).
pub fn attempt<R: UniformSource + ?Sized>(
    n: u64,
    x: u64,
    q: usize,
    rng: &mut R,
) -> Result<ShorTrace> {
    let g = gcd(x, n);
    if g != 1 {
        return Ok(ShorTrace {
            chosen_x: x,
            gcd_shortcut: Some(g),
            measured_k: None,
            convergent_denominators: Vec::new(),
            accepted_r: None,
            factors: Some((g, n / g)),
            failure_reason: Some(FailureReason::GcdShortcut),
        });
    }
    let k = order_find_quantum(n, x, q, rng)?;
    let denominators = convergent_denominators(k, q);
    let (accepted_r, factors, failure_reason) = match scan_denominators(n, x, &denominators) {
        DenominatorScan::Accepted { r, factors } => (Some(r), Some(factors), None),
        DenominatorScan::Rejected(reason) => (None, None, Some(reason)),
    };
    Ok(ShorTrace {
        chosen_x: x,
        gcd_shortcut: None,
        measured_k: Some(k),
        convergent_denominators: denominators,
        accepted_r,
        factors,
        failure_reason,
    })
}

/// Draws `x` from `{2, ..., N-1}` up to the attempt bound and stops at the
/// first attempt that produces factors.
pub fn shor_factor(n: u64, config: &ShorConfig) -> Result<ShorResult> {
    validate_input(n)?;
    let q = config.qubits(n);
    check_register(q, 1, n)?;
    let mut rng = RandomStream::new(config.seed);
    let mut traces = Vec::new();
    for _ in 0..config.attempts(n) {
        let x = 2 + rng.next_below(n - 2);
        let trace = attempt(n, x, q, &mut rng)?;
        let factors = trace.factors;
        traces.push(trace);
        if factors.is_some() {
            return Ok(ShorResult { factors, traces });
        }
    }
    Ok(ShorResult {
        factors: None,
        traces,
    })
}
