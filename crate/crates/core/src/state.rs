//! Sparse superpositions over the computational basis.
//!
//! A [`StateVector`] is a list of `(basis index, amplitude)` pairs kept in
//! canonical form: sorted by index, like terms collected, and amplitudes
//! below [`CHOP_TOLERANCE`] removed. Qubit position 1 is the most
//! significant bit of the index, so `e[1,0,1]` has index 5.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type Amplitude = Complex64;

/// Magnitude below which an amplitude (or one of its components) is treated as zero.
pub const CHOP_TOLERANCE: f64 = 1e-12;

/// Largest register the index representation supports.
pub const MAX_WIDTH: usize = 63;

fn check_width(width: usize) -> Result<()> {
    if width == 0 || width > MAX_WIDTH {
        return Err(Error::InvalidWidth(width));
    }
    Ok(())
}

/// One computational basis ket `e[x_1, ..., x_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisState {
    width: usize,
    index: u64,
}

impl BasisState {
    pub fn new(width: usize, index: u64) -> Result<Self> {
        check_width(width)?;
        if index >> width != 0 {
            return Err(Error::IndexOutOfRange { index, width });
        }
        Ok(Self { width, index })
    }

    /// Builds the ket from its digits, `bits[0]` being qubit 1.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        check_width(bits.len())?;
        let mut index = 0u64;
        for &b in bits {
            if b > 1 {
                return Err(Error::InvalidBits(format!("{bits:?}")));
            }
            index = (index << 1) | u64::from(b);
        }
        Ok(Self {
            width: bits.len(),
            index,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Digit at 1-based `position` (1 is the most significant).
    pub fn bit(&self, position: usize) -> u8 {
        assert!((1..=self.width).contains(&position));
        ((self.index >> (self.width - position)) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (1..=self.width).map(|p| self.bit(p)).collect()
    }

    /// Index of the leading `count` qubits read as an integer.
    pub fn leading(&self, count: usize) -> u64 {
        assert!(count <= self.width);
        if count == 0 {
            0
        } else {
            self.index >> (self.width - count)
        }
    }
}

impl fmt::Display for BasisState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BasisState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidBits(s.to_string())),
            })
            .collect::<Result<Vec<u8>>>()?;
        if bits.is_empty() {
            return Err(Error::InvalidBits(s.to_string()));
        }
        Self::from_bits(&bits)
    }
}

fn chop(a: Amplitude) -> Amplitude {
    let re = if a.re.abs() < CHOP_TOLERANCE {
        0.0
    } else {
        a.re
    };
    let im = if a.im.abs() < CHOP_TOLERANCE {
        0.0
    } else {
        a.im
    };
    Amplitude::new(re, im)
}

/// A canonical sparse superposition of basis kets of a fixed width.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    width: usize,
    terms: Vec<(u64, Amplitude)>,
}

impl StateVector {
    /// The empty linear combination.
    pub fn zero(width: usize) -> Result<Self> {
        check_width(width)?;
        Ok(Self {
            width,
            terms: Vec::new(),
        })
    }

    /// `e[index]` with amplitude 1.
    pub fn basis_ket(width: usize, index: u64) -> Result<Self> {
        let ket = BasisState::new(width, index)?;
        Ok(Self {
            width,
            terms: vec![(ket.index, Amplitude::new(1.0, 0.0))],
        })
    }

    /// Canonicalizes an arbitrary multiset of `(index, amplitude)` terms:
    /// duplicates are summed and chopped amplitudes dropped.
    pub fn from_terms<I>(width: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, Amplitude)>,
    {
        check_width(width)?;
        let raw: Vec<_> = terms.into_iter().collect();
        if let Some(&(index, _)) = raw.iter().find(|(i, _)| i >> width != 0) {
            return Err(Error::IndexOutOfRange { index, width });
        }
        Ok(Self::collect_unchecked(width, raw))
    }

    /// Same as [`from_terms`](Self::from_terms) keyed by [`BasisState`].
    pub fn from_kets<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisState, Amplitude)>,
    {
        let mut width = None;
        let mut raw = Vec::new();
        for (ket, amp) in terms {
            match width {
                None => width = Some(ket.width),
                Some(w) if w != ket.width => {
                    return Err(Error::WidthMismatch {
                        left: w,
                        right: ket.width,
                    })
                }
                _ => {}
            }
            raw.push((ket.index, amp));
        }
        let width = width.ok_or(Error::InvalidWidth(0))?;
        Ok(Self::collect_unchecked(width, raw))
    }

    pub(crate) fn collect_unchecked(width: usize, mut raw: Vec<(u64, Amplitude)>) -> Self {
        raw.sort_by_key(|&(i, _)| i);
        let mut terms: Vec<(u64, Amplitude)> = Vec::with_capacity(raw.len());
        for (index, amp) in raw {
            match terms.last_mut() {
                Some((last, acc)) if *last == index => *acc += amp,
                _ => terms.push((index, amp)),
            }
        }
        terms.retain_mut(|(_, amp)| {
            *amp = chop(*amp);
            amp.re != 0.0 || amp.im != 0.0
        });
        Self { width, terms }
    }

    /// Re-applies term collection and chopping. A no-op on values built by
    /// this module, which are always canonical.
    pub fn canonicalize(&self) -> Self {
        Self::collect_unchecked(self.width, self.terms.clone())
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending index order.
    pub fn terms(&self) -> &[(u64, Amplitude)] {
        &self.terms
    }

    pub fn kets(&self) -> impl Iterator<Item = (BasisState, Amplitude)> + '_ {
        self.terms.iter().map(move |&(index, amp)| {
            (
                BasisState {
                    width: self.width,
                    index,
                },
                amp,
            )
        })
    }

    /// Amplitude of `e[index]`, zero when absent.
    pub fn amplitude(&self, index: u64) -> Amplitude {
        match self.terms.binary_search_by_key(&index, |&(i, _)| i) {
            Ok(pos) => self.terms[pos].1,
            Err(_) => Amplitude::new(0.0, 0.0),
        }
    }

    /// Dense amplitude vector in index order. Only sensible for small widths.
    pub fn to_dense(&self) -> Vec<Amplitude> {
        let mut dense = vec![Amplitude::new(0.0, 0.0); 1usize << self.width];
        for &(i, amp) in &self.terms {
            dense[i as usize] = amp;
        }
        dense
    }

    pub fn from_dense(amplitudes: &[Amplitude]) -> Result<Self> {
        let n = amplitudes.len();
        if n < 2 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        let width = n.trailing_zeros() as usize;
        Self::from_terms(
            width,
            amplitudes.iter().enumerate().map(|(i, &a)| (i as u64, a)),
        )
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let width = self.width + other.width;
        check_width(width)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(i, a) in &self.terms {
            for &(j, b) in &other.terms {
                raw.push(((i << other.width) | j, a * b));
            }
        }
        Ok(Self::collect_unchecked(width, raw))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let raw = self.terms.iter().chain(&other.terms).copied().collect();
        Ok(Self::collect_unchecked(self.width, raw))
    }

    pub fn scale(&self, s: Amplitude) -> Self {
        let raw = self.terms.iter().map(|&(i, a)| (i, a * s)).collect();
        Self::collect_unchecked(self.width, raw)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.terms.iter().map(|(_, a)| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Largest per-amplitude difference between two states of equal width.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        if self.width != other.width {
            return Err(Error::WidthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        let mut worst = 0.0f64;
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            let d = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(&&(_, x)), None) => {
                    a.next();
                    x.norm()
                }
                (None, Some(&&(_, y))) => {
                    b.next();
                    y.norm()
                }
                (Some(&&(i, x)), Some(&&(j, y))) => {
                    if i == j {
                        a.next();
                        b.next();
                        (x - y).norm()
                    } else if i < j {
                        a.next();
                        x.norm()
                    } else {
                        b.next();
                        y.norm()
                    }
                }
            };
            worst = worst.max(d);
        }
        Ok(worst)
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (ket, amp)) in self.kets().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({}{:+}i) e[{}]", amp.re, amp.im, ket)?;
        }
        Ok(())
    }
}
