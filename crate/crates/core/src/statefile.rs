//! JSON state files: an array of `{"basis": "0101", "re": 0.5, "im": 0.0}`
//! records, bit strings written qubit 1 first.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::state::{Amplitude, BasisState, StateVector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub basis: String,
    pub re: f64,
    pub im: f64,
}

pub fn to_records(v: &StateVector) -> Vec<TermRecord> {
    v.kets()
        .map(|(ket, a)| TermRecord {
            basis: ket.to_string(),
            re: a.re,
            im: a.im,
        })
        .collect()
}

/// Width comes from the first record; every other record must match it.
/// Repeated bit strings are summed.
pub fn from_records(records: &[TermRecord]) -> Result<StateVector> {
    let first = records
        .first()
        .ok_or_else(|| Error::StateFile("no terms; width cannot be inferred".into()))?;
    let width = first.basis.len();
    let mut terms = Vec::with_capacity(records.len());
    for (n, rec) in records.iter().enumerate() {
        let ket: BasisState = rec
            .basis
            .parse()
            .map_err(|_| Error::StateFile(format!("record {n}: bad basis {:?}", rec.basis)))?;
        if ket.width() != width {
            return Err(Error::StateFile(format!(
                "record {n}: basis {:?} has width {}, expected {width}",
                rec.basis,
                ket.width()
            )));
        }
        if !rec.re.is_finite() || !rec.im.is_finite() {
            return Err(Error::StateFile(format!(
                "record {n}: non-finite amplitude"
            )));
        }
        terms.push((ket, Amplitude::new(rec.re, rec.im)));
    }
    StateVector::from_kets(terms)
}

pub fn parse_state(json: &str) -> Result<StateVector> {
    let records: Vec<TermRecord> =
        serde_json::from_str(json).map_err(|e| Error::StateFile(e.to_string()))?;
    from_records(&records)
}

pub fn render_state(v: &StateVector) -> String {
    serde_json::to_string_pretty(&to_records(v)).expect("records serialize")
}

pub fn read_state_file(path: &Path) -> Result<StateVector> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::StateFile(format!("{}: {e}", path.display())))?;
    parse_state(&text)
}
