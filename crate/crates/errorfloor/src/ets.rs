//! Trapping-set classification of decoding failures.
//!
//! An `(a, b)` trapping set is a set of `a` bits whose induced subgraph has
//! `b > 0` odd-degree checks. It is elementary when every induced check
//! degree is 1 or 2. Elementary sets are split by how many degree-1 checks
//! each bit touches: all exactly one (type I), some with none — inner bits
//! (type II), some with more than one — plural bits (type III).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::ParityCheckMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EtsError {
    #[error("empty support: no error to classify")]
    EmptySupport,
    #[error("support bit {bit} out of range (n = {n})")]
    BitOutOfRange { bit: usize, n: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("exhaustive enumeration refused for n = {n} > {limit} bits (pass force to override)")]
    TooLarge { n: usize, limit: usize },
}

/// Trapping-set category of an elementary set; `NonEts` covers everything
/// else (non-elementary induced degrees, or a codeword-support with b = 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TsType {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "II")]
    II,
    #[serde(rename = "III")]
    III,
    #[serde(rename = "non_ets")]
    NonEts,
}

impl std::fmt::Display for TsType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TsType::I => "I",
            TsType::II => "II",
            TsType::III => "III",
            TsType::NonEts => "non_ets",
        };
        f.write_str(s)
    }
}

/// Full classification of one failure support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrappingSetReport {
    /// The failed bits, ascending.
    pub support: Vec<usize>,
    /// `|support|`.
    pub a: usize,
    /// Number of odd-degree (unsatisfied) checks in the induced subgraph.
    pub b: usize,
    pub unsatisfied_checks: Vec<usize>,
    /// Induced degree-2 checks: satisfied, but only because both of their
    /// support bits are wrong.
    pub falsely_satisfied_degree2: Vec<usize>,
    pub is_elementary: bool,
    pub ts_type: TsType,
    /// Support bits with no adjacent degree-1 check.
    pub inner_bits: Vec<usize>,
    /// Support bits with exactly one adjacent degree-1 check.
    pub outer_bits: Vec<usize>,
    /// Same set as `outer_bits`, under its type-III name.
    pub singular_bits: Vec<usize>,
    /// Support bits with more than one adjacent degree-1 check.
    pub plural_bits: Vec<usize>,
    /// All bits adjacent to any unsatisfied check (the heating target).
    pub neighborhood: Vec<usize>,
}

/// Bit positions where the hard decisions differ from the transmitted
/// word.
pub fn error_support(hard: &[u8], transmitted: &[u8]) -> Result<Vec<usize>, EtsError> {
    if hard.len() != transmitted.len() {
        return Err(EtsError::LengthMismatch {
            left: hard.len(),
            right: transmitted.len(),
        });
    }
    Ok(hard
        .iter()
        .zip(transmitted)
        .enumerate()
        .filter(|(_, (h, t))| h != t)
        .map(|(i, _)| i)
        .collect())
}

/// Classify a non-empty failure support against a code.
pub fn classify(h: &ParityCheckMatrix, support: &[usize]) -> Result<TrappingSetReport, EtsError> {
    if support.is_empty() {
        return Err(EtsError::EmptySupport);
    }
    let n = h.bit_count();
    let mut support: Vec<usize> = support.to_vec();
    support.sort_unstable();
    support.dedup();
    if let Some(&bit) = support.iter().find(|&&b| b >= n) {
        return Err(EtsError::BitOutOfRange { bit, n });
    }

    // Induced degree of every check touching the support.
    let mut degree = vec![0u32; h.check_count()];
    for &i in &support {
        for &j in h.col(i) {
            degree[j as usize] += 1;
        }
    }

    let mut unsatisfied = Vec::new();
    let mut falsely_satisfied = Vec::new();
    let mut max_degree = 0;
    for (j, &d) in degree.iter().enumerate() {
        max_degree = max_degree.max(d);
        if d % 2 == 1 {
            unsatisfied.push(j);
        } else if d == 2 {
            falsely_satisfied.push(j);
        }
    }
    let b = unsatisfied.len();
    let is_elementary = b > 0 && max_degree <= 2;

    // Per-bit count of adjacent degree-1 checks.
    let mut inner = Vec::new();
    let mut outer = Vec::new();
    let mut plural = Vec::new();
    for &i in &support {
        let d1 = h.col(i).iter().filter(|&&j| degree[j as usize] == 1).count();
        match d1 {
            0 => inner.push(i),
            1 => outer.push(i),
            _ => plural.push(i),
        }
    }

    let ts_type = if !is_elementary {
        TsType::NonEts
    } else if !plural.is_empty() {
        TsType::III
    } else if !inner.is_empty() {
        TsType::II
    } else {
        TsType::I
    };

    let mut in_neighborhood = vec![false; n];
    for &j in &unsatisfied {
        for &i in h.row(j) {
            in_neighborhood[i as usize] = true;
        }
    }
    let neighborhood = (0..n).filter(|&i| in_neighborhood[i]).collect();

    Ok(TrappingSetReport {
        a: support.len(),
        b,
        support,
        unsatisfied_checks: unsatisfied,
        falsely_satisfied_degree2: falsely_satisfied,
        is_elementary,
        ts_type,
        singular_bits: outer.clone(),
        inner_bits: inner,
        outer_bits: outer,
        plural_bits: plural,
        neighborhood,
    })
}

/// Exhaustively classify every support of size `1..=max_a` with `b > 0`,
/// in size-major lexicographic order. A brute-force oracle for small
/// codes; refuses `n > 64` unless forced.
pub fn enumerate_small_ts(
    h: &ParityCheckMatrix,
    max_a: usize,
    force: bool,
) -> Result<Vec<TrappingSetReport>, EtsError> {
    const LIMIT: usize = 64;
    let n = h.bit_count();
    if n > LIMIT && !force {
        return Err(EtsError::TooLarge { n, limit: LIMIT });
    }
    let mut out = Vec::new();
    for a in 1..=max_a.min(n) {
        let mut idx: Vec<usize> = (0..a).collect();
        loop {
            let report = classify(h, &idx).expect("generated support is valid");
            if report.b > 0 {
                out.push(report);
            }
            // Advance to the next lexicographic a-combination of 0..n.
            let mut k = a;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if idx[k] != k + n - a {
                    idx[k] += 1;
                    for t in k + 1..a {
                        idx[t] = idx[t - 1] + 1;
                    }
                    break;
                }
                if k == 0 {
                    idx.clear();
                    break;
                }
            }
            if idx.is_empty() {
                break;
            }
        }
    }
    Ok(out)
}
