//! Array LDPC code construction.
//!
//! The array code over a prime `p` with `j` block rows and `k` block
//! columns places at block `(r, c)` the cyclic permutation with shift
//! `(r * c) mod p`, giving a `(j, k)`-regular `jp x kp` matrix.

use super::qc::{QcBaseMatrix, QcEntry};
use super::{CodeError, ParityCheckMatrix};

fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Build the `(j, k)` array code over prime block size `p`.
pub fn build_array_code(j: usize, k: usize, p: usize) -> Result<ParityCheckMatrix, CodeError> {
    if !is_prime(p) {
        return Err(CodeError::InvalidParameter(format!(
            "array code block size {p} must be prime"
        )));
    }
    if j == 0 || k == 0 || j > p || k > p {
        return Err(CodeError::InvalidParameter(format!(
            "array code needs 1 <= j, k <= p (got j = {j}, k = {k}, p = {p})"
        )));
    }
    let entries: Vec<QcEntry> = (0..j)
        .flat_map(|r| (0..k).map(move |c| QcEntry::Shift((r * c % p) as u32)))
        .collect();
    let base = QcBaseMatrix::new(j, k, p, entries)?;
    base.expand(format!("array-{}-{}-{}", j, k, p))
}
