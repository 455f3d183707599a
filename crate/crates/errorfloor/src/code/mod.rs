//! Parity-check matrices and Tanner-graph adjacency.
//!
//! A code is held as a sparse `m x n` binary matrix with both row and column
//! adjacency views, immutable after construction. Sub-modules cover
//! quasi-cyclic expansion ([`qc`]), the array-code construction ([`array`]),
//! the alist interchange format ([`alist`]) and GF(2) linear algebra
//! ([`gf2`]).

use std::sync::OnceLock;

use thiserror::Error;

pub mod alist;
pub mod array;
pub mod gf2;
pub mod qc;

pub use alist::{emit_alist, parse_alist};
pub use array::build_array_code;
pub use qc::QcBaseMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("matrix is empty ({m} checks, {n} bits)")]
    EmptyMatrix { m: usize, n: usize },
    #[error("check {check} is empty")]
    EmptyRow { check: usize },
    #[error("bit {bit} participates in no check")]
    EmptyColumn { bit: usize },
    #[error("check {check} lists bit {bit} more than once")]
    DuplicateEntry { check: usize, bit: usize },
    #[error("check {check} references bit {bit} out of range (n = {n})")]
    BitOutOfRange { check: usize, bit: usize, n: usize },
    #[error("invalid base matrix: {0}")]
    InvalidBase(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("alist line {line}: {message}")]
    Alist { line: usize, message: String },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// Sparse binary parity-check matrix with row and column adjacency.
#[derive(Debug, Clone)]
pub struct ParityCheckMatrix {
    m: usize,
    n: usize,
    rows: Vec<Vec<u32>>,
    cols: Vec<Vec<u32>>,
    code_id: String,
    qc_block: Option<usize>,
    rank: OnceLock<usize>,
}

impl ParityCheckMatrix {
    /// Build from per-check bit lists. Entries are sorted and validated:
    /// indices in range, no duplicates, no empty row or column.
    pub fn from_rows(
        m: usize,
        n: usize,
        mut rows: Vec<Vec<u32>>,
        code_id: impl Into<String>,
    ) -> Result<Self, CodeError> {
        if m == 0 || n == 0 {
            return Err(CodeError::EmptyMatrix { m, n });
        }
        if rows.len() != m {
            return Err(CodeError::LengthMismatch {
                expected: m,
                got: rows.len(),
            });
        }
        let mut cols: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (j, row) in rows.iter_mut().enumerate() {
            if row.is_empty() {
                return Err(CodeError::EmptyRow { check: j });
            }
            row.sort_unstable();
            for w in row.windows(2) {
                if w[0] == w[1] {
                    return Err(CodeError::DuplicateEntry {
                        check: j,
                        bit: w[0] as usize,
                    });
                }
            }
            for &i in row.iter() {
                if i as usize >= n {
                    return Err(CodeError::BitOutOfRange {
                        check: j,
                        bit: i as usize,
                        n,
                    });
                }
                cols[i as usize].push(j as u32);
            }
        }
        if let Some(bit) = cols.iter().position(|c| c.is_empty()) {
            return Err(CodeError::EmptyColumn { bit });
        }
        // Rows were visited in order, so each column list is already sorted.
        Ok(ParityCheckMatrix {
            m,
            n,
            rows,
            cols,
            code_id: code_id.into(),
            qc_block: None,
            rank: OnceLock::new(),
        })
    }

    /// Number of parity checks (rows).
    pub fn check_count(&self) -> usize {
        self.m
    }

    /// Number of code bits (columns).
    pub fn bit_count(&self) -> usize {
        self.n
    }

    /// Bits participating in check `j`, sorted ascending.
    pub fn row(&self, j: usize) -> &[u32] {
        &self.rows[j]
    }

    /// Checks covering bit `i`, sorted ascending.
    pub fn col(&self, i: usize) -> &[u32] {
        &self.cols[i]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn cols(&self) -> &[Vec<u32>] {
        &self.cols
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn code_id(&self) -> &str {
        &self.code_id
    }

    pub fn set_code_id(&mut self, id: impl Into<String>) {
        self.code_id = id.into();
    }

    /// Block size `z` when the matrix was built from a quasi-cyclic base;
    /// consecutive groups of `z` checks form the layers of a layered
    /// schedule.
    pub fn qc_block_size(&self) -> Option<usize> {
        self.qc_block
    }

    pub(crate) fn with_qc_block(mut self, z: usize) -> Self {
        self.qc_block = Some(z);
        self
    }

    /// Uniform column weight, if the code is column-regular.
    pub fn column_weight(&self) -> Option<usize> {
        let w = self.cols[0].len();
        self.cols.iter().all(|c| c.len() == w).then_some(w)
    }

    /// Uniform row weight, if the code is row-regular.
    pub fn row_weight(&self) -> Option<usize> {
        let w = self.rows[0].len();
        self.rows.iter().all(|r| r.len() == w).then_some(w)
    }

    /// Syndrome of a hard-decision word: component `j` is the XOR of the
    /// word over `Row[j]`. All-zero iff the word is a codeword.
    pub fn syndrome(&self, bits: &[u8]) -> Result<Vec<u8>, CodeError> {
        if bits.len() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                got: bits.len(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().fold(0u8, |acc, &i| acc ^ (bits[i as usize] & 1)))
            .collect())
    }

    pub fn is_codeword(&self, bits: &[u8]) -> Result<bool, CodeError> {
        Ok(self.syndrome(bits)?.iter().all(|&s| s == 0))
    }

    /// GF(2) rank, computed once and cached.
    pub fn gf2_rank(&self) -> usize {
        *self.rank.get_or_init(|| gf2::rank(self))
    }

    /// Code dimension `n - rank(H)`.
    pub fn dimension(&self) -> usize {
        self.n - self.gf2_rank()
    }

    /// Code rate `dimension / n`.
    pub fn rate(&self) -> f64 {
        self.dimension() as f64 / self.n as f64
    }
}

/// A binary word of code length; valid when `H x = 0` over GF(2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    bits: Vec<u8>,
}

impl Codeword {
    pub fn all_zero(n: usize) -> Self {
        Codeword { bits: vec![0; n] }
    }

    pub fn from_bits(bits: Vec<u8>) -> Self {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        Codeword { bits }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_valid_for(&self, h: &ParityCheckMatrix) -> Result<bool, CodeError> {
        h.is_codeword(&self.bits)
    }
}

impl std::ops::Deref for Codeword {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.bits
    }
}
