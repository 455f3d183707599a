//! Quasi-cyclic base matrices and their expansion to full parity-check
//! matrices.
//!
//! A base matrix cell is either a zero block or a right-cyclic shift `s` of
//! the `z x z` identity: row `t` of the shifted block has its 1 in column
//! `(t + s) mod z`.

use std::fmt::Write as _;

use super::{CodeError, ParityCheckMatrix};

/// One cell of a quasi-cyclic base matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QcEntry {
    Zero,
    Shift(u32),
}

/// A `block_rows x block_cols` array of shift descriptors over blocks of
/// size `z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QcBaseMatrix {
    block_rows: usize,
    block_cols: usize,
    z: usize,
    entries: Vec<QcEntry>,
}

impl QcBaseMatrix {
    pub fn new(
        block_rows: usize,
        block_cols: usize,
        z: usize,
        entries: Vec<QcEntry>,
    ) -> Result<Self, CodeError> {
        if block_rows == 0 || block_cols == 0 || z == 0 {
            return Err(CodeError::InvalidBase(format!(
                "degenerate dimensions {block_rows}x{block_cols}, z = {z}"
            )));
        }
        if entries.len() != block_rows * block_cols {
            return Err(CodeError::InvalidBase(format!(
                "expected {} entries, got {}",
                block_rows * block_cols,
                entries.len()
            )));
        }
        for (idx, e) in entries.iter().enumerate() {
            if let QcEntry::Shift(s) = e {
                if *s as usize >= z {
                    return Err(CodeError::InvalidBase(format!(
                        "shift {} at cell ({}, {}) out of range for z = {}",
                        s,
                        idx / block_cols,
                        idx % block_cols,
                        z
                    )));
                }
            }
        }
        Ok(QcBaseMatrix {
            block_rows,
            block_cols,
            z,
            entries,
        })
    }

    pub fn block_rows(&self) -> usize {
        self.block_rows
    }

    pub fn block_cols(&self) -> usize {
        self.block_cols
    }

    pub fn z(&self) -> usize {
        self.z
    }

    pub fn entry(&self, r: usize, c: usize) -> QcEntry {
        self.entries[r * self.block_cols + c]
    }

    /// Parse the base-matrix text format: a `rows cols z` header line, then
    /// `rows` lines of `cols` integers where `-1` is a zero block and
    /// `s >= 0` a shift.
    pub fn parse(text: &str) -> Result<Self, CodeError> {
        let mut tokens = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| {
                    CodeError::InvalidBase(format!(
                        "line {}: {:?} is not an integer",
                        lineno + 1,
                        tok
                    ))
                })?;
                tokens.push(v);
            }
        }
        if tokens.len() < 3 {
            return Err(CodeError::InvalidBase(
                "missing `rows cols z` header".into(),
            ));
        }
        let (rows, cols, z) = (tokens[0], tokens[1], tokens[2]);
        if rows <= 0 || cols <= 0 || z <= 0 {
            return Err(CodeError::InvalidBase(format!(
                "non-positive header values {rows} {cols} {z}"
            )));
        }
        let (rows, cols, z) = (rows as usize, cols as usize, z as usize);
        let body = &tokens[3..];
        if body.len() != rows * cols {
            return Err(CodeError::InvalidBase(format!(
                "expected {} cells, got {}",
                rows * cols,
                body.len()
            )));
        }
        let entries = body
            .iter()
            .map(|&v| {
                if v < -1 {
                    Err(CodeError::InvalidBase(format!("invalid cell value {v}")))
                } else if v == -1 {
                    Ok(QcEntry::Zero)
                } else {
                    Ok(QcEntry::Shift(v as u32))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        QcBaseMatrix::new(rows, cols, z, entries)
    }

    /// Render in the same text format `parse` accepts.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.block_rows, self.block_cols, self.z);
        for r in 0..self.block_rows {
            let line: Vec<String> = (0..self.block_cols)
                .map(|c| match self.entry(r, c) {
                    QcEntry::Zero => "-1".to_string(),
                    QcEntry::Shift(s) => s.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    /// Expand to the full `(block_rows*z) x (block_cols*z)` matrix. A cell
    /// with shift `s` contributes edges `(r*z + t, c*z + (t + s) mod z)`.
    pub fn expand(&self, code_id: impl Into<String>) -> Result<ParityCheckMatrix, CodeError> {
        let z = self.z;
        let m = self.block_rows * z;
        let n = self.block_cols * z;
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); m];
        for r in 0..self.block_rows {
            for c in 0..self.block_cols {
                if let QcEntry::Shift(s) = self.entry(r, c) {
                    for t in 0..z {
                        let check = r * z + t;
                        let bit = c * z + (t + s as usize) % z;
                        rows[check].push(bit as u32);
                    }
                }
            }
        }
        Ok(ParityCheckMatrix::from_rows(m, n, rows, code_id)?.with_qc_block(z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_zero_expands_to_identity() {
        let base = QcBaseMatrix::new(1, 1, 3, vec![QcEntry::Shift(0)]).unwrap();
        let h = base.expand("i3").unwrap();
        assert_eq!((h.check_count(), h.bit_count()), (3, 3));
        for j in 0..3 {
            assert_eq!(h.row(j), &[j as u32]);
        }
    }

    #[test]
    fn right_shift_orientation() {
        let base = QcBaseMatrix::new(1, 1, 4, vec![QcEntry::Shift(1)]).unwrap();
        let h = base.expand("shift1").unwrap();
        let edges: Vec<(u32, u32)> = (0..4).map(|j| (j as u32, h.row(j)[0])).collect();
        assert_eq!(edges, vec![(0, 1), (1, 2), (2, 3), (3, 0)]);
    }

    #[test]
    fn shift_out_of_range_rejected() {
        let err = QcBaseMatrix::new(1, 1, 4, vec![QcEntry::Shift(4)]).unwrap_err();
        assert!(matches!(err, CodeError::InvalidBase(_)));
    }

    #[test]
    fn every_block_is_zero_or_permutation() {
        let base = QcBaseMatrix::parse("2 3 5\n0 2 -1\n4 -1 1\n").unwrap();
        let h = base.expand("qc").unwrap();
        for br in 0..2 {
            for bc in 0..3 {
                let mut ones = 0;
                let mut row_hits = vec![0u32; 5];
                let mut col_hits = vec![0u32; 5];
                for t in 0..5 {
                    for &bit in h.row(br * 5 + t) {
                        let bit = bit as usize;
                        if bit / 5 == bc {
                            ones += 1;
                            row_hits[t] += 1;
                            col_hits[bit % 5] += 1;
                        }
                    }
                }
                if ones == 0 {
                    continue;
                }
                assert_eq!(ones, 5);
                assert!(row_hits.iter().all(|&h| h == 1));
                assert!(col_hits.iter().all(|&h| h == 1));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let text = "2 3 5\n0 2 -1\n4 -1 1\n";
        let base = QcBaseMatrix::parse(text).unwrap();
        assert_eq!(base.to_text(), text);
        assert_eq!(QcBaseMatrix::parse(&base.to_text()).unwrap(), base);
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(QcBaseMatrix::parse("").is_err());
        assert!(QcBaseMatrix::parse("1 1 4\n9\n").is_err()); // shift >= z
        assert!(QcBaseMatrix::parse("2 2 4\n0 1\n").is_err()); // short body
        assert!(QcBaseMatrix::parse("1 1 4\nzz\n").is_err());
    }
}
