//! The alist sparse-matrix interchange format.
//!
//! Layout: `n m` header, `max_col_weight max_row_weight`, the `n` column
//! weights, the `m` row weights, then one line per column listing its
//! 1-based check indices and one line per row listing its 1-based bit
//! indices. Zero padding to the maximum weight is accepted and emitted.

use std::fmt::Write as _;

use super::{CodeError, ParityCheckMatrix};

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
    lineno: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
            lineno: 0,
        }
    }

    /// Next non-blank line as integer tokens, with its 1-based line number.
    fn next_ints(&mut self) -> Result<Vec<i64>, CodeError> {
        for (idx, line) in self.iter.by_ref() {
            self.lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            return line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| CodeError::Alist {
                        line: self.lineno,
                        message: format!("{tok:?} is not an integer"),
                    })
                })
                .collect();
        }
        Err(CodeError::Alist {
            line: self.lineno + 1,
            message: "unexpected end of file".into(),
        })
    }
}

fn expect_len(vals: &[i64], expected: usize, what: &str, line: usize) -> Result<(), CodeError> {
    if vals.len() != expected {
        return Err(CodeError::Alist {
            line,
            message: format!("expected {expected} {what}, got {}", vals.len()),
        });
    }
    Ok(())
}

/// Parse an alist document into a validated matrix.
pub fn parse_alist(text: &str) -> Result<ParityCheckMatrix, CodeError> {
    let mut lines = Lines::new(text);

    let header = lines.next_ints()?;
    expect_len(&header, 2, "header values (n m)", lines.lineno)?;
    let (n, m) = (header[0], header[1]);
    if n <= 0 || m <= 0 {
        return Err(CodeError::Alist {
            line: lines.lineno,
            message: format!("non-positive dimensions {n} {m}"),
        });
    }
    let (n, m) = (n as usize, m as usize);

    let maxima = lines.next_ints()?;
    expect_len(&maxima, 2, "maximum weights", lines.lineno)?;

    let col_weights = lines.next_ints()?;
    expect_len(&col_weights, n, "column weights", lines.lineno)?;
    let row_weights = lines.next_ints()?;
    expect_len(&row_weights, m, "row weights", lines.lineno)?;

    // Column section: one line per bit, 1-based check indices, optional
    // zero padding.
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(n);
    for (i, &w) in col_weights.iter().enumerate() {
        let entries = lines.next_ints()?;
        let nonzero: Vec<i64> = entries.iter().copied().filter(|&v| v != 0).collect();
        if nonzero.len() as i64 != w {
            return Err(CodeError::Alist {
                line: lines.lineno,
                message: format!(
                    "column {} declares degree {} but lists {} entries",
                    i + 1,
                    w,
                    nonzero.len()
                ),
            });
        }
        let mut col = Vec::with_capacity(nonzero.len());
        for v in nonzero {
            if v < 1 || v > m as i64 {
                return Err(CodeError::Alist {
                    line: lines.lineno,
                    message: format!("check index {v} out of range 1..={m}"),
                });
            }
            col.push((v - 1) as u32);
        }
        col.sort_unstable();
        cols.push(col);
    }

    // Row section.
    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(m);
    for (j, &w) in row_weights.iter().enumerate() {
        let entries = lines.next_ints()?;
        let nonzero: Vec<i64> = entries.iter().copied().filter(|&v| v != 0).collect();
        if nonzero.len() as i64 != w {
            return Err(CodeError::Alist {
                line: lines.lineno,
                message: format!(
                    "row {} declares degree {} but lists {} entries",
                    j + 1,
                    w,
                    nonzero.len()
                ),
            });
        }
        let mut row = Vec::with_capacity(nonzero.len());
        for v in nonzero {
            if v < 1 || v > n as i64 {
                return Err(CodeError::Alist {
                    line: lines.lineno,
                    message: format!("bit index {v} out of range 1..={n}"),
                });
            }
            row.push((v - 1) as u32);
        }
        row.sort_unstable();
        rows.push(row);
    }

    let h = ParityCheckMatrix::from_rows(m, n, rows, "alist")?;

    // The two sections must describe the same edge set.
    for (i, col) in cols.iter().enumerate() {
        if h.col(i) != col.as_slice() {
            return Err(CodeError::Alist {
                line: 0,
                message: format!(
                    "column {} and the row section disagree on its check set",
                    i + 1
                ),
            });
        }
    }
    Ok(h)
}

/// Emit the canonical alist form: sorted indices, zero-padded to the
/// maximum weight. `emit_alist(parse_alist(x))` is a normal form for any
/// valid alist `x`.
pub fn emit_alist(h: &ParityCheckMatrix) -> String {
    let n = h.bit_count();
    let m = h.check_count();
    let max_col = (0..n).map(|i| h.col(i).len()).max().unwrap_or(0);
    let max_row = (0..m).map(|j| h.row(j).len()).max().unwrap_or(0);

    let mut out = String::new();
    let _ = writeln!(out, "{} {}", n, m);
    let _ = writeln!(out, "{} {}", max_col, max_row);
    let col_w: Vec<String> = (0..n).map(|i| h.col(i).len().to_string()).collect();
    let _ = writeln!(out, "{}", col_w.join(" "));
    let row_w: Vec<String> = (0..m).map(|j| h.row(j).len().to_string()).collect();
    let _ = writeln!(out, "{}", row_w.join(" "));

    let pad_line = |indices: &[u32], width: usize| -> String {
        let mut toks: Vec<String> = indices.iter().map(|&v| (v + 1).to_string()).collect();
        toks.resize(width, "0".to_string());
        toks.join(" ")
    };
    for i in 0..n {
        let _ = writeln!(out, "{}", pad_line(h.col(i), max_col));
    }
    for j in 0..m {
        let _ = writeln!(out, "{}", pad_line(h.row(j), max_row));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const IDENTITY3: &str = "3 3\n1 1\n1 1 1\n1 1 1\n1\n2\n3\n1\n2\n3\n";

    #[test]
    fn parses_identity() {
        let h = parse_alist(IDENTITY3).unwrap();
        assert_eq!((h.check_count(), h.bit_count()), (3, 3));
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn round_trips_through_emit() {
        let h = parse_alist(IDENTITY3).unwrap();
        let emitted = emit_alist(&h);
        let h2 = parse_alist(&emitted).unwrap();
        assert_eq!(emit_alist(&h2), emitted);
    }

    #[test]
    fn degree_mismatch_reports_line() {
        // Column 1 declares degree 2 but lists 3 entries.
        let text = "3 3\n3 1\n2 1 1\n1 1 1\n1 2 3\n2 0 0\n3 0 0\n1\n1\n1\n";
        let err = parse_alist(text).unwrap_err();
        match err {
            CodeError::Alist { line, message } => {
                assert_eq!(line, 5);
                assert!(message.contains("declares degree"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn out_of_range_index_reports_line() {
        let text = "3 3\n1 1\n1 1 1\n1 1 1\n1\n2\n7\n1\n2\n3\n";
        let err = parse_alist(text).unwrap_err();
        assert!(matches!(err, CodeError::Alist { line: 7, .. }), "{err:?}");
    }

    #[test]
    fn truncated_stream_is_an_error() {
        let text = "3 3\n1 1\n1 1 1\n1 1 1\n1\n2\n";
        assert!(matches!(
            parse_alist(text),
            Err(CodeError::Alist { .. })
        ));
    }

    #[test]
    fn section_disagreement_is_an_error() {
        // Column section says bit 1 is checked by check 2; rows disagree.
        let text = "2 2\n1 1\n1 1\n1 1\n2\n1\n1\n2\n";
        assert!(parse_alist(text).is_err());
    }

    #[test]
    fn unpadded_and_padded_parse_identically() {
        let padded = "2 2\n2 2\n2 1\n2 1\n1 2\n1 0\n1 2\n1 0\n";
        // Same matrix, no zero padding.
        let unpadded = "2 2\n2 2\n2 1\n2 1\n1 2\n1\n1 2\n1\n";
        let a = parse_alist(padded).unwrap();
        let b = parse_alist(unpadded).unwrap();
        assert_eq!(emit_alist(&a), emit_alist(&b));
    }

    prop_compose! {
        // Random small matrix with no empty rows/columns, as row sets.
        fn arb_rows()(n in 2usize..9, m in 2usize..9)
            (n in Just(n), m in Just(m),
             picks in proptest::collection::vec(proptest::collection::btree_set(0u32..8, 1..6), 2..9))
            -> (usize, usize, Vec<Vec<u32>>) {
            let m = m.min(picks.len());
            let rows: Vec<Vec<u32>> = picks[..m]
                .iter()
                .map(|s| s.iter().copied().filter(|&b| (b as usize) < n).collect::<Vec<_>>())
                .collect();
            (m, n, rows)
        }
    }

    proptest! {
        #[test]
        fn emit_parse_round_trip((m, n, mut rows) in arb_rows()) {
            // Repair rows/columns so the matrix is valid.
            for (j, row) in rows.iter_mut().enumerate() {
                if row.is_empty() {
                    row.push((j % n) as u32);
                }
            }
            let mut covered = vec![false; n];
            for row in &rows {
                for &b in row {
                    covered[b as usize] = true;
                }
            }
            for (b, was) in covered.iter().enumerate() {
                if !was {
                    rows[b % m].push(b as u32);
                }
            }
            for row in rows.iter_mut() {
                row.sort_unstable();
                row.dedup();
            }
            let h = ParityCheckMatrix::from_rows(m, n, rows, "prop").unwrap();
            let text = emit_alist(&h);
            let h2 = parse_alist(&text).unwrap();
            prop_assert_eq!(emit_alist(&h2), text);
            for j in 0..m {
                prop_assert_eq!(h2.row(j), h.row(j));
            }
        }
    }
}
