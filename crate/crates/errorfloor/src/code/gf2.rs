//! GF(2) linear algebra on bit-packed rows: rank and null-space basis.

use super::ParityCheckMatrix;

/// Dense bit-packed row vector.
#[derive(Clone)]
struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn zero(n: usize) -> Self {
        BitRow {
            words: vec![0; n.div_ceil(64)],
        }
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn xor_in(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

fn packed_rows(h: &ParityCheckMatrix) -> Vec<BitRow> {
    let n = h.bit_count();
    (0..h.check_count())
        .map(|j| {
            let mut row = BitRow::zero(n);
            for &i in h.row(j) {
                row.set(i as usize);
            }
            row
        })
        .collect()
}

/// Rank of `H` over GF(2) by Gaussian elimination.
pub fn rank(h: &ParityCheckMatrix) -> usize {
    let n = h.bit_count();
    let mut rows = packed_rows(h);
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_in(&pivot_row);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of the null space of `H`: every returned word `x` satisfies
/// `H x = 0`. The basis has `n - rank(H)` elements; XOR-combinations of
/// them enumerate the whole code book.
pub fn nullspace_basis(h: &ParityCheckMatrix) -> Vec<Vec<u8>> {
    let n = h.bit_count();
    let mut rows = packed_rows(h);
    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_in(&pivot_row);
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }

    let mut is_pivot = vec![false; n];
    for &c in &pivot_col_of_row {
        is_pivot[c] = true;
    }

    // One basis vector per free column: free bit = 1, pivot bits solved
    // from the reduced rows.
    let mut basis = Vec::with_capacity(n - rank);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut x = vec![0u8; n];
        x[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            if rows[r].get(free) {
                x[pc] = 1;
            }
        }
        basis.push(x);
    }
    basis
}

/// XOR-combine basis vectors selected by `coeffs` (one bit per basis
/// element) into a codeword.
pub fn combine(basis: &[Vec<u8>], coeffs: &[bool]) -> Vec<u8> {
    assert_eq!(basis.len(), coeffs.len());
    let n = basis.first().map_or(0, Vec::len);
    let mut x = vec![0u8; n];
    for (vec, &on) in basis.iter().zip(coeffs) {
        if on {
            for (a, b) in x.iter_mut().zip(vec) {
                *a ^= b;
            }
        }
    }
    x
}
