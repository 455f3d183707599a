//! Small constructed codes embedding canonical trapping-set structures,
//! plus seeded trap scenarios for exercising the post-processor.
//!
//! Each code pins an induced subgraph — the trapping set's bits, its
//! degree-1 and degree-2 checks — and completes the rest of the graph to a
//! uniform column degree and row weight by a deterministic backtracking
//! search that never adds an edge to a support bit and never creates a
//! 4-cycle. The pinned structure is therefore exactly the induced subgraph
//! of the support in the finished code.

use crate::code::{CodeError, ParityCheckMatrix};
use crate::decoder::{Correction, DecoderConfig, Schedule};
use crate::quant::{Dyadic, QuantSpec};

/// A pinned induced subgraph plus completion targets.
struct PinnedStructure {
    n: usize,
    /// Pinned checks listing only their support-bit members.
    checks: Vec<Vec<u32>>,
    /// Empty checks appended for completion headroom.
    extra_checks: usize,
    col_weight: usize,
    row_weight: usize,
    support_len: usize,
    code_id: &'static str,
}

/// Checks of the pinned structure that touch exactly one support bit (the
/// trapping set's degree-1 checks). Completion bits may join at most one
/// of these, so no completion bit can see two unsatisfied checks of the
/// seeded trap and be dragged in or mistaken for a plural candidate.
fn degree_one_checks(checks: &[Vec<u32>]) -> Vec<bool> {
    checks.iter().map(|c| c.len() == 1).collect()
}

impl PinnedStructure {
    /// Complete to a full matrix: every non-support bit receives exactly
    /// `col_weight` edges, no check exceeds `row_weight` bits, and no two
    /// checks share more than one bit. Row weights may vary a little; the
    /// emptiest-first placement keeps them near the target.
    fn complete(&self) -> Result<ParityCheckMatrix, CodeError> {
        let m = self.checks.len() + self.extra_checks;
        let mut rows: Vec<Vec<u32>> = self.checks.clone();
        rows.resize(m, Vec::new());

        let capacity: Vec<usize> = rows.iter().map(|r| self.row_weight - r.len()).collect();
        let slots: usize = capacity.iter().sum();
        let free_bits: Vec<u32> = (self.support_len as u32..self.n as u32).collect();
        let needed = free_bits.len() * self.col_weight;
        if slots < needed {
            return Err(CodeError::InvalidParameter(format!(
                "completion slots ({slots}) cannot host required edges ({needed})"
            )));
        }

        // Pair matrix: pair_used[a][b] when checks a and b already share a
        // bit; adding a bit to both would close a 4-cycle.
        let mut pair_used = vec![false; m * m];
        let mark = |pairs: &mut Vec<bool>, a: usize, b: usize| {
            pairs[a * m + b] = true;
            pairs[b * m + a] = true;
        };
        for bit in 0..self.support_len as u32 {
            let owners: Vec<usize> = rows
                .iter()
                .enumerate()
                .filter(|(_, r)| r.contains(&bit))
                .map(|(j, _)| j)
                .collect();
            for x in 0..owners.len() {
                for y in x + 1..owners.len() {
                    mark(&mut pair_used, owners[x], owners[y]);
                }
            }
        }

        let mut is_deg1 = degree_one_checks(&self.checks);
        is_deg1.resize(m, false);
        let mut search = CompletionSearch {
            m,
            gamma: self.col_weight,
            capacity,
            pair_used,
            is_deg1,
            assignment: Vec::with_capacity(free_bits.len()),
            nodes: 0,
        };
        if !search.place(free_bits.len()) {
            return Err(CodeError::InvalidParameter(
                "structure completion search failed".into(),
            ));
        }
        let assignment = search.assignment;

        for (k, combo) in assignment.iter().enumerate() {
            for &c in combo {
                rows[c].push(free_bits[k]);
            }
        }
        if let Some(short) = rows.iter().position(|r| r.len() < 2) {
            return Err(CodeError::InvalidParameter(format!(
                "completion left check {short} with fewer than two bits"
            )));
        }
        ParityCheckMatrix::from_rows(m, self.n, rows, self.code_id)
    }
}

/// Backtracking state for the completion search. Bits are placed one at a
/// time; candidate checks are tried emptiest-first (ties by index), which
/// keeps row fill balanced and makes the search effectively greedy.
struct CompletionSearch {
    m: usize,
    gamma: usize,
    capacity: Vec<usize>,
    pair_used: Vec<bool>,
    is_deg1: Vec<bool>,
    assignment: Vec<Vec<usize>>,
    nodes: usize,
}

impl CompletionSearch {
    const NODE_LIMIT: usize = 2_000_000;

    fn place(&mut self, total_bits: usize) -> bool {
        if self.assignment.len() == total_bits {
            return true;
        }
        self.nodes += 1;
        if self.nodes > Self::NODE_LIMIT {
            return false;
        }
        let mut candidates: Vec<usize> = (0..self.m).filter(|&c| self.capacity[c] > 0).collect();
        candidates.sort_by_key(|&c| (std::cmp::Reverse(self.capacity[c]), c));
        let mut combo = Vec::with_capacity(self.gamma);
        self.extend(&candidates, 0, &mut combo, total_bits)
    }

    fn extend(
        &mut self,
        candidates: &[usize],
        start: usize,
        combo: &mut Vec<usize>,
        total_bits: usize,
    ) -> bool {
        if combo.len() == self.gamma {
            return self.commit(combo, total_bits);
        }
        for k in start..candidates.len() {
            let c = candidates[k];
            if combo.iter().any(|&prev| self.pair_used[prev * self.m + c]) {
                continue;
            }
            if self.is_deg1[c] && combo.iter().any(|&prev| self.is_deg1[prev]) {
                continue;
            }
            combo.push(c);
            if self.extend(candidates, k + 1, combo, total_bits) {
                return true;
            }
            combo.pop();
        }
        false
    }

    fn commit(&mut self, combo: &[usize], total_bits: usize) -> bool {
        for &c in combo {
            self.capacity[c] -= 1;
        }
        for x in 0..combo.len() {
            for y in x + 1..combo.len() {
                self.pair_used[combo[x] * self.m + combo[y]] = true;
                self.pair_used[combo[y] * self.m + combo[x]] = true;
            }
        }
        self.assignment.push(combo.to_vec());
        if self.place(total_bits) {
            return true;
        }

        self.assignment.pop();
        for x in 0..combo.len() {
            for y in x + 1..combo.len() {
                self.pair_used[combo[x] * self.m + combo[y]] = false;
                self.pair_used[combo[y] * self.m + combo[x]] = false;
            }
        }
        for &c in combo {
            self.capacity[c] += 1;
        }
        false
    }
}

/// Code with a `(3, 3)` elementary trapping set on bits `{0, 1, 2}`: each
/// support bit sees one degree-1 and two degree-2 checks (type I).
/// 14 bits, column degree 3, row weight at most 4.
pub fn type_i_code() -> ParityCheckMatrix {
    PinnedStructure {
        n: 14,
        checks: vec![
            vec![0, 1],
            vec![1, 2],
            vec![0, 2],
            vec![0],
            vec![1],
            vec![2],
        ],
        extra_checks: 5,
        col_weight: 3,
        row_weight: 4,
        support_len: 3,
        code_id: "fixture-type1-3-3",
    }
    .complete()
    .expect("type I fixture completes")
}

pub const TYPE_I_SUPPORT: [usize; 3] = [0, 1, 2];

/// Code with an `(8, 6)` elementary trapping set on bits `{0..7}`: bits 6
/// and 7 are inner (no degree-1 check), bits 0..5 outer (type II). Every
/// inner reinforcement path runs through an outer bit, so heating can
/// reach the inner bits once the outer ones move. 32 bits, column degree
/// 3, row weight at most 4.
pub fn type_ii_code() -> ParityCheckMatrix {
    PinnedStructure {
        n: 32,
        checks: vec![
            // Degree-1 checks of the six outer bits.
            vec![0],
            vec![1],
            vec![2],
            vec![3],
            vec![4],
            vec![5],
            // Degree-2 checks: each inner bit pairs with three outer bits,
            // and the outer bits pair up among themselves.
            vec![0, 6],
            vec![1, 6],
            vec![2, 6],
            vec![3, 7],
            vec![4, 7],
            vec![5, 7],
            vec![0, 3],
            vec![1, 4],
            vec![2, 5],
        ],
        extra_checks: 10,
        col_weight: 3,
        row_weight: 4,
        support_len: 8,
        code_id: "fixture-type2-8-6",
    }
    .complete()
    .expect("type II fixture completes")
}

pub const TYPE_II_SUPPORT: [usize; 8] = [0, 1, 2, 3, 4, 5, 6, 7];
pub const TYPE_II_INNER: [usize; 2] = [6, 7];

/// Code with a `(6, 8)` elementary trapping set on bits `{0..5}`: bits 0
/// and 3 are plural (two degree-1 checks each), the rest singular
/// (type III). 32 bits, column degree 3, row weight at most 4.
pub fn type_iii_code() -> ParityCheckMatrix {
    PinnedStructure {
        n: 32,
        checks: vec![
            // Degree-1 checks: two each for the plural bits 0 and 3, one
            // each for the singular bits.
            vec![0],
            vec![0],
            vec![1],
            vec![2],
            vec![3],
            vec![3],
            vec![4],
            vec![5],
            // Degree-2 checks along the path 0-1-4-5-2-3.
            vec![0, 1],
            vec![1, 4],
            vec![4, 5],
            vec![2, 5],
            vec![2, 3],
        ],
        extra_checks: 12,
        col_weight: 3,
        row_weight: 4,
        support_len: 6,
        code_id: "fixture-type3-6-8",
    }
    .complete()
    .expect("type III fixture completes")
}

pub const TYPE_III_SUPPORT: [usize; 6] = [0, 1, 2, 3, 4, 5];
pub const TYPE_III_PLURAL: [usize; 2] = [0, 3];
/// Degree-1 checks of the plural bits; soft bit flipping turns these
/// satisfied.
pub const TYPE_III_PLURAL_CHECKS: [usize; 4] = [0, 1, 4, 5];

/// A deterministic trapped-decoder setup: a fixture code plus a prior
/// assignment that leaves baseline decoding stuck in the pinned trapping
/// set after the full iteration budget.
#[derive(Debug, Clone)]
pub struct TrapScenario {
    pub code: ParityCheckMatrix,
    pub support: Vec<usize>,
    pub priors: Vec<i32>,
    pub config: DecoderConfig,
}

fn fixture_config() -> DecoderConfig {
    DecoderConfig {
        max_iterations: 20,
        schedule: Schedule::Flooding,
        correction: Correction::Normalization(Dyadic::new(3, 2)),
        quant: QuantSpec::new(4, 0).unwrap(),
    }
}

fn priors_for(code: &ParityCheckMatrix, wrong: &[(usize, i32)], correct: i32) -> Vec<i32> {
    let mut priors = vec![correct; code.bit_count()];
    for &(bit, value) in wrong {
        priors[bit] = value;
    }
    priors
}

/// Type I trap: the `(3, 3)` set seeded with strongly wrong priors.
/// Quenching resolves it.
pub fn type_i_scenario() -> TrapScenario {
    let code = type_i_code();
    let priors = priors_for(&code, &[(0, -6), (1, -6), (2, -6)], 7);
    TrapScenario {
        support: TYPE_I_SUPPORT.to_vec(),
        priors,
        code,
        config: fixture_config(),
    }
}

/// Type II deep trap: inner bits far below the outer bits. One heating
/// iteration is not enough; extended heating is.
pub fn type_ii_scenario() -> TrapScenario {
    let code = type_ii_code();
    let wrong: Vec<(usize, i32)> = [(0, -5), (1, -5), (2, -5), (3, -5), (4, -5), (5, -5)]
        .into_iter()
        .chain([(6, -8), (7, -8)])
        .collect();
    let priors = priors_for(&code, &wrong, 7);
    TrapScenario {
        support: TYPE_II_SUPPORT.to_vec(),
        priors,
        code,
        config: fixture_config(),
    }
}

/// Type III trap: plural bits pinned hard, singular bits moderate. The
/// combined schedule (constrain, gap, heat, cool) resolves it.
pub fn type_iii_scenario() -> TrapScenario {
    let code = type_iii_code();
    let wrong: Vec<(usize, i32)> = [(0, -8), (3, -8)]
        .into_iter()
        .chain([(1, -5), (2, -5), (4, -5), (5, -5)])
        .collect();
    let priors = priors_for(&code, &wrong, 7);
    TrapScenario {
        support: TYPE_III_SUPPORT.to_vec(),
        priors,
        code,
        config: fixture_config(),
    }
}
