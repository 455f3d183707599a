//! Quantized min-sum belief-propagation decoding.
//!
//! Check-to-variable messages use the min-sum rule (minimum magnitude over
//! the other edges, sign product), optionally corrected by an offset or a
//! normalization factor. Variable nodes accumulate the working prior and
//! all incoming messages into the posterior, make hard decisions, and emit
//! extrinsic marginals. All message arithmetic saturates in the configured
//! `Qp.q` format.
//!
//! Two schedules are provided: flooding (all checks, then all variables)
//! and horizontal layered (one quasi-cyclic block row at a time with
//! immediate posterior refresh). The syndrome is evaluated on posterior
//! hard decisions after each full iteration under either schedule, so the
//! iteration limit counts identically.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::ParityCheckMatrix;
use crate::quant::{Dyadic, QuantSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecoderError {
    #[error("channel noise variance must be positive, got {0}")]
    SigmaNotPositive(f64),
    #[error("layered schedule requires a quasi-cyclic code with known block size")]
    LayeredRequiresQc,
    #[error("prior vector has length {got}, code has {expected} bits")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid decoder config: {0}")]
    InvalidConfig(String),
}

/// AWGN channel parameters; holds the noise variance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChannelParams {
    sigma2: f64,
}

impl ChannelParams {
    pub fn new(sigma2: f64) -> Result<Self, DecoderError> {
        if !(sigma2 > 0.0) {
            return Err(DecoderError::SigmaNotPositive(sigma2));
        }
        Ok(ChannelParams { sigma2 })
    }

    pub fn sigma2(&self) -> f64 {
        self.sigma2
    }
}

/// Prior LLR of each bit from the channel output: `2 y / sigma^2`,
/// quantized once at the decoder boundary.
pub fn init_priors(y: &[f64], ch: ChannelParams, quant: QuantSpec) -> Vec<i32> {
    y.iter()
        .map(|&yi| quant.quantize_raw(2.0 * yi / ch.sigma2()))
        .collect()
}

/// Message-passing order within an iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Schedule {
    #[default]
    Flooding,
    Layered,
}

/// Min-sum magnitude correction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Correction {
    None,
    /// Offset beta (raw steps): `max(|m| - beta, 0)`.
    Offset(i32),
    /// Normalization alpha: `round(alpha * |m|)`, ties away from zero.
    Normalization(Dyadic),
}

impl Correction {
    #[inline]
    fn apply(&self, mag: i32) -> i32 {
        match self {
            Correction::None => mag,
            Correction::Offset(beta) => (mag - beta).max(0),
            Correction::Normalization(alpha) => alpha.scale_round_away(mag as i64) as i32,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecoderConfig {
    pub max_iterations: usize,
    pub schedule: Schedule,
    pub correction: Correction,
    pub quant: QuantSpec,
}

impl DecoderConfig {
    /// Defaults: 20 iterations, flooding, normalization 0.75.
    pub fn new(quant: QuantSpec) -> Self {
        DecoderConfig {
            max_iterations: 20,
            schedule: Schedule::Flooding,
            correction: Correction::Normalization(Dyadic::new(3, 2)),
            quant,
        }
    }

    pub fn validate(&self) -> Result<(), DecoderError> {
        if self.max_iterations == 0 {
            return Err(DecoderError::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        match self.correction {
            Correction::Offset(beta) if beta < 0 => Err(DecoderError::InvalidConfig(
                format!("offset beta must be >= 0, got {beta}"),
            )),
            Correction::Normalization(alpha) if !(alpha.value() > 0.0 && alpha.value() <= 1.0) => {
                Err(DecoderError::InvalidConfig(format!(
                    "normalization alpha must be in (0, 1], got {}",
                    alpha.value()
                )))
            }
            _ => Ok(()),
        }
    }
}

/// Full per-frame decoder state: working priors, posteriors, both message
/// directions, hard decisions, check satisfaction and neighborhood labels.
///
/// Retained after a failed decode so post-processing can continue from the
/// trapped state.
#[derive(Debug, Clone)]
pub struct DecoderState {
    pub priors: Vec<i32>,
    pub posteriors: Vec<i32>,
    /// Check-to-variable messages, one per edge in row-major edge order.
    pub cv: Vec<i32>,
    /// Variable-to-check messages, same edge order.
    pub vc: Vec<i32>,
    pub hard: Vec<u8>,
    pub check_satisfied: Vec<bool>,
    /// Neighborhood labels used by post-processing; accumulate while one
    /// post-processing invocation runs.
    pub neighborhood: Vec<bool>,
    pub iteration: usize,
}

impl DecoderState {
    fn with_shape(m: usize, n: usize, edges: usize) -> Self {
        DecoderState {
            priors: vec![0; n],
            posteriors: vec![0; n],
            cv: vec![0; edges],
            vc: vec![0; edges],
            hard: vec![0; n],
            check_satisfied: vec![false; m],
            neighborhood: vec![false; n],
            iteration: 0,
        }
    }

    pub fn converged(&self) -> bool {
        self.check_satisfied.iter().all(|&s| s)
    }

    /// Bits labeled as the heating neighborhood, ascending.
    pub fn neighborhood_set(&self) -> Vec<usize> {
        self.neighborhood
            .iter()
            .enumerate()
            .filter(|(_, &l)| l)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Outcome of a decode call. `state` holds the final message state and is
/// the input to post-processing when `converged` is false.
#[derive(Debug, Clone)]
pub struct DecodeResult {
    pub converged: bool,
    pub iterations_used: usize,
    pub hard_decisions: Vec<u8>,
    pub state: DecoderState,
}

/// A min-sum decoder bound to one parity-check matrix.
///
/// The decoder itself is immutable; each `decode_into` call works on a
/// caller-owned [`DecoderState`], so one decoder can serve many frames
/// concurrently.
#[derive(Debug, Clone)]
pub struct Decoder<'a> {
    h: &'a ParityCheckMatrix,
    config: DecoderConfig,
    /// Edge range of check `j` is `row_ptr[j]..row_ptr[j+1]`.
    row_ptr: Vec<u32>,
    /// Bit index of each edge, row-major.
    edge_bit: Vec<u32>,
    /// Edge ids of bit `i` are `col_edge[col_ptr[i]..col_ptr[i+1]]`.
    col_ptr: Vec<u32>,
    col_edge: Vec<u32>,
    /// Checks per layer for the layered schedule (the QC block size).
    layer_size: usize,
}

impl<'a> Decoder<'a> {
    pub fn new(h: &'a ParityCheckMatrix, config: DecoderConfig) -> Result<Self, DecoderError> {
        config.validate()?;
        let layer_size = match config.schedule {
            Schedule::Flooding => 0,
            Schedule::Layered => h.qc_block_size().ok_or(DecoderError::LayeredRequiresQc)?,
        };

        let m = h.check_count();
        let n = h.bit_count();
        let edges = h.edge_count();
        let mut row_ptr = Vec::with_capacity(m + 1);
        let mut edge_bit = Vec::with_capacity(edges);
        row_ptr.push(0u32);
        for j in 0..m {
            edge_bit.extend_from_slice(h.row(j));
            row_ptr.push(edge_bit.len() as u32);
        }
        let mut col_ptr = vec![0u32; n + 1];
        for &i in &edge_bit {
            col_ptr[i as usize + 1] += 1;
        }
        for i in 0..n {
            col_ptr[i + 1] += col_ptr[i];
        }
        let mut cursor = col_ptr.clone();
        let mut col_edge = vec![0u32; edges];
        for (e, &i) in edge_bit.iter().enumerate() {
            col_edge[cursor[i as usize] as usize] = e as u32;
            cursor[i as usize] += 1;
        }

        Ok(Decoder {
            h,
            config,
            row_ptr,
            edge_bit,
            col_ptr,
            col_edge,
            layer_size,
        })
    }

    pub fn matrix(&self) -> &ParityCheckMatrix {
        self.h
    }

    pub fn config(&self) -> &DecoderConfig {
        &self.config
    }

    pub fn quant(&self) -> QuantSpec {
        self.config.quant
    }

    /// Edge ids of check `j`.
    #[inline]
    pub fn check_edges(&self, j: usize) -> std::ops::Range<usize> {
        self.row_ptr[j] as usize..self.row_ptr[j + 1] as usize
    }

    /// Bit on the other end of edge `e`.
    #[inline]
    pub fn edge_bit(&self, e: usize) -> usize {
        self.edge_bit[e] as usize
    }

    /// Edge ids incident to bit `i`.
    #[inline]
    pub fn bit_edges(&self, i: usize) -> &[u32] {
        &self.col_edge[self.col_ptr[i] as usize..self.col_ptr[i + 1] as usize]
    }

    /// Check on the other end of edge `e` (by binary search on the row
    /// pointer table; not used in hot loops).
    pub fn edge_check(&self, e: usize) -> usize {
        match self.row_ptr.binary_search(&(e as u32 + 1)) {
            Ok(j) => j,
            Err(j) => j - 1,
        }
    }

    pub fn new_state(&self) -> DecoderState {
        DecoderState::with_shape(self.h.check_count(), self.h.bit_count(), self.edge_bit.len())
    }

    /// Load priors into a state: posteriors start at the prior, all VC
    /// messages carry the prior, all CV messages are zero.
    pub fn load_priors(&self, priors: &[i32], state: &mut DecoderState) -> Result<(), DecoderError> {
        let n = self.h.bit_count();
        if priors.len() != n {
            return Err(DecoderError::LengthMismatch {
                expected: n,
                got: priors.len(),
            });
        }
        state.priors.copy_from_slice(priors);
        state.posteriors.copy_from_slice(priors);
        for (i, &p) in priors.iter().enumerate() {
            state.hard[i] = (p < 0) as u8;
        }
        state.cv.fill(0);
        for (e, &i) in self.edge_bit.iter().enumerate() {
            state.vc[e] = priors[i as usize];
        }
        state.neighborhood.fill(false);
        state.iteration = 0;
        self.refresh_satisfaction(state);
        Ok(())
    }

    /// Recompute CV messages of check `j` from the current VC messages:
    /// minimum magnitude and sign product over the other edges, then the
    /// configured correction. A zero VC message counts as positive.
    pub fn check_node_update(&self, state: &mut DecoderState, j: usize) {
        let spec = self.config.quant;
        let range = self.check_edges(j);
        let mut min1 = i32::MAX;
        let mut min1_e = usize::MAX;
        let mut min2 = i32::MAX;
        let mut neg_parity = false;
        for e in range.clone() {
            let v = state.vc[e];
            let mag = v.unsigned_abs() as i32;
            neg_parity ^= v < 0;
            if mag < min1 {
                min2 = min1;
                min1 = mag;
                min1_e = e;
            } else if mag < min2 {
                min2 = mag;
            }
        }
        for e in range {
            let other_min = if e == min1_e { min2 } else { min1 };
            // A degree-1 check has no other edges; it asserts its bit at
            // full confidence.
            let mag = if other_min == i32::MAX {
                spec.raw_max()
            } else {
                self.config.correction.apply(other_min)
            };
            let neg = neg_parity ^ (state.vc[e] < 0);
            state.cv[e] = spec.saturate(if neg { -(mag as i64) } else { mag as i64 });
        }
    }

    /// Recompute the posterior, hard decision and outgoing marginals of bit
    /// `i` from the current CV messages and the working prior.
    pub fn variable_node_update(&self, state: &mut DecoderState, i: usize) {
        let spec = self.config.quant;
        let mut sum = state.priors[i] as i64;
        let edges = self.col_ptr[i] as usize..self.col_ptr[i + 1] as usize;
        for idx in edges.clone() {
            sum += state.cv[self.col_edge[idx] as usize] as i64;
        }
        let post = spec.saturate(sum);
        state.posteriors[i] = post;
        state.hard[i] = (post < 0) as u8;
        for idx in edges {
            let e = self.col_edge[idx] as usize;
            state.vc[e] = spec.sat_sub_raw(post, state.cv[e]);
        }
    }

    /// Recompute per-check satisfaction from the hard decisions; returns
    /// true when the syndrome is all zero.
    pub fn refresh_satisfaction(&self, state: &mut DecoderState) -> bool {
        let mut all = true;
        for j in 0..self.h.check_count() {
            let mut parity = 0u8;
            for e in self.check_edges(j) {
                parity ^= state.hard[self.edge_bit[e] as usize];
            }
            state.check_satisfied[j] = parity == 0;
            all &= parity == 0;
        }
        all
    }

    /// One full flooding iteration: every check update, every variable
    /// update, then the syndrome. Returns true on a zero syndrome.
    pub fn bp_iteration(&self, state: &mut DecoderState) -> bool {
        for j in 0..self.h.check_count() {
            self.check_node_update(state, j);
        }
        for i in 0..self.h.bit_count() {
            self.variable_node_update(state, i);
        }
        state.iteration += 1;
        self.refresh_satisfaction(state)
    }

    /// One full layered iteration over the QC block rows.
    fn layered_iteration(&self, state: &mut DecoderState) -> bool {
        let spec = self.config.quant;
        let m = self.h.check_count();
        let z = self.layer_size;
        debug_assert!(z > 0 && m % z == 0);
        for layer in 0..m / z {
            for j in layer * z..(layer + 1) * z {
                let range = self.check_edges(j);
                // Marginalize against the previous CV of this check.
                for e in range.clone() {
                    let i = self.edge_bit[e] as usize;
                    state.vc[e] = spec.sat_sub_raw(state.posteriors[i], state.cv[e]);
                }
                self.check_node_update(state, j);
                for e in range {
                    let i = self.edge_bit[e] as usize;
                    state.posteriors[i] = spec.sat_add_raw(state.vc[e], state.cv[e]);
                }
            }
        }
        for (i, &post) in state.posteriors.iter().enumerate() {
            state.hard[i] = (post < 0) as u8;
        }
        state.iteration += 1;
        self.refresh_satisfaction(state)
    }

    /// Decode into a caller-owned state (no allocation); the state retains
    /// the final messages either way.
    pub fn decode_into(
        &self,
        priors: &[i32],
        state: &mut DecoderState,
    ) -> Result<(bool, usize), DecoderError> {
        self.load_priors(priors, state)?;
        for it in 1..=self.config.max_iterations {
            let converged = match self.config.schedule {
                Schedule::Flooding => self.bp_iteration(state),
                Schedule::Layered => self.layered_iteration(state),
            };
            if converged {
                return Ok((true, it));
            }
        }
        Ok((false, self.config.max_iterations))
    }

    /// Decode a frame of quantized priors.
    pub fn decode(&self, priors: &[i32]) -> Result<DecodeResult, DecoderError> {
        let mut state = self.new_state();
        let (converged, iterations_used) = self.decode_into(priors, &mut state)?;
        Ok(DecodeResult {
            converged,
            iterations_used,
            hard_decisions: state.hard.clone(),
            state,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_array_code;
    use proptest::prelude::*;

    fn q40() -> QuantSpec {
        QuantSpec::new(4, 0).unwrap()
    }

    fn plain_config(correction: Correction) -> DecoderConfig {
        DecoderConfig {
            max_iterations: 20,
            schedule: Schedule::Flooding,
            correction,
            quant: q40(),
        }
    }

    /// One check with the given VC inputs; returns the CV outputs.
    fn run_check(inputs: &[i32], correction: Correction) -> Vec<i32> {
        let deg = inputs.len() as u32;
        let h = ParityCheckMatrix::from_rows(
            1,
            inputs.len(),
            vec![(0..deg).collect()],
            "single-check",
        )
        .unwrap();
        let dec = Decoder::new(&h, plain_config(correction)).unwrap();
        let mut state = dec.new_state();
        state.vc.copy_from_slice(inputs);
        dec.check_node_update(&mut state, 0);
        state.cv
    }

    #[test]
    fn check_update_min_and_sign() {
        let out = run_check(&[3, -5, 2, -7], Correction::None);
        assert_eq!(out, vec![2, -2, 3, -2]);
    }

    #[test]
    fn check_update_degree_two_swaps() {
        let out = run_check(&[4, -6], Correction::None);
        assert_eq!(out, vec![-6, 4]);
    }

    #[test]
    fn check_update_normalization_rounds() {
        let alpha = Correction::Normalization(Dyadic::new(3, 2));
        let out = run_check(&[3, -5, 2, -7], alpha);
        // 1.5 -> 2 and 2.25 -> 2 under ties-away rounding.
        assert_eq!(out, vec![2, -2, 2, -2]);
    }

    #[test]
    fn check_update_offset() {
        let out = run_check(&[3, -5, 2, -7], Correction::Offset(1));
        assert_eq!(out, vec![1, -1, 2, -1]);
    }

    #[test]
    fn check_update_zero_counts_positive() {
        let out = run_check(&[0, -3], Correction::None);
        assert_eq!(out, vec![-3, 0]);
    }

    #[test]
    fn variable_update_marginals() {
        // One bit in three checks, prior 2, cv = (+1, -3, +1).
        let h = ParityCheckMatrix::from_rows(3, 1, vec![vec![0], vec![0], vec![0]], "col").unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        let mut state = dec.new_state();
        state.priors[0] = 2;
        state.cv.copy_from_slice(&[1, -3, 1]);
        dec.variable_node_update(&mut state, 0);
        assert_eq!(state.posteriors[0], 1);
        assert_eq!(state.hard[0], 0);
        assert_eq!(state.vc[0], 0); // 1 - 1
        assert_eq!(state.vc[1], 4); // 1 - (-3)
        assert_eq!(state.vc[2], 0);
    }

    #[test]
    fn variable_update_saturates() {
        let h = ParityCheckMatrix::from_rows(3, 1, vec![vec![0], vec![0], vec![0]], "col").unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        let mut state = dec.new_state();
        state.priors[0] = 7;
        state.cv.copy_from_slice(&[7, 7, 7]);
        dec.variable_node_update(&mut state, 0);
        assert_eq!(state.posteriors[0], 7);
    }

    #[test]
    fn posterior_zero_decodes_to_zero() {
        let h = ParityCheckMatrix::from_rows(1, 2, vec![vec![0, 1]], "pair").unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        let mut state = dec.new_state();
        dec.load_priors(&[0, 0], &mut state).unwrap();
        assert_eq!(state.posteriors[0], 0);
        assert_eq!(state.hard[0], 0);
    }

    #[test]
    fn init_priors_scales_and_saturates() {
        let ch = ChannelParams::new(1.0).unwrap();
        let unq = 2.0 * 0.5 / 1.0;
        assert_eq!(unq, 1.0);
        let ch_half = ChannelParams::new(0.5).unwrap();
        assert_eq!(init_priors(&[1.0], ch_half, q40()), vec![4]);
        assert_eq!(init_priors(&[10.0], ch, q40()), vec![7]);
        assert!(ChannelParams::new(0.0).is_err());
        assert!(ChannelParams::new(-1.0).is_err());
    }

    #[test]
    fn noiseless_frame_converges_in_one_iteration() {
        let h = build_array_code(3, 5, 5).unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        let priors = vec![7i32; h.bit_count()];
        let res = dec.decode(&priors).unwrap();
        assert!(res.converged);
        assert_eq!(res.iterations_used, 1);
        assert!(res.hard_decisions.iter().all(|&b| b == 0));
    }

    #[test]
    fn layered_requires_qc() {
        let h = ParityCheckMatrix::from_rows(1, 2, vec![vec![0, 1]], "pair").unwrap();
        let mut cfg = plain_config(Correction::None);
        cfg.schedule = Schedule::Layered;
        assert!(matches!(
            Decoder::new(&h, cfg),
            Err(DecoderError::LayeredRequiresQc)
        ));
    }

    #[test]
    fn converged_means_zero_syndrome() {
        let h = build_array_code(3, 5, 5).unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        // Mildly noisy priors around the all-zero codeword.
        for seed in 0..50u64 {
            let priors: Vec<i32> = (0..h.bit_count())
                .map(|i| {
                    let x = ((seed * 31 + i as u64 * 17) % 13) as i32 - 3;
                    x.clamp(-8, 7)
                })
                .collect();
            let res = dec.decode(&priors).unwrap();
            if res.converged {
                assert!(h.is_codeword(&res.hard_decisions).unwrap());
            }
        }
    }

    #[test]
    fn codeword_fixed_point() {
        // A saturated codeword state never drifts: posteriors, hard
        // decisions and the zero syndrome survive any number of further
        // iterations.
        let h = build_array_code(3, 5, 5).unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        let mut state = dec.new_state();
        dec.load_priors(&vec![7i32; h.bit_count()], &mut state).unwrap();
        assert!(dec.bp_iteration(&mut state));
        let posts = state.posteriors.clone();
        let hard = state.hard.clone();
        for _ in 0..5 {
            assert!(dec.bp_iteration(&mut state));
            assert_eq!(state.posteriors, posts);
            assert_eq!(state.hard, hard);
        }
    }

    #[test]
    fn offset_codeword_state_is_a_literal_fixed_point() {
        // With offset correction and weak agreeing priors the full message
        // state reproduces itself exactly.
        let h = build_array_code(3, 5, 5).unwrap();
        let dec = Decoder::new(&h, plain_config(Correction::Offset(1))).unwrap();
        let mut state = dec.new_state();
        dec.load_priors(&vec![1i32; h.bit_count()], &mut state).unwrap();
        assert!(dec.bp_iteration(&mut state));
        let snapshot = (state.posteriors.clone(), state.cv.clone(), state.vc.clone());
        assert!(dec.bp_iteration(&mut state));
        assert_eq!(
            (state.posteriors.clone(), state.cv.clone(), state.vc.clone()),
            snapshot
        );
    }

    #[test]
    fn layered_and_flooding_agree_when_both_converge() {
        let h = build_array_code(3, 7, 7).unwrap();
        let flood = Decoder::new(&h, plain_config(Correction::None)).unwrap();
        let mut layered_cfg = plain_config(Correction::None);
        layered_cfg.schedule = Schedule::Layered;
        let layered = Decoder::new(&h, layered_cfg).unwrap();
        let mut agreements = 0;
        for seed in 0..200u64 {
            // High-SNR-like priors: mostly +6 with occasional weak errors.
            let priors: Vec<i32> = (0..h.bit_count())
                .map(|i| {
                    let r = (seed * 1_000_003 + i as u64 * 7919) % 97;
                    if r < 6 {
                        -2
                    } else {
                        6
                    }
                })
                .collect();
            let a = flood.decode(&priors).unwrap();
            let b = layered.decode(&priors).unwrap();
            if a.converged && b.converged {
                assert_eq!(a.hard_decisions, b.hard_decisions);
                agreements += 1;
            }
        }
        assert!(agreements > 100, "only {agreements} joint convergences");
    }

    proptest! {
        // First/second-minimum exclusion is edge-for-edge identical to the
        // naive per-edge recomputation.
        #[test]
        fn two_min_matches_naive(inputs in proptest::collection::vec(-8i32..=7, 1..=8)) {
            let out = run_check(&inputs, Correction::None);
            let spec = q40();
            for (k, &o) in out.iter().enumerate() {
                let mut mag = i32::MAX;
                let mut neg = false;
                for (t, &v) in inputs.iter().enumerate() {
                    if t == k { continue; }
                    mag = mag.min(v.unsigned_abs() as i32);
                    neg ^= v < 0;
                }
                let expect = if mag == i32::MAX {
                    spec.raw_max()
                } else {
                    spec.saturate(if neg { -(mag as i64) } else { mag as i64 })
                };
                prop_assert_eq!(o, expect);
            }
        }

        // Negating all priors negates the trajectory on an even-row-weight
        // code under symmetric clipping.
        #[test]
        fn prior_negation_symmetry(seed in 0u64..500) {
            let h = build_array_code(2, 4, 5).unwrap();
            let spec = QuantSpec::symmetric(4, 0).unwrap();
            let all_even = (0..h.check_count()).all(|j| h.row(j).len() % 2 == 0);
            prop_assume!(all_even);
            let cfg = DecoderConfig { max_iterations: 10, schedule: Schedule::Flooding, correction: Correction::None, quant: spec };
            let dec = Decoder::new(&h, cfg).unwrap();
            let priors: Vec<i32> = (0..h.bit_count())
                .map(|i| ((seed * 131 + i as u64 * 29) % 15) as i32 - 7)
                .collect();
            let negated: Vec<i32> = priors.iter().map(|&p| -p).collect();
            let mut s1 = dec.new_state();
            let mut s2 = dec.new_state();
            dec.load_priors(&priors, &mut s1).unwrap();
            dec.load_priors(&negated, &mut s2).unwrap();
            for _ in 0..5 {
                dec.bp_iteration(&mut s1);
                dec.bp_iteration(&mut s2);
                for i in 0..h.bit_count() {
                    prop_assert_eq!(s1.posteriors[i], -s2.posteriors[i]);
                }
            }
        }
    }
}
