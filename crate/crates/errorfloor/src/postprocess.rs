//! Annealing-inspired post-processing of failed decodes.
//!
//! A decoder stuck in a trapping set sits in a local minimum: satisfied
//! checks keep reinforcing the wrong bits harder than the unsatisfied
//! checks can correct them. Post-processing perturbs ("heats") the
//! neighborhood of the unsatisfied checks and then lets plain BP iterations
//! cool the state toward a codeword. Three perturbations are provided:
//!
//! - **Quenching** — one heating iteration, then cooling. Enough when every
//!   trapped bit touches an unsatisfied check.
//! - **Extended heating** — several heating iterations with accumulating
//!   neighborhood labels, so bits reinforced only through satisfied checks
//!   (inner bits) are eventually reached.
//! - **Focused heating** — soft bit flipping: bits touching two or more
//!   unsatisfied checks have their working prior flipped to a low
//!   reliability, shrinking the neighborhood before any heating.
//! - **Combined** — constraining, a gap of plain BP, extended heating, then
//!   cooling; applicable when the error structure is unknown.
//!
//! Heating reweights variable-to-check messages: a labeled bit sends only
//! `A0 * sgn(marginal)` to its satisfied checks, while unsatisfied checks
//! keep receiving the full marginal. Satisfaction flags are the snapshot
//! from the end of the previous iteration.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decoder::{Decoder, DecoderState};
use crate::quant::QuantSpec;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PpError {
    #[error("post-processing called on a converged state")]
    CalledOnConverged,
    #[error("invalid post-process config: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PpMethod {
    Quenching,
    ExtendedHeating,
    FocusedHeating,
    Combined,
}

impl std::fmt::Display for PpMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PpMethod::Quenching => "quenching",
            PpMethod::ExtendedHeating => "extended_heating",
            PpMethod::FocusedHeating => "focused_heating",
            PpMethod::Combined => "combined",
        };
        f.write_str(s)
    }
}

/// Post-processing schedule parameters. Magnitudes are raw quantizer
/// steps of the decoder's `Qp.q` spec.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PostProcessConfig {
    pub method: PpMethod,
    /// Heating iterations (`P`); quenching fixes this at 1.
    pub heating_iterations: usize,
    /// Reweighted VC magnitude (`A0`).
    pub reweight_magnitude: i32,
    /// Constraining iterations (`L`).
    pub constraining_iterations: usize,
    /// Flipped-prior magnitude (`B0`).
    pub flip_magnitude: i32,
    /// Plain BP iterations between constraining and heating (`G`).
    pub gap_iterations: usize,
    /// Cooling iterations (`N`).
    pub cooling_iterations: usize,
}

impl PostProcessConfig {
    /// Schedule defaults for a method: P = 10, A0 = 1, L = 5, B0 = 3,
    /// G = 10, N = 20 (quenching forces P = 1).
    pub fn defaults(method: PpMethod) -> Self {
        PostProcessConfig {
            method,
            heating_iterations: if method == PpMethod::Quenching { 1 } else { 10 },
            reweight_magnitude: 1,
            constraining_iterations: 5,
            flip_magnitude: 3,
            gap_iterations: 10,
            cooling_iterations: 20,
        }
    }

    pub fn quenching(reweight_magnitude: i32, cooling_iterations: usize) -> Self {
        PostProcessConfig {
            reweight_magnitude,
            cooling_iterations,
            ..Self::defaults(PpMethod::Quenching)
        }
    }

    pub fn extended_heating(
        heating_iterations: usize,
        reweight_magnitude: i32,
        cooling_iterations: usize,
    ) -> Self {
        PostProcessConfig {
            heating_iterations,
            reweight_magnitude,
            cooling_iterations,
            ..Self::defaults(PpMethod::ExtendedHeating)
        }
    }

    pub fn focused_heating(
        constraining_iterations: usize,
        flip_magnitude: i32,
        cooling_iterations: usize,
    ) -> Self {
        PostProcessConfig {
            constraining_iterations,
            flip_magnitude,
            cooling_iterations,
            ..Self::defaults(PpMethod::FocusedHeating)
        }
    }

    pub fn validate(&self, quant: QuantSpec) -> Result<(), PpError> {
        if self.method == PpMethod::Quenching && self.heating_iterations != 1 {
            return Err(PpError::InvalidConfig(format!(
                "quenching is one heating iteration by definition, got P = {}",
                self.heating_iterations
            )));
        }
        if self.cooling_iterations == 0 {
            return Err(PpError::InvalidConfig("need N >= 1 cooling iterations".into()));
        }
        for (name, v) in [("A0", self.reweight_magnitude), ("B0", self.flip_magnitude)] {
            if v < 0 || v > quant.raw_max() {
                return Err(PpError::InvalidConfig(format!(
                    "{name} = {v} outside the representable magnitudes 0..={}",
                    quant.raw_max()
                )));
            }
        }
        Ok(())
    }
}

/// Phases of the post-processing schedule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Constraining,
    Gap,
    Heating,
    Cooling,
}

impl std::fmt::Display for Phase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Phase::Constraining => "constraining",
            Phase::Gap => "gap",
            Phase::Heating => "heating",
            Phase::Cooling => "cooling",
        };
        f.write_str(s)
    }
}

/// What a post-processing run did. `resolved` means the final syndrome is
/// zero; whether the hard decisions match the transmitted word is for the
/// caller (who knows the truth) to judge.
#[derive(Debug, Clone, PartialEq)]
pub struct PostProcessOutcome {
    pub resolved: bool,
    pub phase_trace: Vec<(Phase, usize)>,
    pub hard_decisions: Vec<u8>,
}

impl PostProcessOutcome {
    pub fn iterations_run(&self) -> usize {
        self.phase_trace.iter().map(|&(_, n)| n).sum()
    }
}

/// Label every bit adjacent to an unsatisfied check. Labels accumulate:
/// they are never cleared while one post-processing invocation runs, so
/// the heated set can only grow.
pub fn identify_neighborhood(dec: &Decoder, state: &mut DecoderState) {
    for j in 0..dec.matrix().check_count() {
        if state.check_satisfied[j] {
            continue;
        }
        for e in dec.check_edges(j) {
            state.neighborhood[dec.edge_bit(e)] = true;
        }
    }
}

/// Reweight VC messages for one heating iteration: a labeled bit sends
/// `a0 * sgn(posterior - cv)` to each satisfied check (a zero marginal
/// counts as positive); every other edge keeps its full marginal.
pub fn reweight_vc(dec: &Decoder, state: &mut DecoderState, a0: i32) {
    for j in 0..dec.matrix().check_count() {
        if !state.check_satisfied[j] {
            continue;
        }
        for e in dec.check_edges(j) {
            if state.neighborhood[dec.edge_bit(e)] {
                // state.vc[e] already holds the marginal; saturation never
                // flips its sign.
                state.vc[e] = if state.vc[e] < 0 { -a0 } else { a0 };
            }
        }
    }
}

/// Soft bit flipping: every bit touching two or more unsatisfied checks
/// has its working prior replaced by magnitude `b0` with the sign opposite
/// its current hard decision. Returns the flipped bits.
pub fn soft_bit_flip(dec: &Decoder, state: &mut DecoderState, b0: i32) -> Vec<usize> {
    let mut flipped = Vec::new();
    for i in 0..dec.matrix().bit_count() {
        let unsat = dec
            .matrix()
            .col(i)
            .iter()
            .filter(|&&j| !state.check_satisfied[j as usize])
            .count();
        if unsat >= 2 {
            state.priors[i] = if state.hard[i] == 1 { b0 } else { -b0 };
            flipped.push(i);
        }
    }
    flipped
}

fn schedule(cfg: &PostProcessConfig) -> Vec<(Phase, usize)> {
    match cfg.method {
        PpMethod::Quenching => vec![
            (Phase::Heating, 1),
            (Phase::Cooling, cfg.cooling_iterations),
        ],
        PpMethod::ExtendedHeating => vec![
            (Phase::Heating, cfg.heating_iterations),
            (Phase::Cooling, cfg.cooling_iterations),
        ],
        PpMethod::FocusedHeating => vec![
            (Phase::Constraining, cfg.constraining_iterations),
            (Phase::Cooling, cfg.cooling_iterations),
        ],
        PpMethod::Combined => vec![
            (Phase::Constraining, cfg.constraining_iterations),
            (Phase::Gap, cfg.gap_iterations),
            (Phase::Heating, cfg.heating_iterations),
            (Phase::Cooling, cfg.cooling_iterations),
        ],
    }
}

/// Run the configured post-processing schedule on a failed decoder state.
/// Each phase terminates as soon as the syndrome reaches zero.
pub fn run_post_process(
    dec: &Decoder,
    state: &mut DecoderState,
    cfg: &PostProcessConfig,
) -> Result<PostProcessOutcome, PpError> {
    cfg.validate(dec.quant())?;
    if state.converged() {
        return Err(PpError::CalledOnConverged);
    }

    let mut trace = Vec::new();
    'phases: for (phase, planned) in schedule(cfg) {
        if planned == 0 {
            continue;
        }
        let mut ran = 0;
        for _ in 0..planned {
            let converged = match phase {
                Phase::Heating => {
                    identify_neighborhood(dec, state);
                    reweight_vc(dec, state, cfg.reweight_magnitude);
                    dec.bp_iteration(state)
                }
                Phase::Constraining => {
                    soft_bit_flip(dec, state, cfg.flip_magnitude);
                    dec.bp_iteration(state)
                }
                Phase::Gap | Phase::Cooling => dec.bp_iteration(state),
            };
            ran += 1;
            if converged {
                trace.push((phase, ran));
                break 'phases;
            }
        }
        trace.push((phase, ran));
    }

    Ok(PostProcessOutcome {
        resolved: state.converged(),
        phase_trace: trace,
        hard_decisions: state.hard.clone(),
    })
}
