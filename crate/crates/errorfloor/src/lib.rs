//! A workbench for quantized min-sum decoding of structured LDPC codes,
//! annealing-inspired post-processing of decoding failures, and
//! trapping-set analysis.
//!
//! The pieces, bottom up:
//!
//! - [`quant`] — `Qp.q` two's-complement fixed-point arithmetic with
//!   saturating operations, the number system of all decoder messages.
//! - [`code`] — parity-check matrices: quasi-cyclic expansion, array-code
//!   construction, alist parsing, GF(2) rank.
//! - [`decoder`] — quantized min-sum belief propagation with flooding and
//!   layered schedules, offset/normalized correction and early termination.
//! - [`postprocess`] — quenching, extended heating, focused heating and the
//!   combined schedule, run on a failed decoder state to escape trapping
//!   sets.
//! - [`ets`] — classification of failure supports into `(a, b)` trapping
//!   sets with elementary/type analysis, plus a brute-force enumerator.
//! - [`sim`] — BPSK/AWGN Monte Carlo harness with reproducible per-frame
//!   noise, error-frame capture and replay.
//! - [`fixtures`] — small constructed codes embedding the three canonical
//!   trapping-set structures, with seeded trap scenarios.
//! - [`registry`] — built-in codes by name (`array-2209`, `wifi-1944-r56`,
//!   the fixtures) and loading from alist/base-matrix files.
//!
//! Every major capability has a runnable program under `examples/`; the
//! `errorfloor` binary exposes the same functionality as subcommands.

pub mod cli;
pub mod code;
pub mod decoder;
pub mod ets;
pub mod fixtures;
pub mod postprocess;
pub mod quant;
pub mod registry;
pub mod sim;

pub use code::{Codeword, ParityCheckMatrix};
pub use decoder::{Correction, Decoder, DecoderConfig, DecoderState, Schedule};
pub use ets::{TrappingSetReport, TsType};
pub use postprocess::{PostProcessConfig, PostProcessOutcome, PpMethod};
pub use quant::{QuantSpec, QValue};
