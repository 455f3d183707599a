//! Two's-complement fixed-point arithmetic for decoder messages.
//!
//! Messages use the `Qp.q` format: `p` integer bits and `q` fraction bits,
//! covering `[-2^(p-1), 2^(p-1) - 2^-q]` in steps of `2^-q`. Every operation
//! saturates to the representable range. Rounding is nearest with ties away
//! from zero throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuantError {
    #[error("invalid quantization spec Q{p}.{q}: {reason}")]
    InvalidSpec { p: u8, q: u8, reason: &'static str },
    #[error("quantization spec mismatch: {left} vs {right}")]
    SpecMismatch { left: QuantSpec, right: QuantSpec },
    #[error("cannot parse quantization spec {0:?} (expected form \"Qp.q\", e.g. \"Q4.0\")")]
    Parse(String),
    #[error("{0} is not a dyadic rational k/2^s")]
    NotDyadic(f64),
}

/// Saturation behavior at the negative end of the range.
///
/// Two's complement can represent `-2^(p-1)` but not `+2^(p-1)`; hardware
/// emulations sometimes clip symmetrically instead so that negation is exact
/// everywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum ClipMode {
    /// Full asymmetric range `[-2^(p-1), 2^(p-1) - 2^-q]`.
    #[default]
    TwosComplement,
    /// Symmetric range `[-(2^(p-1) - 2^-q), 2^(p-1) - 2^-q]`.
    Symmetric,
}

/// A `Qp.q` fixed-point format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantSpec {
    p: u8,
    q: u8,
    clip: ClipMode,
}

impl QuantSpec {
    /// Create a `Qp.q` spec with the full two's-complement range.
    pub fn new(p: u8, q: u8) -> Result<Self, QuantError> {
        Self::with_clip(p, q, ClipMode::TwosComplement)
    }

    /// Create a `Qp.q` spec that clips symmetrically at `+-(2^(p-1) - 2^-q)`.
    pub fn symmetric(p: u8, q: u8) -> Result<Self, QuantError> {
        Self::with_clip(p, q, ClipMode::Symmetric)
    }

    pub fn with_clip(p: u8, q: u8, clip: ClipMode) -> Result<Self, QuantError> {
        if p < 1 {
            return Err(QuantError::InvalidSpec {
                p,
                q,
                reason: "need at least one integer bit",
            });
        }
        if p as u32 + q as u32 > 24 {
            return Err(QuantError::InvalidSpec {
                p,
                q,
                reason: "total width limited to 24 bits",
            });
        }
        Ok(QuantSpec { p, q, clip })
    }

    pub fn integer_bits(&self) -> u8 {
        self.p
    }

    pub fn fraction_bits(&self) -> u8 {
        self.q
    }

    pub fn clip_mode(&self) -> ClipMode {
        self.clip
    }

    /// Smallest representable raw step count.
    pub fn raw_min(&self) -> i32 {
        let full = -(1i32 << (self.p + self.q - 1));
        match self.clip {
            ClipMode::TwosComplement => full,
            ClipMode::Symmetric => -self.raw_max(),
        }
    }

    /// Largest representable raw step count.
    pub fn raw_max(&self) -> i32 {
        (1i32 << (self.p + self.q - 1)) - 1
    }

    /// Value of one raw step, `2^-q`.
    pub fn step(&self) -> f64 {
        (-(self.q as f64)).exp2()
    }

    pub fn min_value(&self) -> f64 {
        self.raw_min() as f64 * self.step()
    }

    pub fn max_value(&self) -> f64 {
        self.raw_max() as f64 * self.step()
    }

    /// Clamp a wide intermediate result into the representable raw range.
    #[inline]
    pub fn saturate(&self, wide: i64) -> i32 {
        wide.clamp(self.raw_min() as i64, self.raw_max() as i64) as i32
    }

    /// Round a real value to the nearest step (ties away from zero), then
    /// saturate. `x` must be finite.
    #[inline]
    pub fn quantize_raw(&self, x: f64) -> i32 {
        debug_assert!(x.is_finite());
        let scaled = (x * (self.q as f64).exp2()).round();
        // The cast saturates at i64 bounds, the clamp brings it into range.
        self.saturate(scaled as i64)
    }

    pub fn quantize(&self, x: f64) -> QValue {
        QValue {
            raw: self.quantize_raw(x),
            spec: *self,
        }
    }

    /// Wrap a raw step count as a value, saturating if out of range.
    pub fn value(&self, raw: i32) -> QValue {
        QValue {
            raw: self.saturate(raw as i64),
            spec: *self,
        }
    }

    pub fn raw_to_f64(&self, raw: i32) -> f64 {
        raw as f64 * self.step()
    }

    #[inline]
    pub fn sat_add_raw(&self, a: i32, b: i32) -> i32 {
        self.saturate(a as i64 + b as i64)
    }

    #[inline]
    pub fn sat_sub_raw(&self, a: i32, b: i32) -> i32 {
        self.saturate(a as i64 - b as i64)
    }

    /// Scale a raw count by a dyadic factor, rounding ties away from zero.
    #[inline]
    pub fn sat_scale_raw(&self, a: i32, factor: Dyadic) -> i32 {
        self.saturate(factor.scale_round_away(a as i64))
    }
}

impl fmt::Display for QuantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{}.{}", self.p, self.q)
    }
}

impl FromStr for QuantSpec {
    type Err = QuantError;

    /// Parse the `"Qp.q"` syntax, e.g. `"Q4.0"` or `"Q5.0"`.
    fn from_str(s: &str) -> Result<Self, QuantError> {
        let err = || QuantError::Parse(s.to_string());
        let rest = s
            .strip_prefix('Q')
            .or_else(|| s.strip_prefix('q'))
            .ok_or_else(err)?;
        let (p, q) = rest.split_once('.').ok_or_else(err)?;
        let p: u8 = p.parse().map_err(|_| err())?;
        let q: u8 = q.parse().map_err(|_| err())?;
        QuantSpec::new(p, q)
    }
}

/// A fixed-point value: a raw step count plus the spec it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QValue {
    raw: i32,
    spec: QuantSpec,
}

impl PartialOrd for QValue {
    /// Values compare only within the same spec.
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        (self.spec == other.spec).then(|| self.raw.cmp(&other.raw))
    }
}

impl QValue {
    pub fn raw(&self) -> i32 {
        self.raw
    }

    pub fn spec(&self) -> QuantSpec {
        self.spec
    }

    pub fn to_f64(&self) -> f64 {
        self.spec.raw_to_f64(self.raw)
    }

    fn check_spec(&self, other: &QValue) -> Result<(), QuantError> {
        if self.spec != other.spec {
            return Err(QuantError::SpecMismatch {
                left: self.spec,
                right: other.spec,
            });
        }
        Ok(())
    }

    pub fn sat_add(&self, other: &QValue) -> Result<QValue, QuantError> {
        self.check_spec(other)?;
        Ok(QValue {
            raw: self.spec.sat_add_raw(self.raw, other.raw),
            spec: self.spec,
        })
    }

    pub fn sat_sub(&self, other: &QValue) -> Result<QValue, QuantError> {
        self.check_spec(other)?;
        Ok(QValue {
            raw: self.spec.sat_sub_raw(self.raw, other.raw),
            spec: self.spec,
        })
    }

    pub fn sat_scale(&self, factor: Dyadic) -> QValue {
        QValue {
            raw: self.spec.sat_scale_raw(self.raw, factor),
            spec: self.spec,
        }
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

/// A non-negative dyadic rational `k / 2^s`, the only scale factors that
/// fixed-point hardware multiplies by exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dyadic {
    numerator: u32,
    log2_denominator: u32,
}

impl Dyadic {
    pub fn new(numerator: u32, log2_denominator: u32) -> Self {
        Dyadic {
            numerator,
            log2_denominator,
        }
    }

    /// Recover a dyadic factor from a float, if it is one exactly.
    pub fn from_f64(x: f64) -> Result<Self, QuantError> {
        if !(x.is_finite() && x >= 0.0) {
            return Err(QuantError::NotDyadic(x));
        }
        for s in 0..=20u32 {
            let scaled = x * (s as f64).exp2();
            if scaled.fract() == 0.0 && scaled <= u32::MAX as f64 {
                return Ok(Dyadic::new(scaled as u32, s));
            }
        }
        Err(QuantError::NotDyadic(x))
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 / (self.log2_denominator as f64).exp2()
    }

    /// Multiply exactly, then round ties away from zero.
    #[inline]
    pub fn scale_round_away(&self, a: i64) -> i64 {
        let prod = a * self.numerator as i64;
        let s = self.log2_denominator;
        if s == 0 {
            return prod;
        }
        let half = 1i64 << (s - 1);
        let mag = (prod.abs() + half) >> s;
        if prod < 0 {
            -mag
        } else {
            mag
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}
