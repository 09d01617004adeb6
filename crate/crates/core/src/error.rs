//! One error type for the whole crate. Every failure a caller can
//! trigger through the public API has a dedicated variant; messages
//! are one line and self-contained so a CLI can print them verbatim.

use crate::expansions::MembershipVerdict;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("lambda = {lambda} outside required range ({lo}, {hi})")]
    LambdaRange { lambda: f64, lo: f64, hi: f64 },

    #[error("{name} = {value} outside required range (0, 1)")]
    UnitRange { name: &'static str, value: f64 },

    #[error("x = {x} outside the support [0, {support_hi}]")]
    OutsideSupport { x: f64, support_hi: f64 },

    #[error("the expansion of 1 terminates after {digits} digits; request the quasi-greedy form to disambiguate")]
    FiniteExpansionAmbiguous { digits: usize },

    #[error("sequence is not certified unique (verdict: {verdict:?})")]
    NotCertifiedUnique { verdict: MembershipVerdict },

    #[error("requires lambda1 < lambda2 strictly, got {lambda1} and {lambda2}")]
    LambdaOrder { lambda1: f64, lambda2: f64 },

    #[error("cannot parse sequence literal {literal:?}: {reason}")]
    ParseSequence {
        literal: String,
        reason: &'static str,
    },

    #[error("no prefix of the form 1(10)^k 11 within {scanned} reliable digits; lambda is at or above the admissible threshold")]
    PrefixNotFound { scanned: usize },

    #[error("bisection bracket failed while solving {what}")]
    NoBracket { what: &'static str },

    #[error("k = {k} inadmissible: {reason}")]
    BadK { k: u32, reason: &'static str },

    #[error("no admissible k >= 2 at lambda = {lambda}")]
    NoAdmissibleK { lambda: f64 },

    #[error("mesh radius r = {r} outside (0, {max})")]
    RadiusRange { r: f64, max: f64 },

    #[error("interval endpoints out of order: a = {a} > b = {b}")]
    IntervalOrder { a: f64, b: f64 },

    #[error("invalid weights: {0}")]
    InvalidWeights(&'static str),

    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),

    #[error("need at least two digit indices: n_min = {n_min}, n_max = {n_max}")]
    EmptyDigitRange { n_min: u32, n_max: u32 },

    #[error("curve invariant violated: {0}")]
    CurveInvariant(&'static str),
}
