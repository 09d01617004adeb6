//! Beta-expansions in base 1/lambda with digits {0, 1}.
//!
//! For lambda in (1/2, 1) the digit maps overlap: points of the
//! support I = [0, lambda/(1-lambda)] generally admit many expansions.
//! The greedy map takes digit 1 whenever allowed, the lazy map takes
//! digit 0 whenever allowed, and a point has a unique expansion exactly
//! when the two agree. Uniqueness of a candidate sequence is decided
//! lexicographically against the (quasi-)greedy expansion of 1: for
//! every n, the tail after a 0 digit must be strictly below it, and the
//! complemented tail after a 1 digit must be strictly below it.

mod constants;
mod word;

pub use constants::{solve_constant, thue_morse, NamedConstant, DEFAULT_TOL};
pub use word::{digit_freq_stream, BitWord, EPSequence, FreqEstimate, Rational};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// (sqrt(5) - 1) / 2, the golden contraction ratio.
pub const GOLDEN: f64 = 0.6180339887498949;

/// Residual below which the orbit of 1 is declared to have terminated
/// and the expansion of 1 to be finite.
pub const FINITE_TOL: f64 = 1e-12;

/// Default digit depth for lexicographic membership comparisons.
pub const DEFAULT_COMPARE_DEPTH: usize = 200;

/// Greedy digits of 1 drift like (1/lambda)^n ulp; beyond this many
/// digits a double-precision orbit can no longer be trusted, so word
/// constructions that scan the expansion of 1 stop here.
const RELIABLE_ONE_DIGITS: usize = 40;

/// Parameter pair (lambda, p) with the derived geometry of nu_{lambda,p}.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    lambda: f64,
    p: f64,
}

impl Params {
    /// Requires lambda in (0, 1) and p in (0, 1).
    pub fn new(lambda: f64, p: f64) -> Result<Self> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::LambdaRange {
                lambda,
                lo: 0.0,
                hi: 1.0,
            });
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::UnitRange {
                name: "p",
                value: p,
            });
        }
        Ok(Params { lambda, p })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Weight of digit 0.
    pub fn p(&self) -> f64 {
        self.p
    }

    /// Right endpoint of the support I = [0, lambda/(1-lambda)].
    pub fn support_hi(&self) -> f64 {
        self.lambda / (1.0 - self.lambda)
    }

    /// Overlap gap C = [lambda, lambda^2/(1-lambda)], nonempty exactly
    /// when lambda > 1/2.
    pub fn gap(&self) -> Option<(f64, f64)> {
        let hi = self.lambda * self.lambda / (1.0 - self.lambda);
        (self.lambda < hi).then_some((self.lambda, hi))
    }

    /// Digit map S_j(x) = lambda (x + j).
    pub fn apply(&self, j: u8, x: f64) -> f64 {
        self.lambda * (x + j as f64)
    }

    /// Inverse digit map S_j^{-1}(x) = x/lambda - j.
    pub fn apply_inv(&self, j: u8, x: f64) -> f64 {
        x / self.lambda - j as f64
    }
}

/// Expansion mode for the digit maps on [0, lambda/(1-lambda)].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Greedy,
    Lazy,
}

/// Outcome of the uniqueness check at a finite comparison depth.
///
/// `Out` carries the witness: `shift` is the 1-based digit position n
/// whose tail condition fails, `position` the 1-based offset at which
/// the lexicographic comparison decided. `Undecided` means at least
/// one comparison was still tied at `depth` digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum MembershipVerdict {
    In,
    Out { shift: usize, position: usize },
    Undecided { depth: usize },
}

impl MembershipVerdict {
    pub fn is_in(&self) -> bool {
        matches!(self, MembershipVerdict::In)
    }
}

fn require_overlap_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.5 && lambda < 1.0 {
        Ok(())
    } else {
        Err(Error::LambdaRange {
            lambda,
            lo: 0.5,
            hi: 1.0,
        })
    }
}

/// Value of the sequence: pi(i) = sum_{n>=1} i_n lambda^n, in closed
/// form (prefix Horner sum plus geometric period tail).
pub fn pi(seq: &EPSequence, lambda: f64) -> f64 {
    assert!(lambda > 0.0 && lambda < 1.0, "lambda must lie in (0,1)");
    let horner = |bits: &[u8]| {
        let mut s = 0.0f64;
        for &b in bits.iter().rev() {
            s = lambda * (b as f64 + s);
        }
        s
    };
    let m = seq.pre().len() as i32;
    let k = seq.per().len() as i32;
    horner(seq.pre().bits()) + lambda.powi(m) * horner(seq.per().bits()) / (1.0 - lambda.powi(k))
}

/// First n greedy or lazy digits of x.
///
/// Greedy takes digit 0 exactly on [0, lambda); lazy takes digit 0
/// exactly on [0, lambda^2/(1-lambda)]. Both then apply
/// x -> x/lambda - digit and stay inside the support.
pub fn beta_digits(x: f64, lambda: f64, mode: Mode, n: usize) -> Result<BitWord> {
    require_overlap_lambda(lambda)?;
    let support_hi = lambda / (1.0 - lambda);
    if !(0.0..=support_hi).contains(&x) {
        return Err(Error::OutsideSupport { x, support_hi });
    }
    let zero_hi = match mode {
        Mode::Greedy => lambda,
        Mode::Lazy => lambda * lambda / (1.0 - lambda),
    };
    let mut digits = Vec::with_capacity(n);
    let mut state = x;
    for _ in 0..n {
        // Greedy: 0 on [0, lambda); lazy: 0 on [0, lambda^2/(1-lambda)].
        let d = match mode {
            Mode::Greedy => u8::from(state >= zero_hi),
            Mode::Lazy => u8::from(state > zero_hi),
        };
        digits.push(d);
        state = state / lambda - d as f64;
    }
    BitWord::new(digits)
}

/// First n digits of the greedy expansion of 1.
///
/// If the orbit of 1 terminates (residual below [`FINITE_TOL`]) the
/// greedy expansion `d_1 ... d_m` is finite; with `quasi` the
/// quasi-greedy substitute `(d_1 ... d_{m-1} (d_m - 1))^inf` is
/// returned instead, and without it the call reports the ambiguity.
pub fn greedy_one(lambda: f64, n: usize, quasi: bool) -> Result<BitWord> {
    require_overlap_lambda(lambda)?;
    let mut digits: Vec<u8> = Vec::with_capacity(n);
    let mut state = 1.0f64;
    for i in 0..n {
        let next = state / lambda;
        // The threshold is softened by FINITE_TOL so that a finite
        // expansion (orbit hitting 1 exactly) survives rounding drift.
        let d = u8::from(next >= 1.0 - FINITE_TOL);
        digits.push(d);
        state = next - d as f64;
        if d == 1 && state.abs() < FINITE_TOL && i >= 1 {
            // Finite expansion d_1..d_m with d_m = 1.
            if !quasi {
                return Err(Error::FiniteExpansionAmbiguous { digits: i + 1 });
            }
            let mut period = digits.clone();
            *period.last_mut().unwrap() -= 1;
            let rep: Vec<u8> = period.iter().copied().cycle().take(n).collect();
            return BitWord::new(rep);
        }
    }
    BitWord::new(digits)
}

/// Decides whether `seq` is the unique expansion of its value at this
/// lambda, comparing every tail (complemented after a 1 digit) against
/// the (quasi-)greedy expansion of 1 to at most `depth` digits.
///
/// Only the first `preperiod + period` shifts are inspected; further
/// shifts repeat earlier ones. A comparison that stays tied through
/// `depth` digits yields `Undecided` rather than a guess.
pub fn membership_u(seq: &EPSequence, lambda: f64, depth: usize) -> Result<MembershipVerdict> {
    require_overlap_lambda(lambda)?;
    assert!(depth >= 1, "depth must be positive");
    let d = greedy_one(lambda, depth, true)?;
    let d = d.bits();
    let mut tied = false;
    for n in 1..=seq.distinct_shifts() {
        let flip = seq.digit(n); // complement the tail after a 1 digit
        let mut decided = false;
        for (i, &digit) in d.iter().enumerate().take(depth) {
            let a = seq.digit(n + 1 + i) ^ flip;
            match a.cmp(&digit) {
                std::cmp::Ordering::Less => {
                    decided = true;
                    break;
                }
                std::cmp::Ordering::Greater => {
                    return Ok(MembershipVerdict::Out {
                        shift: n,
                        position: i + 1,
                    });
                }
                std::cmp::Ordering::Equal => {}
            }
        }
        tied |= !decided;
    }
    Ok(if tied {
        MembershipVerdict::Undecided { depth }
    } else {
        MembershipVerdict::In
    })
}

/// Distance from the shift orbit of a certified unique sequence to the
/// overlap gap C: delta = min_n dist(pi(sigma^n i), C) > 0.
///
/// Certification uses `depth` lexicographic digits; a sequence that is
/// not certified `In` is rejected.
pub fn gap_distance_with_depth(seq: &EPSequence, lambda: f64, depth: usize) -> Result<f64> {
    let verdict = membership_u(seq, lambda, depth)?;
    if !verdict.is_in() {
        return Err(Error::NotCertifiedUnique { verdict });
    }
    let params = Params::new(lambda, 0.5).expect("lambda validated above");
    let (c_lo, c_hi) = params.gap().expect("gap nonempty for lambda > 1/2");
    let mut delta = f64::INFINITY;
    for n in 0..seq.distinct_shifts() {
        let x = pi(&seq.shift(n), lambda);
        let dist = (c_lo - x).max(x - c_hi).max(0.0);
        delta = delta.min(dist);
    }
    Ok(delta)
}

/// [`gap_distance_with_depth`] at the default comparison depth.
pub fn gap_distance(seq: &EPSequence, lambda: f64) -> Result<f64> {
    gap_distance_with_depth(seq, lambda, DEFAULT_COMPARE_DEPTH)
}

/// Window gap constant for contraction ratios in [lambda1, lambda2].
///
/// A sequence certified unique at lambda2 keeps distance at least
/// (lambda2 - lambda)(lambda + lambda2 - 1) from the overlap gap at
/// every lambda <= lambda2; this constant evaluates that transfer at
/// the left edge lambda1 and caps it by the structural bound there.
/// The pointwise distance decays to zero as lambda approaches lambda2,
/// so the constant certifies the window only away from its right edge.
/// Requires 1/2 < lambda1 < lambda2 < golden.
pub fn guaranteed_gap(lambda1: f64, lambda2: f64) -> Result<f64> {
    if !(lambda1 > 0.5 && lambda2 < GOLDEN) {
        return Err(Error::LambdaRange {
            lambda: if lambda1 <= 0.5 { lambda1 } else { lambda2 },
            lo: 0.5,
            hi: GOLDEN,
        });
    }
    if lambda1.partial_cmp(&lambda2) != Some(std::cmp::Ordering::Less) {
        return Err(Error::LambdaOrder { lambda1, lambda2 });
    }
    let a = (lambda2 - lambda1) * (lambda1 + lambda2 - 1.0);
    let b = lambda1 * (1.0 - lambda1 - lambda1 * lambda1) / (1.0 - lambda1);
    Ok(a.min(b))
}

/// Word pair realising a window of digit frequencies, built from the
/// prefix 1(10)^k 11 of the greedy expansion of 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreqWords {
    /// Smallest k with greedy-expansion prefix 1(10)^k 11.
    pub k: u32,
    /// 1(10)^{k+1}; frequency of 0 equals (k+1)/(2k+3).
    pub u0: BitWord,
    /// 0(01)^{k+1} (the complement of u0); frequency (k+2)/(2k+3).
    pub u1: BitWord,
    /// Closed frequency window [(k+1)/(2k+3), (k+2)/(2k+3)].
    pub freq_interval: (Rational, Rational),
}

/// Computes [`FreqWords`] for 1/2 < lambda < BetaOne.
///
/// The pure powers u0^inf and u1^inf are unique expansions at this
/// lambda and realise the endpoints of `freq_interval`. Mixed
/// concatenations of the two blocks are unique expansions only in the
/// lower part of each k-window: a u1->u0 junction exposes the tail
/// 11 u0..., which the expansion of 1 must dominate, and near the top
/// of the window it does not (e.g. at lambda = 0.54 the shifted value
/// of (u0 u1)^inf lands inside the overlap gap, so it has two
/// expansions). Interior frequencies at such lambda are still realised
/// by the run-limited words of [`multinacci_words`].
pub fn freq_words(lambda: f64) -> Result<FreqWords> {
    require_overlap_lambda(lambda)?;
    let beta_one = solve_constant(NamedConstant::BetaOne, DEFAULT_TOL)?;
    if lambda >= beta_one {
        return Err(Error::LambdaRange {
            lambda,
            lo: 0.5,
            hi: beta_one,
        });
    }
    let d = greedy_one(lambda, RELIABLE_ONE_DIGITS, true)?;
    let d = d.bits();
    // Find the first deviation of d from 1(10)^inf = 1101010...; a 1
    // where the pattern has 0 (position 2k+3, 1-based) gives k. A 0
    // where the pattern has 1 would mean lambda >= BetaOne.
    for (idx, &bit) in d.iter().enumerate().skip(1) {
        let j = idx + 1; // 1-based position
        let pattern = u8::from(j % 2 == 0);
        if bit == pattern {
            continue;
        }
        if bit < pattern {
            return Err(Error::LambdaRange {
                lambda,
                lo: 0.5,
                hi: beta_one,
            });
        }
        let k = ((j - 3) / 2) as u32;
        let reps = (k + 1) as usize;
        let mut w = Vec::with_capacity(2 * reps + 1);
        w.push(1u8);
        for _ in 0..reps {
            w.extend_from_slice(&[1, 0]);
        }
        let u0 = BitWord::new(w)?;
        let u1 = u0.flip();
        let len = (2 * k + 3) as u64;
        return Ok(FreqWords {
            k,
            u0,
            u1,
            freq_interval: (
                Rational::new((k + 1) as u64, len),
                Rational::new((k + 2) as u64, len),
            ),
        });
    }
    Err(Error::PrefixNotFound {
        scanned: RELIABLE_ONE_DIGITS,
    })
}

/// Largest k >= 2 with lambda < Multinacci(k), via the equivalent
/// polynomial test 2 lambda - 1 < lambda^{k+1}; `None` when already
/// lambda >= golden = Multinacci(2).
pub fn multinacci_k_max(lambda: f64) -> Option<u32> {
    if !(lambda > 0.5 && lambda < 1.0) {
        return None;
    }
    let excess = 2.0 * lambda - 1.0;
    let mut k = 2u32;
    if excess >= lambda.powi(3) {
        return None;
    }
    while excess < lambda.powi(k as i32 + 2) {
        k += 1;
    }
    Some(k)
}

/// Word pair avoiding k-runs, with the dimension bound they witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultinacciWords {
    /// Largest k with lambda < Multinacci(k).
    pub k: u32,
    /// 0^{k-1} 1; frequency of 0 equals (k-1)/k.
    pub v0: BitWord,
    /// 0 1^{k-1}; frequency of 0 equals 1/k.
    pub v1: BitWord,
    /// Open frequency window (1/k, (k-1)/k).
    pub freq_interval: (Rational, Rational),
    /// (k-2)/k * log 2 / |log lambda|; zero when k = 2.
    pub dim_bound: f64,
}

/// Computes [`MultinacciWords`] for 1/2 < lambda < golden. Sequences
/// built from v0/v1 blocks contain no 0^k or 1^k run, hence are unique
/// expansions at this lambda.
pub fn multinacci_words(lambda: f64) -> Result<MultinacciWords> {
    require_overlap_lambda(lambda)?;
    let k = multinacci_k_max(lambda).ok_or(Error::LambdaRange {
        lambda,
        lo: 0.5,
        hi: GOLDEN,
    })?;
    let mut v0 = vec![0u8; (k - 1) as usize];
    v0.push(1);
    let mut v1 = vec![0u8];
    v1.extend(std::iter::repeat_n(1u8, (k - 1) as usize));
    let dim_bound = (k as f64 - 2.0) / k as f64 * 2f64.ln() / lambda.ln().abs();
    Ok(MultinacciWords {
        k,
        v0: BitWord::new(v0)?,
        v1: BitWord::new(v1)?,
        freq_interval: (
            Rational::new(1, k as u64),
            Rational::new((k - 1) as u64, k as u64),
        ),
        dim_bound: dim_bound.max(0.0),
    })
}

/// Smallest certified digit-0 frequency available at this lambda: the
/// minimum of the left endpoints from [`freq_words`] and
/// [`multinacci_words`]. Local dimensions are realised for every
/// frequency from here up to the complementary right endpoints.
pub fn r_lambda(lambda: f64) -> Result<Rational> {
    let fw = freq_words(lambda)?;
    let mw = multinacci_words(lambda)?;
    let a = fw.freq_interval.0;
    let b = mw.freq_interval.0;
    Ok(if a.value() <= b.value() { a } else { b })
}
