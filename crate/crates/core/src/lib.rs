//! Core library for biased Bernoulli convolutions `nu = nu_{lambda,p}`:
//! the distribution of `sum_{n>=1} i_n lambda^n` with i.i.d. digits
//! `i_n in {0,1}`, `P(i_n = 0) = p`.
//!
//! The crate is organised around three views of the same object:
//!
//! * [`expansions`]: symbolic side. Beta-expansions in base `1/lambda`,
//!   greedy/lazy digit maps, certification that a digit sequence is the
//!   unique expansion of its value, and word constructions that realise
//!   prescribed digit frequencies.
//! * [`measure`]: metric side. Rigorous `[lo, hi]` enclosures of
//!   `nu(J)` from the self-similarity relation, ball measures, mesh
//!   profiles, and local dimension estimates along certified sequences.
//! * [`spectrum`]: multifractal side. Exact Legendre spectra for
//!   self-similar measures with strong separation, lower/upper bounds
//!   for the overlapping regime `lambda > 1/2`, coarse (box-counting)
//!   spectra from mesh profiles, Holder exponents, and typical local
//!   dimensions.
//!
//! All real output is plain `f64`; enclosures are honest up to the
//! stated recursion depth and ordinary double rounding.

pub mod error;
pub mod expansions;
pub mod measure;
pub mod spectrum;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Compensated (Neumaier) summation; used wherever many cell values
/// are accumulated so that totals do not drift with the iteration order.
pub fn kahan_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::kahan_sum;

    #[test]
    fn kahan_sum_recovers_cancellation() {
        let vals = [1e16, 1.0, -1e16, 1.0];
        assert_eq!(kahan_sum(vals.iter().copied()), 2.0);
    }

    #[test]
    fn kahan_sum_empty_is_zero() {
        assert_eq!(kahan_sum(std::iter::empty()), 0.0);
    }
}
