//! Distinguished contraction ratios, each defined as the root of an
//! explicit series. All solving is bisection on the base side
//! beta = 1/lambda over the bracket [1 + 1e-9, 2]; the returned value
//! is lambda = 1/beta in (0, 1).

use crate::{Error, Result};

/// Constants named by the series they solve.
///
/// * `Golden`: 1 = x + x^2, lambda ~ 0.618034.
/// * `Multinacci(k)`: 1 = x + x^2 + ... + x^k (k >= 2); decreasing to
///   1/2, with `Multinacci(2) = Golden`.
/// * `KomornikLoreti`: 1 = sum_{n>=1} t_n x^n with t the Thue-Morse
///   digit sequence t_1 t_2 ... = 1101001100101101...; lambda ~ 0.559525.
///   Below this value unique expansions become abundant.
/// * `BetaOne`: 1 = x + sum_{n>=1} x^{2n}, lambda ~ 0.554958; the
///   threshold below which the expansion of 1 dominates 1(10)^inf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedConstant {
    Golden,
    Multinacci(u32),
    KomornikLoreti,
    BetaOne,
}

/// Default solver tolerance on lambda.
pub const DEFAULT_TOL: f64 = 1e-12;

/// n-th Thue-Morse digit with t_0 = 0 (parity of ones in binary n).
pub fn thue_morse(n: u64) -> u8 {
    (n.count_ones() & 1) as u8
}

/// Solves the defining series of `c` to within `tol` and returns
/// lambda in (0, 1).
pub fn solve_constant(c: NamedConstant, tol: f64) -> Result<f64> {
    assert!(tol > 0.0 && tol.is_finite(), "tolerance must be positive");
    if let NamedConstant::Multinacci(k) = c {
        if k < 2 {
            return Err(Error::BadK {
                k,
                reason: "multinacci index must be at least 2",
            });
        }
    }
    // Each series sum f(beta) is strictly decreasing on (1, 2] with a
    // sign change inside the bracket, checked below.
    let f = |beta: f64| -> f64 {
        match c {
            NamedConstant::Golden => series_geometric(beta, 2),
            NamedConstant::Multinacci(k) => series_geometric(beta, k),
            NamedConstant::BetaOne => beta.recip() + (beta * beta - 1.0).recip() - 1.0,
            NamedConstant::KomornikLoreti => series_thue_morse(beta),
        }
    };
    let mut lo = 1.0 + 1e-9;
    let mut hi = 2.0;
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo > 0.0 && fhi < 0.0) {
        return Err(Error::NoBracket {
            what: "named constant series",
        });
    }
    // Bisect until the bracket on the lambda side is below tol.
    while hi - lo > tol * lo * hi {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi)).recip())
}

/// 1/beta + ... + 1/beta^k - 1.
fn series_geometric(beta: f64, k: u32) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for _ in 0..k {
        term /= beta;
        sum += term;
    }
    sum - 1.0
}

/// sum_{n>=1} t_n beta^{-n} - 1 with Thue-Morse digits t_n = tm(n),
/// truncated when the geometric tail cannot change the sign. Near
/// beta = 1 the partial sums cross 1 early, so termination is fast on
/// the whole bracket.
fn series_thue_morse(beta: f64) -> f64 {
    let mut sum = -1.0f64;
    let mut pow = 1.0f64;
    for n in 1..20_000u64 {
        pow /= beta;
        if thue_morse(n) == 1 {
            sum += pow;
        }
        if sum > 0.0 {
            return sum;
        }
        let tail = pow / (beta - 1.0);
        if sum + tail < 0.0 {
            return sum;
        }
        if tail < 1e-17 {
            break;
        }
    }
    sum
}
