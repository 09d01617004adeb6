//! Symbolic ball brackets and local-dimension regression at
//! certified unique-expansion points.
//!
//! At a point x = pi(i) whose orbit keeps distance delta from the
//! overlap gap, the measure of the ball B(x, delta lambda^n) is
//! controlled by the weight of the first n digits alone:
//!
//!   c_delta p^{l0} (1-p)^{l1} <= nu(B) <= p^{l0} (1-p)^{l1},
//!
//! where c_delta = min(p, 1-p)^N and N is the number of digits needed
//! to shrink the support below delta. Taking logs, the bracket
//! witnesses the local dimension limit, and a least-squares fit of the
//! log-midpoint against log radius estimates it numerically.

use serde::Serialize;

use crate::expansions::{
    gap_distance_with_depth, EPSequence, Params, Rational, DEFAULT_COMPARE_DEPTH,
};
use crate::{Error, Result};

/// Symbolic bracket for nu(B(x, delta lambda^n)).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CylinderBallBounds {
    /// Certified orbit distance to the overlap gap.
    pub delta: f64,
    pub lo: f64,
    pub hi: f64,
    /// min(p, 1-p)^n_big, the cost of pinning a point to delta scale.
    pub c_delta: f64,
    /// Smallest N with lambda^N < delta (1 - lambda).
    pub n_big: u32,
    /// Zeros among the first n digits.
    pub l0: u32,
    /// Ones among the first n digits.
    pub l1: u32,
}

fn digit_counts(seq: &EPSequence, n: usize) -> (u32, u32) {
    let mut l0 = 0u32;
    for k in 1..=n {
        if seq.digit(k) == 0 {
            l0 += 1;
        }
    }
    (l0, n as u32 - l0)
}

/// Smallest integer N with N log(1/lambda) > log(1/(delta (1-lambda))).
fn pinning_digits(lambda: f64, delta: f64) -> u32 {
    let need = (1.0 / (delta * (1.0 - lambda))).ln();
    let per = (1.0 / lambda).ln();
    let n = (need / per).floor() + 1.0;
    n.max(0.0) as u32
}

/// Computes the symbolic ball bracket at radius delta lambda^n. The
/// sequence must certify as a unique expansion (checked to the default
/// comparison depth).
pub fn cylinder_ball_bounds(
    params: &Params,
    seq: &EPSequence,
    n: usize,
) -> Result<CylinderBallBounds> {
    let delta = gap_distance_with_depth(seq, params.lambda(), DEFAULT_COMPARE_DEPTH)?;
    let (l0, l1) = digit_counts(seq, n);
    let p = params.p();
    let hi = p.powi(l0 as i32) * (1.0 - p).powi(l1 as i32);
    let n_big = pinning_digits(params.lambda(), delta);
    let c_delta = p.min(1.0 - p).powi(n_big as i32);
    Ok(CylinderBallBounds {
        delta,
        lo: c_delta * hi,
        hi,
        c_delta,
        n_big,
        l0,
        l1,
    })
}

/// Exact local dimension predicted from the digit frequency r of 0:
/// (r log p + (1-r) log(1-p)) / log lambda.
pub fn predicted_local_dim(params: &Params, freq0: Rational) -> f64 {
    let r = freq0.value();
    let p = params.p();
    (r * p.ln() + (1.0 - r) * (1.0 - p).ln()) / params.lambda().ln()
}

/// One regression sample at radius delta lambda^n.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegressionPoint {
    pub log_r: f64,
    pub log_lo: f64,
    pub log_hi: f64,
}

/// Local-dimension regression result.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimEstimate {
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square deviation of the fitted line.
    pub residual: f64,
    /// Exact limit from the digit frequency, for comparison.
    pub predicted: f64,
    pub points: Vec<RegressionPoint>,
}

/// Least-squares slope of the log bracket midpoint against
/// log(delta lambda^n) for n in [n_min, n_max].
pub fn local_dim_estimate(
    params: &Params,
    seq: &EPSequence,
    n_min: u32,
    n_max: u32,
) -> Result<DimEstimate> {
    if n_min >= n_max {
        return Err(Error::EmptyDigitRange { n_min, n_max });
    }
    let lambda = params.lambda();
    let p = params.p();
    let delta = gap_distance_with_depth(seq, lambda, DEFAULT_COMPARE_DEPTH)?;
    let n_big = pinning_digits(lambda, delta);
    // log c_delta, kept in log space so extreme N cannot underflow
    let log_c = n_big as f64 * p.min(1.0 - p).ln();

    let mut points = Vec::with_capacity((n_max - n_min + 1) as usize);
    let mut l0 = 0u32;
    for k in 1..=n_max as usize {
        if seq.digit(k) == 0 {
            l0 += 1;
        }
        let n = k as u32;
        if n < n_min {
            continue;
        }
        let l1 = n - l0;
        let log_hi = l0 as f64 * p.ln() + l1 as f64 * (1.0 - p).ln();
        let log_lo = (log_hi + log_c).max(1e-300f64.ln());
        points.push(RegressionPoint {
            log_r: delta.ln() + n as f64 * lambda.ln(),
            log_lo,
            log_hi,
        });
    }

    let m = points.len() as f64;
    let xs = points.iter().map(|pt| pt.log_r);
    let ys = points.iter().map(|pt| 0.5 * (pt.log_lo + pt.log_hi));
    let x_mean = xs.clone().sum::<f64>() / m;
    let y_mean = ys.clone().sum::<f64>() / m;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.clone().zip(ys.clone()) {
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (y - y_mean);
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let residual = (xs
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum::<f64>()
        / m)
        .sqrt();

    Ok(DimEstimate {
        slope,
        intercept,
        residual,
        predicted: predicted_local_dim(params, seq.digit_freq()),
        points,
    })
}
