//! Typical local dimensions: what `d(nu_{lambda,p}, x)` looks like at
//! a point x drawn with digit bias q.
//!
//! The cross entropy `H = -q ln p - (1-q) ln(1-p)` drives everything:
//! away from the exactly solvable `lambda = 1/2` the prediction
//! `min(H / |ln lambda|, 1)` holds for almost every lambda in the
//! transversality window, so a single lambda can only be probed, not
//! certified. [`typical_dim`] reports the closed-form quantities;
//! [`typical_dim_mc`] draws sample points and regresses actual ball
//! masses, as a labelled diagnostic.

use crate::error::Error;
use crate::expansions::Params;
use crate::measure::{nu_ball, sample_point};
use crate::Result;
use serde::Serialize;

/// Which side of the dichotomy the parameters sit on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `lambda < p^q (1-p)^{1-q}`: the raw prediction exceeds 1, the
    /// measure component is singular along these points.
    Singularity,
    /// Prediction at most 1.
    DimensionOne,
}

/// Closed-form typical-dimension report for `(lambda, p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TypicalDim {
    /// Cross entropy `-q ln p - (1-q) ln(1-p)` of bias q against p.
    #[serde(rename = "H")]
    pub h: f64,
    /// `min(H / |ln lambda|, 1)`.
    pub predicted: f64,
    /// Attainable-dimension interval `[ln(1-p)/ln lambda, 1]`.
    pub j_interval: [f64; 2],
    pub regime: Regime,
    /// The local dimension `alpha = H / |ln lambda|` the bias q points
    /// at (uncapped).
    pub alpha: f64,
    /// Spectrum lower bound `h(q) / |ln lambda|` at that alpha, with
    /// `h(q)` the entropy of q; meaningful where it is at most 1.
    pub f_lower_bound: f64,
}

/// Computes [`TypicalDim`]; all three parameters must lie in (0, 1).
pub fn typical_dim(lambda: f64, p: f64, q: f64) -> Result<TypicalDim> {
    for (name, v) in [("lambda", lambda), ("p", p), ("q", q)] {
        if !(v.is_finite() && v > 0.0 && v < 1.0) {
            return Err(Error::UnitRange { name, value: v });
        }
    }
    let abs_ln_lambda = -lambda.ln();
    let h = -q * p.ln() - (1.0 - q) * (1.0 - p).ln();
    let alpha = h / abs_ln_lambda;
    let entropy_q = -q * q.ln() - (1.0 - q) * (1.0 - q).ln();
    Ok(TypicalDim {
        h,
        predicted: alpha.min(1.0),
        j_interval: [(1.0 - p).ln() / lambda.ln(), 1.0],
        regime: if alpha > 1.0 {
            Regime::Singularity
        } else {
            Regime::DimensionOne
        },
        alpha,
        f_lower_bound: entropy_q / abs_ln_lambda,
    })
}

/// Monte-Carlo slope summary. `diagnostic` is always true: the
/// underlying statements hold for almost every lambda, so a single
/// parameter value can deviate without being wrong.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McReport {
    pub mean_slope: f64,
    /// Sample standard deviation across the per-point slopes.
    pub sd: f64,
    pub samples: u32,
    pub diagnostic: bool,
}

/// Draws `samples` points with digit bias q (`n_digits` digits each),
/// regresses `ln nu(B(x, r))` against `ln r` over the given radii
/// (strictly decreasing, at least two), and reports the mean and
/// spread of the per-point slopes. Ball masses come from certified
/// enclosures at the given depth; the regression uses the geometric
/// midpoint of each bracket.
pub fn typical_dim_mc<R: rand::Rng + ?Sized>(
    params: &Params,
    q: f64,
    samples: u32,
    n_digits: usize,
    radii: &[f64],
    depth: u32,
    rng: &mut R,
) -> Result<McReport> {
    if samples == 0 {
        return Err(Error::InvalidGrid("need at least one sample"));
    }
    if radii.len() < 2
        || radii.iter().any(|r| !(r.is_finite() && *r > 0.0))
        || radii.windows(2).any(|w| w[1] >= w[0])
    {
        return Err(Error::InvalidGrid(
            "radius list must have at least two entries, positive and strictly decreasing",
        ));
    }
    let log_r: Vec<f64> = radii.iter().map(|r| r.ln()).collect();
    let mean_x = log_r.iter().sum::<f64>() / log_r.len() as f64;
    let var_x: f64 = log_r.iter().map(|x| (x - mean_x).powi(2)).sum();

    let mut slopes = Vec::with_capacity(samples as usize);
    for _ in 0..samples {
        let x = sample_point(params.lambda(), q, n_digits, rng)?;
        let mut cov = 0.0;
        for (&r, &lr) in radii.iter().zip(&log_r) {
            let e = nu_ball(params, x, r, depth);
            let y = 0.5 * (e.lo.max(1e-300).ln() + e.hi.max(1e-300).ln());
            cov += (lr - mean_x) * y;
        }
        slopes.push(cov / var_x);
    }
    let n = slopes.len() as f64;
    let mean_slope = slopes.iter().sum::<f64>() / n;
    let sd = if slopes.len() > 1 {
        (slopes.iter().map(|s| (s - mean_slope).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    Ok(McReport {
        mean_slope,
        sd,
        samples,
        diagnostic: true,
    })
}
