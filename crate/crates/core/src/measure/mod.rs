//! Rigorous evaluation of the measure nu_{lambda,p}.
//!
//! The measure satisfies nu(J) = p nu(S_0^{-1} J) + (1-p) nu(S_1^{-1} J)
//! with S_j(x) = lambda (x + j). Unrolling that identity with interval
//! base cases gives certified enclosures [lo, hi] for nu(J): a branch
//! whose pulled-back interval swallows the support contributes its full
//! weight, one that misses the support contributes nothing, and a
//! branch still straddling a boundary when depth runs out contributes
//! [0, weight]. No heuristic value is ever reported.

mod local_dim;

pub use local_dim::{
    cylinder_ball_bounds, local_dim_estimate, predicted_local_dim, CylinderBallBounds, DimEstimate,
    RegressionPoint,
};

use serde::{Deserialize, Serialize};

use crate::expansions::Params;
use crate::{kahan_sum, Error, Result};

/// Closed interval [a, b].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !matches!(
            a.partial_cmp(&b),
            Some(std::cmp::Ordering::Less | std::cmp::Ordering::Equal)
        ) {
            return Err(Error::IntervalOrder { a, b });
        }
        Ok(Interval { a, b })
    }

    /// Closed ball around x: [x - r, x + r].
    pub fn ball(x: f64, r: f64) -> Self {
        assert!(r > 0.0, "ball radius must be positive");
        Interval { a: x - r, b: x + r }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn len(&self) -> f64 {
        self.b - self.a
    }
}

/// Certified bracket lo <= nu(J) <= hi.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
}

impl Enclosure {
    fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi + 1e-15, "inverted enclosure {lo} > {hi}");
        Enclosure {
            lo: lo.clamp(0.0, 1.0),
            hi: hi.clamp(0.0, 1.0),
        }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn intersects(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// Certified enclosure of nu(J) by unrolling the self-similarity
/// `depth` levels. Cost is proportional to the number of cylinders
/// straddling the endpoints of J, not to 2^depth.
pub fn nu_enclosure(params: &Params, j: Interval, depth: u32) -> Enclosure {
    let (lo, hi) = recurse(params, j.a, j.b, params.support_hi(), depth);
    Enclosure::new(lo, hi)
}

fn recurse(params: &Params, a: f64, b: f64, support_hi: f64, depth: u32) -> (f64, f64) {
    // Meeting the support in at most one point carries no mass: an
    // infinite Bernoulli convolution has no atoms. The non-strict
    // comparison stops edge-touching branches from recursing forever
    // and leaking their full weight into hi.
    if b <= 0.0 || a >= support_hi {
        return (0.0, 0.0);
    }
    if a <= 0.0 && b >= support_hi {
        return (1.0, 1.0);
    }
    if depth == 0 {
        return (0.0, 1.0);
    }
    let lambda = params.lambda();
    let p = params.p();
    let (lo0, hi0) = recurse(params, a / lambda, b / lambda, support_hi, depth - 1);
    let (lo1, hi1) = recurse(
        params,
        a / lambda - 1.0,
        b / lambda - 1.0,
        support_hi,
        depth - 1,
    );
    (p * lo0 + (1.0 - p) * lo1, p * hi0 + (1.0 - p) * hi1)
}

/// Enclosure of the measure of the closed ball [x - r, x + r].
pub fn nu_ball(params: &Params, x: f64, r: f64, depth: u32) -> Enclosure {
    nu_enclosure(params, Interval::ball(x, r), depth)
}

/// One mesh cell with its certified measure bracket.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeshCell {
    /// 1-based cell index; the cell is [(2j-2) r, 2j r].
    pub index: u32,
    pub interval: Interval,
    pub enclosure: Enclosure,
}

/// Measure profile over the radius-r tiling of the support.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeshProfile {
    pub r: f64,
    pub depth: u32,
    pub cells: Vec<MeshCell>,
    /// Compensated sums of the cell brackets; lo <= 1 <= hi.
    pub sum_lo: f64,
    pub sum_hi: f64,
}

/// Enclosures for all cells I_j = [(2j-2) r, 2j r] covering the
/// support, j = 1..ceil(|I|/(2r)). Cells are evaluated in parallel.
pub fn mesh_profile(params: &Params, r: f64, depth: u32) -> Result<MeshProfile> {
    let support_hi = params.support_hi();
    if !(r > 0.0 && r < support_hi / 2.0) {
        return Err(Error::RadiusRange {
            r,
            max: support_hi / 2.0,
        });
    }
    let count = (support_hi / (2.0 * r)).ceil() as u32;
    use rayon::prelude::*;
    let cells: Vec<MeshCell> = (1..=count)
        .into_par_iter()
        .map(|index| {
            let a = (2 * index - 2) as f64 * r;
            let b = (2 * index) as f64 * r;
            let interval = Interval { a, b };
            MeshCell {
                index,
                interval,
                enclosure: nu_enclosure(params, interval, depth),
            }
        })
        .collect();
    let sum_lo = kahan_sum(cells.iter().map(|c| c.enclosure.lo));
    let sum_hi = kahan_sum(cells.iter().map(|c| c.enclosure.hi));
    Ok(MeshProfile {
        r,
        depth,
        cells,
        sum_lo,
        sum_hi,
    })
}

/// Draws x = sum of digit_k lambda^k over k = 1..n with i.i.d. digits,
/// P(digit = 0) = q. The truncation error is at most lambda^n times
/// the support length. q = 0 and q = 1 are accepted as the
/// deterministic limits.
pub fn sample_point<R: rand::Rng + ?Sized>(
    lambda: f64,
    q: f64,
    n: usize,
    rng: &mut R,
) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::LambdaRange {
            lambda,
            lo: 0.0,
            hi: 1.0,
        });
    }
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::UnitRange {
            name: "q",
            value: q,
        });
    }
    let mut x = 0.0f64;
    let mut pow = 1.0f64;
    for _ in 0..n {
        pow *= lambda;
        if !rng.gen_bool(q) {
            x += pow;
        }
    }
    Ok(x)
}
