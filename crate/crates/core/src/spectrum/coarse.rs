//! Coarse (box-counting) spectrum estimation from mesh profiles.
//!
//! Over the tiling into cells of diameter `s = 2r`, the counts
//!
//! ```text
//! N+(a) = #{ j : nu(I_j) >= s^a }      (cells at least this heavy)
//! N-(a) = #{ j : nu(I_j) <= s^a }      (cells at most this heavy)
//! ```
//!
//! combine into the joint count `N(a+, a-) = min(N+(a+), N-(a-))`,
//! which counts cells whose measure sits in the window
//! `[s^{a+}, s^{a-}]`, and `ln N / ln(1/s)` estimates the spectrum
//! near `a`. All thresholds and normalisations use the cell diameter,
//! the scale the cell measures actually live at.

use super::{CurveKind, CurveMeta, SpectrumCurve, SpectrumPoint};
use crate::error::Error;
use crate::expansions::Params;
use crate::measure::{mesh_profile, MeshProfile};
use crate::Result;
use serde::Serialize;

/// Cell counts at one radius and one threshold pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoarseCounts {
    pub n_plus: usize,
    pub n_minus: usize,
    /// `min(n_plus, n_minus)`.
    pub n_joint: usize,
    /// Cell radius of the profile counted over (cells span `2r`).
    pub r: f64,
    pub alpha_plus: f64,
    pub alpha_minus: f64,
}

/// Which side of each cell's enclosure feeds the threshold tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMode {
    /// `lo` for the >= test and `hi` for the <= test: every counted
    /// cell certifiably satisfies its inequality, so both counts are
    /// lower bounds of the true counts.
    Certified,
    /// Enclosure midpoints on both sides; exploratory plots only.
    Midpoint,
}

/// Certified counts; see [`CountMode::Certified`].
pub fn coarse_counts(profile: &MeshProfile, alpha_plus: f64, alpha_minus: f64) -> CoarseCounts {
    coarse_counts_with_mode(profile, alpha_plus, alpha_minus, CountMode::Certified)
}

pub fn coarse_counts_with_mode(
    profile: &MeshProfile,
    alpha_plus: f64,
    alpha_minus: f64,
    mode: CountMode,
) -> CoarseCounts {
    let s = 2.0 * profile.r;
    let t_plus = s.powf(alpha_plus);
    let t_minus = s.powf(alpha_minus);
    let mut n_plus = 0usize;
    let mut n_minus = 0usize;
    for cell in &profile.cells {
        let (heavy, light) = match mode {
            CountMode::Certified => (cell.enclosure.lo, cell.enclosure.hi),
            CountMode::Midpoint => {
                let mid = 0.5 * (cell.enclosure.lo + cell.enclosure.hi);
                (mid, mid)
            }
        };
        if heavy >= t_plus {
            n_plus += 1;
        }
        if light <= t_minus {
            n_minus += 1;
        }
    }
    CoarseCounts {
        n_plus,
        n_minus,
        n_joint: n_plus.min(n_minus),
        r: profile.r,
        alpha_plus,
        alpha_minus,
    }
}

/// Empirical coarse spectrum: for each grid `alpha`, the best
/// normalised joint count `ln N(alpha+eps, alpha-eps) / ln(1/(2r))`
/// over the given radii (decreasing). Grid points with an empty count
/// report 0. The curve is tagged [`CurveKind::Coarse`]: it is a
/// finite-resolution estimate, biased upward by `O(eps)`, and bounds
/// nothing rigorously.
pub fn coarse_spectrum(
    params: &Params,
    r_list: &[f64],
    alpha_grid: &[f64],
    epsilon: f64,
    depth: u32,
) -> Result<SpectrumCurve> {
    if !(epsilon.is_finite() && epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::UnitRange {
            name: "epsilon",
            value: epsilon,
        });
    }
    if r_list.is_empty() || r_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidGrid(
            "radius list must be nonempty and strictly decreasing",
        ));
    }
    if alpha_grid.is_empty()
        || alpha_grid.iter().any(|a| !a.is_finite())
        || alpha_grid.windows(2).any(|w| w[1] < w[0])
    {
        return Err(Error::InvalidGrid(
            "alpha grid must be nonempty, finite and ascending",
        ));
    }
    let profiles: Vec<MeshProfile> = r_list
        .iter()
        .map(|&r| mesh_profile(params, r, depth))
        .collect::<Result<_>>()?;

    let points: Vec<SpectrumPoint> = alpha_grid
        .iter()
        .map(|&alpha| {
            let mut best = 0.0f64;
            for profile in &profiles {
                let counts = coarse_counts(profile, alpha + epsilon, alpha - epsilon);
                if counts.n_joint > 0 {
                    let est = (counts.n_joint as f64).ln() / -(2.0 * profile.r).ln();
                    best = best.max(est);
                }
            }
            SpectrumPoint::new(None, alpha, best)
        })
        .collect();

    let mut meta = CurveMeta::new(CurveKind::Coarse);
    meta.lambda = Some(params.lambda());
    meta.p = Some(params.p());
    meta.epsilon = Some(epsilon);
    meta.depth = Some(depth);
    meta.r_list = Some(r_list.to_vec());
    SpectrumCurve::new(points, meta)
}
