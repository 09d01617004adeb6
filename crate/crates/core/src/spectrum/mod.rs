//! Multifractal spectra.
//!
//! The dimension spectrum `f(alpha)` of a measure assigns to each local
//! dimension `alpha` the Hausdorff dimension of the set of points where
//! that local dimension is attained. For self-similar measures with
//! strongly separated pieces the spectrum is the Legendre transform of
//! a pressure function and can be evaluated exactly, point by point in
//! the parameter `q` ([`osc_spectrum_point`]). For `nu_{lambda,p}` with
//! `lambda > 1/2` the pieces overlap and no exact formula is known;
//! this module provides
//!
//! * certified-input *lower* bounds via strongly separated sub-systems
//!   supported on words that avoid long constant runs
//!   ([`lower_bound_curve`]),
//! * *upper* bounds via a sliding-window comparison with the exact
//!   `lambda = 1/2` binomial spectrum ([`upper_bound_curve`]),
//! * an empirical *coarse* (box-counting) spectrum from mesh-cell
//!   counts ([`coarse_spectrum`]),
//! * a uniform Holder exponent for the measure ([`holder_bound`]), and
//! * typical local dimensions under a second bias `q` ([`typical_dim`],
//!   [`typical_dim_mc`]).

mod bounds;
mod coarse;
mod legendre;
mod typical;

pub use bounds::{
    holder_bound, lambda_k_max, lower_bound_curve, lower_default_k, upper_bound_curve, HolderBound,
};
pub use coarse::{
    coarse_counts, coarse_counts_with_mode, coarse_spectrum, CoarseCounts, CountMode,
};
pub use legendre::{
    default_q_grid, eta_k, osc_spectrum_point, spectrum_curve, WeightClass, Q_CLIP,
};
pub use typical::{typical_dim, typical_dim_mc, McReport, Regime, TypicalDim};

use crate::error::Error;
use crate::Result;
use serde::Serialize;

/// Two alpha values closer than this are treated as the same abscissa
/// when a curve is assembled.
pub const ALPHA_DEDUP: f64 = 1e-12;

/// Allowed concavity defect for exact curves (second differences of an
/// exact Legendre transform are nonpositive up to rounding).
pub const CONCAVITY_TOL: f64 = 1e-9;

/// Minimum alpha separation between anchor points used by the
/// concavity check; slopes over shorter spans amplify rounding noise.
const CONCAVITY_ANCHOR: f64 = 1e-4;

fn is_false(b: &bool) -> bool {
    !*b
}

/// One spectrum sample `(q, alpha, f)`.
///
/// `q` is the Legendre parameter where the point came from a transform;
/// curves parametrised directly by `alpha` (upper bounds, coarse
/// estimates) carry `q = None`. `clipped` marks points whose requested
/// `q` exceeded [`Q_CLIP`] and was clamped.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumPoint {
    pub q: Option<f64>,
    pub alpha: f64,
    pub f: f64,
    #[serde(skip_serializing_if = "is_false", default)]
    pub clipped: bool,
}

impl SpectrumPoint {
    pub fn new(q: Option<f64>, alpha: f64, f: f64) -> Self {
        SpectrumPoint {
            q,
            alpha,
            f,
            clipped: false,
        }
    }
}

/// How a curve was produced; decides which invariants are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    /// Exact Legendre transform of a strong-separation system.
    Exact,
    /// Rigorous lower bound for an overlapping `nu_{lambda,p}`.
    LowerBound,
    /// Rigorous upper bound for an overlapping `nu_{lambda,p}`.
    UpperBound,
    /// Finite-resolution box-counting estimate; empirical only.
    Coarse,
}

/// Provenance record attached to every curve.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveMeta {
    pub kind: CurveKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub depth: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_list: Option<Vec<f64>>,
    /// Some requested q values were clamped to [`Q_CLIP`].
    #[serde(skip_serializing_if = "is_false", default)]
    pub q_clipped: bool,
    /// Number of grid points whose comparison window missed the
    /// reference spectrum entirely (upper bounds only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub out_of_support: Option<usize>,
}

impl CurveMeta {
    pub fn new(kind: CurveKind) -> Self {
        CurveMeta {
            kind,
            lambda: None,
            p: None,
            rho: None,
            weights: None,
            k: None,
            m: None,
            eta: None,
            epsilon: None,
            depth: None,
            r_list: None,
            q_clipped: false,
            out_of_support: None,
        }
    }
}

/// A spectrum curve: points sorted by strictly increasing `alpha`,
/// plus provenance.
///
/// Construction sorts, merges abscissae closer than [`ALPHA_DEDUP`]
/// (a uniform system collapses to a single point), and then enforces
/// what the provenance can guarantee:
///
/// * all kinds: finite values, strictly increasing alpha;
/// * exact and lower bounds: `f <= alpha + 1e-12` (the transform
///   touches the diagonal at `q = 1` from below);
/// * exact and both bounds: `f <= 1 + 1e-12` (measures on the line);
/// * exact only: concavity of `f` along `alpha` within
///   [`CONCAVITY_TOL`]. Coarse estimates keep only the ordering
///   invariants: at finite resolution the count estimate may exceed
///   both caps by `O(epsilon)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumCurve {
    pub points: Vec<SpectrumPoint>,
    pub meta: CurveMeta,
}

impl SpectrumCurve {
    pub fn new(mut points: Vec<SpectrumPoint>, meta: CurveMeta) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::CurveInvariant("curve has no points"));
        }
        for pt in &points {
            if !(pt.alpha.is_finite() && pt.f.is_finite()) {
                return Err(Error::CurveInvariant("non-finite spectrum point"));
            }
        }
        points.sort_by(|a, b| a.alpha.partial_cmp(&b.alpha).unwrap());
        points.dedup_by(|b, a| (b.alpha - a.alpha).abs() < ALPHA_DEDUP);

        let diag = matches!(meta.kind, CurveKind::Exact | CurveKind::LowerBound);
        let cap = meta.kind != CurveKind::Coarse;
        for w in points.windows(2) {
            if w[1].alpha <= w[0].alpha {
                return Err(Error::CurveInvariant("alpha not strictly increasing"));
            }
        }
        for pt in &points {
            if diag && pt.f > pt.alpha + 1e-12 {
                return Err(Error::CurveInvariant("f exceeds alpha"));
            }
            if cap && pt.f > 1.0 + 1e-12 {
                return Err(Error::CurveInvariant("f exceeds 1"));
            }
        }
        if meta.kind == CurveKind::Exact {
            check_concave(&points)?;
        }
        Ok(SpectrumCurve { points, meta })
    }

    pub fn alpha_min(&self) -> f64 {
        self.points.first().unwrap().alpha
    }

    pub fn alpha_max(&self) -> f64 {
        self.points.last().unwrap().alpha
    }

    pub fn max_f(&self) -> f64 {
        self.points
            .iter()
            .map(|p| p.f)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Linear interpolation of `f` at `alpha`; `None` outside the
    /// curve's alpha range (a single-point curve only answers at its
    /// own abscissa).
    pub fn f_at_alpha(&self, alpha: f64) -> Option<f64> {
        if alpha < self.alpha_min() || alpha > self.alpha_max() {
            return None;
        }
        let pts = &self.points;
        let i = pts.partition_point(|p| p.alpha < alpha);
        if i == 0 {
            return Some(pts[0].f);
        }
        if i == pts.len() {
            return Some(pts[pts.len() - 1].f);
        }
        let (a, b) = (&pts[i - 1], &pts[i]);
        let t = (alpha - a.alpha) / (b.alpha - a.alpha);
        Some(a.f + t * (b.f - a.f))
    }
}

/// Concavity via divided differences over anchor points at least
/// [`CONCAVITY_ANCHOR`] apart: consecutive slopes must not increase by
/// more than [`CONCAVITY_TOL`].
fn check_concave(points: &[SpectrumPoint]) -> Result<()> {
    let mut anchors: Vec<&SpectrumPoint> = Vec::new();
    for pt in points {
        match anchors.last() {
            Some(last) if pt.alpha - last.alpha < CONCAVITY_ANCHOR => {}
            _ => anchors.push(pt),
        }
    }
    let mut prev_slope = f64::INFINITY;
    for w in anchors.windows(2) {
        let slope = (w[1].f - w[0].f) / (w[1].alpha - w[0].alpha);
        if slope > prev_slope + CONCAVITY_TOL {
            return Err(Error::CurveInvariant("curve is not concave"));
        }
        prev_slope = slope;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(alpha: f64, f: f64) -> SpectrumPoint {
        SpectrumPoint::new(None, alpha, f)
    }

    #[test]
    fn curve_sorts_and_dedups() {
        let meta = CurveMeta::new(CurveKind::Coarse);
        let c = SpectrumCurve::new(
            vec![
                pt(1.2, 0.5),
                pt(0.8, 0.3),
                pt(0.8 + 1e-14, 0.3),
                pt(1.0, 0.9),
            ],
            meta,
        )
        .unwrap();
        let alphas: Vec<f64> = c.points.iter().map(|p| p.alpha).collect();
        assert_eq!(alphas, vec![0.8, 1.0, 1.2]);
    }

    #[test]
    fn uniform_system_collapses_to_single_point() {
        let meta = CurveMeta::new(CurveKind::Exact);
        let c = SpectrumCurve::new(vec![pt(1.0, 1.0); 5], meta).unwrap();
        assert_eq!(c.points.len(), 1);
        assert_eq!(c.f_at_alpha(1.0), Some(1.0));
        assert_eq!(c.f_at_alpha(1.1), None);
    }

    #[test]
    fn exact_curve_rejects_convexity() {
        let meta = CurveMeta::new(CurveKind::Exact);
        // f dips and rises: slopes -1 then +1 over wide anchors.
        let err =
            SpectrumCurve::new(vec![pt(0.5, 0.5), pt(0.7, 0.3), pt(0.9, 0.5)], meta).unwrap_err();
        assert!(matches!(err, Error::CurveInvariant(_)));
    }

    #[test]
    fn exact_curve_rejects_f_above_alpha() {
        let meta = CurveMeta::new(CurveKind::Exact);
        let err = SpectrumCurve::new(vec![pt(0.5, 0.6)], meta).unwrap_err();
        assert!(matches!(err, Error::CurveInvariant(_)));
        // A coarse estimate is allowed to overshoot the diagonal.
        let meta = CurveMeta::new(CurveKind::Coarse);
        assert!(SpectrumCurve::new(vec![pt(0.5, 0.6)], meta).is_ok());
    }

    #[test]
    fn interpolation_is_linear() {
        let meta = CurveMeta::new(CurveKind::Coarse);
        let c = SpectrumCurve::new(vec![pt(1.0, 0.0), pt(2.0, 1.0)], meta).unwrap();
        assert!((c.f_at_alpha(1.25).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(c.f_at_alpha(0.99), None);
        assert_eq!(c.f_at_alpha(2.01), None);
    }
}
