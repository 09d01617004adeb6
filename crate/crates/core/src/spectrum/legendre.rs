//! Exact Legendre spectra for strong-separation self-similar systems.
//!
//! A system of `N` maps with common contraction `rho` and probability
//! weights `w_i` has, for each `q`, partition sum `W(q) = sum w_i^q`,
//!
//! ```text
//! alpha(q) = (sum w_i^q ln w_i) / (W(q) ln rho)
//! f(q)     = q alpha(q) - ln W(q) / ln rho
//! ```
//!
//! and `q -> (alpha(q), f(q))` traces the spectrum. Everything here is
//! evaluated over *weight classes* `(w, multiplicity)` in log space, so
//! systems whose weights depend only on digit counts (binomial word
//! families with up to `2^m - 2` maps but only `m - 1` distinct
//! weights) stay cheap at any `m`.

use super::{CurveKind, CurveMeta, SpectrumCurve, SpectrumPoint};
use crate::error::Error;
use crate::Result;

/// Legendre parameters are clamped to `[-Q_CLIP, Q_CLIP]`; the returned
/// point records the clamp. Beyond this range alpha(q) is within ~1e-11
/// of its endpoint limit for any two-weight system of interest.
pub const Q_CLIP: f64 = 40.0;

/// Bisection tolerance for the `eta` exponent solve.
const ETA_TOL: f64 = 1e-12;

/// A class of identically weighted maps: `mult` maps of weight `w`,
/// kept as `(ln w, ln mult)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightClass {
    pub log_w: f64,
    pub log_mult: f64,
}

impl WeightClass {
    pub fn new(w: f64, mult: f64) -> Self {
        debug_assert!(w > 0.0 && w < 1.0 && mult >= 1.0);
        WeightClass {
            log_w: w.ln(),
            log_mult: mult.ln(),
        }
    }
}

/// Weight classes plus common ratio; the unit the transform runs on.
#[derive(Debug, Clone)]
pub(super) struct ClassSystem {
    classes: Vec<WeightClass>,
    log_rho: f64,
}

impl ClassSystem {
    pub(super) fn new(classes: Vec<WeightClass>, rho: f64) -> Self {
        debug_assert!(rho > 0.0 && rho < 1.0 && !classes.is_empty());
        ClassSystem {
            classes,
            log_rho: rho.ln(),
        }
    }

    /// `(alpha(q), f(q))` by log-sum-exp over the classes.
    pub(super) fn point(&self, q: f64) -> (f64, f64) {
        let ts: Vec<f64> = self
            .classes
            .iter()
            .map(|c| c.log_mult + q * c.log_w)
            .collect();
        let m = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mut den = 0.0;
        let mut num = 0.0;
        for (c, t) in self.classes.iter().zip(&ts) {
            let e = (t - m).exp();
            den += e;
            num += e * c.log_w;
        }
        let alpha = num / den / self.log_rho;
        let log_w_sum = m + den.ln();
        (alpha, q * alpha - log_w_sum / self.log_rho)
    }

    pub(super) fn alpha(&self, q: f64) -> f64 {
        self.point(q).0
    }

    /// Point with the clamp applied and recorded.
    pub(super) fn sample(&self, q: f64) -> SpectrumPoint {
        let qc = q.clamp(-Q_CLIP, Q_CLIP);
        let (alpha, f) = self.point(qc);
        SpectrumPoint {
            q: Some(qc),
            alpha,
            f,
            clipped: qc != q,
        }
    }
}

fn validate_unit(name: &'static str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0 && v < 1.0) {
        return Err(Error::UnitRange { name, value: v });
    }
    Ok(())
}

/// Builds classes from an explicit weight list; weights must lie in
/// (0,1) and sum to 1 within 1e-8.
fn classes_from_weights(weights: &[f64]) -> Result<Vec<WeightClass>> {
    if weights.is_empty() {
        return Err(Error::InvalidWeights("weight list is empty"));
    }
    let mut sum = 0.0;
    for &w in weights {
        if !(w.is_finite() && w > 0.0 && w < 1.0) {
            return Err(Error::InvalidWeights("weights must lie in (0, 1)"));
        }
        sum += w;
    }
    if (sum - 1.0).abs() > 1e-8 {
        return Err(Error::InvalidWeights("weights must sum to 1"));
    }
    Ok(weights.iter().map(|&w| WeightClass::new(w, 1.0)).collect())
}

/// `C(m, j)` exactly in f64 (all intermediates are integers well below
/// 2^53 for the m <= 40 used here).
fn binomial(m: u32, j: u32) -> f64 {
    let mut c = 1.0f64;
    for i in 0..j {
        c = c * (m - i) as f64 / (i + 1) as f64;
    }
    c
}

/// Weight classes of the word family `Sigma_m`: all 0/1 words of
/// length `m` except the two constant ones, digit 0 weighted `p` and
/// digit 1 weighted `1 - p`. Words with `j` zeros form one class of
/// multiplicity `C(m, j)`; the excluded constant words are exactly the
/// `j = 0` and `j = m` singletons, so classes run over `j = 1..m-1`.
pub(super) fn sigma_m_classes(p: f64, m: u32, exponent: f64) -> Vec<WeightClass> {
    debug_assert!(m >= 2);
    (1..m)
        .map(|j| {
            let log_w = exponent * (j as f64 * p.ln() + (m - j) as f64 * (1.0 - p).ln());
            WeightClass {
                log_w,
                log_mult: binomial(m, j).ln(),
            }
        })
        .collect()
}

/// One exact spectrum point for explicit weights and common ratio
/// `rho`. `q` outside `[-Q_CLIP, Q_CLIP]` is clamped and the point
/// flagged.
pub fn osc_spectrum_point(weights: &[f64], rho: f64, q: f64) -> Result<SpectrumPoint> {
    validate_unit("rho", rho)?;
    let system = ClassSystem::new(classes_from_weights(weights)?, rho);
    Ok(system.sample(q))
}

/// Exact spectrum curve over a q-grid (finite, ascending). The curve
/// is tagged [`CurveKind::Exact`], so the concavity and diagonal
/// invariants are enforced on construction.
pub fn spectrum_curve(weights: &[f64], rho: f64, q_grid: &[f64]) -> Result<SpectrumCurve> {
    validate_unit("rho", rho)?;
    if q_grid.is_empty() {
        return Err(Error::InvalidGrid("q grid is empty"));
    }
    if q_grid.iter().any(|q| !q.is_finite()) {
        return Err(Error::InvalidGrid("q grid contains non-finite values"));
    }
    if q_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidGrid("q grid must be sorted ascending"));
    }
    let system = ClassSystem::new(classes_from_weights(weights)?, rho);
    let points: Vec<SpectrumPoint> = q_grid.iter().map(|&q| system.sample(q)).collect();
    let mut meta = CurveMeta::new(CurveKind::Exact);
    meta.rho = Some(rho);
    meta.weights = Some(weights.to_vec());
    meta.q_clipped = points.iter().any(|p| p.clipped);
    SpectrumCurve::new(points, meta)
}

/// Default Legendre grid: 801 points on `[-Q_CLIP, Q_CLIP]`,
/// geometrically refined toward 0 (400 per sign down to 1e-4, plus 0),
/// so the near-linear center of the transform is densely sampled.
pub fn default_q_grid() -> Vec<f64> {
    let ratio = (2.5e-6f64).powf(1.0 / 399.0);
    let mut grid = Vec::with_capacity(801);
    let pos: Vec<f64> = (0..400).map(|j| Q_CLIP * ratio.powi(j)).collect();
    grid.extend(pos.iter().map(|q| -q));
    grid.push(0.0);
    grid.extend(pos.iter().rev());
    grid
}

/// The exponent `eta` with `sum_{i in Sigma_m} p_i^eta = 1`, solved by
/// bisection to 1e-12. Since the full word sum is
/// `1 - p^m - (1-p)^m < 1`, the solution is strictly inside (0, 1).
pub fn eta_k(p: f64, m: u32) -> Result<f64> {
    validate_unit("p", p)?;
    if m < 2 {
        return Err(Error::BadK {
            k: m,
            reason: "word length must be at least 2",
        });
    }
    let classes = sigma_m_classes(p, m, 1.0);
    let sum = |eta: f64| -> f64 {
        let ts: Vec<f64> = classes.iter().map(|c| c.log_mult + eta * c.log_w).collect();
        let mx = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        mx + ts.iter().map(|t| (t - mx).exp()).sum::<f64>().ln()
    };
    // sum(0) = ln(2^m - 2) > 0 > sum(1); the log-sum is strictly
    // decreasing in eta.
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    while hi - lo > ETA_TOL {
        let mid = 0.5 * (lo + hi);
        if sum(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn uniform_weights_give_the_diagonal_point() {
        for q in [-7.0, 0.0, 1.0, 13.0] {
            let pt = osc_spectrum_point(&[0.5, 0.5], 0.5, q).unwrap();
            assert!((pt.alpha - 1.0).abs() < 1e-14);
            assert!((pt.f - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn binomial_third_information_dimension() {
        // At q = 1 the transform touches the diagonal: f = alpha =
        // entropy / ln 2.
        let pt = osc_spectrum_point(&[1.0 / 3.0, 2.0 / 3.0], 0.5, 1.0).unwrap();
        let h = ((1.0f64 / 3.0) * 3.0f64.ln() + (2.0 / 3.0) * 1.5f64.ln()) / LN2;
        assert!((pt.alpha - h).abs() < 1e-12);
        assert!((pt.f - pt.alpha).abs() < 1e-12);
        assert!((pt.alpha - 0.9182958340544896).abs() < 1e-12);
    }

    #[test]
    fn binomial_third_peak_and_endpoints() {
        let w = [1.0 / 3.0, 2.0 / 3.0];
        let p0 = osc_spectrum_point(&w, 0.5, 0.0).unwrap();
        assert!((p0.f - 1.0).abs() < 1e-14);
        assert!((p0.alpha - 1.0849625007211562).abs() < 1e-12);
        let hi = osc_spectrum_point(&w, 0.5, 40.0).unwrap();
        assert!((hi.alpha - 0.5849625007211562).abs() < 1e-9);
        assert!(hi.f.abs() < 1e-9);
        let lo = osc_spectrum_point(&w, 0.5, -40.0).unwrap();
        assert!((lo.alpha - 1.5849625007211562).abs() < 1e-9);
        assert!(lo.f.abs() < 1e-9);
    }

    #[test]
    fn q_is_clamped_and_flagged() {
        let pt = osc_spectrum_point(&[1.0 / 3.0, 2.0 / 3.0], 0.5, 1e6).unwrap();
        assert!(pt.clipped);
        assert_eq!(pt.q, Some(Q_CLIP));
        let pt = osc_spectrum_point(&[1.0 / 3.0, 2.0 / 3.0], 0.5, 3.0).unwrap();
        assert!(!pt.clipped);
    }

    #[test]
    fn weight_validation() {
        assert!(matches!(
            osc_spectrum_point(&[0.5, 0.6], 0.5, 0.0),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            osc_spectrum_point(&[], 0.5, 0.0),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            osc_spectrum_point(&[1.0, 0.5], 0.5, 0.0),
            Err(Error::InvalidWeights(_))
        ));
        assert!(matches!(
            osc_spectrum_point(&[0.5, 0.5], 1.5, 0.0),
            Err(Error::UnitRange { .. })
        ));
    }

    #[test]
    fn curve_on_default_grid_is_concave_and_peaks_at_one() {
        let curve = spectrum_curve(&[1.0 / 3.0, 2.0 / 3.0], 0.5, &default_q_grid()).unwrap();
        assert_eq!(curve.points.len(), 801);
        assert!((curve.max_f() - 1.0).abs() < 1e-12);
        // alpha(q) is decreasing in q, so the alpha range comes from
        // the grid endpoints.
        assert!((curve.alpha_min() - 0.5849625007211562).abs() < 1e-9);
        assert!((curve.alpha_max() - 1.5849625007211562).abs() < 1e-9);
    }

    #[test]
    fn uniform_curve_collapses() {
        let curve = spectrum_curve(&[0.5, 0.5], 0.5, &default_q_grid()).unwrap();
        assert_eq!(curve.points.len(), 1);
        assert!((curve.points[0].alpha - 1.0).abs() < 1e-13);
    }

    #[test]
    fn default_grid_shape() {
        let g = default_q_grid();
        assert_eq!(g.len(), 801);
        assert_eq!(g[0], -40.0);
        assert_eq!(g[800], 40.0);
        assert_eq!(g[400], 0.0);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        // refinement reaches 1e-4 next to zero
        assert!((g[401] - 1e-4).abs() < 1e-12);
    }

    #[test]
    fn eta_closed_forms() {
        // m = 2: the two mixed words both weigh p(1-p);
        // 2 (p(1-p))^eta = 1.
        let e = eta_k(1.0 / 3.0, 2).unwrap();
        assert!((e - LN2 / 4.5f64.ln()).abs() < 1e-11);
        assert!((e - 0.4608454206183702).abs() < 1e-11);
        let e = eta_k(0.5, 2).unwrap();
        assert!((e - 0.5).abs() < 1e-11);
        // p = 1/2 general m: (2^m - 2) 2^{-m eta} = 1.
        let e = eta_k(0.5, 5).unwrap();
        assert!((e - 30.0f64.ln() / 32.0f64.ln()).abs() < 1e-11);
    }

    #[test]
    fn eta_frozen_values() {
        assert!((eta_k(1.0 / 3.0, 3).unwrap() - 0.8114814186105841).abs() < 1e-10);
        assert!((eta_k(1.0 / 3.0, 5).unwrap() - 0.956503272281418).abs() < 1e-10);
    }

    #[test]
    fn eta_is_monotone_in_m_toward_one() {
        let mut prev = 0.0;
        for m in 2..=10 {
            let e = eta_k(1.0 / 3.0, m).unwrap();
            assert!(e > prev && e < 1.0);
            prev = e;
        }
        assert!(prev > 0.99);
    }

    #[test]
    fn class_reduction_matches_explicit_enumeration() {
        // All 2^m - 2 words listed one by one versus the binomial
        // classes; both the eta solve and the transform must agree.
        let p: f64 = 1.0 / 3.0;
        let m = 6u32;
        let mut weights = Vec::new();
        for word in 1..(1u32 << m) - 1 {
            let ones = word.count_ones();
            let zeros = m - ones;
            weights.push(p.powi(zeros as i32) * (1.0 - p).powi(ones as i32));
        }
        assert_eq!(weights.len(), (1 << m) - 2);
        let eta = eta_k(p, m).unwrap();
        let scaled: Vec<f64> = weights.iter().map(|w| w.powf(eta)).collect();
        let enumerated = ClassSystem::new(
            scaled.iter().map(|&w| WeightClass::new(w, 1.0)).collect(),
            0.3,
        );
        let reduced = ClassSystem::new(sigma_m_classes(p, m, eta), 0.3);
        for q in [-11.0, -1.0, 0.0, 0.7, 1.0, 5.0, 33.0] {
            let (a1, f1) = enumerated.point(q);
            let (a2, f2) = reduced.point(q);
            assert!((a1 - a2).abs() < 1e-12, "alpha mismatch at q={q}");
            assert!((f1 - f2).abs() < 1e-12, "f mismatch at q={q}");
        }
        // the scaled weights really sum to 1
        let s: f64 = scaled.iter().sum();
        assert!((s - 1.0).abs() < 1e-10);
    }

    #[test]
    fn eta_rejects_short_words_and_bad_p() {
        assert!(matches!(eta_k(0.5, 1), Err(Error::BadK { .. })));
        assert!(matches!(eta_k(1.5, 2), Err(Error::UnitRange { .. })));
    }
}
