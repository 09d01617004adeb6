//! Spectrum bounds for the overlapping regime `1/2 < lambda < 1`, and
//! the uniform Holder exponent.
//!
//! Both bounds compare `nu_{lambda,p}` with the exactly solvable
//! `lambda = 1/2` binomial measure:
//!
//! * the *lower* bound restricts the digit shift to length-`m` words
//!   with no constant block, which forces strong separation at the
//!   price of reweighting by the exponent `eta` of [`eta_k`];
//! * the *upper* bound controls how many level-`k` cylinders can stack
//!   over a point (the parameter set test of [`lambda_k_max`]) and
//!   reads the spectrum off a sliding window of the binomial curve.

use super::legendre::{sigma_m_classes, ClassSystem, WeightClass, Q_CLIP};
use super::{eta_k, CurveKind, CurveMeta, SpectrumCurve, SpectrumPoint};
use crate::error::Error;
use crate::expansions::{self, solve_constant, NamedConstant, DEFAULT_TOL};
use crate::Result;

/// Default cap for the auto-selected `k` of [`lower_bound_curve`];
/// beyond this the word length `m = k/2` gains nothing numerically.
pub const LOWER_K_CAP: u32 = 40;

fn require_overlap(lambda: f64) -> Result<()> {
    if !(lambda > 0.5 && lambda < 1.0) {
        return Err(Error::LambdaRange {
            lambda,
            lo: 0.5,
            hi: 1.0,
        });
    }
    Ok(())
}

fn validate_unit(name: &'static str, v: f64) -> Result<()> {
    if !(v.is_finite() && v > 0.0 && v < 1.0) {
        return Err(Error::UnitRange { name, value: v });
    }
    Ok(())
}

fn validate_ascending(grid: &[f64], what: &'static str) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid(what));
    }
    if grid.iter().any(|v| !v.is_finite()) || grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidGrid(what));
    }
    Ok(())
}

/// Largest `k >= 2` with `2 lambda - 1 < lambda^{k-1} (1 - lambda)`,
/// the condition bounding how many level-`k` cylinders can overlap a
/// point. `None` when even `k = 2` fails (lambda too far above 1/2);
/// the right-hand side decreases in `k`, so the sets are nested.
pub fn lambda_k_max(lambda: f64) -> Result<Option<u32>> {
    require_overlap(lambda)?;
    let excess = 2.0 * lambda - 1.0;
    if excess >= lambda * (1.0 - lambda) {
        return Ok(None);
    }
    let mut k = 2u32;
    // test for k + 1 uses the exponent k
    while excess < lambda.powi(k as i32) * (1.0 - lambda) {
        k += 1;
    }
    Ok(Some(k))
}

/// Default `k` for [`lower_bound_curve`]: the largest with
/// `lambda < Multinacci(k)`, capped at [`LOWER_K_CAP`]. Values below 4
/// would give word length `m = k/2 < 2`, where the construction is
/// empty, so they are rejected.
pub fn lower_default_k(lambda: f64) -> Result<u32> {
    require_overlap(lambda)?;
    let k = expansions::multinacci_k_max(lambda)
        .ok_or(Error::NoAdmissibleK { lambda })?
        .min(LOWER_K_CAP);
    if k < 4 {
        return Err(Error::NoAdmissibleK { lambda });
    }
    Ok(k)
}

/// Lower bound for the spectrum of `nu_{lambda,p}` from the strongly
/// separated sub-system on `Sigma_m` words (`m = k/2`), reweighted by
/// `eta = eta_k(p, m)`: each transform point `(q, alpha~, f~)` of the
/// sub-system certifies `f_{lambda,p}(alpha~ / eta) >= f~`.
///
/// Requires `1/2 < lambda < Multinacci(k)` and `k >= 4` (so that the
/// word family is nonempty). With `p = 1/2` all words weigh the same
/// and the curve collapses to its peak
/// `ln(2^m - 2) / (m |ln lambda|)`.
pub fn lower_bound_curve(lambda: f64, p: f64, k: u32, q_grid: &[f64]) -> Result<SpectrumCurve> {
    validate_unit("p", p)?;
    require_overlap(lambda)?;
    if k < 3 {
        return Err(Error::BadK {
            k,
            reason: "lower bound needs k >= 3",
        });
    }
    let m = k / 2;
    if m < 2 {
        return Err(Error::BadK {
            k,
            reason: "word length k/2 must be at least 2; the block family is empty below that",
        });
    }
    // lambda < Multinacci(k), tested by the equivalent polynomial
    // inequality 2 lambda - 1 < lambda^{k+1}.
    if 2.0 * lambda - 1.0 >= lambda.powi(k as i32 + 1) {
        let hi = solve_constant(NamedConstant::Multinacci(k), DEFAULT_TOL)?;
        return Err(Error::LambdaRange {
            lambda,
            lo: 0.5,
            hi,
        });
    }
    validate_ascending(q_grid, "q grid must be nonempty, finite and ascending")?;

    let eta = eta_k(p, m)?;
    let rho = lambda.powi(m as i32);
    let system = ClassSystem::new(sigma_m_classes(p, m, eta), rho);
    let points: Vec<SpectrumPoint> = q_grid
        .iter()
        .map(|&q| {
            let mut pt = system.sample(q);
            pt.alpha /= eta;
            pt
        })
        .collect();
    let mut meta = CurveMeta::new(CurveKind::LowerBound);
    meta.lambda = Some(lambda);
    meta.p = Some(p);
    meta.rho = Some(rho);
    meta.k = Some(k);
    meta.m = Some(m);
    meta.eta = Some(eta);
    meta.q_clipped = points.iter().any(|p| p.clipped);
    SpectrumCurve::new(points, meta)
}

/// `f` of an exact class system at a given `alpha`, by bisection on
/// the monotone map `q -> alpha(q)`. The caller guarantees `alpha`
/// lies in the closed range attained on `[-Q_CLIP, Q_CLIP]`.
fn f_at_alpha_exact(system: &ClassSystem, alpha: f64) -> f64 {
    let (mut qlo, mut qhi) = (-Q_CLIP, Q_CLIP); // alpha decreasing in q
    for _ in 0..90 {
        let mid = 0.5 * (qlo + qhi);
        if system.alpha(mid) > alpha {
            qlo = mid;
        } else {
            qhi = mid;
        }
    }
    system.point(0.5 * (qlo + qhi)).1
}

/// Supremum of the exact spectrum over the closed window `[lo, hi]`,
/// or `None` when the window misses the attainable alpha range
/// entirely. A window containing the peak returns the exact peak
/// value; otherwise the sup sits at the window edge nearer the peak.
fn sup_on_window(system: &ClassSystem, lo: f64, hi: f64) -> Option<f64> {
    let a_min = system.alpha(Q_CLIP);
    let a_max = system.alpha(-Q_CLIP);
    let a_peak = system.alpha(0.0);
    if hi < a_min || lo > a_max {
        return None;
    }
    if lo <= a_peak && a_peak <= hi {
        return Some(system.point(0.0).1);
    }
    let target = if hi < a_peak { hi } else { lo }.clamp(a_min, a_max);
    Some(f_at_alpha_exact(system, target))
}

/// Upper bound for the spectrum of `nu_{lambda,p}`: with
/// `k = lambda_k_max(lambda)` and `c = |log2 lambda|`, every
/// `f_{lambda,p}(alpha)` is at most the sup of the exact binomial
/// `lambda = 1/2` spectrum over the window `[c alpha, c alpha + 1/k]`.
/// Grid points whose window misses the binomial spectrum entirely get
/// `f = 0` and are tallied in `meta.out_of_support`.
pub fn upper_bound_curve(lambda: f64, p: f64, alpha_grid: &[f64]) -> Result<SpectrumCurve> {
    validate_unit("p", p)?;
    let k = lambda_k_max(lambda)?.ok_or(Error::NoAdmissibleK { lambda })?;
    validate_ascending(
        alpha_grid,
        "alpha grid must be nonempty, finite and ascending",
    )?;

    let system = ClassSystem::new(
        vec![WeightClass::new(p, 1.0), WeightClass::new(1.0 - p, 1.0)],
        0.5,
    );
    let c = -lambda.log2();
    let width = 1.0 / k as f64;
    let mut out = 0usize;
    let points: Vec<SpectrumPoint> = alpha_grid
        .iter()
        .map(|&alpha| {
            let f = match sup_on_window(&system, c * alpha, c * alpha + width) {
                Some(f) => f,
                None => {
                    out += 1;
                    0.0
                }
            };
            SpectrumPoint::new(None, alpha, f)
        })
        .collect();
    let mut meta = CurveMeta::new(CurveKind::UpperBound);
    meta.lambda = Some(lambda);
    meta.p = Some(p);
    meta.k = Some(k);
    meta.out_of_support = Some(out);
    SpectrumCurve::new(points, meta)
}

/// Certified Holder exponent: `nu_{lambda,p}(B(x, r)) <= C r^delta`
/// for every x, uniformly in p.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct HolderBound {
    /// The exponent; 0 when no admissible k exists at any power.
    pub delta: f64,
    /// `lambda_k_max` at the power of lambda that won.
    pub k_used: u32,
    /// Winning convolution depth j (`nu_lambda` is a factor of a
    /// j-fold convolution of scaled `nu_{lambda^j}` copies); 0 when no
    /// bound is available.
    pub boost: u32,
}

/// Uniform Holder exponent for `nu_{lambda, p}`.
///
/// Base bound at ratio `mu`: `delta_0(mu) = (k-1) ln 2 / (k |ln mu|)`
/// with `k = lambda_k_max(mu)`. Writing `nu_lambda` as a j-fold
/// convolution of scaled copies of `nu_{lambda^j}` lifts this to
/// `j delta_0(lambda^j) - (j - 1)`; the best admissible `j >= 1` with
/// `lambda^j > 1/2` wins, floored at 0.
pub fn holder_bound(lambda: f64) -> Result<HolderBound> {
    require_overlap(lambda)?;
    let mut best = HolderBound {
        delta: 0.0,
        k_used: 0,
        boost: 0,
    };
    let mut j = 1u32;
    loop {
        let mu = lambda.powi(j as i32);
        if mu <= 0.5 {
            break;
        }
        if let Some(k) = lambda_k_max(mu)? {
            let delta0 = (k - 1) as f64 * std::f64::consts::LN_2 / (k as f64 * mu.ln().abs());
            let cand = j as f64 * delta0 - (j as f64 - 1.0);
            if cand > best.delta {
                best = HolderBound {
                    delta: cand,
                    k_used: k,
                    boost: j,
                };
            }
        }
        j += 1;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::default_q_grid;

    fn grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn lambda_k_max_table() {
        assert_eq!(lambda_k_max(0.51).unwrap(), Some(5));
        assert_eq!(lambda_k_max(0.501).unwrap(), Some(8));
        assert_eq!(lambda_k_max(0.5001).unwrap(), Some(12));
        assert_eq!(lambda_k_max(0.55).unwrap(), Some(3));
        assert_eq!(lambda_k_max(0.6).unwrap(), Some(2));
        assert_eq!(lambda_k_max(0.66).unwrap(), None);
        assert!(matches!(lambda_k_max(0.5), Err(Error::LambdaRange { .. })));
    }

    #[test]
    fn lambda_k_max_is_nonincreasing_in_lambda() {
        let mut prev = u32::MAX;
        for i in 1..200 {
            let lambda = 0.5 + 0.001 * i as f64;
            if lambda >= 1.0 {
                break;
            }
            let k = lambda_k_max(lambda).unwrap().unwrap_or(0);
            assert!(k <= prev, "k jumped up at lambda = {lambda}");
            prev = k;
        }
    }

    #[test]
    fn default_k_tracks_the_multinacci_ladder() {
        assert_eq!(lower_default_k(0.501).unwrap(), 7);
        assert_eq!(lower_default_k(0.5001).unwrap(), 11);
        assert_eq!(lower_default_k(0.51).unwrap(), 4);
        // k_max = 2 or 3 means empty word families
        assert!(matches!(
            lower_default_k(0.6),
            Err(Error::NoAdmissibleK { .. })
        ));
        assert!(matches!(
            lower_default_k(0.54),
            Err(Error::NoAdmissibleK { .. })
        ));
    }

    #[test]
    fn lower_curve_shape_at_0501() {
        let c = lower_bound_curve(0.501, 1.0 / 3.0, 7, &default_q_grid()).unwrap();
        assert_eq!(c.meta.m, Some(3));
        assert!((c.meta.eta.unwrap() - 0.8114814186105841).abs() < 1e-10);
        assert!((c.alpha_min() - 0.920950481733118).abs() < 1e-9);
        assert!((c.alpha_max() - 1.255_247_428_755_94).abs() < 1e-9);
        // peak is the sub-system dimension ln 6 / (3 |ln lambda|)
        assert!((c.max_f() - 0.8641450724522505).abs() < 1e-12);
        assert!((c.f_at_alpha(1.0).unwrap() - 0.793631009452765).abs() < 1e-9);
    }

    #[test]
    fn lower_curve_balanced_weights_collapse() {
        let c = lower_bound_curve(0.501, 0.5, 7, &default_q_grid()).unwrap();
        assert_eq!(c.points.len(), 1);
        let pt = c.points[0];
        assert!((pt.f - 0.8641450724522505).abs() < 1e-12);
        // alpha = ln 2 / |ln lambda| after the eta rescale
        assert!((pt.alpha - std::f64::consts::LN_2 / 0.501f64.ln().abs()).abs() < 1e-12);
    }

    #[test]
    fn lower_curve_preconditions() {
        let g = default_q_grid();
        assert!(matches!(
            lower_bound_curve(0.501, 0.5, 3, &g),
            Err(Error::BadK { .. })
        ));
        assert!(matches!(
            lower_bound_curve(0.501, 0.5, 2, &g),
            Err(Error::BadK { .. })
        ));
        // lambda above Multinacci(7) = 0.502017...
        assert!(matches!(
            lower_bound_curve(0.503, 0.5, 7, &g),
            Err(Error::LambdaRange { .. })
        ));
        assert!(lower_bound_curve(0.501, 0.5, 7, &g).is_ok());
    }

    #[test]
    fn upper_curve_flat_top_and_shoulders() {
        // 0.005 spacing hits the probe alphas as grid nodes, and every
        // window [c a, c a + 1/8] meets the binomial alpha range
        let c = upper_bound_curve(0.501, 1.0 / 3.0, &grid(0.6, 1.5, 181)).unwrap();
        assert_eq!(c.meta.k, Some(8));
        assert_eq!(c.meta.out_of_support, Some(0));
        // the window [c a, c a + 1/8] contains the binomial peak for
        // alpha around 1, giving an exact flat top at 1
        assert_eq!(c.f_at_alpha(1.0).unwrap(), 1.0);
        assert!((c.f_at_alpha(1.2).unwrap() - 0.963773335423057).abs() < 1e-9);
        assert!((c.f_at_alpha(0.7).unwrap() - 0.791731644216955).abs() < 1e-9);
        assert!(c.max_f() <= 1.0 + 1e-12);
    }

    #[test]
    fn upper_curve_narrows_toward_half() {
        let c = upper_bound_curve(0.5001, 1.0 / 3.0, &grid(0.6, 1.5, 181)).unwrap();
        assert_eq!(c.meta.k, Some(12));
        assert!((c.f_at_alpha(1.2).unwrap() - 0.961705266451871).abs() < 1e-9);
        assert!((c.f_at_alpha(0.7).unwrap() - 0.718250694301555).abs() < 1e-9);
    }

    #[test]
    fn upper_curve_flags_windows_outside_support() {
        // binomial alpha range is [0.585, 1.585]; windows at alpha 0.3
        // and 2.4 miss it on both sides
        let c = upper_bound_curve(0.501, 1.0 / 3.0, &[0.3, 1.0, 2.4]).unwrap();
        assert_eq!(c.meta.out_of_support, Some(2));
        assert_eq!(c.f_at_alpha(0.3).unwrap(), 0.0);
        assert_eq!(c.f_at_alpha(2.4).unwrap(), 0.0);
        assert_eq!(c.f_at_alpha(1.0).unwrap(), 1.0);
    }

    #[test]
    fn upper_curve_requires_admissible_k() {
        assert!(matches!(
            upper_bound_curve(0.7, 0.5, &[1.0]),
            Err(Error::NoAdmissibleK { .. })
        ));
    }

    #[test]
    fn holder_frozen_values() {
        let h = holder_bound(0.51).unwrap();
        assert!((h.delta - 0.823527481971).abs() < 1e-9);
        assert!((h.delta - 0.823527).abs() < 1e-6);
        assert_eq!((h.k_used, h.boost), (5, 1));

        let h = holder_bound(0.55).unwrap();
        assert!((h.delta - 0.772950017796).abs() < 1e-9);
        assert_eq!((h.k_used, h.boost), (3, 1));

        let h = holder_bound(0.6).unwrap();
        assert!((h.delta - 0.678457724428).abs() < 1e-9);
        assert_eq!((h.k_used, h.boost), (2, 1));
    }

    #[test]
    fn holder_convolution_boost_near_sqrt_half() {
        // 0.708^2 = 0.501264 sits just above 1/2, where a single step
        // has no admissible k but the two-fold convolution does.
        let h = holder_bound(0.708).unwrap();
        assert!((h.delta - 0.756397732913).abs() < 1e-9);
        assert_eq!((h.k_used, h.boost), (8, 2));
        assert!(h.delta > holder_bound(0.6).unwrap().delta);
    }

    #[test]
    fn holder_gap_between_golden_and_sqrt_half() {
        // no admissible k at any power: lambda > golden and
        // lambda^2 < 1/2
        let h = holder_bound(0.66).unwrap();
        assert_eq!(h.delta, 0.0);
        assert_eq!((h.k_used, h.boost), (0, 0));
    }
}
