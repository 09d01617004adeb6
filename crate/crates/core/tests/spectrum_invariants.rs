//! Cross-module invariants of the multifractal layer: Legendre
//! identities, ordering of the lower/upper bounds around the exact
//! curve, their tightening toward lambda = 1/2, and the coarse
//! box-counting route agreeing with the exact spectrum where both
//! apply.

use bcmf_core::expansions::{multinacci_k_max, Params};
use bcmf_core::measure::mesh_profile;
use bcmf_core::spectrum::{
    coarse_spectrum, default_q_grid, holder_bound, lambda_k_max, lower_bound_curve,
    lower_default_k, osc_spectrum_point, spectrum_curve, upper_bound_curve,
};
use proptest::prelude::*;

fn normalized(raw: Vec<f64>) -> Vec<f64> {
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|w| w / sum).collect()
}

proptest! {
    #[test]
    fn legendre_identities_hold_for_random_systems(
        raw in prop::collection::vec(0.05f64..1.0, 2..5),
        rho in 0.1f64..0.9,
    ) {
        let w = normalized(raw);
        // q = 1 touches the diagonal: f(1) = alpha(1)
        let p1 = osc_spectrum_point(&w, rho, 1.0).unwrap();
        prop_assert!((p1.f - p1.alpha).abs() < 1e-10);
        // q = 0 tops out at the similarity dimension of the system
        let p0 = osc_spectrum_point(&w, rho, 0.0).unwrap();
        prop_assert!((p0.f - (w.len() as f64).ln() / -rho.ln()).abs() < 1e-10);
        // alpha is nonincreasing in q
        let mut prev = f64::INFINITY;
        for q in -5..=5 {
            let a = osc_spectrum_point(&w, rho, q as f64).unwrap().alpha;
            prop_assert!(a <= prev + 1e-12);
            prev = a;
        }
    }

    #[test]
    fn run_length_ladder_dominates_the_multinacci_ladder(
        lambda in 0.505f64..0.615,
    ) {
        // the spectrum window test 2l - 1 < l^(k-1)(1 - l) admits every
        // k the word construction 2l - 1 < l^(k+1) does
        let spectrum_k = lambda_k_max(lambda).unwrap().unwrap();
        let words_k = multinacci_k_max(lambda).unwrap();
        prop_assert!(spectrum_k >= words_k);
    }
}

#[test]
fn lower_bound_stays_below_upper_bound() {
    let q_grid = default_q_grid();
    for lambda in [0.501, 0.5001] {
        for p in [1.0 / 3.0, 0.5] {
            let k = lower_default_k(lambda).unwrap();
            let lower = lower_bound_curve(lambda, p, k, &q_grid).unwrap();
            // evaluate the upper bound exactly at the lower curve's
            // alpha values; interpolating it between foreign grid
            // nodes would blur its sharp edges
            let alphas: Vec<f64> = lower.points.iter().map(|pt| pt.alpha).collect();
            let upper = upper_bound_curve(lambda, p, &alphas).unwrap();
            let mut checked = 0;
            for pt in &lower.points {
                if let Some(up) = upper.f_at_alpha(pt.alpha) {
                    assert!(
                        pt.f <= up + 1e-9,
                        "lower {} above upper {} at alpha {} ({lambda}, {p})",
                        pt.f,
                        up,
                        pt.alpha
                    );
                    checked += 1;
                }
            }
            assert!(checked > 0, "curves never overlapped at ({lambda}, {p})");
        }
    }
}

#[test]
fn both_bounds_tighten_toward_the_exact_curve() {
    // the upper bound at a fixed alpha falls as lambda drops to 1/2
    let at = |lambda: f64| upper_bound_curve(lambda, 1.0 / 3.0, &[1.2]).unwrap().points[0].f;
    let (u1, u2, u3) = (at(0.51), at(0.501), at(0.5001));
    assert!(u1 > u2 && u2 > u3, "{u1} > {u2} > {u3} failed");

    // and the lower bound climbs toward the exact binomial value
    let exact = spectrum_curve(&[1.0 / 3.0, 2.0 / 3.0], 0.5, &default_q_grid()).unwrap();
    let e = exact.f_at_alpha(1.0).unwrap();
    let gap_at = |lambda: f64| {
        let k = lower_default_k(lambda).unwrap();
        let lo = lower_bound_curve(lambda, 1.0 / 3.0, k, &default_q_grid()).unwrap();
        e - lo.f_at_alpha(1.0).unwrap()
    };
    let (d1, d2) = (gap_at(0.501), gap_at(0.5001));
    assert!(d1 > d2 && d2 > 0.0, "lower-bound gap {d1} -> {d2}");
}

#[test]
fn lower_bound_peak_is_the_subsystem_dimension() {
    for lambda in [0.5005, 0.501, 0.502] {
        let k = lower_default_k(lambda).unwrap();
        let m = k / 2;
        let expect = ((1u64 << m) as f64 - 2.0).ln() / (m as f64 * lambda.ln().abs());
        for p in [0.25, 1.0 / 3.0] {
            let c = lower_bound_curve(lambda, p, k, &default_q_grid()).unwrap();
            assert!(
                (c.max_f() - expect).abs() < 1e-9,
                "peak {} vs {} at ({lambda}, {p})",
                c.max_f(),
                expect
            );
        }
    }
}

#[test]
fn coarse_route_tracks_the_exact_spectrum_at_half() {
    let params = Params::new(0.5, 1.0 / 3.0).unwrap();
    let r_list = [0.5f64.powi(8), 0.5f64.powi(9), 0.5f64.powi(10)];
    let probes = [0.92, 1.085, 1.25];
    let coarse = coarse_spectrum(&params, &r_list, &probes, 0.05, 40).unwrap();
    let exact = spectrum_curve(&[1.0 / 3.0, 2.0 / 3.0], 0.5, &default_q_grid()).unwrap();
    for &alpha in &probes {
        let c = coarse.f_at_alpha(alpha).unwrap();
        let e = exact.f_at_alpha(alpha).unwrap();
        assert!(
            (c - e).abs() < 0.2,
            "coarse {c} vs exact {e} at alpha {alpha}"
        );
    }
}

#[test]
fn mesh_maxima_decay_at_least_at_the_certified_rate() {
    // nu(B(x, r)) <= C r^delta forces the fitted exponent of the mesh
    // maxima to stay above delta, up to finite-range slack
    for lambda in [0.51, 0.55, 0.6] {
        let params = Params::new(lambda, 0.5).unwrap();
        let delta = holder_bound(lambda).unwrap().delta;
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for k in 6..=10 {
            let r = 0.5f64.powi(k);
            let profile = mesh_profile(&params, r, 20).unwrap();
            let max_hi = profile
                .cells
                .iter()
                .map(|c| c.enclosure.hi)
                .fold(0.0f64, f64::max);
            xs.push(r.ln());
            ys.push(max_hi.ln());
        }
        let n = xs.len() as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        let slope = sxy / sxx;
        assert!(
            slope >= delta - 0.02,
            "lambda {lambda}: fitted decay {slope} below certified {delta}"
        );
    }
}
