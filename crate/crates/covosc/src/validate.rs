//! Self-check suite: every cross-route identity the model satisfies,
//! evaluated at pinned tolerances.
//!
//! Each check compares two independent routes to the same quantity
//! (quadrature pipeline vs closed form, spectrum vs geometric law,
//! boost entropy vs thermal entropy, space-time vs momentum squeeze) and
//! reports the worst observed deviation against its tolerance. The suite
//! is deterministic: randomized checks draw from a fixed-seed generator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entropy::{
    density_spectrum, entropy_closed_form, reduce_over_time, temperature_from_rapidity,
    thermal_entropy, velocity_temperature_curve, von_neumann_entropy,
};
use crate::error::Result;
use crate::kinematics::{Rapidity, SpacetimePoint};
use crate::oscillator::{sample_probability_grid, GridSpec};
use crate::parton::{longitudinal_parton_density, sample_momentum_probability_grid};

/// Grid resolutions used by the suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Per-axis points for reduced-kernel checks.
    pub kernel_points: usize,
    /// Per-axis points for sampled-field and marginal checks.
    pub field_points: usize,
    /// Random draws for the kinematics property check.
    pub sample_count: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            kernel_points: 256,
            field_points: 1024,
            sample_count: 1000,
        }
    }
}

impl SuiteConfig {
    /// Default resolutions with every grid overridden to `n_points`.
    pub fn with_points(n_points: usize) -> Self {
        SuiteConfig {
            kernel_points: n_points,
            field_points: n_points,
            ..SuiteConfig::default()
        }
    }
}

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub detail: String,
    /// Worst observed deviation (NaN when the computation itself failed).
    pub observed: f64,
    pub tolerance: f64,
    pub passed: bool,
}

fn outcome(id: &'static str, tolerance: f64, result: Result<(f64, String)>) -> CheckOutcome {
    match result {
        Ok((observed, detail)) => CheckOutcome {
            id,
            detail,
            observed,
            tolerance,
            passed: observed.is_finite() && observed <= tolerance,
        },
        Err(err) => CheckOutcome {
            id,
            detail: format!("computation failed: {err}"),
            observed: f64::NAN,
            tolerance,
            passed: false,
        },
    }
}

fn check_normalization(config: &SuiteConfig) -> CheckOutcome {
    outcome("normalization-invariance", 1e-8, (|| {
        let mut worst = 0.0_f64;
        for &eta in &[0.0, 1.0, 2.0] {
            let r = Rapidity::new(eta)?;
            let g = GridSpec::for_rapidity_with_points(r, config.field_points)?;
            let mass = sample_probability_grid(r, g, g)?.quadrature_mass();
            worst = worst.max((mass - 1.0).abs());
        }
        Ok((
            worst,
            format!(
                "max |quadrature mass - 1| of |psi_eta|^2 over eta in {{0, 1, 2}}, \
                 boost-scaled grids, N={}",
                config.field_points
            ),
        ))
    })())
}

fn check_squeeze_law(config: &SuiteConfig) -> CheckOutcome {
    outcome("squeeze-moment-law", 1e-6, (|| {
        let rest = Rapidity::ZERO;
        let g0 = GridSpec::for_rapidity_with_points(rest, config.field_points)?;
        let (u20, _) = sample_probability_grid(rest, g0, g0)?.lightcone_second_moments();
        let sigma0 = longitudinal_parton_density(rest, g0)?.variance().sqrt();
        let mut worst = 0.0_f64;
        for &eta in &[0.5, 1.0, 2.0] {
            let r = Rapidity::new(eta)?;
            let g = GridSpec::for_rapidity_with_points(r, config.field_points)?;
            let (u2, _) = sample_probability_grid(r, g, g)?.lightcone_second_moments();
            worst = worst.max((u2 / u20 - (2.0 * eta).exp()).abs());
            let sigma = longitudinal_parton_density(r, g)?.variance().sqrt();
            worst = worst.max((sigma / sigma0 - eta.exp()).abs());
        }
        Ok((
            worst,
            format!(
                "max deviation of <u^2> ratio from e^(2 eta) and parton width ratio \
                 from e^eta, eta in {{0.5, 1, 2}}, N={}",
                config.field_points
            ),
        ))
    })())
}

fn check_entropy_oracle(config: &SuiteConfig) -> CheckOutcome {
    outcome("entropy-oracle-agreement", 1e-3, (|| {
        let mut worst = 0.0_f64;
        for &eta in &[0.0, 0.5, 1.0, 1.5] {
            let r = Rapidity::new(eta)?;
            let g = GridSpec::for_rapidity_with_points(r, config.kernel_points)?;
            let numeric = von_neumann_entropy(&density_spectrum(&reduce_over_time(r, g)?)?);
            worst = worst.max((numeric - entropy_closed_form(r)).abs());
        }
        Ok((
            worst,
            format!(
                "max |S_numeric - S_closed| over eta in {{0, 0.5, 1, 1.5}}, N={}",
                config.kernel_points
            ),
        ))
    })())
}

/// Independent oracle: entropy of the geometric spectrum (1−λ)λⁿ summed to
/// convergence.
fn geometric_series_entropy(eta: f64) -> f64 {
    let lambda = eta.tanh() * eta.tanh();
    if lambda == 0.0 {
        return 0.0;
    }
    let mut total = 0.0;
    let mut p = 1.0 - lambda;
    while p > 1e-18 {
        total -= p * p.ln();
        p *= lambda;
    }
    total
}

fn check_entropy_spot_values() -> CheckOutcome {
    outcome("entropy-spot-values", 1e-5, (|| {
        let at_rest = entropy_closed_form(Rapidity::ZERO).abs();
        let unit = Rapidity::new(1.0)?;
        let against_series = (entropy_closed_form(unit) - geometric_series_entropy(1.0)).abs();
        Ok((
            at_rest.max(against_series),
            "S(0) = 0 and |S(1) - geometric-series entropy| (series summed to 1e-18)"
                .to_string(),
        ))
    })())
}

fn check_geometric_spectrum(config: &SuiteConfig) -> CheckOutcome {
    outcome("geometric-spectrum", 1e-3, (|| {
        let r = Rapidity::new(1.0)?;
        let g = GridSpec::for_rapidity_with_points(r, config.kernel_points)?;
        let spectrum = density_spectrum(&reduce_over_time(r, g)?)?;
        let lambda = r.beta() * r.beta();
        let mut worst = 0.0_f64;
        for n in 0..5 {
            let expected = (1.0 - lambda) * lambda.powi(n as i32);
            worst = worst.max((spectrum.probs()[n] - expected).abs());
        }
        Ok((
            worst,
            format!(
                "max |p_n - (1-lambda) lambda^n| over the first 5 eigenvalues at eta=1, \
                 lambda=tanh^2(1), N={}",
                config.kernel_points
            ),
        ))
    })())
}

fn check_thermal_identity() -> CheckOutcome {
    outcome("thermal-identity", 1e-12, (|| {
        let mut worst = 0.0_f64;
        for k in 0..100 {
            let eta = 0.05 + (3.0 - 0.05) * (k as f64) / 99.0;
            let r = Rapidity::new(eta)?;
            let boost_route = entropy_closed_form(r);
            let thermal_route = thermal_entropy(&temperature_from_rapidity(r));
            worst = worst.max((boost_route - thermal_route).abs());
        }
        Ok((
            worst,
            "max |S(eta) - S(T(eta))| over 100 points eta in [0.05, 3]".to_string(),
        ))
    })())
}

fn check_velocity_curve_law() -> CheckOutcome {
    outcome("velocity-curve-law", 1e-14, (|| {
        let temps: Vec<f64> = (0..60).map(|k| 0.05 + 3.0 * (k as f64) / 59.0).collect();
        let rows = velocity_temperature_curve(&temps)?;
        let mut worst = 0.0_f64;
        for row in &rows {
            worst = worst.max((row.beta_squared - (-1.0 / row.temperature).exp()).abs());
        }
        for pair in rows.windows(2) {
            if pair[1].beta_squared <= pair[0].beta_squared {
                worst = f64::INFINITY;
            }
        }
        let half = velocity_temperature_curve(&[1.0 / 2.0_f64.ln()])?[0].beta_squared;
        worst = worst.max((half - 0.5).abs());
        Ok((
            worst,
            "beta^2 = exp(-1/T) over the emitted table, strictly increasing, \
             and beta^2(1/ln 2) = 1/2"
                .to_string(),
        ))
    })())
}

fn check_velocity_curve_inflection() -> CheckOutcome {
    outcome("velocity-curve-inflection", 1e-2, (|| {
        // Bisect the sign change of the second finite difference of
        // beta^2(T) = exp(-1/T).
        let f = |t: f64| (-1.0 / t).exp();
        let h = 1e-4;
        let fd2 = |t: f64| (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
        let (mut lo, mut hi) = (0.2, 1.2);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if fd2(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let inflection = 0.5 * (lo + hi);
        Ok((
            (inflection - 0.5).abs(),
            format!(
                "finite-difference inflection of beta^2(T) at T = {inflection:.6}; \
                 a derived proxy locating the curve's rapid rise, not a closed-form output"
            ),
        ))
    })())
}

fn check_duality(config: &SuiteConfig) -> CheckOutcome {
    outcome("position-momentum-duality", 1e-14, (|| {
        let r = Rapidity::new(1.0)?;
        let g = GridSpec::for_rapidity_with_points(r, config.field_points)?;
        let spacetime = sample_probability_grid(r, g, g)?;
        let momentum = sample_momentum_probability_grid(r, g, g)?;
        Ok((
            spacetime.max_abs_difference(&momentum),
            format!(
                "max elementwise |psi_eta^2 - phi_eta^2| on identical grids at eta=1, N={}",
                config.field_points
            ),
        ))
    })())
}

fn check_kinematics(config: &SuiteConfig) -> CheckOutcome {
    outcome("kinematics-properties", 1e-12, (|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CA5C);
        let mut worst = 0.0_f64;
        for _ in 0..config.sample_count {
            let p = SpacetimePoint::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
            let r1 = Rapidity::new(rng.random_range(-1.25..1.25))?;
            let r2 = Rapidity::new(rng.random_range(-1.25..1.25))?;

            // Light-cone roundtrip identity.
            let back = p.to_lightcone().to_spacetime();
            worst = worst.max((back.z - p.z).abs().max((back.t - p.t).abs()));

            // Boost group law.
            let two_step = p.boost(r1).boost(r2);
            let one_step = p.boost(r1.compose(r2));
            worst = worst.max(
                (two_step.z - one_step.z)
                    .abs()
                    .max((two_step.t - one_step.t).abs()),
            );

            // Invariant light-cone product.
            let lc = p.to_lightcone();
            let boosted = lc.boost(r1);
            worst = worst.max((boosted.u * boosted.v - lc.u * lc.v).abs());

            // Path independence of the boost across coordinates.
            let via_spacetime = p.boost(r1).to_lightcone();
            let via_lightcone = p.to_lightcone().boost(r1);
            worst = worst.max(
                (via_spacetime.u - via_lightcone.u)
                    .abs()
                    .max((via_spacetime.v - via_lightcone.v).abs()),
            );
        }
        Ok((
            worst,
            format!(
                "roundtrip, group law, invariant product, path independence on {} \
                 seeded random inputs",
                config.sample_count
            ),
        ))
    })())
}

/// Runs every check at the given resolutions.
pub fn run_suite(config: &SuiteConfig) -> Vec<CheckOutcome> {
    vec![
        check_kinematics(config),
        check_normalization(config),
        check_squeeze_law(config),
        check_entropy_oracle(config),
        check_entropy_spot_values(),
        check_geometric_spectrum(config),
        check_thermal_identity(),
        check_velocity_curve_law(),
        check_velocity_curve_inflection(),
        check_duality(config),
    ]
}

/// Runs every check at the default resolutions.
pub fn run_default_suite() -> Vec<CheckOutcome> {
    run_suite(&SuiteConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let outcomes = run_default_suite();
        assert_eq!(outcomes.len(), 10);
        for check in &outcomes {
            assert!(
                check.passed,
                "{} failed: observed {:e} vs tolerance {:e} ({})",
                check.id, check.observed, check.tolerance, check.detail
            );
        }
    }

    #[test]
    fn degraded_resolution_is_reported() {
        let outcomes = run_suite(&SuiteConfig::with_points(8));
        assert!(outcomes.iter().any(|c| !c.passed));
        // Accuracy gates turn into failed checks, not panics.
        let entropy = outcomes
            .iter()
            .find(|c| c.id == "entropy-oracle-agreement")
            .unwrap();
        assert!(!entropy.passed);
        assert!(entropy.detail.contains("failed") || entropy.observed > entropy.tolerance);
    }

    #[test]
    fn suite_is_deterministic() {
        let a = run_suite(&SuiteConfig::default());
        let b = run_suite(&SuiteConfig::default());
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.id, y.id);
            assert!(
                x.observed == y.observed || (x.observed.is_nan() && y.observed.is_nan()),
                "{}: {} vs {}",
                x.id,
                x.observed,
                y.observed
            );
        }
    }
}
