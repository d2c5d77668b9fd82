//! Momentum-space squeeze and the parton longitudinal density.
//!
//! The momentum-separation wave function of the oscillator has the same
//! functional form as the space-time one and squeezes the same way under
//! boosts: both distributions concentrate along their light-cone axes as
//! η grows. The longitudinal parton density is the marginal of |φ_η|²
//! along the expanding light-cone momentum axis q_u; its width grows like
//! e^η, which is the spreading momentum distribution of the parton
//! picture.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::kinematics::Rapidity;
use crate::oscillator::{GridSpec, SampledField2D, MASS_DEFECT_TOLERANCE};

pub use crate::kinematics::MomentumPoint;

/// Per-axis resolution of the cone-fraction quadrature.
const CONCENTRATION_GRID_POINTS: usize = 512;

/// Policy extent required of a parton axis: ±6·e^{|η|}.
fn required_axis_half_width(rapidity: Rapidity) -> f64 {
    6.0 * rapidity.eta().abs().exp()
}

/// Squeezed Gaussian amplitude in light-cone components,
/// π^{−1/2} exp{−(e^{−2η} a² + e^{2η} b²)/2}.
fn squeezed_lightcone_amplitude(a: f64, b: f64, rapidity: Rapidity) -> f64 {
    let eta = rapidity.eta();
    let exponent = (-2.0 * eta).exp() * a * a + (2.0 * eta).exp() * b * b;
    std::f64::consts::PI.powf(-0.5) * (-0.5 * exponent).exp()
}

/// Boosted momentum-space wave function
/// φ_η(q_z, q_0) = π^{−1/2} exp{−(e^{−2η} q_u² + e^{2η} q_v²)/2},
/// with q_u = (q_z + q_0)/√2 and q_v = (q_z − q_0)/√2.
///
/// Same functional form and same squeeze direction as the space-time
/// wave function.
pub fn boosted_momentum_state(q: MomentumPoint, rapidity: Rapidity) -> f64 {
    let (q_u, q_v) = q.lightcone_components();
    squeezed_lightcone_amplitude(q_u, q_v, rapidity)
}

/// Samples |φ_η(q_z, q_0)|² on the given momentum grids; the momentum-space
/// mirror of the space-time probability grid.
pub fn sample_momentum_probability_grid(
    rapidity: Rapidity,
    grid_qz: GridSpec,
    grid_q0: GridSpec,
) -> Result<SampledField2D> {
    let qz = grid_qz.points();
    let q0 = grid_q0.points();
    let values = DMatrix::from_fn(grid_qz.n_points(), grid_q0.n_points(), |i, j| {
        let phi = boosted_momentum_state(MomentumPoint::new(qz[i], q0[j]), rapidity);
        phi * phi
    });
    SampledField2D::new_checked(grid_qz, grid_q0, values)
}

/// Longitudinal momentum density of partons at a given boost: the marginal
/// of |φ_η|² along q_u, normalized to unit quadrature mass.
#[derive(Debug, Clone, PartialEq)]
pub struct PartonDensity {
    grid: GridSpec,
    axis: Vec<f64>,
    density: Vec<f64>,
    eta: Rapidity,
}

impl PartonDensity {
    /// Light-cone momentum values q_u.
    pub fn axis(&self) -> &[f64] {
        &self.axis
    }

    pub fn density(&self) -> &[f64] {
        &self.density
    }

    pub fn eta(&self) -> Rapidity {
        self.eta
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    /// Σ w_i density_i; 1 after construction.
    pub fn quadrature_norm(&self) -> f64 {
        let w = self.grid.trapezoid_weights();
        (0..self.axis.len()).map(|i| w[i] * self.density[i]).sum()
    }

    /// Discrete mean of q_u; zero by parity.
    pub fn mean(&self) -> f64 {
        let w = self.grid.trapezoid_weights();
        let norm = self.quadrature_norm();
        (0..self.axis.len())
            .map(|i| w[i] * self.axis[i] * self.density[i])
            .sum::<f64>()
            / norm
    }

    /// Discrete variance of q_u; e^{2η}/2 in the continuum.
    pub fn variance(&self) -> f64 {
        let w = self.grid.trapezoid_weights();
        let norm = self.quadrature_norm();
        let mean = self.mean();
        (0..self.axis.len())
            .map(|i| {
                let d = self.axis[i] - mean;
                w[i] * d * d * self.density[i]
            })
            .sum::<f64>()
            / norm
    }

    /// The same density against the boost-stabilized variable
    /// x = q_u/(e^η √2), with the density rescaled to stay normalized in x.
    pub fn scaled_variable_table(&self) -> Vec<(f64, f64)> {
        let scale = self.eta.eta().exp() * std::f64::consts::SQRT_2;
        self.axis
            .iter()
            .zip(self.density.iter())
            .map(|(&q, &d)| (q / scale, d * scale))
            .collect()
    }
}

/// Integrates |φ_η|² across the contracted light-cone axis q_v, leaving
/// the longitudinal density over q_u.
///
/// The axis must cover ±6·e^{|η|}; the q_v quadrature runs on a grid
/// matched to the contracted scale 6·e^{−|η|} with the same point count.
pub fn longitudinal_parton_density(rapidity: Rapidity, axis: GridSpec) -> Result<PartonDensity> {
    let required = required_axis_half_width(rapidity);
    if axis.half_width() < required * (1.0 - 1e-12) {
        return Err(Error::AxisTooNarrow {
            half_width: axis.half_width(),
            required,
        });
    }
    let v_grid = GridSpec::contracted_for_rapidity(rapidity, axis.n_points())?;
    let qu = axis.points();
    let qv = v_grid.points();
    let wv = v_grid.trapezoid_weights();

    let mut density: Vec<f64> = qu
        .iter()
        .map(|&u| {
            qv.iter()
                .zip(wv.iter())
                .map(|(&v, &w)| {
                    let phi = squeezed_lightcone_amplitude(u, v, rapidity);
                    w * phi * phi
                })
                .sum()
        })
        .collect();

    let wu = axis.trapezoid_weights();
    let mass: f64 = (0..qu.len()).map(|i| wu[i] * density[i]).sum();
    let defect = (mass - 1.0).abs();
    if defect > MASS_DEFECT_TOLERANCE {
        return Err(Error::InsufficientGrid {
            defect,
            tolerance: MASS_DEFECT_TOLERANCE,
        });
    }
    for d in &mut density {
        *d /= mass;
    }
    Ok(PartonDensity {
        grid: axis,
        axis: qu,
        density,
        eta: rapidity,
    })
}

/// Fraction of the space-time probability |ψ_η|² inside the double cone of
/// the given half-angle about the u light-cone axis, by quadrature on
/// squeeze-matched (u, v) grids.
///
/// Nondecreasing in η and approaching 1 as η → ∞: the squeezed
/// distribution collapses onto the light cone.
pub fn lightcone_concentration(rapidity: Rapidity, cone_half_angle: f64) -> Result<f64> {
    if !cone_half_angle.is_finite()
        || cone_half_angle <= 0.0
        || cone_half_angle >= std::f64::consts::FRAC_PI_4
    {
        return Err(Error::ConeAngleOutOfRange {
            angle: cone_half_angle,
        });
    }
    let eta = rapidity.eta();
    let n = CONCENTRATION_GRID_POINTS;
    let u_grid = GridSpec::new(6.0 * eta.exp(), n)?;
    let v_grid = GridSpec::new(6.0 * (-eta).exp(), n)?;
    let u = u_grid.points();
    let v = v_grid.points();
    let wu = u_grid.trapezoid_weights();
    let wv = v_grid.trapezoid_weights();
    // |ψ_η|² factorizes over (u, v); the π^{−1} prefactor cancels in the ratio.
    let fu: Vec<f64> = u
        .iter()
        .map(|&ui| (-(-2.0 * eta).exp() * ui * ui).exp())
        .collect();
    let fv: Vec<f64> = v
        .iter()
        .map(|&vj| (-(2.0 * eta).exp() * vj * vj).exp())
        .collect();
    let tan_a = cone_half_angle.tan();

    let mut inside = 0.0;
    let mut total = 0.0;
    for i in 0..n {
        let cap = u[i].abs() * tan_a;
        let mut row_inside = 0.0;
        let mut row_total = 0.0;
        for j in 0..n {
            let cell = wv[j] * fv[j];
            row_total += cell;
            if v[j].abs() < cap {
                row_inside += cell;
            }
        }
        inside += wu[i] * fu[i] * row_inside;
        total += wu[i] * fu[i] * row_total;
    }
    Ok(inside / total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscillator::{boosted_ground_state, sample_probability_grid};
    use crate::SpacetimePoint;
    use approx::assert_abs_diff_eq;

    fn density(eta: f64, n: usize) -> PartonDensity {
        let r = Rapidity::new(eta).unwrap();
        let axis = GridSpec::for_rapidity_with_points(r, n).unwrap();
        longitudinal_parton_density(r, axis).unwrap()
    }

    #[test]
    fn rest_frame_momentum_state_at_origin() {
        let phi = boosted_momentum_state(MomentumPoint::new(0.0, 0.0), Rapidity::ZERO);
        assert_abs_diff_eq!(phi, std::f64::consts::PI.powf(-0.5), epsilon = 1e-15);
    }

    #[test]
    fn momentum_state_mirrors_spacetime_state() {
        let r = Rapidity::new(1.3).unwrap();
        for &(a, b) in &[(0.0, 0.0), (1.0, -0.5), (-2.0, 2.0), (0.3, 4.0)] {
            let phi = boosted_momentum_state(MomentumPoint::new(a, b), r);
            let psi = boosted_ground_state(SpacetimePoint::new(a, b), r);
            assert_abs_diff_eq!(phi, psi, epsilon = 1e-15);
        }
    }

    #[test]
    fn rest_frame_marginal_has_half_unit_variance() {
        let d = density(0.0, 512);
        assert_abs_diff_eq!(d.variance(), 0.5, epsilon = 1e-9);
    }

    #[test]
    fn boosted_marginal_variance_follows_the_squeeze() {
        let d = density(1.0, 512);
        assert_abs_diff_eq!(d.variance(), 2.0_f64.exp() / 2.0, epsilon = 1e-6);
    }

    #[test]
    fn marginal_width_ratio_is_exponential() {
        let sigma0 = density(0.0, 512).variance().sqrt();
        for &eta in &[0.5, 1.0, 2.0] {
            let sigma = density(eta, 512).variance().sqrt();
            assert!(
                (sigma / sigma0 - eta.exp()).abs() < 1e-6,
                "eta={eta}: ratio {}",
                sigma / sigma0
            );
        }
    }

    #[test]
    fn marginal_is_normalized_and_centred() {
        for &eta in &[0.0, 0.7, 1.5] {
            let d = density(eta, 512);
            assert!((d.quadrature_norm() - 1.0).abs() < 1e-12);
            assert!(d.mean().abs() < 1e-12);
        }
    }

    #[test]
    fn marginal_width_is_unbounded_in_rapidity() {
        let mut last = 0.0;
        for k in 0..=10 {
            let eta = 0.5 * k as f64;
            let sigma = density(eta, 512).variance().sqrt();
            assert!(sigma > last, "sigma not increasing at eta={eta}");
            last = sigma;
        }
        assert!(last > 100.0 * density(0.0, 512).variance().sqrt());
    }

    #[test]
    fn narrow_axis_is_rejected() {
        let r = Rapidity::new(1.0).unwrap();
        let axis = GridSpec::new(6.0, 512).unwrap(); // needs 6e ≈ 16.3
        assert!(matches!(
            longitudinal_parton_density(r, axis),
            Err(Error::AxisTooNarrow { .. })
        ));
    }

    #[test]
    fn coarse_axis_is_rejected() {
        let r = Rapidity::ZERO;
        let axis = GridSpec::new(6.0, 8).unwrap();
        assert!(matches!(
            longitudinal_parton_density(r, axis),
            Err(Error::InsufficientGrid { .. })
        ));
    }

    #[test]
    fn scaled_variable_is_boost_stabilized() {
        for &eta in &[0.5, 1.0, 2.0] {
            let d = density(eta, 512);
            let table = d.scaled_variable_table();
            // Unit normalization in the scaled variable.
            let w = d.grid().trapezoid_weights();
            let scale = eta.exp() * std::f64::consts::SQRT_2;
            let norm: f64 = (0..table.len()).map(|i| w[i] / scale * table[i].1).sum();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
            // Scaled variance is 1/4 independent of eta: Var(q_u)/(2 e^{2η}).
            let var: f64 = (0..table.len())
                .map(|i| w[i] / scale * table[i].0 * table[i].0 * table[i].1)
                .sum();
            assert_abs_diff_eq!(var, 0.25, epsilon = 1e-6);
        }
    }

    #[test]
    fn momentum_and_spacetime_grids_are_identical() {
        let r = Rapidity::new(1.0).unwrap();
        let g = GridSpec::for_rapidity(r);
        let spacetime = sample_probability_grid(r, g, g).unwrap();
        let momentum = sample_momentum_probability_grid(r, g, g).unwrap();
        assert!(spacetime.max_abs_difference(&momentum) < 1e-14);
    }

    #[test]
    fn rest_frame_cone_fraction_is_angular_measure() {
        // Isotropic density: the double cone of half-angle α holds 2α/π,
        // and by symmetry the same fraction sits about the v axis.
        let alpha = std::f64::consts::PI / 8.0;
        let frac = lightcone_concentration(Rapidity::ZERO, alpha).unwrap();
        assert!(frac > 0.0 && frac < 1.0);
        assert_abs_diff_eq!(frac, 2.0 * alpha / std::f64::consts::PI, epsilon = 1e-3);

        // Independent check of the v-axis cone by direct quadrature.
        let g = GridSpec::new(6.0, 512).unwrap();
        let pts = g.points();
        let w = g.trapezoid_weights();
        let (mut inside, mut total) = (0.0, 0.0);
        for (i, &u) in pts.iter().enumerate() {
            for (j, &v) in pts.iter().enumerate() {
                let cell = w[i] * w[j] * (-(u * u + v * v)).exp();
                total += cell;
                if u.abs() < v.abs() * alpha.tan() {
                    inside += cell;
                }
            }
        }
        assert_abs_diff_eq!(frac, inside / total, epsilon = 1e-3);
    }

    #[test]
    fn cone_fraction_matches_angular_closed_form() {
        // Polar substitution gives fraction = (2/π) atan(e^{2η} tan α).
        let alpha = std::f64::consts::PI / 8.0;
        for &eta in &[0.0, 1.0, 2.0] {
            let frac = lightcone_concentration(Rapidity::new(eta).unwrap(), alpha).unwrap();
            let closed = 2.0 / std::f64::consts::PI * ((2.0 * eta).exp() * alpha.tan()).atan();
            assert!(
                (frac - closed).abs() < 2e-3,
                "eta={eta}: frac={frac}, closed={closed}"
            );
        }
    }

    #[test]
    fn cone_fraction_grows_with_rapidity() {
        let alpha = std::f64::consts::PI / 8.0;
        let f0 = lightcone_concentration(Rapidity::ZERO, alpha).unwrap();
        let f1 = lightcone_concentration(Rapidity::new(1.0).unwrap(), alpha).unwrap();
        let f2 = lightcone_concentration(Rapidity::new(2.0).unwrap(), alpha).unwrap();
        assert!(f2 > f1 && f1 > f0);
        assert!(f2 > 0.95);
    }

    #[test]
    fn cone_fraction_approaches_the_light_cone() {
        let alpha = std::f64::consts::PI / 8.0;
        for &eta in &[1.0, 2.0, 3.0] {
            let frac = lightcone_concentration(Rapidity::new(eta).unwrap(), alpha).unwrap();
            assert!(
                frac > 1.0 - (-eta).exp(),
                "eta={eta}: frac={frac} <= {}",
                1.0 - (-eta).exp()
            );
        }
    }

    #[test]
    fn cone_angle_domain_is_enforced() {
        let r = Rapidity::ZERO;
        assert!(matches!(
            lightcone_concentration(r, 0.0),
            Err(Error::ConeAngleOutOfRange { .. })
        ));
        assert!(lightcone_concentration(r, std::f64::consts::FRAC_PI_4).is_err());
        assert!(lightcone_concentration(r, f64::NAN).is_err());
        assert!(lightcone_concentration(r, 0.3).is_ok());
    }
}
