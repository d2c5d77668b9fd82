//! Harmonic-oscillator wave functions and their Lorentz-squeezed form.
//!
//! The covariant ground state of the quark separation is the round Gaussian
//!
//! ```text
//! ψ(z, t) = π^{−1/2} exp{−(z² + t²)/2},
//! ```
//!
//! normalized over the (z, t) plane. A boost by rapidity η squeezes it
//! along the light-cone axes,
//!
//! ```text
//! ψ_η(z, t) = π^{−1/2} exp{−(e^{−2η} u² + e^{2η} v²)/2},
//! ```
//!
//! preserving the normalization (the light-cone scaling has unit Jacobian)
//! and turning the circular density contours into ellipses of axes
//! (e^{|η|}, e^{−|η|}) with unit area ratio. Excitations exist only along
//! space-like directions, so excited levels are exposed in a single
//! variable ξ; only the ground state is boosted.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::kinematics::{Rapidity, SpacetimePoint};

/// Levels above this order are rejected; the normalized recurrence is
/// certified well within f64 range up to here.
pub const MAX_LEVEL: usize = 64;

/// Fewest points a quadrature grid may carry.
pub const MIN_GRID_POINTS: usize = 8;

/// Default per-axis sample count for field grids.
pub const DEFAULT_GRID_POINTS: usize = 512;

/// Gate on |quadrature mass − 1| for sampled probability grids. Grids that
/// cannot represent the squeezed Gaussian to this accuracy are rejected.
pub const MASS_DEFECT_TOLERANCE: f64 = 1e-4;

/// Half-width multiplier of the grid policy: L = 6·e^{|η|} covers the
/// expanded light-cone axis to six standard deviations.
const POLICY_SIGMAS: f64 = 6.0;

/// Uniform symmetric grid over [−L, L].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    half_width: f64,
    n_points: usize,
}

impl GridSpec {
    pub fn new(half_width: f64, n_points: usize) -> Result<Self> {
        if !half_width.is_finite() || half_width <= 0.0 {
            return Err(Error::InvalidGrid {
                reason: format!("half_width must be positive and finite, got {half_width}"),
            });
        }
        if n_points < MIN_GRID_POINTS {
            return Err(Error::InvalidGrid {
                reason: format!("n_points must be at least {MIN_GRID_POINTS}, got {n_points}"),
            });
        }
        Ok(GridSpec {
            half_width,
            n_points,
        })
    }

    /// Policy grid for a boosted field: L = 6·e^{|η|}, default point count.
    pub fn for_rapidity(rapidity: Rapidity) -> Self {
        Self::for_rapidity_with_points(rapidity, DEFAULT_GRID_POINTS)
            .expect("policy grid parameters are valid")
    }

    /// Policy grid with an explicit point count.
    pub fn for_rapidity_with_points(rapidity: Rapidity, n_points: usize) -> Result<Self> {
        GridSpec::new(POLICY_SIGMAS * rapidity.eta().abs().exp(), n_points)
    }

    /// Grid matched to the contracted light-cone direction: L = 6·e^{−|η|}.
    /// Used when integrating across the narrow axis of a squeezed field.
    pub fn contracted_for_rapidity(rapidity: Rapidity, n_points: usize) -> Result<Self> {
        GridSpec::new(POLICY_SIGMAS * (-rapidity.eta().abs()).exp(), n_points)
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Grid spacing h = 2L/(n−1).
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.n_points - 1) as f64
    }

    /// i-th sample point, computed so that the grid is exactly symmetric:
    /// point(n−1−i) == −point(i).
    pub fn point(&self, i: usize) -> f64 {
        let n = self.n_points as f64;
        self.half_width * (2.0 * i as f64 - (n - 1.0)) / (n - 1.0)
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.point(i)).collect()
    }

    /// Trapezoid quadrature weights: h at interior points, h/2 at the ends.
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        let h = self.spacing();
        let mut w = vec![h; self.n_points];
        w[0] = 0.5 * h;
        w[self.n_points - 1] = 0.5 * h;
        w
    }
}

/// Normalized Hermite function χ_n(ξ) = (2ⁿ n! √π)^{−1/2} H_n(ξ) e^{−ξ²/2},
/// evaluated by the stable normalized three-term recurrence. Orthonormal
/// under quadrature on an adequate grid.
pub fn hermite_state(n: usize, xi: f64) -> Result<f64> {
    if n > MAX_LEVEL {
        return Err(Error::LevelOutOfRange { n, max: MAX_LEVEL });
    }
    let chi0 = std::f64::consts::PI.powf(-0.25) * (-0.5 * xi * xi).exp();
    if n == 0 {
        return Ok(chi0);
    }
    let mut prev = chi0;
    let mut curr = std::f64::consts::SQRT_2 * xi * chi0;
    for k in 1..n {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * xi * curr - (kf / (kf + 1.0)).sqrt() * prev;
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Ground-state wave function ψ(z, t) = π^{−1/2} exp{−(z² + t²)/2}.
pub fn ground_state(p: SpacetimePoint) -> f64 {
    let pi = std::f64::consts::PI;
    pi.powf(-0.5) * (-0.5 * (p.z * p.z + p.t * p.t)).exp()
}

/// Boosted (squeezed) ground state
/// ψ_η(z, t) = π^{−1/2} exp{−(e^{−2η} u² + e^{2η} v²)/2}.
///
/// Reduces to [`ground_state`] at η = 0 and stays normalized for every η.
pub fn boosted_ground_state(p: SpacetimePoint, rapidity: Rapidity) -> f64 {
    let lc = p.to_lightcone();
    let eta = rapidity.eta();
    let pi = std::f64::consts::PI;
    let exponent = (-2.0 * eta).exp() * lc.u * lc.u + (2.0 * eta).exp() * lc.v * lc.v;
    pi.powf(-0.5) * (-0.5 * exponent).exp()
}

/// Probability density |ψ_η|² sampled on a rectangular (z, t) grid, with
/// the quadrature weights implied by the grid specs.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField2D {
    grid_z: GridSpec,
    grid_t: GridSpec,
    values: DMatrix<f64>,
}

impl SampledField2D {
    /// Wraps sampled values, enforcing the quadrature-mass gate shared by
    /// every probability-grid sampler.
    pub(crate) fn new_checked(
        grid_z: GridSpec,
        grid_t: GridSpec,
        values: DMatrix<f64>,
    ) -> Result<Self> {
        let field = SampledField2D {
            grid_z,
            grid_t,
            values,
        };
        let defect = (field.quadrature_mass() - 1.0).abs();
        if defect > MASS_DEFECT_TOLERANCE {
            return Err(Error::InsufficientGrid {
                defect,
                tolerance: MASS_DEFECT_TOLERANCE,
            });
        }
        Ok(field)
    }

    pub fn grid_z(&self) -> GridSpec {
        self.grid_z
    }

    pub fn grid_t(&self) -> GridSpec {
        self.grid_t
    }

    pub fn values(&self) -> &DMatrix<f64> {
        &self.values
    }

    /// Sample at (z_i, t_j).
    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[(i, j)]
    }

    /// Total probability under trapezoid quadrature.
    pub fn quadrature_mass(&self) -> f64 {
        let wz = self.grid_z.trapezoid_weights();
        let wt = self.grid_t.trapezoid_weights();
        let mut total = 0.0;
        for i in 0..self.grid_z.n_points() {
            let mut row = 0.0;
            for j in 0..self.grid_t.n_points() {
                row += wt[j] * self.values[(i, j)];
            }
            total += wz[i] * row;
        }
        total
    }

    /// Second moments ⟨u²⟩ and ⟨v²⟩ along the light-cone axes, normalized
    /// by the quadrature mass.
    pub fn lightcone_second_moments(&self) -> (f64, f64) {
        let wz = self.grid_z.trapezoid_weights();
        let wt = self.grid_t.trapezoid_weights();
        let (mut mass, mut mu2, mut mv2) = (0.0, 0.0, 0.0);
        for i in 0..self.grid_z.n_points() {
            let z = self.grid_z.point(i);
            for j in 0..self.grid_t.n_points() {
                let t = self.grid_t.point(j);
                let w = wz[i] * wt[j] * self.values[(i, j)];
                let u = (z + t) / std::f64::consts::SQRT_2;
                let v = (z - t) / std::f64::consts::SQRT_2;
                mass += w;
                mu2 += w * u * u;
                mv2 += w * v * v;
            }
        }
        (mu2 / mass, mv2 / mass)
    }

    /// Largest elementwise deviation from another field on identical grids.
    pub fn max_abs_difference(&self, other: &SampledField2D) -> f64 {
        assert_eq!(self.values.shape(), other.values.shape());
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Samples |ψ_η(z_i, t_j)|² on the given grids.
///
/// Rejects grids whose quadrature mass deviates from 1 by more than
/// [`MASS_DEFECT_TOLERANCE`] (too narrow, or too coarse to resolve the
/// contracted light-cone axis at this η).
pub fn sample_probability_grid(
    rapidity: Rapidity,
    grid_z: GridSpec,
    grid_t: GridSpec,
) -> Result<SampledField2D> {
    let z = grid_z.points();
    let t = grid_t.points();
    let values = DMatrix::from_fn(grid_z.n_points(), grid_t.n_points(), |i, j| {
        let psi = boosted_ground_state(SpacetimePoint::new(z[i], t[j]), rapidity);
        psi * psi
    });
    SampledField2D::new_checked(grid_z, grid_t, values)
}

/// Axis of the light-cone frame along which a squeezed distribution is
/// elongated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LightconeAxis {
    U,
    V,
}

/// Geometry of the squeezed density contour: an ellipse with axes
/// (e^{|η|}, e^{−|η|}) along the light-cone directions, same area as the
/// rest-frame circle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeometry {
    pub major_axis: f64,
    pub minor_axis: f64,
    /// Axis of elongation: u for η ≥ 0, v for η < 0.
    pub orientation: LightconeAxis,
}

/// Squeeze ellipse of the boosted ground state.
pub fn ellipse_axes(rapidity: Rapidity) -> EllipseGeometry {
    let a = rapidity.eta().abs();
    EllipseGeometry {
        major_axis: a.exp(),
        minor_axis: (-a).exp(),
        orientation: if rapidity.eta() >= 0.0 {
            LightconeAxis::U
        } else {
            LightconeAxis::V
        },
    }
}
