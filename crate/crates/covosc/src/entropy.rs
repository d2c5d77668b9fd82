//! Entropy of the boosted hadron after tracing out the time separation.
//!
//! The time-separation variable is not observed, so the physical state of
//! the longitudinal coordinate is the reduced density kernel
//!
//! ```text
//! ρ_η(z, z') = ∫ ψ_η(z, t) ψ_η(z', t) dt,
//! ```
//!
//! a mixed state for every η ≠ 0. Its spectrum is geometric,
//! p_n = (1−λ) λⁿ with λ = tanh²η, and the von Neumann entropy
//! S = −Σ p_n ln p_n has the closed form
//!
//! ```text
//! S(η) = 2 { cosh²η · ln(cosh η) − sinh²η · ln|sinh η| },
//! ```
//!
//! which is exactly the entropy of a thermally populated oscillator once
//! the boost and the temperature are identified through
//! tanh²η = exp(−1/T) (units ħω/k = 1):
//!
//! ```text
//! S(T) = x/(eˣ − 1) − ln(1 − e^{−x}),   x = 1/T.
//! ```
//!
//! The numerical route (quadrature kernel → symmetric eigenproblem →
//! spectrum entropy) and the closed forms validate each other; nothing
//! here assumes the geometric law, it is reproduced.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::kinematics::Rapidity;
use crate::oscillator::{boosted_ground_state, GridSpec};
use crate::SpacetimePoint;

/// Gate on |weighted trace − 1| for reduced kernels.
pub const TRACE_TOLERANCE: f64 = 1e-8;

/// Eigenvalues in [−EIGENVALUE_FLOOR, 0) are clamped to 0; anything below
/// −EIGENVALUE_FLOOR means the grid was inadequate.
pub const EIGENVALUE_FLOOR: f64 = 1e-10;

/// Probabilities below this contribute only underflow noise to −p ln p and
/// are skipped.
pub const PROBABILITY_CUTOFF: f64 = 1e-15;

/// Reduced density matrix ρ(z_i, z_j) sampled on a grid, with the
/// trapezoid weights that make Σ w_i ρ_ii the trace.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityKernel {
    grid: GridSpec,
    matrix: DMatrix<f64>,
    weights: DVector<f64>,
}

impl DensityKernel {
    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn weights(&self) -> &DVector<f64> {
        &self.weights
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }

    /// Σ w_i ρ_ii, the quadrature approximation of Tr ρ = 1.
    pub fn weighted_trace(&self) -> f64 {
        (0..self.grid.n_points())
            .map(|i| self.weights[i] * self.matrix[(i, i)])
            .sum()
    }
}

/// Integrates the time separation out of |ψ_η⟩⟨ψ_η|:
/// ρ(z_i, z_j) = Σ_k w_k ψ_η(z_i, t_k) ψ_η(z_j, t_k), with the t grid
/// carrying the same spec as the z grid.
///
/// The kernel is exactly symmetric by construction. Rejects grids whose
/// weighted trace strays from 1 by more than [`TRACE_TOLERANCE`].
pub fn reduce_over_time(rapidity: Rapidity, grid: GridSpec) -> Result<DensityKernel> {
    let n = grid.n_points();
    let z = grid.points();
    let w = grid.trapezoid_weights();

    // psi[i][k] = ψ_η(z_i, t_k); the t grid reuses the z spec.
    let psi: Vec<Vec<f64>> = z
        .iter()
        .map(|&zi| {
            z.iter()
                .map(|&tk| boosted_ground_state(SpacetimePoint::new(zi, tk), rapidity))
                .collect()
        })
        .collect();

    let mut matrix = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let mut acc = 0.0;
            for k in 0..n {
                acc += w[k] * psi[i][k] * psi[j][k];
            }
            matrix[(i, j)] = acc;
            matrix[(j, i)] = acc;
        }
    }

    let kernel = DensityKernel {
        grid,
        matrix,
        weights: DVector::from_vec(w),
    };
    let defect = (kernel.weighted_trace() - 1.0).abs();
    if defect > TRACE_TOLERANCE {
        return Err(Error::InsufficientGrid {
            defect,
            tolerance: TRACE_TOLERANCE,
        });
    }
    Ok(kernel)
}

/// Eigenvalue distribution of a reduced state: probabilities in [0, 1],
/// sorted descending, renormalized to unit sum.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilitySpectrum {
    probs: Vec<f64>,
}

impl ProbabilitySpectrum {
    /// Builds a spectrum from raw eigenvalues, applying the hygiene rules:
    /// values in [−EIGENVALUE_FLOOR, 0) clamp to 0, values below the floor
    /// are rejected, the result is sorted descending and renormalized.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidSpectrum {
                reason: "empty spectrum".to_string(),
            });
        }
        let mut probs = Vec::with_capacity(values.len());
        for &v in &values {
            if !v.is_finite() {
                return Err(Error::InvalidSpectrum {
                    reason: format!("nonfinite probability {v}"),
                });
            }
            if v < -EIGENVALUE_FLOOR {
                return Err(Error::IndefiniteKernel {
                    value: v,
                    floor: EIGENVALUE_FLOOR,
                });
            }
            if v > 1.0 + EIGENVALUE_FLOOR {
                return Err(Error::InvalidSpectrum {
                    reason: format!("probability {v} exceeds 1"),
                });
            }
            probs.push(v.clamp(0.0, 1.0));
        }
        probs.sort_unstable_by(|a, b| b.total_cmp(a));
        let sum: f64 = probs.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidSpectrum {
                reason: "spectrum sums to zero".to_string(),
            });
        }
        for p in &mut probs {
            *p /= sum;
        }
        Ok(ProbabilitySpectrum { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.probs.iter().sum()
    }
}

/// Diagonalizes the weighted kernel M_ij = √w_i ρ_ij √w_j, whose
/// eigenvalues are the occupation probabilities of the reduced state.
pub fn density_spectrum(kernel: &DensityKernel) -> Result<ProbabilitySpectrum> {
    let n = kernel.grid().n_points();
    let sw: Vec<f64> = (0..n).map(|i| kernel.weights()[i].sqrt()).collect();
    let m = DMatrix::from_fn(n, n, |i, j| sw[i] * kernel.value(i, j) * sw[j]);
    let eigen = nalgebra::SymmetricEigen::try_new(m, f64::EPSILON, 100_000)
        .ok_or(Error::EigensolverFailure { size: n })?;
    ProbabilitySpectrum::new(eigen.eigenvalues.iter().copied().collect())
}

/// Von Neumann entropy S = −Σ p ln p, with 0·ln 0 = 0 and probabilities
/// below [`PROBABILITY_CUTOFF`] skipped.
pub fn von_neumann_entropy(spectrum: &ProbabilitySpectrum) -> f64 {
    spectrum
        .probs()
        .iter()
        .filter(|&&p| p >= PROBABILITY_CUTOFF)
        .map(|&p| -p * p.ln())
        .sum()
}

/// Closed-form entropy of the reduced state,
/// S(η) = 2 { cosh²η ln(cosh η) − sinh²η ln|sinh η| }.
///
/// Even in η; S(0) = 0 is the pure-state limit (the sinh²·ln|sinh| term
/// vanishes there).
pub fn entropy_closed_form(rapidity: Rapidity) -> f64 {
    let eta = rapidity.eta();
    let sh = eta.sinh().abs();
    if sh == 0.0 {
        return 0.0;
    }
    let ch = eta.cosh();
    2.0 * (ch * ch * ch.ln() - sh * sh * sh.ln())
}

/// Temperature paired with its dimensionless inverse x = 1/T
/// (units ħω/k = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalPoint {
    temperature: f64,
}

impl ThermalPoint {
    /// A strictly positive, finite temperature.
    pub fn new(temperature: f64) -> Result<Self> {
        if !temperature.is_finite() || temperature <= 0.0 {
            return Err(Error::NonPositiveTemperature { temperature });
        }
        Ok(ThermalPoint { temperature })
    }

    /// The T = 0 boundary reached as η → 0.
    pub fn absolute_zero() -> Self {
        ThermalPoint { temperature: 0.0 }
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// x = 1/T; +∞ at the T = 0 boundary.
    pub fn inverse_temperature(&self) -> f64 {
        1.0 / self.temperature
    }
}

/// Temperature equivalent of a boost: tanh²η = exp(−1/T), so
/// T = −1/ln(tanh²η). Returns the T = 0 boundary point at η = 0.
pub fn temperature_from_rapidity(rapidity: Rapidity) -> ThermalPoint {
    let lambda = rapidity.beta() * rapidity.beta();
    if lambda == 0.0 {
        return ThermalPoint::absolute_zero();
    }
    ThermalPoint {
        temperature: -1.0 / lambda.ln(),
    }
}

/// Boost equivalent of a temperature: η = atanh(exp(−1/(2T))).
pub fn rapidity_from_temperature(point: &ThermalPoint) -> Rapidity {
    if point.temperature() == 0.0 {
        return Rapidity::ZERO;
    }
    let beta = (-0.5 * point.inverse_temperature()).exp();
    Rapidity::from_beta(beta).expect("exp(-1/(2T)) < 1 for T > 0")
}

/// Entropy of a thermally populated oscillator,
/// S = x/(eˣ − 1) − ln(1 − e^{−x}) with x = 1/T.
///
/// Coincides with [`entropy_closed_form`] under the boost–temperature
/// identification. Zero at the T = 0 boundary.
pub fn thermal_entropy(point: &ThermalPoint) -> f64 {
    let x = point.inverse_temperature();
    if !x.is_finite() {
        return 0.0;
    }
    x / x.exp_m1() - (-(-x).exp()).ln_1p()
}

/// Analytic derivative dS/dx of the thermal entropy,
/// dS/dx = −x eˣ/(eˣ − 1)².
pub fn thermal_entropy_derivative(x: f64) -> f64 {
    let em1 = x.exp_m1();
    -x * x.exp() / (em1 * em1)
}

/// One row of the velocity–temperature correspondence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityTemperaturePoint {
    pub temperature: f64,
    /// β² = tanh²η = exp(−1/T).
    pub beta_squared: f64,
    pub eta: f64,
}

/// Tabulates β²(T) = exp(−1/T) over the given temperatures, sorted
/// ascending in T. All temperatures must be positive.
pub fn velocity_temperature_curve(temperatures: &[f64]) -> Result<Vec<VelocityTemperaturePoint>> {
    let mut rows = Vec::with_capacity(temperatures.len());
    for &t in temperatures {
        let point = ThermalPoint::new(t)?;
        rows.push(VelocityTemperaturePoint {
            temperature: t,
            beta_squared: (-point.inverse_temperature()).exp(),
            eta: rapidity_from_temperature(&point).eta(),
        });
    }
    rows.sort_unstable_by(|a, b| a.temperature.total_cmp(&b.temperature));
    Ok(rows)
}
