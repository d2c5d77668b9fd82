use thiserror::Error;

/// Errors produced by constructors and numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A rapidity (or a value derived from one) was NaN or infinite.
    #[error("rapidity must be a finite real, got {value}")]
    NonFiniteRapidity { value: f64 },

    /// `|beta| >= 1` has no finite rapidity.
    #[error("superluminal velocity: |beta| must be < 1, got {beta}")]
    SuperluminalVelocity { beta: f64 },

    /// Temperatures are positive in units where the oscillator quantum is 1.
    #[error("temperature must be positive and finite, got {temperature}")]
    NonPositiveTemperature { temperature: f64 },

    /// The normalized Hermite recurrence is only certified up to a fixed order.
    #[error("oscillator level {n} exceeds the stable recurrence bound {max}")]
    LevelOutOfRange { n: usize, max: usize },

    /// Grid parameters violate the basic constraints (positive finite extent,
    /// minimum point count).
    #[error("invalid grid: {reason}")]
    InvalidGrid { reason: String },

    /// The quadrature mass of a sampled distribution strayed too far from 1:
    /// the grid is too narrow or too coarse for the requested boost.
    #[error(
        "insufficient grid accuracy: quadrature mass deviates from 1 by {defect:.3e} \
         (tolerance {tolerance:.1e}); increase half_width and/or n_points"
    )]
    InsufficientGrid { defect: f64, tolerance: f64 },

    /// The marginal axis does not reach the required extent for the boost.
    #[error(
        "axis half_width {half_width} does not cover the boosted distribution; \
         at least {required:.6} is required"
    )]
    AxisTooNarrow { half_width: f64, required: f64 },

    /// A reduced-kernel eigenvalue fell below the tolerated negative noise
    /// floor, signalling an inadequate grid.
    #[error(
        "eigenvalue {value:.3e} below -{floor:.1e}: kernel not positive \
         semidefinite at this resolution"
    )]
    IndefiniteKernel { value: f64, floor: f64 },

    /// The iterative symmetric eigensolver did not converge.
    #[error("symmetric eigensolver failed to converge on a {size}x{size} kernel")]
    EigensolverFailure { size: usize },

    /// A probability outside [0, 1] (beyond clamping noise) was supplied.
    #[error("invalid probability spectrum: {reason}")]
    InvalidSpectrum { reason: String },

    /// The light-cone cone metric is only defined for half-angles in (0, pi/4).
    #[error("cone half-angle must lie in (0, pi/4), got {angle}")]
    ConeAngleOutOfRange { angle: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
