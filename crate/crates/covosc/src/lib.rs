//! Covariant harmonic-oscillator model of a two-quark hadron.
//!
//! A hadron bound by an oscillator force carries, besides the longitudinal
//! separation z between its quarks, a time separation t that ordinary
//! quantum mechanics never measures. The normalized ground state is a
//! round Gaussian in the (z, t) plane; a Lorentz boost squeezes it along
//! the light-cone axes while preserving its area and normalization. This
//! crate implements that model end to end:
//!
//! * [`kinematics`] — hadron/relative variables, light-cone coordinates,
//!   boosts, rapidity/velocity conversions;
//! * [`oscillator`] — Hermite levels, the ground state and its squeezed
//!   form, grid sampling, squeeze-ellipse geometry;
//! * [`entropy`] — the reduced density kernel obtained by integrating out
//!   the time separation, its geometric spectrum, the closed-form von
//!   Neumann entropy, and the boost–temperature correspondence
//!   tanh²η = exp(−1/T);
//! * [`parton`] — the momentum-space squeeze, light-cone concentration,
//!   and the longitudinal parton density whose width grows like e^η;
//! * [`validate`] — a deterministic suite checking every identity the
//!   model satisfies against independent numerical routes.
//!
//! Everything is a pure function of its inputs in natural units
//! (ħ = ω = c = k = 1); results are independent of threading and safe to
//! call concurrently.

pub mod entropy;
pub mod error;
pub mod kinematics;
pub mod oscillator;
pub mod parton;
pub mod validate;

pub use error::{Error, Result};
pub use kinematics::{
    LightconePoint, MomentumPoint, QuarkPairCoordinates, QuarkPairMomenta, Rapidity,
    SpacetimePoint,
};
pub use oscillator::{EllipseGeometry, GridSpec, LightconeAxis, SampledField2D};
pub use entropy::{DensityKernel, ProbabilitySpectrum, ThermalPoint, VelocityTemperaturePoint};
pub use parton::PartonDensity;
