//! Coordinate conventions of the two-quark system.
//!
//! The hadron is described by the pair separation in the (longitudinal,
//! time) plane; transverse coordinates are unaffected by longitudinal
//! boosts and are dropped. A boost by rapidity η acts as
//!
//! ```text
//! z' = z cosh η + t sinh η,   t' = z sinh η + t cosh η,
//! ```
//!
//! which in the light-cone variables u = (z+t)/√2, v = (z−t)/√2 is the
//! reciprocal scaling u' = e^η u, v' = e^{−η} v. All quantities are in
//! natural units (ħ = ω = c = 1).

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};

/// Additive boost parameter η; the boost velocity is β = tanh η.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rapidity {
    eta: f64,
}

impl Rapidity {
    /// The rest frame, η = 0.
    pub const ZERO: Rapidity = Rapidity { eta: 0.0 };

    /// Constructs a rapidity, rejecting NaN and infinities.
    pub fn new(eta: f64) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::NonFiniteRapidity { value: eta });
        }
        Ok(Rapidity { eta })
    }

    /// Rapidity of a subluminal velocity, η = atanh(β). Requires |β| < 1.
    pub fn from_beta(beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta.abs() >= 1.0 {
            return Err(Error::SuperluminalVelocity { beta });
        }
        Rapidity::new(beta.atanh())
    }

    pub fn eta(self) -> f64 {
        self.eta
    }

    /// Boost velocity β = tanh η, always in (−1, 1).
    pub fn beta(self) -> f64 {
        self.eta.tanh()
    }

    /// Rapidity of the inverse boost.
    pub fn inverse(self) -> Self {
        Rapidity { eta: -self.eta }
    }

    /// Composition of collinear boosts is additive in rapidity.
    pub fn compose(self, other: Rapidity) -> Self {
        Rapidity {
            eta: self.eta + other.eta,
        }
    }
}

/// Quark separation in (longitudinal, time) components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint {
    pub z: f64,
    pub t: f64,
}

impl SpacetimePoint {
    pub fn new(z: f64, t: f64) -> Self {
        SpacetimePoint { z, t }
    }

    /// Light-cone coordinates u = (z+t)/√2, v = (z−t)/√2.
    pub fn to_lightcone(self) -> LightconePoint {
        LightconePoint {
            u: (self.z + self.t) / SQRT_2,
            v: (self.z - self.t) / SQRT_2,
        }
    }

    /// Boost along z: z' = z cosh η + t sinh η, t' = z sinh η + t cosh η.
    pub fn boost(self, rapidity: Rapidity) -> Self {
        let (ch, sh) = (rapidity.eta().cosh(), rapidity.eta().sinh());
        SpacetimePoint {
            z: self.z * ch + self.t * sh,
            t: self.z * sh + self.t * ch,
        }
    }
}

/// Quark separation in light-cone coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightconePoint {
    pub u: f64,
    pub v: f64,
}

impl LightconePoint {
    pub fn new(u: f64, v: f64) -> Self {
        LightconePoint { u, v }
    }

    /// Inverse of [`SpacetimePoint::to_lightcone`].
    pub fn to_spacetime(self) -> SpacetimePoint {
        SpacetimePoint {
            z: (self.u + self.v) / SQRT_2,
            t: (self.u - self.v) / SQRT_2,
        }
    }

    /// A boost scales the light-cone axes reciprocally:
    /// u' = e^η u, v' = e^{−η} v. The product u·v is invariant.
    pub fn boost(self, rapidity: Rapidity) -> Self {
        let eta = rapidity.eta();
        LightconePoint {
            u: eta.exp() * self.u,
            v: (-eta).exp() * self.v,
        }
    }
}

impl From<SpacetimePoint> for LightconePoint {
    fn from(p: SpacetimePoint) -> Self {
        p.to_lightcone()
    }
}

impl From<LightconePoint> for SpacetimePoint {
    fn from(p: LightconePoint) -> Self {
        p.to_spacetime()
    }
}

/// Four-momentum restricted to (longitudinal, time) components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentumPoint {
    pub p_z: f64,
    pub p_0: f64,
}

impl MomentumPoint {
    pub fn new(p_z: f64, p_0: f64) -> Self {
        MomentumPoint { p_z, p_0 }
    }

    /// Light-cone momentum components ((p_z+p_0)/√2, (p_z−p_0)/√2).
    pub fn lightcone_components(self) -> (f64, f64) {
        (
            (self.p_z + self.p_0) / SQRT_2,
            (self.p_z - self.p_0) / SQRT_2,
        )
    }
}

/// Space-time positions of the two quarks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarkPairCoordinates {
    pub x_a: SpacetimePoint,
    pub x_b: SpacetimePoint,
}

impl QuarkPairCoordinates {
    pub fn new(x_a: SpacetimePoint, x_b: SpacetimePoint) -> Self {
        QuarkPairCoordinates { x_a, x_b }
    }

    /// Splits the pair into the hadron coordinate X = (x_a + x_b)/2 and the
    /// separation coordinate x = (x_a − x_b)/(2√2).
    pub fn hadron_relative(self) -> (SpacetimePoint, SpacetimePoint) {
        let hadron = SpacetimePoint {
            z: (self.x_a.z + self.x_b.z) / 2.0,
            t: (self.x_a.t + self.x_b.t) / 2.0,
        };
        let relative = SpacetimePoint {
            z: (self.x_a.z - self.x_b.z) / (2.0 * SQRT_2),
            t: (self.x_a.t - self.x_b.t) / (2.0 * SQRT_2),
        };
        (hadron, relative)
    }
}

/// Four-momenta of the two quarks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarkPairMomenta {
    pub p_a: MomentumPoint,
    pub p_b: MomentumPoint,
}

impl QuarkPairMomenta {
    pub fn new(p_a: MomentumPoint, p_b: MomentumPoint) -> Self {
        QuarkPairMomenta { p_a, p_b }
    }

    /// Splits the pair into the hadronic momentum P = p_a + p_b and the
    /// momentum separation q = √2 (p_a − p_b).
    pub fn hadron_relative(self) -> (MomentumPoint, MomentumPoint) {
        let total = MomentumPoint {
            p_z: self.p_a.p_z + self.p_b.p_z,
            p_0: self.p_a.p_0 + self.p_b.p_0,
        };
        let separation = MomentumPoint {
            p_z: SQRT_2 * (self.p_a.p_z - self.p_b.p_z),
            p_0: SQRT_2 * (self.p_a.p_0 - self.p_b.p_0),
        };
        (total, separation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn lightcone_of_symmetric_point() {
        let lc = SpacetimePoint::new(1.0, 1.0).to_lightcone();
        assert_abs_diff_eq!(lc.u, SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(lc.v, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn lightcone_of_origin_is_origin() {
        let lc = SpacetimePoint::new(0.0, 0.0).to_lightcone();
        assert_eq!((lc.u, lc.v), (0.0, 0.0));
    }

    #[test]
    fn lightcone_of_unit_z() {
        let lc = SpacetimePoint::new(1.0, 0.0).to_lightcone();
        assert_abs_diff_eq!(lc.u, 1.0 / SQRT_2, epsilon = 1e-15);
        assert_abs_diff_eq!(lc.v, 1.0 / SQRT_2, epsilon = 1e-15);
    }

    #[test]
    fn spacetime_of_lightcone_inverts() {
        let p = LightconePoint::new(SQRT_2, 0.0).to_spacetime();
        assert_abs_diff_eq!(p.z, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.t, 1.0, epsilon = 1e-15);
        let o = LightconePoint::new(0.0, 0.0).to_spacetime();
        assert_eq!((o.z, o.t), (0.0, 0.0));
    }

    #[test]
    fn lightcone_roundtrip_is_identity() {
        let p = SpacetimePoint::new(0.3, -0.7);
        let back = p.to_lightcone().to_spacetime();
        assert_abs_diff_eq!(back.z, p.z, epsilon = 1e-14);
        assert_abs_diff_eq!(back.t, p.t, epsilon = 1e-14);
    }

    #[test]
    fn identity_boost_fixes_points() {
        let p = SpacetimePoint::new(1.7, -2.3);
        let b = p.boost(Rapidity::ZERO);
        assert_eq!((b.z, b.t), (p.z, p.t));
    }

    #[test]
    fn boost_by_ln2_matches_exact_hyperbolics() {
        // cosh(ln 2) = 5/4 and sinh(ln 2) = 3/4 exactly.
        let r = Rapidity::new(2.0_f64.ln()).unwrap();
        let b = SpacetimePoint::new(1.0, 0.0).boost(r);
        assert_abs_diff_eq!(b.z, 1.25, epsilon = 1e-15);
        assert_abs_diff_eq!(b.t, 0.75, epsilon = 1e-15);
    }

    #[test]
    fn boost_then_inverse_restores_point() {
        let r = Rapidity::new(0.8).unwrap();
        let p = SpacetimePoint::new(0.4, -1.1);
        let back = p.boost(r).boost(r.inverse());
        assert_abs_diff_eq!(back.z, p.z, epsilon = 1e-14);
        assert_abs_diff_eq!(back.t, p.t, epsilon = 1e-14);
    }

    #[test]
    fn lightcone_boost_scales_reciprocally() {
        let r = Rapidity::new(2.0_f64.ln()).unwrap();
        let b = LightconePoint::new(1.0, 1.0).boost(r);
        assert_abs_diff_eq!(b.u, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b.v, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn lightcone_boost_preserves_product() {
        let r = Rapidity::new(1.3).unwrap();
        let p = LightconePoint::new(0.9, -2.1);
        let b = p.boost(r);
        assert_abs_diff_eq!(b.u * b.v, p.u * p.v, epsilon = 1e-14);
    }

    #[test]
    fn lightcone_boost_agrees_with_conjugated_spacetime_boost() {
        let r = Rapidity::new(0.9).unwrap();
        let p = SpacetimePoint::new(0.4, 0.1);
        let direct = p.to_lightcone().boost(r);
        let conjugated = p.boost(r).to_lightcone();
        assert_abs_diff_eq!(direct.u, conjugated.u, epsilon = 1e-12);
        assert_abs_diff_eq!(direct.v, conjugated.v, epsilon = 1e-12);
    }

    #[test]
    fn coincident_quarks_have_zero_separation() {
        let w = SpacetimePoint::new(0.6, -0.2);
        let (hadron, rel) = QuarkPairCoordinates::new(w, w).hadron_relative();
        assert_eq!((hadron.z, hadron.t), (w.z, w.t));
        assert_eq!((rel.z, rel.t), (0.0, 0.0));
    }

    #[test]
    fn antipodal_quarks_split() {
        let pair = QuarkPairCoordinates::new(
            SpacetimePoint::new(1.0, 0.0),
            SpacetimePoint::new(-1.0, 0.0),
        );
        let (hadron, rel) = pair.hadron_relative();
        assert_eq!((hadron.z, hadron.t), (0.0, 0.0));
        assert_abs_diff_eq!(rel.z, 1.0 / SQRT_2, epsilon = 1e-15);
        assert_eq!(rel.t, 0.0);
    }

    #[test]
    fn pair_split_is_homogeneous() {
        let pair = QuarkPairCoordinates::new(
            SpacetimePoint::new(0.7, 1.1),
            SpacetimePoint::new(-0.4, 0.5),
        );
        let doubled = QuarkPairCoordinates::new(
            SpacetimePoint::new(1.4, 2.2),
            SpacetimePoint::new(-0.8, 1.0),
        );
        let (h1, r1) = pair.hadron_relative();
        let (h2, r2) = doubled.hadron_relative();
        assert_abs_diff_eq!(h2.z, 2.0 * h1.z, epsilon = 1e-15);
        assert_abs_diff_eq!(h2.t, 2.0 * h1.t, epsilon = 1e-15);
        assert_abs_diff_eq!(r2.z, 2.0 * r1.z, epsilon = 1e-15);
        assert_abs_diff_eq!(r2.t, 2.0 * r1.t, epsilon = 1e-15);
    }

    #[test]
    fn equal_momenta_have_zero_separation() {
        let p = MomentumPoint::new(0.3, 1.9);
        let (total, sep) = QuarkPairMomenta::new(p, p).hadron_relative();
        assert_eq!((total.p_z, total.p_0), (0.6, 3.8));
        assert_eq!((sep.p_z, sep.p_0), (0.0, 0.0));
    }

    #[test]
    fn momentum_split_spot_value() {
        let pair =
            QuarkPairMomenta::new(MomentumPoint::new(1.0, 1.0), MomentumPoint::new(0.0, 1.0));
        let (total, sep) = pair.hadron_relative();
        assert_eq!((total.p_z, total.p_0), (1.0, 2.0));
        assert_abs_diff_eq!(sep.p_z, SQRT_2, epsilon = 1e-15);
        assert_eq!(sep.p_0, 0.0);
    }

    #[test]
    fn momentum_split_antisymmetry() {
        let a = MomentumPoint::new(0.2, 1.5);
        let b = MomentumPoint::new(-0.9, 1.1);
        let (p1, q1) = QuarkPairMomenta::new(a, b).hadron_relative();
        let (p2, q2) = QuarkPairMomenta::new(b, a).hadron_relative();
        assert_eq!((p1.p_z, p1.p_0), (p2.p_z, p2.p_0));
        assert_eq!((q1.p_z, q1.p_0), (-q2.p_z, -q2.p_0));
    }

    #[test]
    fn rapidity_of_rest_frame_is_zero() {
        assert_eq!(Rapidity::from_beta(0.0).unwrap().eta(), 0.0);
    }

    #[test]
    fn rapidity_beta_are_mutually_inverse() {
        let r = Rapidity::from_beta(1.0_f64.tanh()).unwrap();
        assert_abs_diff_eq!(r.eta(), 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            Rapidity::new(0.37).unwrap().beta().atanh(),
            0.37,
            epsilon = 1e-14
        );
    }

    #[test]
    fn lightspeed_and_beyond_are_rejected() {
        assert!(matches!(
            Rapidity::from_beta(1.0),
            Err(Error::SuperluminalVelocity { .. })
        ));
        assert!(matches!(
            Rapidity::from_beta(-1.0),
            Err(Error::SuperluminalVelocity { .. })
        ));
        assert!(matches!(
            Rapidity::from_beta(1.5),
            Err(Error::SuperluminalVelocity { .. })
        ));
    }

    #[test]
    fn nonfinite_rapidity_is_rejected() {
        assert!(matches!(
            Rapidity::new(f64::NAN),
            Err(Error::NonFiniteRapidity { .. })
        ));
        assert!(matches!(
            Rapidity::new(f64::INFINITY),
            Err(Error::NonFiniteRapidity { .. })
        ));
    }
}
