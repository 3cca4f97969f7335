//! Quadratic map R⁴ → R³ ⊗ S¹ and the monopole gauge potential.
//!
//! The forward map sends u = (u₀, u₁, u₂, u₃) to
//!
//! ```text
//! x₀ = u₀² + u₁² - u₂² - u₃²
//! x₁ = 2 (u₀u₂ + u₁u₃)
//! x₂ = 2 (u₀u₃ - u₁u₂)
//! ```
//!
//! which satisfies |x| = |u|² identically. Writing z₁ = u₀ + iu₁ and
//! z₂ = u₂ + iu₃, the residual circle z → e^{-iδ/2} z fixes x and advances
//! the fiber angle γ ∈ [0, 4π) by δ. The gauge potential of the unit
//! monopole is given in Cartesian, polar and parabolic coordinates, with its
//! string along the negative x₀ axis.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Relative threshold for "on the string": r + x₀ < tol · r.
pub const STRING_TOLERANCE: f64 = 1e-10;

pub const FOUR_PI: f64 = 4.0 * std::f64::consts::PI;
pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MapError {
    #[error("fiber angle undefined at the origin")]
    DegenerateOrigin,
    #[error("gauge potential undefined at the origin")]
    OriginSingularity,
    #[error("point lies on the gauge string: r + x0 = {r_plus_x0:.3e} at r = {r:.3e}")]
    StringSingularity { r: f64, r_plus_x0: f64 },
    #[error("coordinate out of domain: {0}")]
    OutOfDomain(&'static str),
}

/// Cartesian point in R⁴.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 4]", from = "[f64; 4]")]
pub struct Point4 {
    pub u0: f64,
    pub u1: f64,
    pub u2: f64,
    pub u3: f64,
}

/// Cartesian point in R³; x₀ is the polar axis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", from = "[f64; 3]")]
pub struct Point3 {
    pub x0: f64,
    pub x1: f64,
    pub x2: f64,
}

/// Fiber coordinate γ ∈ [0, 4π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FiberAngle {
    gamma: f64,
}

/// Polar coordinates: r ≥ 0, θ ∈ [0, π], φ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HypersphericalPoint {
    pub r: f64,
    pub theta: f64,
    pub phi: f64,
}

/// Parabolic coordinates ξ = r - x₀, η = r + x₀ with the true azimuth
/// φ ∈ [0, 2π). The transverse plane embeds through the doubled angle
/// Φ = 2φ ∈ [0, 4π) as cos(Φ/2), sin(Φ/2); see [`ParabolicPoint::doubled_azimuth`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParabolicPoint {
    pub xi: f64,
    pub eta: f64,
    pub phi: f64,
}

impl Point4 {
    #[must_use]
    pub fn new(u0: f64, u1: f64, u2: f64, u3: f64) -> Self {
        Self { u0, u1, u2, u3 }
    }

    #[must_use]
    pub fn norm_sq(&self) -> f64 {
        self.u0 * self.u0 + self.u1 * self.u1 + self.u2 * self.u2 + self.u3 * self.u3
    }

    fn is_finite(&self) -> bool {
        self.u0.is_finite() && self.u1.is_finite() && self.u2.is_finite() && self.u3.is_finite()
    }
}

impl From<Point4> for [f64; 4] {
    fn from(p: Point4) -> Self {
        [p.u0, p.u1, p.u2, p.u3]
    }
}

impl From<[f64; 4]> for Point4 {
    fn from(u: [f64; 4]) -> Self {
        Self::new(u[0], u[1], u[2], u[3])
    }
}

impl Point3 {
    #[must_use]
    pub fn new(x0: f64, x1: f64, x2: f64) -> Self {
        Self { x0, x1, x2 }
    }

    #[must_use]
    pub fn norm(&self) -> f64 {
        (self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2).sqrt()
    }

    fn is_finite(&self) -> bool {
        self.x0.is_finite() && self.x1.is_finite() && self.x2.is_finite()
    }
}

impl From<Point3> for [f64; 3] {
    fn from(p: Point3) -> Self {
        [p.x0, p.x1, p.x2]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from(x: [f64; 3]) -> Self {
        Self::new(x[0], x[1], x[2])
    }
}

impl FiberAngle {
    /// Wraps into [0, 4π).
    #[must_use]
    pub fn new(gamma: f64) -> Self {
        Self {
            gamma: wrap_angle(gamma, FOUR_PI),
        }
    }

    #[must_use]
    pub fn value(&self) -> f64 {
        self.gamma
    }
}

impl HypersphericalPoint {
    pub fn new(r: f64, theta: f64, phi: f64) -> Result<Self, MapError> {
        if !(r >= 0.0) {
            return Err(MapError::OutOfDomain("r must be >= 0"));
        }
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(MapError::OutOfDomain("theta must lie in [0, pi]"));
        }
        if !phi.is_finite() {
            return Err(MapError::OutOfDomain("phi must be finite"));
        }
        Ok(Self {
            r,
            theta,
            phi: wrap_angle(phi, TWO_PI),
        })
    }

    #[must_use]
    pub fn to_cartesian(&self) -> Point3 {
        Point3::new(
            self.r * self.theta.cos(),
            self.r * self.theta.sin() * self.phi.cos(),
            self.r * self.theta.sin() * self.phi.sin(),
        )
    }
}

impl ParabolicPoint {
    pub fn new(xi: f64, eta: f64, phi: f64) -> Result<Self, MapError> {
        if !(xi >= 0.0) || !(eta >= 0.0) {
            return Err(MapError::OutOfDomain("xi and eta must be >= 0"));
        }
        if !phi.is_finite() {
            return Err(MapError::OutOfDomain("phi must be finite"));
        }
        Ok(Self {
            xi,
            eta,
            phi: wrap_angle(phi, TWO_PI),
        })
    }

    /// Doubled angle Φ = 2φ ∈ [0, 4π); the transverse coordinates are
    /// x₁ = √(ξη) cos(Φ/2), x₂ = √(ξη) sin(Φ/2).
    #[must_use]
    pub fn doubled_azimuth(&self) -> f64 {
        wrap_angle(2.0 * self.phi, FOUR_PI)
    }

    #[must_use]
    pub fn to_cartesian(&self) -> Point3 {
        let rho = (self.xi * self.eta).sqrt();
        Point3::new(
            0.5 * (self.eta - self.xi),
            rho * self.phi.cos(),
            rho * self.phi.sin(),
        )
    }
}

fn wrap_angle(value: f64, period: f64) -> f64 {
    let mut wrapped = value % period;
    if wrapped < 0.0 {
        wrapped += period;
    }
    if wrapped >= period {
        wrapped = 0.0;
    }
    wrapped
}

/// Forward map u → (x, γ). Errors at u = 0 where the fiber angle is undefined.
pub fn ks_forward(u: Point4) -> Result<(Point3, FiberAngle), MapError> {
    if !u.is_finite() {
        return Err(MapError::OutOfDomain("u must be finite"));
    }
    if u.norm_sq() == 0.0 {
        return Err(MapError::DegenerateOrigin);
    }
    let x = Point3::new(
        u.u0 * u.u0 + u.u1 * u.u1 - u.u2 * u.u2 - u.u3 * u.u3,
        2.0 * (u.u0 * u.u2 + u.u1 * u.u3),
        2.0 * (u.u0 * u.u3 - u.u1 * u.u2),
    );
    // γ = -2 arg(z₁) on the chart where |z₁| dominates, -2 arg(z₂) otherwise;
    // the two differ by a function of the base point only.
    let n1 = u.u0 * u.u0 + u.u1 * u.u1;
    let n2 = u.u2 * u.u2 + u.u3 * u.u3;
    let gamma = if n1 >= n2 {
        -2.0 * u.u1.atan2(u.u0)
    } else {
        -2.0 * u.u3.atan2(u.u2)
    };
    Ok((x, FiberAngle::new(gamma)))
}

/// Rotate both complex pairs by e^{-iδ/2}: the base point x is fixed and the
/// fiber angle advances by δ (mod 4π).
pub fn fiber_action(u: Point4, delta: f64) -> Result<Point4, MapError> {
    if !u.is_finite() || !delta.is_finite() {
        return Err(MapError::OutOfDomain("u and delta must be finite"));
    }
    if u.norm_sq() == 0.0 {
        return Err(MapError::DegenerateOrigin);
    }
    let (c, s) = ((0.5 * delta).cos(), (0.5 * delta).sin());
    Ok(Point4::new(
        u.u0 * c + u.u1 * s,
        u.u1 * c - u.u0 * s,
        u.u2 * c + u.u3 * s,
        u.u3 * c - u.u2 * s,
    ))
}

/// Unit-monopole vector potential A = (-x₂, x₁, 0) / (r (r + x₀)).
pub fn gauge_potential_cartesian(x: Point3) -> Result<[f64; 3], MapError> {
    if !x.is_finite() {
        return Err(MapError::OutOfDomain("x must be finite"));
    }
    let r = x.norm();
    if r == 0.0 {
        return Err(MapError::OriginSingularity);
    }
    let r_plus_x0 = r + x.x0;
    if r_plus_x0 < STRING_TOLERANCE * r {
        return Err(MapError::StringSingularity { r, r_plus_x0 });
    }
    let denom = r * r_plus_x0;
    Ok([-x.x2 / denom, x.x1 / denom, 0.0])
}

/// Azimuthal component A_φ = (1 - cos θ)/(r sin θ) = tan(θ/2)/r.
///
/// Returns 0 at θ = 0 (the limit); errors on the string θ = π.
pub fn gauge_potential_spherical(r: f64, theta: f64) -> Result<f64, MapError> {
    if !(r > 0.0) {
        return Err(MapError::OriginSingularity);
    }
    if !(0.0..=std::f64::consts::PI).contains(&theta) {
        return Err(MapError::OutOfDomain("theta must lie in [0, pi]"));
    }
    let one_plus_cos = 1.0 + theta.cos();
    if one_plus_cos < STRING_TOLERANCE {
        return Err(MapError::StringSingularity {
            r,
            r_plus_x0: r * one_plus_cos,
        });
    }
    if 1.0 - theta.cos() < 1e-14 {
        return Ok(0.0);
    }
    Ok((0.5 * theta).tan() / r)
}

/// Azimuthal component in parabolic coordinates, 2√ξ / √(η(η+ξ)).
///
/// The string η = 0 is the negative x₀ axis.
pub fn gauge_potential_parabolic(xi: f64, eta: f64) -> Result<f64, MapError> {
    if !(xi >= 0.0) || !(eta >= 0.0) || !xi.is_finite() || !eta.is_finite() {
        return Err(MapError::OutOfDomain("xi and eta must be finite and >= 0"));
    }
    if xi + eta == 0.0 {
        return Err(MapError::OriginSingularity);
    }
    if eta <= 0.5 * STRING_TOLERANCE * (xi + eta) {
        return Err(MapError::StringSingularity {
            r: 0.5 * (xi + eta),
            r_plus_x0: eta,
        });
    }
    Ok(2.0 * xi.sqrt() / (eta * (eta + xi)).sqrt())
}

/// Polar coordinates of a Cartesian point; undefined at the origin.
pub fn to_hyperspherical(x: Point3) -> Result<HypersphericalPoint, MapError> {
    if !x.is_finite() {
        return Err(MapError::OutOfDomain("x must be finite"));
    }
    let r = x.norm();
    if r == 0.0 {
        return Err(MapError::DegenerateOrigin);
    }
    let theta = (x.x0 / r).clamp(-1.0, 1.0).acos();
    let phi = x.x2.atan2(x.x1);
    HypersphericalPoint::new(r, theta, phi)
}

/// Parabolic coordinates ξ = r - x₀, η = r + x₀; undefined at the origin.
pub fn to_parabolic(x: Point3) -> Result<ParabolicPoint, MapError> {
    if !x.is_finite() {
        return Err(MapError::OutOfDomain("x must be finite"));
    }
    let r = x.norm();
    if r == 0.0 {
        return Err(MapError::DegenerateOrigin);
    }
    let xi = (r - x.x0).max(0.0);
    let eta = (r + x.x0).max(0.0);
    let phi = x.x2.atan2(x.x1);
    ParabolicPoint::new(xi, eta, phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unit_points_on_both_blocks() {
        let (x, _) = ks_forward(Point4::new(1.0, 0.0, 0.0, 0.0)).unwrap();
        assert_eq!([x.x0, x.x1, x.x2], [1.0, 0.0, 0.0]);
        assert_eq!(x.norm(), 1.0);

        let (x, _) = ks_forward(Point4::new(0.0, 0.0, 1.0, 0.0)).unwrap();
        assert_eq!([x.x0, x.x1, x.x2], [-1.0, 0.0, 0.0]);
        assert_eq!(x.norm(), 1.0);
    }

    #[test]
    fn origin_is_degenerate() {
        assert_eq!(
            ks_forward(Point4::new(0.0, 0.0, 0.0, 0.0)),
            Err(MapError::DegenerateOrigin)
        );
        assert!(fiber_action(Point4::new(0.0, 0.0, 0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn fiber_identity_and_full_period() {
        let u = Point4::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(fiber_action(u, 0.0).unwrap(), u);

        let turned = fiber_action(u, FOUR_PI).unwrap();
        assert!((turned.u0 - 1.0).abs() < 1e-12);
        assert!(turned.u1.abs() < 1e-12);
        let g0 = ks_forward(u).unwrap().1.value();
        let g1 = ks_forward(turned).unwrap().1.value();
        assert!(angle_dist(g0, g1, FOUR_PI) < 1e-12);
    }

    #[test]
    fn fiber_shift_adds_delta() {
        let u = Point4::new(0.8, -0.3, 0.4, 1.1);
        let delta = 1.3;
        let (x0, g0) = ks_forward(u).unwrap();
        let (x1, g1) = ks_forward(fiber_action(u, delta).unwrap()).unwrap();
        assert!((x0.x0 - x1.x0).abs() < 1e-12);
        assert!((x0.x1 - x1.x1).abs() < 1e-12);
        assert!((x0.x2 - x1.x2).abs() < 1e-12);
        assert!(angle_dist(g0.value() + delta, g1.value(), FOUR_PI) < 1e-12);
    }

    #[test]
    fn cartesian_gauge_examples() {
        let a = gauge_potential_cartesian(Point3::new(0.0, 0.0, 1.0)).unwrap();
        assert_eq!(a, [-1.0, 0.0, 0.0]);
        let a = gauge_potential_cartesian(Point3::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!(a, [0.0, 0.0, 0.0]);
        assert!(matches!(
            gauge_potential_cartesian(Point3::new(-1.0, 0.0, 0.0)),
            Err(MapError::StringSingularity { .. })
        ));
        assert!(matches!(
            gauge_potential_cartesian(Point3::new(0.0, 0.0, 0.0)),
            Err(MapError::OriginSingularity)
        ));
    }

    #[test]
    fn spherical_gauge_examples() {
        let a = gauge_potential_spherical(1.0, std::f64::consts::FRAC_PI_2).unwrap();
        assert!((a - 1.0).abs() < 1e-15);
        assert_eq!(gauge_potential_spherical(2.0, 0.0).unwrap(), 0.0);
        assert_eq!(gauge_potential_spherical(2.0, 1e-9).unwrap(), 0.0);
        assert!(gauge_potential_spherical(1.0, std::f64::consts::PI).is_err());
        assert!(gauge_potential_spherical(0.0, 1.0).is_err());
    }

    #[test]
    fn parabolic_gauge_examples() {
        assert_eq!(gauge_potential_parabolic(0.0, 2.0).unwrap(), 0.0);
        let a = gauge_potential_parabolic(1.0, 1.0).unwrap();
        assert!((a - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!(matches!(
            gauge_potential_parabolic(1.0, 0.0),
            Err(MapError::StringSingularity { .. })
        ));
    }

    #[test]
    fn axis_points_in_both_coordinate_systems() {
        let hs = to_hyperspherical(Point3::new(0.0, 0.0, 1.0)).unwrap();
        assert!((hs.r - 1.0).abs() < 1e-15);
        assert!((hs.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!((hs.phi - std::f64::consts::FRAC_PI_2).abs() < 1e-15);

        let par = to_parabolic(Point3::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!((par.xi, par.eta), (0.0, 2.0));
    }

    #[test]
    fn doubled_azimuth_covers_four_pi() {
        let p = ParabolicPoint::new(1.0, 2.0, 4.0).unwrap();
        assert!((p.doubled_azimuth() - 8.0).abs() < 1e-12);
    }

    fn angle_dist(a: f64, b: f64, period: f64) -> f64 {
        let d = (a - b).rem_euclid(period);
        d.min(period - d)
    }

    proptest! {
        #[test]
        fn norm_identity(u in prop::array::uniform4(-2.0..2.0f64)) {
            // |x|² = (u·u)², i.e. the R³ radius equals the R⁴ norm squared
            let u = Point4::from(u);
            prop_assume!(u.norm_sq() > 1e-6);
            let (x, _) = ks_forward(u).unwrap();
            prop_assert!((x.norm() - u.norm_sq()).abs() < 1e-12);
        }

        #[test]
        fn fiber_action_fixes_base(u in prop::array::uniform4(-2.0..2.0f64), delta in -20.0..20.0f64) {
            let u = Point4::from(u);
            prop_assume!(u.norm_sq() > 1e-3);
            let (x0, g0) = ks_forward(u).unwrap();
            let (x1, g1) = ks_forward(fiber_action(u, delta).unwrap()).unwrap();
            prop_assert!((x0.x0 - x1.x0).abs() < 1e-12);
            prop_assert!((x0.x1 - x1.x1).abs() < 1e-12);
            prop_assert!((x0.x2 - x1.x2).abs() < 1e-12);
            prop_assert!(angle_dist(g0.value() + delta, g1.value(), FOUR_PI) < 1e-10);
        }

        #[test]
        fn hyperspherical_round_trip(x in prop::array::uniform3(-3.0..3.0f64)) {
            let x = Point3::from(x);
            prop_assume!(x.norm() > 1e-3);
            let back = to_hyperspherical(x).unwrap().to_cartesian();
            prop_assert!((back.x0 - x.x0).abs() < 1e-12);
            prop_assert!((back.x1 - x.x1).abs() < 1e-12);
            prop_assert!((back.x2 - x.x2).abs() < 1e-12);
        }

        #[test]
        fn parabolic_round_trip(x in prop::array::uniform3(-3.0..3.0f64)) {
            let x = Point3::from(x);
            prop_assume!(x.norm() > 1e-3);
            let back = to_parabolic(x).unwrap().to_cartesian();
            prop_assert!((back.x0 - x.x0).abs() < 1e-11);
            prop_assert!((back.x1 - x.x1).abs() < 1e-11);
            prop_assert!((back.x2 - x.x2).abs() < 1e-11);
        }
    }
}
