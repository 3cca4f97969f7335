//! Unit system shared by every other module.
//!
//! All formulas are evaluated with the particle mass `M`, the action quantum
//! `hbar` and the Coulomb-like coupling `e2` as explicit positive parameters,
//! defaulting to 1. Bound-state energies then carry the scale `M e⁴/ħ²` and
//! lengths the scale `ħ²/(M e²)`.
//!
//! The oscillator and monopole pictures are dual: either the oscillator
//! frequency ω is held fixed (and the oscillator energy is quantized) or the
//! oscillator energy E is held fixed (and ω is quantized, with `e² = E/4`).
//! The context records which of the two, if any, is the free parameter.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which member of the dual pair (ω, E) is held fixed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum DualityParameter {
    /// ω fixed; oscillator energies `E_N = ħω(N+2)` are quantized.
    Frequency(f64),
    /// E fixed; frequencies `ω_N = E/(ħ(N+2))` are quantized and the mapped
    /// bound energies are `ε_N = −M ω_N²/8` at coupling `e² = E/4`.
    Energy(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContextError {
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("exactly one duality parameter may be set")]
    DualityOverdetermined,
    #[error("no duality parameter set; fix either the frequency or the energy")]
    DualityUnset,
}

/// Immutable bundle of physical constants. Freely shareable across threads.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalContext {
    mass: f64,
    hbar: f64,
    coupling: f64,
    duality: Option<DualityParameter>,
}

impl Default for PhysicalContext {
    fn default() -> Self {
        Self {
            mass: 1.0,
            hbar: 1.0,
            coupling: 1.0,
            duality: None,
        }
    }
}

/// Canonical context with `M = ħ = e² = 1` and no duality parameter set.
#[must_use]
pub fn default_context() -> PhysicalContext {
    PhysicalContext::default()
}

impl PhysicalContext {
    pub fn new(mass: f64, hbar: f64, coupling: f64) -> Result<Self, ContextError> {
        check_positive("M", mass)?;
        check_positive("hbar", hbar)?;
        check_positive("e2", coupling)?;
        Ok(Self {
            mass,
            hbar,
            coupling,
            duality: None,
        })
    }

    pub fn with_mass(mut self, mass: f64) -> Result<Self, ContextError> {
        check_positive("M", mass)?;
        self.mass = mass;
        Ok(self)
    }

    pub fn with_hbar(mut self, hbar: f64) -> Result<Self, ContextError> {
        check_positive("hbar", hbar)?;
        self.hbar = hbar;
        Ok(self)
    }

    pub fn with_coupling(mut self, coupling: f64) -> Result<Self, ContextError> {
        check_positive("e2", coupling)?;
        self.coupling = coupling;
        Ok(self)
    }

    /// Fix the oscillator frequency; clears a previously fixed energy.
    pub fn with_fixed_frequency(mut self, omega: f64) -> Result<Self, ContextError> {
        check_positive("omega", omega)?;
        self.duality = Some(DualityParameter::Frequency(omega));
        Ok(self)
    }

    /// Fix the oscillator energy; clears a previously fixed frequency.
    /// Also pins the coupling to `e² = E/4`.
    pub fn with_fixed_energy(mut self, energy: f64) -> Result<Self, ContextError> {
        check_positive("E_osc", energy)?;
        self.duality = Some(DualityParameter::Energy(energy));
        self.coupling = energy / 4.0;
        Ok(self)
    }

    #[must_use]
    pub fn mass(&self) -> f64 {
        self.mass
    }

    #[must_use]
    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// The coupling e².
    #[must_use]
    pub fn coupling(&self) -> f64 {
        self.coupling
    }

    #[must_use]
    pub fn duality(&self) -> Option<DualityParameter> {
        self.duality
    }

    /// Energy scale M e⁴/ħ² of the bound spectrum.
    #[must_use]
    pub fn energy_unit(&self) -> f64 {
        self.mass * self.coupling * self.coupling / (self.hbar * self.hbar)
    }

    /// Length scale ħ²/(M e²).
    #[must_use]
    pub fn length_unit(&self) -> f64 {
        self.hbar * self.hbar / (self.mass * self.coupling)
    }

    /// Bound-state wavenumber κ = M e²/(ħ² ν) for principal-like quantum ν.
    #[must_use]
    pub fn wavenumber_for(&self, nu: f64) -> f64 {
        self.mass * self.coupling / (self.hbar * self.hbar * nu)
    }
}

fn check_positive(name: &'static str, value: f64) -> Result<(), ContextError> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(ContextError::NonPositive { name, value })
    }
}

/// Flat key-value form consumed by config files and CLI flags.
#[derive(Debug, Serialize, Deserialize)]
struct ContextRepr {
    #[serde(rename = "M")]
    mass: f64,
    hbar: f64,
    e2: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    omega: Option<f64>,
    #[serde(rename = "E_osc", skip_serializing_if = "Option::is_none", default)]
    e_osc: Option<f64>,
}

impl Serialize for PhysicalContext {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (omega, e_osc) = match self.duality {
            Some(DualityParameter::Frequency(w)) => (Some(w), None),
            Some(DualityParameter::Energy(e)) => (None, Some(e)),
            None => (None, None),
        };
        ContextRepr {
            mass: self.mass,
            hbar: self.hbar,
            e2: self.coupling,
            omega,
            e_osc,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PhysicalContext {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ContextRepr::deserialize(deserializer)?;
        let mut ctx = PhysicalContext::new(repr.mass, repr.hbar, repr.e2)
            .map_err(serde::de::Error::custom)?;
        match (repr.omega, repr.e_osc) {
            (Some(_), Some(_)) => {
                return Err(serde::de::Error::custom(ContextError::DualityOverdetermined))
            }
            (Some(w), None) => ctx = ctx.with_fixed_frequency(w).map_err(serde::de::Error::custom)?,
            (None, Some(e)) => ctx = ctx.with_fixed_energy(e).map_err(serde::de::Error::custom)?,
            (None, None) => {}
        }
        Ok(ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_unit() {
        let ctx = default_context();
        assert_eq!(ctx.mass(), 1.0);
        assert_eq!(ctx.hbar(), 1.0);
        assert_eq!(ctx.coupling(), 1.0);
        assert!(ctx.duality().is_none());
    }

    #[test]
    fn field_overrides() {
        let ctx = default_context().with_mass(2.0).unwrap();
        assert_eq!(ctx.mass(), 2.0);
        assert_eq!(ctx.hbar(), 1.0);
    }

    #[test]
    fn zero_hbar_rejected() {
        assert!(default_context().with_hbar(0.0).is_err());
        assert!(default_context().with_mass(-1.0).is_err());
        assert!(default_context().with_coupling(f64::NAN).is_err());
    }

    #[test]
    fn fixed_energy_pins_coupling() {
        let ctx = default_context().with_fixed_energy(4.0).unwrap();
        assert_eq!(ctx.coupling(), 1.0);
        assert_eq!(ctx.duality(), Some(DualityParameter::Energy(4.0)));
    }

    #[test]
    fn json_block_round_trip() {
        let ctx = default_context()
            .with_mass(2.0)
            .unwrap()
            .with_fixed_frequency(3.0)
            .unwrap();
        let text = serde_json::to_string(&ctx).unwrap();
        assert!(text.contains("\"M\":2.0"));
        assert!(text.contains("\"omega\":3.0"));
        assert!(!text.contains("E_osc"));
        let back: PhysicalContext = serde_json::from_str(&text).unwrap();
        assert_eq!(back, ctx);
    }

    #[test]
    fn both_duality_keys_rejected() {
        let text = r#"{"M":1.0,"hbar":1.0,"e2":1.0,"omega":1.0,"E_osc":4.0}"#;
        assert!(serde_json::from_str::<PhysicalContext>(text).is_err());
    }

    #[test]
    fn scale_accessors() {
        let ctx = PhysicalContext::new(2.0, 3.0, 5.0).unwrap();
        assert!((ctx.energy_unit() - 2.0 * 25.0 / 9.0).abs() < 1e-15);
        assert!((ctx.length_unit() - 9.0 / 10.0).abs() < 1e-15);
        assert!((ctx.wavenumber_for(2.0) - 10.0 / 18.0).abs() < 1e-15);
    }
}
