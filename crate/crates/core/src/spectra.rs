//! Closed-form bound-state spectra in both coordinate systems, the
//! oscillator-monopole duality map, and degeneracy enumeration.
//!
//! Hyperspherical quantization: the angular equation at azimuthal winding p
//! and monopole number m has eigenvalues λ(λ+1) with
//! k = √(4[m² + λ(λ+1)] + 1), and the bound energies are
//!
//! ```text
//! ε = - M e⁴ / (2 ħ² (n + (k+1)/2)²),    N = 2n + k + 1.
//! ```
//!
//! Parabolic quantization: with axial exponents a₁ = |w|, a₂ = |w - 2m|
//! (w the azimuthal winding) and nonnegative integers m₁, m₂,
//!
//! ```text
//! ε = - M e⁴ / (2 ħ² d²),    d = (a₁ + a₂)/2 + m₁ + m₂ + 1,
//! ```
//!
//! which on the restricted label domain p = w/2 ≥ max(0, m) reads
//! d = 2p - m + m₁ + m₂ + 1. Enumeration over all integer windings makes the
//! two degeneracy counts agree level by level (d² at m = 0).

use crate::units::{ContextError, DualityParameter, PhysicalContext};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("negative discriminant 4[m² + λ(λ+1)] + 1 = {0}")]
    NegativeDiscriminant(f64),
    #[error("the regular radial branch requires k ≥ 0, got {0}")]
    NegativeK(f64),
    #[error("separation label must satisfy λ ≥ 0, got {0}")]
    NegativeLambda(f64),
    #[error("parabolic labels require p ≥ 0 and p ≥ m, got p = {p}, m = {m}")]
    InvalidParabolicLabels { p: i64, m: i64 },
    #[error("level index must be ≥ 1, got {0}")]
    BadLevelIndex(u32),
    #[error(transparent)]
    Context(#[from] ContextError),
}

/// Which separation produced a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LevelSource {
    Hyperspherical,
    Parabolic,
    Duality,
}

/// Coordinate system selector shared with the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoordinateSystem {
    Hyperspherical,
    Parabolic,
}

/// Hyperspherical labels (n, λ, p, m, n_θ) of a bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumNumbersHS {
    /// Radial node count.
    pub n: u32,
    /// Separation label; the angular eigenvalue is λ(λ+1).
    pub lambda: f64,
    /// Azimuthal winding of e^{ipφ}.
    pub p: i64,
    /// Fiber / monopole number.
    pub m: i64,
    /// Polar polynomial degree.
    pub n_theta: u32,
}

impl QuantumNumbersHS {
    pub fn new(n: u32, lambda: f64, p: i64, m: i64, n_theta: u32) -> Result<Self, SpectraError> {
        if !(lambda >= 0.0) {
            return Err(SpectraError::NegativeLambda(lambda));
        }
        Ok(Self {
            n,
            lambda,
            p,
            m,
            n_theta,
        })
    }

    /// Radial index k = √(4[m² + λ(λ+1)] + 1) (positive root).
    #[must_use]
    pub fn k(&self) -> f64 {
        k_param(self.m, self.lambda).expect("validated at construction")
    }

    /// Principal-like quantum ν = n + (k+1)/2.
    #[must_use]
    pub fn nu(&self) -> f64 {
        self.n as f64 + 0.5 * (self.k() + 1.0)
    }
}

/// Parabolic labels of a bound state.
///
/// The azimuthal label is stored doubled (`two_p`, the integer winding), so
/// that the half-integer steps needed for a complete level enumeration stay
/// exact. [`QuantumNumbersPar::new`] takes the integer label p on its
/// restricted domain p ≥ max(0, m); [`QuantumNumbersPar::from_winding`]
/// accepts every integer winding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumNumbersPar {
    two_p: i64,
    pub m: i64,
    pub m1: u32,
    pub m2: u32,
}

impl QuantumNumbersPar {
    /// Integer-label constructor; requires p ≥ 0 and p ≥ m.
    pub fn new(p: i64, m: i64, m1: u32, m2: u32) -> Result<Self, SpectraError> {
        if p < 0 || p < m {
            return Err(SpectraError::InvalidParabolicLabels { p, m });
        }
        Ok(Self {
            two_p: 2 * p,
            m,
            m1,
            m2,
        })
    }

    /// General constructor over the azimuthal winding w = 2p.
    #[must_use]
    pub fn from_winding(winding: i64, m: i64, m1: u32, m2: u32) -> Self {
        Self {
            two_p: winding,
            m,
            m1,
            m2,
        }
    }

    /// Azimuthal label p = w/2, possibly half-integer.
    #[must_use]
    pub fn p(&self) -> f64 {
        self.two_p as f64 / 2.0
    }

    /// Integer azimuthal winding w = 2p.
    #[must_use]
    pub fn winding(&self) -> i64 {
        self.two_p
    }

    /// Axial exponents (a₁, a₂) = (|w|, |w - 2m|); both factors of the
    /// separated solution behave as ξ^{a₁/2}, η^{a₂/2} near their axes.
    #[must_use]
    pub fn axial_exponents(&self) -> (u32, u32) {
        let a1 = self.two_p.unsigned_abs() as u32;
        let a2 = (self.two_p - 2 * self.m).unsigned_abs() as u32;
        (a1, a2)
    }

    /// Level index d = (a₁ + a₂)/2 + m₁ + m₂ + 1; equals
    /// 2p - m + m₁ + m₂ + 1 on the restricted label domain.
    #[must_use]
    pub fn denominator(&self) -> u32 {
        let (a1, a2) = self.axial_exponents();
        (a1 + a2) / 2 + self.m1 + self.m2 + 1
    }
}

/// Radial index from the angular eigenvalue: k = +√(4[m² + λ(λ+1)] + 1).
///
/// Only the positive root keeps the radial solution regular at the origin;
/// see [`k_param_roots`] for both roots.
pub fn k_param(m: i64, lambda: f64) -> Result<f64, SpectraError> {
    k_param_roots(m, lambda).map(|(positive, _)| positive)
}

/// Both roots ±√(4[m² + λ(λ+1)] + 1) of the radial index equation.
pub fn k_param_roots(m: i64, lambda: f64) -> Result<(f64, f64), SpectraError> {
    let m = m as f64;
    let disc = 4.0 * (m * m + lambda * (lambda + 1.0)) + 1.0;
    if disc < 0.0 || !disc.is_finite() {
        return Err(SpectraError::NegativeDiscriminant(disc));
    }
    let root = disc.sqrt();
    Ok((root, -root))
}

/// Separation label λ ≥ 0 with λ(λ+1) = J(J+1) - m², where J = n_θ + (a₁+a₂)/2
/// is the total angular ladder index at winding p.
#[must_use]
pub fn lambda_from_ladder(n_theta: u32, p: i64, m: i64) -> f64 {
    let s2 = p.unsigned_abs() + (p - 2 * m).unsigned_abs(); // = 2 J at n_θ = 0
    let j = n_theta as f64 + s2 as f64 / 2.0;
    let value = j * (j + 1.0) - (m * m) as f64;
    0.5 * ((1.0 + 4.0 * value).sqrt() - 1.0)
}

/// One bound-state energy with its quantization pedigree. Optional fields
/// are filled according to the source; the flat layout matches the JSON and
/// CSV row schemas.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyLevel {
    pub epsilon: f64,
    /// Principal number N = 2n + k + 1 = 2·(level index).
    pub principal: f64,
    pub source: LevelSource,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_theta: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n_osc: Option<u32>,
}

impl EnergyLevel {
    /// Stable CSV header for level rows.
    #[must_use]
    pub fn csv_header() -> &'static str {
        "epsilon,N,n,k,lambda,p,m,m1,m2,source"
    }

    /// One CSV row in the header's column order; absent fields stay empty.
    #[must_use]
    pub fn csv_row(&self) -> String {
        fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        let source = match self.source {
            LevelSource::Hyperspherical => "hyperspherical",
            LevelSource::Parabolic => "parabolic",
            LevelSource::Duality => "duality",
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.epsilon,
            self.principal,
            opt(&self.n),
            opt(&self.k),
            opt(&self.lambda),
            opt(&self.p),
            opt(&self.m),
            opt(&self.m1),
            opt(&self.m2),
            source
        )
    }
}

/// Bound energy ε = -M e⁴ / (2ħ²(n + (k+1)/2)²) with N = 2n + k + 1.
pub fn energy_hyperspherical(
    n: u32,
    k: f64,
    ctx: &PhysicalContext,
) -> Result<EnergyLevel, SpectraError> {
    if !(k >= 0.0) || !k.is_finite() {
        return Err(SpectraError::NegativeK(k));
    }
    let nu = n as f64 + 0.5 * (k + 1.0);
    Ok(EnergyLevel {
        epsilon: -ctx.energy_unit() / (2.0 * nu * nu),
        principal: 2.0 * nu,
        source: LevelSource::Hyperspherical,
        n: Some(n),
        k: Some(k),
        lambda: None,
        p: None,
        m: None,
        m1: None,
        m2: None,
        n_theta: None,
        n_osc: None,
    })
}

/// Bound energy for a full hyperspherical label set, with λ recorded.
pub fn energy_for_labels(
    qn: &QuantumNumbersHS,
    ctx: &PhysicalContext,
) -> Result<EnergyLevel, SpectraError> {
    let mut level = energy_hyperspherical(qn.n, qn.k(), ctx)?;
    level.lambda = Some(qn.lambda);
    level.p = Some(qn.p as f64);
    level.m = Some(qn.m);
    level.n_theta = Some(qn.n_theta);
    Ok(level)
}

/// Bound energy ε = -M e⁴ / (2ħ² d²) from parabolic labels.
#[must_use]
pub fn energy_parabolic(qn: &QuantumNumbersPar, ctx: &PhysicalContext) -> EnergyLevel {
    let d = qn.denominator() as f64;
    EnergyLevel {
        epsilon: -ctx.energy_unit() / (2.0 * d * d),
        principal: 2.0 * d,
        source: LevelSource::Parabolic,
        n: None,
        k: None,
        lambda: None,
        p: Some(qn.p()),
        m: Some(qn.m),
        m1: Some(qn.m1),
        m2: Some(qn.m2),
        n_theta: None,
        n_osc: None,
    }
}

/// Separation constants (α₁, α₂) in units of the bound-state wavenumber κ:
/// α₁ = -(m₁ + (a₁+1)/2), α₂ = -(m₂ + (a₂+1)/2). On the restricted label
/// domain these read -(m₁ + p + ½) and -(m₂ + p - m + ½), and their sum is
/// -d, the (negated) level index.
#[must_use]
pub fn separation_constants(qn: &QuantumNumbersPar) -> (f64, f64) {
    let (a1, a2) = qn.axial_exponents();
    let alpha1 = -(qn.m1 as f64 + 0.5 * (a1 as f64 + 1.0));
    let alpha2 = -(qn.m2 as f64 + 0.5 * (a2 as f64 + 1.0));
    (alpha1, alpha2)
}

/// Which member of the (ω, E) pair was fixed in a duality evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DualityPicture {
    FrequencyFixed,
    EnergyFixed,
}

/// Output of the oscillator-monopole duality at one oscillator level N.
///
/// Either picture fills every field; the picture records which members were
/// held fixed versus quantized.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DualityMapping {
    pub picture: DualityPicture,
    pub n_osc: u32,
    /// Oscillator frequency (fixed or quantized as E/(ħ(N+2))).
    pub omega: f64,
    /// Oscillator energy E = ħω(N+2) (quantized or fixed).
    pub oscillator_energy: f64,
    /// Mapped bound energy ε = -M ω²/8.
    pub epsilon: f64,
    /// Mapped coupling e² = E/4.
    pub coupling: f64,
    /// Monopole principal number N + 2.
    pub monopole_principal: u32,
}

/// Evaluate the duality at oscillator level `n_osc` using whichever of
/// {ω, E} the context holds fixed. Errors when neither is set.
pub fn duality_map(ctx: &PhysicalContext, n_osc: u32) -> Result<DualityMapping, SpectraError> {
    let steps = (n_osc + 2) as f64;
    let (picture, omega, energy) = match ctx.duality() {
        Some(DualityParameter::Frequency(w)) => {
            (DualityPicture::FrequencyFixed, w, ctx.hbar() * w * steps)
        }
        Some(DualityParameter::Energy(e)) => {
            (DualityPicture::EnergyFixed, e / (ctx.hbar() * steps), e)
        }
        None => return Err(ContextError::DualityUnset.into()),
    };
    Ok(DualityMapping {
        picture,
        n_osc,
        omega,
        oscillator_energy: energy,
        epsilon: -ctx.mass() * omega * omega / 8.0,
        coupling: energy / 4.0,
        monopole_principal: n_osc + 2,
    })
}

impl DualityMapping {
    #[must_use]
    pub fn to_level(&self) -> EnergyLevel {
        EnergyLevel {
            epsilon: self.epsilon,
            principal: self.monopole_principal as f64,
            source: LevelSource::Duality,
            n: None,
            k: None,
            lambda: None,
            p: None,
            m: None,
            m1: None,
            m2: None,
            n_theta: None,
            n_osc: Some(self.n_osc),
        }
    }
}

fn winding_range(index: u32, m: i64) -> std::ops::RangeInclusive<i64> {
    let reach = (index - 1) as i64;
    (m - reach)..=(m + reach)
}

/// Ladder offset (a₁ + a₂)/2 at winding w; always a nonnegative integer.
fn ladder_offset(w: i64, m: i64) -> u32 {
    ((w.unsigned_abs() + (w - 2 * m).unsigned_abs()) / 2) as u32
}

/// All hyperspherical labels sharing the level `index` at monopole number m.
pub fn enumerate_level_hyperspherical(
    index: u32,
    m: i64,
) -> Result<Vec<QuantumNumbersHS>, SpectraError> {
    if index == 0 {
        return Err(SpectraError::BadLevelIndex(index));
    }
    let mut labels = Vec::new();
    for p in winding_range(index, m) {
        let offset = ladder_offset(p, m);
        if offset > index - 1 {
            continue;
        }
        for n_theta in 0..=(index - 1 - offset) {
            let n = index - 1 - offset - n_theta;
            let lambda = lambda_from_ladder(n_theta, p, m);
            labels.push(QuantumNumbersHS {
                n,
                lambda,
                p,
                m,
                n_theta,
            });
        }
    }
    Ok(labels)
}

/// All parabolic labels sharing the level `index` at monopole number m.
pub fn enumerate_level_parabolic(
    index: u32,
    m: i64,
) -> Result<Vec<QuantumNumbersPar>, SpectraError> {
    if index == 0 {
        return Err(SpectraError::BadLevelIndex(index));
    }
    let mut labels = Vec::new();
    for w in winding_range(index, m) {
        let offset = ladder_offset(w, m);
        if offset > index - 1 {
            continue;
        }
        for m1 in 0..=(index - 1 - offset) {
            let m2 = index - 1 - offset - m1;
            labels.push(QuantumNumbersPar::from_winding(w, m, m1, m2));
        }
    }
    Ok(labels)
}

/// Degeneracy-resolved level rows for the CLI and exports.
pub fn level_rows(
    index: u32,
    coords: CoordinateSystem,
    m: i64,
    ctx: &PhysicalContext,
) -> Result<Vec<EnergyLevel>, SpectraError> {
    match coords {
        CoordinateSystem::Hyperspherical => enumerate_level_hyperspherical(index, m)?
            .iter()
            .map(|qn| energy_for_labels(qn, ctx))
            .collect(),
        CoordinateSystem::Parabolic => Ok(enumerate_level_parabolic(index, m)?
            .iter()
            .map(|qn| energy_parabolic(qn, ctx))
            .collect()),
    }
}
