//! Terminating-series special functions.
//!
//! Every hypergeometric function appearing in the bound-state solutions has a
//! nonpositive-integer first parameter, so all series here are finite sums.
//! Generalized Laguerre polynomials are evaluated by the three-term
//! recurrence, which stays stable at large argument; the naive series is kept
//! as a test oracle only. Non-integer upper indices are supported throughout
//! via log-Γ.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("parameter {name} = {value} is outside the admissible range: {rule}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        rule: &'static str,
    },
}

/// Diagnostics for a terminating-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolynomialEval {
    pub value: f64,
    pub degree: u32,
    pub terms_summed: u32,
}

/// Natural log of Γ(x) for x > 0.
#[must_use]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
#[must_use]
pub fn pochhammer(a: f64, n: u32) -> f64 {
    let mut result = 1.0;
    for i in 0..n {
        result *= a + i as f64;
    }
    result
}

/// Γ(a)/Γ(b) for positive a, b, computed through log-Γ.
#[must_use]
pub fn gamma_ratio(a: f64, b: f64) -> f64 {
    (ln_gamma(a) - ln_gamma(b)).exp()
}

fn check_lower_parameter(c: f64) -> Result<(), SpecialError> {
    if c < 0.5 && (c - c.round()).abs() < 1e-12 {
        return Err(SpecialError::InvalidParameter {
            name: "c",
            value: c,
            rule: "must not be zero or a negative integer",
        });
    }
    Ok(())
}

/// Generalized Laguerre polynomial L_n^k(x) by the three-term recurrence
/// (i+1) L_{i+1} = (2i + k + 1 - x) L_i - (i + k) L_{i-1}.
///
/// Requires k > -1, the orthogonality regime for the weight x^k e^{-x}.
pub fn laguerre(n: u32, k: f64, x: f64) -> Result<f64, SpecialError> {
    if !(k > -1.0) || !k.is_finite() {
        return Err(SpecialError::InvalidParameter {
            name: "k",
            value: k,
            rule: "must be finite and > -1",
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut curr = 1.0 + k - x;
    for i in 1..n {
        let i = i as f64;
        let next = ((2.0 * i + k + 1.0 - x) * curr - (i + k) * prev) / (i + 1.0);
        prev = curr;
        curr = next;
    }
    Ok(curr)
}

/// Terminating Gauss series ₂F₁(-n, b; c; x), a polynomial of degree n.
pub fn gauss_2f1(n_term: u32, b: f64, c: f64, x: f64) -> Result<f64, SpecialError> {
    Ok(gauss_2f1_detailed(n_term, b, c, x)?.value)
}

/// As [`gauss_2f1`] but reporting the number of terms summed.
pub fn gauss_2f1_detailed(
    n_term: u32,
    b: f64,
    c: f64,
    x: f64,
) -> Result<PolynomialEval, SpecialError> {
    check_lower_parameter(c)?;
    let a = -(n_term as f64);
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..n_term {
        let j = j as f64;
        term *= (a + j) * (b + j) / ((c + j) * (j + 1.0)) * x;
        sum += term;
    }
    Ok(PolynomialEval {
        value: sum,
        degree: n_term,
        terms_summed: n_term + 1,
    })
}

/// Terminating Kummer series ₁F₁(a; c; x) with a = -m a nonpositive integer.
pub fn kummer_1f1(a_neg: i64, c: f64, x: f64) -> Result<f64, SpecialError> {
    Ok(kummer_1f1_detailed(a_neg, c, x)?.value)
}

/// As [`kummer_1f1`] but reporting the number of terms summed.
pub fn kummer_1f1_detailed(a_neg: i64, c: f64, x: f64) -> Result<PolynomialEval, SpecialError> {
    if a_neg > 0 {
        return Err(SpecialError::InvalidParameter {
            name: "a",
            value: a_neg as f64,
            rule: "must be a nonpositive integer (terminating series)",
        });
    }
    check_lower_parameter(c)?;
    let m = (-a_neg) as u32;
    let a = a_neg as f64;
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..m {
        let j = j as f64;
        term *= (a + j) / ((c + j) * (j + 1.0)) * x;
        sum += term;
    }
    Ok(PolynomialEval {
        value: sum,
        degree: m,
        terms_summed: m + 1,
    })
}

/// Laguerre polynomial through the Kummer identity
/// L_n^k(x) = ((k+1)_n / n!) ₁F₁(-n; k+1; x); used as a consistency route.
pub fn laguerre_via_kummer(n: u32, k: f64, x: f64) -> Result<f64, SpecialError> {
    let scale = pochhammer(k + 1.0, n) / pochhammer(1.0, n);
    Ok(scale * kummer_1f1(-(n as i64), k + 1.0, x)?)
}
