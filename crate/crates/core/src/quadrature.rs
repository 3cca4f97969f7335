//! Gauss quadrature rules for the normalization integrals.
//!
//! Rules are built by the Golub–Welsch method: nodes are the eigenvalues of
//! the Jacobi matrix of the orthonormal recurrence, weights come from the
//! first components of its eigenvectors. Both the Legendre rule on an
//! interval and the generalized Laguerre rule (weight x^α e^{-x} on the
//! half line, α > -1) are provided; the latter keeps the radial integrands
//! polynomial even for non-integer α.

use crate::special::ln_gamma;
use crate::tridiag;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("quadrature order must be at least 1, got {0}")]
    OrderTooSmall(usize),
    #[error("Laguerre weight exponent must be > -1, got {0}")]
    BadExponent(f64),
    #[error("interval must satisfy a < b, got [{a}, {b}]")]
    BadInterval { a: f64, b: f64 },
}

/// Weight function and domain of a rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadKind {
    /// Unit weight on [a, b].
    LegendreInterval { a: f64, b: f64 },
    /// Weight x^alpha e^{-x} on [0, ∞).
    LaguerreWeight { alpha: f64 },
}

/// Immutable quadrature rule: Σ wᵢ f(xᵢ) ≈ ∫ w(x) f(x) dx.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    kind: QuadKind,
}

impl QuadratureRule {
    /// Gauss–Legendre rule on [a, b], exact for polynomials of degree 2·order - 1.
    pub fn gauss_legendre(order: usize, a: f64, b: f64) -> Result<Self, QuadratureError> {
        if order < 1 {
            return Err(QuadratureError::OrderTooSmall(order));
        }
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(QuadratureError::BadInterval { a, b });
        }
        let diag = vec![0.0; order];
        let mut off = Vec::with_capacity(order.saturating_sub(1));
        for i in 1..order {
            let i = i as f64;
            off.push(i / (4.0 * i * i - 1.0).sqrt());
        }
        let (nodes01, weights01) = golub_welsch(&diag, &off, 2.0);
        // map [-1, 1] onto [a, b]
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let nodes = nodes01.iter().map(|t| mid + half * t).collect();
        let weights = weights01.iter().map(|w| w * half).collect();
        Ok(Self {
            nodes,
            weights,
            kind: QuadKind::LegendreInterval { a, b },
        })
    }

    /// Generalized Gauss–Laguerre rule with weight x^alpha e^{-x}.
    pub fn gauss_laguerre(order: usize, alpha: f64) -> Result<Self, QuadratureError> {
        if order < 1 {
            return Err(QuadratureError::OrderTooSmall(order));
        }
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(QuadratureError::BadExponent(alpha));
        }
        let mut diag = Vec::with_capacity(order);
        let mut off = Vec::with_capacity(order.saturating_sub(1));
        for i in 0..order {
            let i = i as f64;
            diag.push(2.0 * i + alpha + 1.0);
            if (i as usize) + 1 < order {
                let j = i + 1.0;
                off.push((j * (j + alpha)).sqrt());
            }
        }
        let mu0 = ln_gamma(alpha + 1.0).exp();
        let (nodes, weights) = golub_welsch(&diag, &off, mu0);
        Ok(Self {
            nodes,
            weights,
            kind: QuadKind::LaguerreWeight { alpha },
        })
    }

    #[must_use]
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    #[must_use]
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    #[must_use]
    pub fn kind(&self) -> QuadKind {
        self.kind
    }

    #[must_use]
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Σ wᵢ f(xᵢ). The weight function is implicit: pass only the smooth part.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Total measure Σ wᵢ, equal to ∫ w(x) dx for the rule's weight.
    #[must_use]
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }
}

/// Nodes and weights from a symmetric Jacobi matrix with zeroth moment `mu0`.
fn golub_welsch(diag: &[f64], off: &[f64], mu0: f64) -> (Vec<f64>, Vec<f64>) {
    let n = diag.len();
    let nodes = tridiag::lowest_eigenvalues(diag, off, n);
    let mut weights = Vec::with_capacity(n);
    for &node in &nodes {
        let v = tridiag::eigenvector(diag, off, node);
        weights.push(mu0 * v[0] * v[0]);
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::{laguerre, ln_gamma};

    #[test]
    fn legendre_order_two_is_exact_for_x2() {
        let rule = QuadratureRule::gauss_legendre(2, -1.0, 1.0).unwrap();
        let value = rule.integrate(|x| x * x);
        assert!((value - 2.0 / 3.0).abs() < 1e-15, "got {value}");
    }

    #[test]
    fn legendre_nodes_increase_and_measure_matches() {
        let rule = QuadratureRule::gauss_legendre(32, 0.0, 3.0).unwrap();
        assert!(rule.nodes().windows(2).all(|p| p[0] < p[1]));
        assert!((rule.total_weight() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn laguerre_first_moment() {
        // ∫₀^∞ e^{-x} x dx = Γ(2) = 1
        let rule = QuadratureRule::gauss_laguerre(8, 0.0).unwrap();
        assert!((rule.integrate(|x| x) - 1.0).abs() < 1e-12);
        assert!((rule.total_weight() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn generalized_laguerre_measure() {
        let alpha = 2.5;
        let rule = QuadratureRule::gauss_laguerre(16, alpha).unwrap();
        let gamma = ln_gamma(alpha + 1.0).exp();
        assert!((rule.total_weight() - gamma).abs() < 1e-10 * gamma);
    }

    #[test]
    fn laguerre_orthogonality_up_to_six() {
        // ∫₀^∞ x^k e^{-x} L_n^k L_m^k dx = δ_nm Γ(n+k+1)/n!
        for &k in &[0.0, 1.0, 2.0] {
            let rule = QuadratureRule::gauss_laguerre(24, k).unwrap();
            for n in 0..=6u32 {
                for m in 0..=6u32 {
                    let value = rule.integrate(|x| {
                        laguerre(n, k, x).unwrap() * laguerre(m, k, x).unwrap()
                    });
                    let expected = if n == m {
                        (ln_gamma(n as f64 + k + 1.0) - ln_gamma(n as f64 + 1.0)).exp()
                    } else {
                        0.0
                    };
                    assert!(
                        (value - expected).abs() < 1e-8,
                        "k={k} n={n} m={m}: {value} vs {expected}"
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_rules_rejected() {
        assert!(QuadratureRule::gauss_legendre(0, -1.0, 1.0).is_err());
        assert!(QuadratureRule::gauss_legendre(4, 2.0, 1.0).is_err());
        assert!(QuadratureRule::gauss_laguerre(4, -1.0).is_err());
    }
}
