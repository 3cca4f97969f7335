//! Bisection eigensolver for symmetric tridiagonal matrices.
//!
//! Eigenvalue counts come from the Sturm sequence of LDLᵀ pivots; individual
//! eigenvalues are isolated by bisection inside Gershgorin bounds, and
//! eigenvectors are recovered by inverse iteration with a pivoted
//! tridiagonal solve. Deterministic and dependency-free, adequate for the
//! grid sizes used here (≤ 16384).

const PIVOT_GUARD: f64 = 1e-300;

/// Number of eigenvalues strictly less than `shift`.
///
/// `diag` holds the main diagonal, `off` the `n-1` sub/super-diagonal
/// entries. Counts negative pivots of the LDLᵀ factorization of `T - shift I`.
#[must_use]
pub fn sturm_count(diag: &[f64], off: &[f64], shift: f64) -> usize {
    let n = diag.len();
    if n == 0 {
        return 0;
    }
    debug_assert_eq!(off.len(), n - 1);

    let mut count = 0;
    let mut pivot = diag[0] - shift;
    if pivot < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let safe = if pivot.abs() < PIVOT_GUARD {
            if pivot >= 0.0 {
                PIVOT_GUARD
            } else {
                -PIVOT_GUARD
            }
        } else {
            pivot
        };
        pivot = (diag[i] - shift) - off[i - 1] * off[i - 1] / safe;
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// Gershgorin interval containing the whole spectrum.
#[must_use]
pub fn gershgorin_bounds(diag: &[f64], off: &[f64]) -> (f64, f64) {
    let n = diag.len();
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for i in 0..n {
        let left = if i > 0 { off[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - left - right);
        hi = hi.max(diag[i] + left + right);
    }
    (lo - 1.0, hi + 1.0)
}

/// The `count` smallest eigenvalues, ascending, by Sturm bisection.
#[must_use]
pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], count: usize) -> Vec<f64> {
    let n = diag.len();
    let wanted = count.min(n);
    if wanted == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![diag[0]];
    }

    let (lo, hi) = gershgorin_bounds(diag, off);
    let mut eigenvalues = Vec::with_capacity(wanted);
    for k in 0..wanted {
        let mut a = if let Some(&prev) = eigenvalues.last() {
            // eigenvalue k is not below eigenvalue k-1
            prev
        } else {
            lo
        };
        let mut b = hi;
        for _ in 0..220 {
            let mid = 0.5 * (a + b);
            if (b - a) <= 2.0 * f64::EPSILON * mid.abs().max(1.0) {
                break;
            }
            if sturm_count(diag, off, mid) <= k {
                a = mid;
            } else {
                b = mid;
            }
        }
        eigenvalues.push(0.5 * (a + b));
    }
    eigenvalues
}

/// Eigenvector for an isolated eigenvalue by inverse iteration.
///
/// Returns the normalized vector (unit Euclidean norm, first significant
/// entry positive). `lambda` must be accurate to near machine precision.
#[must_use]
pub fn eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    let scale = diag.iter().fold(0.0_f64, |m, d| m.max(d.abs())).max(1.0);
    // tiny shift keeps the factorization from going exactly singular
    let shifted = lambda + scale * 1e-14;

    let mut v = vec![1.0; n];
    normalize(&mut v);
    for _ in 0..4 {
        let mut next = solve_shifted(diag, off, shifted, &v);
        normalize(&mut next);
        v = next;
    }
    // fix sign convention
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-8) {
        if *first < 0.0 {
            for x in &mut v {
                *x = -*x;
            }
        }
    }
    v
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}

/// Solve (T - shift I) x = rhs by Gaussian elimination with partial
/// pivoting on the three bands (one fill-in band appears).
fn solve_shifted(diag: &[f64], off: &[f64], shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut lower: Vec<f64> = vec![0.0; n];
    let mut main: Vec<f64> = diag.iter().map(|v| v - shift).collect();
    let mut upper1: Vec<f64> = vec![0.0; n];
    let mut upper2: Vec<f64> = vec![0.0; n];
    let mut x = rhs.to_vec();
    for i in 0..n - 1 {
        lower[i + 1] = off[i];
        upper1[i] = off[i];
    }

    for i in 0..n - 1 {
        if lower[i + 1].abs() > main[i].abs() {
            // swap row i and row i+1
            let (mi, li) = (main[i], lower[i + 1]);
            main[i] = li;
            lower[i + 1] = mi;
            let (u1i, mi1) = (upper1[i], main[i + 1]);
            upper1[i] = mi1;
            main[i + 1] = u1i;
            let (u2i, u1i1) = (upper2[i], upper1[i + 1]);
            upper2[i] = u1i1;
            upper1[i + 1] = u2i;
            x.swap(i, i + 1);
        }
        let pivot = if main[i].abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(main[i])
        } else {
            main[i]
        };
        let factor = lower[i + 1] / pivot;
        lower[i + 1] = 0.0;
        main[i + 1] -= factor * upper1[i];
        upper1[i + 1] -= factor * upper2[i];
        x[i + 1] -= factor * x[i];
    }

    // back substitution
    let mut sol = vec![0.0; n];
    for i in (0..n).rev() {
        let mut acc = x[i];
        if i + 1 < n {
            acc -= upper1[i] * sol[i + 1];
        }
        if i + 2 < n {
            acc -= upper2[i] * sol[i + 2];
        }
        let pivot = if main[i].abs() < PIVOT_GUARD {
            PIVOT_GUARD.copysign(main[i])
        } else {
            main[i]
        };
        sol[i] = acc / pivot;
    }
    sol
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sturm_count_two_by_two() {
        // [[1, -1], [-1, 3]] has eigenvalues 2 ∓ √2
        let d = [1.0, 3.0];
        let e = [-1.0];
        assert_eq!(sturm_count(&d, &e, 0.0), 0);
        assert_eq!(sturm_count(&d, &e, 1.0), 1);
        assert_eq!(sturm_count(&d, &e, 4.0), 2);
    }

    #[test]
    fn tight_binding_chain_spectrum() {
        // d_i = 0, e_i = -1: eigenvalues 2 cos(kπ/(N+1))
        let n = 64;
        let d = vec![0.0; n];
        let e = vec![-1.0; n - 1];
        let lowest = lowest_eigenvalues(&d, &e, 5);
        for (idx, ev) in lowest.iter().enumerate() {
            let k = (n - idx) as f64; // smallest eigenvalues come from k near N
            let exact = 2.0 * (k * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            assert!(
                (ev - exact).abs() < 1e-11,
                "idx={idx} got {ev} want {exact}"
            );
        }
        for pair in lowest.windows(2) {
            assert!(pair[0] <= pair[1]);
        }
    }

    #[test]
    fn eigenvector_matches_analytic_mode() {
        let n = 40;
        let d = vec![0.0; n];
        let e = vec![-1.0; n - 1];
        let lam = lowest_eigenvalues(&d, &e, 1)[0];
        let v = eigenvector(&d, &e, lam);
        // residual ‖Tv - λv‖
        let mut res: f64 = 0.0;
        for i in 0..n {
            let mut tv = d[i] * v[i];
            if i > 0 {
                tv += e[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                tv += e[i] * v[i + 1];
            }
            res = res.max((tv - lam * v[i]).abs());
        }
        assert!(res < 1e-10, "residual {res:.3e}");
    }
}
