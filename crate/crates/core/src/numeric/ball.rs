//! Sobolev quotient of the flat profile over the unit ball.
//!
//! The flat-side profile `G_β(x) = [(τ²+|x|²)/(2τ)]^(k-n/2)` is smooth on
//! the closed ball for every `β < 1`, so its k-th order quotient
//! `∫_B |Δ^(k/2)G_β|² dx / (∫_B |G_β|^q dx)^(2/q)` is finite, and it
//! converges to the sharp value as `β → 1⁻` without attaining it at any
//! finite `β`. The approach is from *below*: `G_β` does not vanish on the
//! boundary sphere, so it is not an admissible competitor for the
//! zero-boundary-data infimum, and the boundary terms dropped by the
//! restriction pull its quotient under the sharp value. (Observed
//! numerically across the implemented range, e.g. `(n,k) = (5,1)`:
//! quotient 8.72 at β = 0.5 rising to 14.8119 at β = 0.9999 against the
//! sharp 14.8119; `(6,2)`: 162.3 rising to 247.27 against 247.28.)
//! Half-integer powers follow the usual convention: for odd `k` the
//! numerator is the gradient energy of `Δ^((k-1)/2)G_β`.
//!
//! Integrands are built symbolically (iterated radial Laplacian in the
//! `(τ², ρ²)` ring), then reduced to one-dimensional radial integrals with
//! weight `ω_{n-1} ρ^(n-1)` over `ρ ∈ [0, 1]`.

use super::quadrature::{integrate_adaptive, require_converged};
use super::{euclid_expr_value, ExtremalParams, NumericError, QuotientReport};
use crate::constants::{best_constant, sphere_area};
use crate::radial::{euclid_laplacian, euclid_radial_derivative, EuclidRadialExpr};

/// Quotient report for `G_β` on the unit ball; `gap = sharp_value - quotient`
/// measures the distance still to climb and shrinks toward 0 as `β → 1⁻`
/// (same orientation as the hyperbolic report: positive while the sharp
/// value has not been reached).
pub fn euclidean_ball_quotient(
    p: &ExtremalParams,
    rel_tol: f64,
) -> Result<QuotientReport, NumericError> {
    if !(rel_tol > 0.0) {
        return Err(NumericError::InvalidArgument {
            message: format!("rel_tol must be positive (got {rel_tol})"),
        });
    }
    let n = p.n;
    let n_i = p.n as i64;
    let tau2 = p.tau_sq();
    let q = p.q();
    let weight = sphere_area(n - 1);
    // G_β = s0 · (τ²+ρ²)^(k-n/2)
    let s0 = (2.0 * p.tau()).powf((n as f64 - 2.0 * p.k as f64) / 2.0);

    let mut image = EuclidRadialExpr::extremal(p.k);
    for _ in 0..(p.k / 2) {
        image = euclid_laplacian(&image);
    }
    let odd = p.k % 2 == 1;
    let image = if odd {
        euclid_radial_derivative(&image).w_derivative
    } else {
        image
    };
    let numerator_integrand = |rho: f64| {
        let val = euclid_expr_value(&image, n_i, tau2, rho);
        // odd k: the radial derivative is 2ρ·(d/dρ² value)
        let deriv_factor = if odd { 2.0 * rho } else { 1.0 };
        let v = s0 * deriv_factor * val;
        v * v * weight * rho.powi(n as i32 - 1)
    };

    let profile = EuclidRadialExpr::extremal(p.k);
    let denominator_integrand = |rho: f64| {
        let v = s0 * euclid_expr_value(&profile, n_i, tau2, rho);
        v.abs().powf(q) * weight * rho.powi(n as i32 - 1)
    };

    let numerator = integrate_adaptive(numerator_integrand, 0.0, 1.0, rel_tol);
    require_converged(&numerator, rel_tol)?;
    let denominator = integrate_adaptive(denominator_integrand, 0.0, 1.0, rel_tol);
    require_converged(&denominator, rel_tol)?;

    let sharp_value = 1.0
        / best_constant(n, p.k)
            .expect("parameter validation guarantees the constant exists");
    let quotient = numerator.value / denominator.value.powf(2.0 / q);
    let rel_err = numerator.error_estimate / numerator.value
        + (2.0 / q) * denominator.error_estimate / denominator.value;
    Ok(QuotientReport {
        params: *p,
        integral_uq: denominator.value,
        quotient,
        sharp_value,
        gap: sharp_value - quotient,
        err_estimate: quotient * rel_err,
    })
}
