//! The concentrating extremal family and its critical-power integral.
//!
//! `u_β(r) = (1-β²)^((n-2k)/4) · (cosh r - β)^(k-n/2)` concentrates at the
//! origin as `β → 1⁻`. All evaluations run in log space: `ln(cosh r - β)` is
//! computed as `r - ln 2 + ln1p(e^{-r}(e^{-r} - 2β))`, which stays accurate
//! for every `r ≥ 0` and `β` up to the cap.
//!
//! The critical-power integral `∫ |u_β|^q dV_h` reduces, in the substituted
//! variable `z` with upper limit `Z = √((1+β)/(1-β))`, to
//! `2^n ω_{n-1} ∫_0^Z z^(n-1) (1+z²)^(-n) dz`. The integrand is invariant
//! under `z ↦ 1/z`, so `∫_0^Z = 2∫_0^1 - ∫_0^(1/Z)`; both pieces live on
//! fixed small intervals, and the second piece *is* the defect `ω_n - ∫u^q`
//! up to the shared prefactor. The Sobolev quotient's gap to the sharp value
//! is assembled from that tail directly — through `ln1p`/`expm1`, never by
//! subtracting two nearly equal integrals — so its relative accuracy follows
//! the quadrature, not the size of the gap.

use super::quadrature::{integrate_adaptive, QuadratureResult};
use super::{ExtremalParams, NumericError, QuotientReport};
use crate::constants::{best_constant, sphere_area};

/// Pointwise value of the extremal profile at geodesic distance `r ≥ 0`.
pub fn u_beta_value(p: &ExtremalParams, r: f64) -> f64 {
    assert!(r >= 0.0, "the profile is radial: r must be nonnegative");
    let beta = p.beta;
    let em = (-r).exp();
    // ln(cosh r - β), stable for all r ≥ 0 and β < 1
    let ln_base = r - std::f64::consts::LN_2 + (em * (em - 2.0 * beta)).ln_1p();
    let ln_norm = p.norm_exponent() * ((1.0 - beta).ln() + (1.0 + beta).ln());
    let power = p.k as f64 - p.n as f64 / 2.0;
    (ln_norm + power * ln_base).exp()
}

/// Residual of the ball-to-hyperboloid lift at `|x| = x_norm`: the flat-side
/// profile `(2/(1-|x|²))^(k-n/2) · [(τ²+|x|²)/(2τ)]^(k-n/2)` against
/// `u_β` at `r = 2·artanh|x|`. Returns the absolute difference; both sides
/// are evaluated in log space, so the residual is rounding-level whenever
/// the lift identity holds.
pub fn lift_residual(p: &ExtremalParams, x_norm: f64) -> f64 {
    assert!(
        (0.0..1.0).contains(&x_norm),
        "the lift lives on the open unit ball"
    );
    let tau = p.tau();
    let rho2 = x_norm * x_norm;
    let power = p.k as f64 - p.n as f64 / 2.0;
    let ln_lifted = power * ((p.tau_sq() + rho2).ln() - tau.ln() - (-rho2).ln_1p());
    let r = 2.0 * x_norm.atanh();
    (ln_lifted.exp() - u_beta_value(p, r)).abs()
}

/// The two pieces of the substituted integral: `∫_0^1` and `∫_0^τ` of the
/// weighted integrand `2^n ω_{n-1} z^(n-1) (1+z²)^(-n)`. By the `z ↦ 1/z`
/// symmetry the full integral is twice the first minus the second, and the
/// second is exactly the defect below `ω_n`.
fn uq_pieces(p: &ExtremalParams, rel_tol: f64) -> (QuadratureResult, QuadratureResult) {
    let n = p.n as i32;
    let prefactor = 2f64.powi(n) * sphere_area(p.n - 1);
    let g = move |z: f64| prefactor * z.powi(n - 1) * (1.0 + z * z).powi(-n);
    let whole = integrate_adaptive(g, 0.0, 1.0, rel_tol / 4.0);
    let tail = integrate_adaptive(g, 0.0, p.tau(), rel_tol / 4.0);
    (whole, tail)
}

fn assemble_uq(whole: &QuadratureResult, tail: &QuadratureResult) -> QuadratureResult {
    QuadratureResult {
        value: 2.0 * whole.value - tail.value,
        error_estimate: 2.0 * whole.error_estimate + tail.error_estimate,
        subdivisions: whole.subdivisions + tail.subdivisions,
        // The true endpoints are z = 0 (power n-1, read off the lower piece)
        // and z = Z, where the integrand is smooth and positive.
        endpoint_exponents: (whole.endpoint_exponents.0, 0.0),
        converged: whole.converged && tail.converged,
    }
}

/// `∫ |u_β|^q dV_h` to relative tolerance `rel_tol`. Strictly increasing in
/// `β` and bounded above by `ω_n`.
pub fn integral_uq(p: &ExtremalParams, rel_tol: f64) -> Result<QuadratureResult, NumericError> {
    if !(rel_tol > 0.0) {
        return Err(NumericError::InvalidArgument {
            message: format!("rel_tol must be positive (got {rel_tol})"),
        });
    }
    let (whole, tail) = uq_pieces(p, rel_tol);
    let combined = assemble_uq(&whole, &tail);
    let ok = combined.converged
        && combined.error_estimate <= rel_tol * combined.value.abs().max(1.0);
    if !ok {
        return Err(NumericError::ToleranceNotMet {
            rel_tol,
            achieved: combined.error_estimate,
        });
    }
    Ok(QuadratureResult {
        converged: true,
        ..combined
    })
}

/// Default tolerance for quotient reports; tight, because the interesting
/// output is the gap and the gap inherits the quadrature's relative error.
const QUOTIENT_REL_TOL: f64 = 1e-13;

/// Sobolev quotient of `u_β`: `b_k · (∫|u_β|^q dV_h)^(2k/n)`, which the
/// pointwise Euler–Lagrange identity makes equal to the full quotient
/// `∫(P_k u_β)u_β / (∫|u_β|^q)^(2/q)`. Reported against the sharp value
/// `1/Λ_k`, which it approaches from below as `β → 1⁻`.
pub fn hyperbolic_quotient(p: &ExtremalParams) -> Result<QuotientReport, NumericError> {
    hyperbolic_quotient_with_tol(p, QUOTIENT_REL_TOL)
}

/// [`hyperbolic_quotient`] with an explicit quadrature tolerance.
pub fn hyperbolic_quotient_with_tol(
    p: &ExtremalParams,
    rel_tol: f64,
) -> Result<QuotientReport, NumericError> {
    if !(rel_tol > 0.0) {
        return Err(NumericError::InvalidArgument {
            message: format!("rel_tol must be positive (got {rel_tol})"),
        });
    }
    let (whole, tail) = uq_pieces(p, rel_tol);
    let combined = assemble_uq(&whole, &tail);
    if !(combined.converged && combined.error_estimate <= rel_tol * combined.value.abs().max(1.0))
    {
        return Err(NumericError::ToleranceNotMet {
            rel_tol,
            achieved: combined.error_estimate,
        });
    }

    let sharp_value = 1.0
        / best_constant(p.n, p.k)
            .expect("parameter validation guarantees the constant exists");
    // quotient/sharp = (∫u^q / ω_n)^(2k/n); with ω̂ the quadrature's own
    // value of ω_n the ratio is 1 - tail/ω̂, and the gap comes out of
    // ln1p/expm1 with the tail's relative accuracy.
    let omega_hat = 2.0 * whole.value;
    let exponent = 2.0 * p.k as f64 / p.n as f64;
    let log_ratio = exponent * (-tail.value / omega_hat).ln_1p();
    let gap = sharp_value * (-log_ratio.exp_m1());
    let quotient = sharp_value - gap;
    let rel_err = (2.0 * whole.error_estimate + tail.error_estimate) / combined.value;
    Ok(QuotientReport {
        params: *p,
        integral_uq: combined.value,
        quotient,
        sharp_value,
        gap,
        err_estimate: quotient * exponent * rel_err,
    })
}

/// Quotient reports along a strictly increasing list of `β` values.
pub fn quotient_curve(
    n: u32,
    k: u32,
    betas: &[f64],
) -> Result<Vec<QuotientReport>, NumericError> {
    quotient_curve_with_tol(n, k, betas, QUOTIENT_REL_TOL)
}

/// [`quotient_curve`] with an explicit quadrature tolerance.
pub fn quotient_curve_with_tol(
    n: u32,
    k: u32,
    betas: &[f64],
    rel_tol: f64,
) -> Result<Vec<QuotientReport>, NumericError> {
    if betas.is_empty() {
        return Err(NumericError::InvalidArgument {
            message: "beta list must not be empty".to_string(),
        });
    }
    if betas.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(NumericError::InvalidArgument {
            message: "beta list must be strictly increasing".to_string(),
        });
    }
    betas
        .iter()
        .map(|&beta| hyperbolic_quotient_with_tol(&ExtremalParams::new(n, k, beta)?, rel_tol))
        .collect()
}
