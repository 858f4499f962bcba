//! Floating-point laboratory.
//!
//! Everything numeric lives here: evaluation of the extremal family, adaptive
//! quadrature of the radial integrals, Sobolev quotient sweeps on both the
//! hyperbolic and the Euclidean-ball side, truncated energies with divergence
//! diagnostics, and jet-based checks of the conformal transformation law. The
//! exact layers ([`crate::exact`], [`crate::operator`], [`crate::radial`])
//! never touch floats; this module owns the bridge functions that instantiate
//! their output at numeric parameter values.
//!
//! Two conventions hold throughout:
//!
//! * integrals over hyperbolic space reduce to `ω_{n-1} ∫ (·) sinh^(n-1) r dr`
//!   and integrals over the unit ball to `ω_{n-1} ∫ (·) ρ^(n-1) dρ`;
//! * parameters near `β = 1` are always routed through the substituted
//!   variables `z`/`t` with `τ² = (1-β)/(1+β)`, never through differences
//!   `cosh r - β` evaluated at large `r`.

mod ball;
mod conformal;
mod energy;
mod extremal;
mod jet;
mod quadrature;

pub use ball::euclidean_ball_quotient;
pub use conformal::{
    bump_quotient_pair, bump_sample_points, conformal_law_residual, ConformalProbe,
};
pub use energy::{
    energy_growth_rate, global_energy_integrals, perturbed_quotient_probe, truncated_energy,
};
pub use extremal::{
    hyperbolic_quotient, hyperbolic_quotient_with_tol, integral_uq, lift_residual, quotient_curve,
    quotient_curve_with_tol, u_beta_value,
};
pub use jet::{euclid_laplacian_jet, hyp_laplacian_jet, Jet};
pub use quadrature::{integrate_adaptive, QuadratureResult};

use num_traits::ToPrimitive;

use crate::exact::{rat_int, DimPoly, MultiPoly, Rational, Sym};
use crate::radial::{EuclidRadialExpr, HypRadialExpr};

/// Default relative tolerance for quadrature-backed operations.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Default truncation radius for truncated energies.
pub const DEFAULT_CUTOFF: f64 = 40.0;

/// `β` values this close to 1 are clamped; the substituted variables stay
/// well-conditioned up to here.
pub const BETA_CAP: f64 = 1.0 - 1e-10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("order k must be at least 1")]
    OrderTooSmall,
    #[error("dimension n={n} is too small for order k={k}: n > 2k is required")]
    DimensionTooSmall { n: u32, k: u32 },
    #[error("beta must lie in [0, 1) (got {beta})")]
    BetaOutOfRange { beta: f64 },
    #[error("dimension n={n} is too small for order-{k} energy probes: n > 4k-2 is required")]
    ProbeDimensionTooSmall { n: u32, k: u32 },
    #[error("quadrature did not reach relative tolerance {rel_tol:e} (error estimate {achieved:e})")]
    ToleranceNotMet { rel_tol: f64, achieved: f64 },
    #[error("jet order {order} is too low for an order-{k} check: need at least {needed}")]
    JetOrderTooLow { order: usize, k: u32, needed: usize },
    #[error("invalid argument: {message}")]
    InvalidArgument { message: String },
}

/// Numeric description of one member of the extremal family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalParams {
    pub n: u32,
    pub k: u32,
    /// Clamped to [`BETA_CAP`] on construction.
    pub beta: f64,
}

impl ExtremalParams {
    pub fn new(n: u32, k: u32, beta: f64) -> Result<Self, NumericError> {
        if k < 1 {
            return Err(NumericError::OrderTooSmall);
        }
        if n <= 2 * k {
            return Err(NumericError::DimensionTooSmall { n, k });
        }
        if !beta.is_finite() || !(0.0..1.0).contains(&beta) {
            return Err(NumericError::BetaOutOfRange { beta });
        }
        Ok(ExtremalParams {
            n,
            k,
            beta: beta.min(BETA_CAP),
        })
    }

    /// Critical exponent `q = 2n/(n-2k)`.
    pub fn q(&self) -> f64 {
        2.0 * self.n as f64 / (self.n as f64 - 2.0 * self.k as f64)
    }

    /// `τ² = (1-β)/(1+β)`, the concentration scale of the family.
    pub fn tau_sq(&self) -> f64 {
        (1.0 - self.beta) / (1.0 + self.beta)
    }

    pub fn tau(&self) -> f64 {
        self.tau_sq().sqrt()
    }

    /// Upper limit `√((1+β)/(1-β)) = 1/τ` of the substituted integrals.
    pub fn z_max(&self) -> f64 {
        1.0 / self.tau()
    }

    /// Exponent `(n-2k)/4` carried by the normalization `(1-β²)^((n-2k)/4)`.
    pub fn norm_exponent(&self) -> f64 {
        (self.n as f64 - 2.0 * self.k as f64) / 4.0
    }
}

/// One quotient measurement. Both implemented families approach the sharp
/// value from below, so `gap = sharp_value - quotient` is the positive
/// distance still to climb; it shrinks toward 0 as `β → 1⁻`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientReport {
    pub params: ExtremalParams,
    /// The denominator integral: `∫ |u_β|^q dV_h` on the hyperbolic side,
    /// `∫_B |G_β|^q dx` on the ball side.
    pub integral_uq: f64,
    pub quotient: f64,
    /// `1/Λ_k`.
    pub sharp_value: f64,
    pub gap: f64,
    /// Propagated quadrature error estimate for `quotient`.
    pub err_estimate: f64,
}

/// Exact-to-float bridge for rationals.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Evaluate a polynomial in `n` at an integer dimension, exactly, then round
/// once to `f64`.
pub fn dim_to_f64(p: &DimPoly, n_value: i64) -> f64 {
    rat_to_f64(&p.eval(&rat_int(n_value)))
}

/// Evaluate a multivariate polynomial at numeric symbol values.
pub fn multi_poly_value(
    p: &MultiPoly,
    n: f64,
    beta: f64,
    c: f64,
    tau2: f64,
    rho2: f64,
) -> f64 {
    let vals = [n, beta, c, tau2, rho2];
    let mut acc = 0.0;
    for (e, coeff) in p.terms() {
        let mut term = rat_to_f64(coeff);
        for (i, &p) in e.iter().enumerate() {
            if p > 0 {
                term *= vals[i].powi(i32::from(p));
            }
        }
        acc += term;
    }
    acc
}

/// Evaluate a hyperbolic ring expression at integer dimension `n_value` and
/// numeric `(β, c)` with `c = cosh r`.
pub fn hyp_expr_value(expr: &HypRadialExpr, n_value: i64, beta: f64, c: f64) -> f64 {
    let anchor = dim_to_f64(expr.anchor(), n_value);
    let base = c - beta;
    let mut acc = 0.0;
    for (s, p) in expr.terms() {
        let mut coeff = 0.0;
        for d in p.coeffs().iter().rev() {
            coeff = coeff * c + dim_to_f64(d, n_value);
        }
        acc += coeff * base.powf(anchor - f64::from(*s));
    }
    acc
}

/// Evaluate a Euclidean ring expression at integer dimension `n_value` and
/// numeric `(τ², ρ)`.
pub fn euclid_expr_value(expr: &EuclidRadialExpr, n_value: i64, tau2: f64, rho: f64) -> f64 {
    let anchor = dim_to_f64(expr.anchor(), n_value);
    let base = tau2 + rho * rho;
    let mut acc = 0.0;
    for (s, p) in expr.terms() {
        let mut coeff = 0.0;
        for d in p.coeffs().iter().rev() {
            coeff = coeff * tau2 + dim_to_f64(d, n_value);
        }
        acc += coeff * base.powf(anchor - f64::from(*s));
    }
    acc
}

/// Evaluate a cleared residual polynomial at extremal parameter values; used
/// by the exactness-bridge checks. `Sym::C` receives `cosh r`, `Sym::Tau2`
/// the concentration scale, `Sym::Rho2` the squared ball radius.
pub fn residual_shadow(p: &MultiPoly, params: &ExtremalParams, r: f64, rho: f64) -> f64 {
    let _ = Sym::C; // symbol order documented by multi_poly_value
    multi_poly_value(
        p,
        params.n as f64,
        params.beta,
        r.cosh(),
        params.tau_sq(),
        rho * rho,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::radial::{extremal_expr, hyp_laplacian};

    #[test]
    fn params_validation() {
        assert!(ExtremalParams::new(5, 1, 0.5).is_ok());
        assert_eq!(
            ExtremalParams::new(4, 2, 0.5),
            Err(NumericError::DimensionTooSmall { n: 4, k: 2 })
        );
        assert_eq!(
            ExtremalParams::new(5, 0, 0.5),
            Err(NumericError::OrderTooSmall)
        );
        assert_eq!(
            ExtremalParams::new(5, 1, 1.0),
            Err(NumericError::BetaOutOfRange { beta: 1.0 })
        );
        assert_eq!(
            ExtremalParams::new(5, 1, -0.1),
            Err(NumericError::BetaOutOfRange { beta: -0.1 })
        );
        let capped = ExtremalParams::new(5, 1, 1.0 - 1e-14).unwrap();
        assert_eq!(capped.beta, BETA_CAP);
    }

    #[test]
    fn derived_quantities() {
        let p = ExtremalParams::new(6, 2, 0.6).unwrap();
        assert!((p.q() - 6.0).abs() < 1e-15);
        assert!((p.tau_sq() - 0.25).abs() < 1e-15);
        assert!((p.z_max() - 2.0).abs() < 1e-14);
        assert!((p.norm_exponent() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn dim_bridge_rounds_once() {
        // n(n-2)/4 at n=5 → 15/4
        let p = DimPoly::from_coeffs(vec![rat_int(0), rat(-1, 2), rat(1, 4)]);
        assert_eq!(dim_to_f64(&p, 5), 3.75);
    }

    #[test]
    fn hyp_expr_value_matches_direct_formula() {
        // Δ_r (c-β)^(1-n/2) at n=5, β=0.3, r=1.2 against the hand-written
        // derivative formula e(e-1)(c²-1)X^(e-2) + e·n·c·X^(e-1) negated.
        let image = hyp_laplacian(&extremal_expr(1));
        let (n, beta, r) = (5i64, 0.3, 1.2f64);
        let c = r.cosh();
        let e = 1.0 - 5.0 / 2.0;
        let x = c - beta;
        let direct = -(e * (e - 1.0) * (c * c - 1.0) * x.powf(e - 2.0)
            + e * 5.0 * c * x.powf(e - 1.0));
        let got = hyp_expr_value(&image, n, beta, c);
        assert!((got - direct).abs() < 1e-12 * direct.abs());
    }

    #[test]
    fn euclid_expr_value_matches_direct_formula() {
        // Δ (τ²+ρ²)^(1-n/2) = n(n-2) τ² (τ²+ρ²)^(-1-n/2) at n=6
        let image = crate::radial::euclid_laplacian(&EuclidRadialExpr::extremal(1));
        let (tau2, rho) = (0.25f64, 0.7f64);
        let b = tau2 + rho * rho;
        let direct = 6.0 * 4.0 * tau2 * b.powf(-1.0 - 3.0);
        let got = euclid_expr_value(&image, 6, tau2, rho);
        assert!((got - direct).abs() < 1e-13 * direct.abs());
    }
}
