//! Jet-based checks of the conformal transformation law.
//!
//! With `ξ_k(x) = (2/(1-|x|²))^((n-2k)/2)` on the unit ball and the radius
//! map `|x| = tanh(r/2)`, a radial function `u(r)` on hyperbolic space
//! satisfies
//!
//! `Δ^k (ξ_k · (u∘σ))(x) = ξ_k(x)^((n+2k)/(n-2k)) · (P_k u)(r)`,
//!
//! where `Δ` is the flat Laplacian and `P_k` the k-th order hyperbolic
//! operator. Both sides are evaluated through truncated Taylor jets — exact
//! derivative recurrences, not finite differences — at matched sample
//! points, for probe functions where no closed form exists.
//!
//! The same law makes the Sobolev quotient of a compactly supported bump
//! equal on the two sides ([`bump_quotient_pair`]): compact support kills
//! all boundary terms, `ξ_k^q` is exactly the hyperbolic volume density,
//! and numerator and denominator transfer integral-by-integral.

use super::jet::{euclid_laplacian_jet, hyp_laplacian_jet, Jet};
use super::quadrature::{integrate_adaptive, require_converged};
use super::{dim_to_f64, ExtremalParams, NumericError};
use crate::constants::sphere_area;
use crate::operator::{coefficient, standard_operator, OperatorPoly};

/// Radial test function fed to the transformation-law check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConformalProbe {
    /// `exp(-1/(1-y²))` with `y = (r-center)/width`, supported on
    /// `|r - center| < width`.
    Bump { center: f64, width: f64 },
    /// The constant function; at `k = 1` the law collapses to the closed
    /// identity `Δξ₁ = -(n(n-2)/4)·ξ₁^((n+2)/(n-2))`.
    Constant(f64),
    /// The extremal profile `u_β`, for which both sides equal the lifted
    /// Euler–Lagrange power identity.
    Extremal { beta: f64 },
}

/// Everything below `1-y²` = this is treated as outside the bump's support;
/// the true values there are below 1e-250 after every derivative prefactor.
const BUMP_SUPPORT_GUARD: f64 = 1.5e-3;

/// The probe composed with a jet of the hyperbolic radius `r`.
fn probe_jet(
    probe: &ConformalProbe,
    r_jet: &Jet,
    n: u32,
    k: u32,
) -> Jet {
    match *probe {
        ConformalProbe::Bump { center, width } => {
            let y = r_jet.sub(&Jet::constant(center, r_jet.len())).scale(1.0 / width);
            let one_minus = Jet::constant(1.0, r_jet.len()).sub(&y.mul(&y));
            if one_minus.value() < BUMP_SUPPORT_GUARD {
                return Jet::constant(0.0, r_jet.len());
            }
            one_minus.recip().neg().exp()
        }
        ConformalProbe::Constant(v) => Jet::constant(v, r_jet.len()),
        ConformalProbe::Extremal { beta } => {
            let norm = ((1.0 - beta) * (1.0 + beta)).powf((n as f64 - 2.0 * k as f64) / 4.0);
            r_jet
                .cosh()
                .sub(&Jet::constant(beta, r_jet.len()))
                .powf(k as f64 - n as f64 / 2.0)
                .scale(norm)
        }
    }
}

/// `(P_k u)(r)` and `u(r)` from one jet expansion at base point `r`.
fn operator_value_at(
    op: &OperatorPoly,
    n: u32,
    k: u32,
    probe: &ConformalProbe,
    r: f64,
    jet_len: usize,
) -> (f64, f64) {
    let u = probe_jet(probe, &Jet::variable(r, jet_len), n, k);
    let u_value = u.value();
    let mut accumulated = 0.0;
    let mut current = u;
    for m in 0..=k {
        let a_m = dim_to_f64(
            &coefficient(op, m).expect("m ≤ k is in range"),
            n as i64,
        );
        accumulated += a_m * current.value();
        if m < k {
            current = hyp_laplacian_jet(&current, r, n);
        }
    }
    (accumulated, u_value)
}

/// `Δ^k(ξ_k · (u∘σ))` and `ξ_k·(u∘σ)` at `ρ = tanh(r/2)`, via jets in `ρ`.
fn flat_side_at(
    probe: &ConformalProbe,
    n: u32,
    k: u32,
    r: f64,
    jet_len: usize,
) -> (f64, f64) {
    let rho = (0.5 * r).tanh();
    let var = Jet::variable(rho, jet_len);
    let one = Jet::constant(1.0, jet_len);
    // r(ρ) = ln((1+ρ)/(1-ρ))
    let r_jet = one.add(&var).div(&one.sub(&var)).ln();
    let u = probe_jet(probe, &r_jet, n, k);
    let xi = one
        .sub(&var.mul(&var))
        .recip()
        .scale(2.0)
        .powf((n as f64 - 2.0 * k as f64) / 2.0);
    let mut lifted = xi.mul(&u);
    let lifted_value = lifted.value();
    for _ in 0..k {
        lifted = euclid_laplacian_jet(&lifted, rho, n);
    }
    (lifted.value(), lifted_value)
}

fn validate_order(n: u32, k: u32, jet_order: usize) -> Result<usize, NumericError> {
    if k < 1 {
        return Err(NumericError::OrderTooSmall);
    }
    if n <= 2 * k {
        return Err(NumericError::DimensionTooSmall { n, k });
    }
    let needed = 2 * k as usize + 2;
    if jet_order < needed {
        return Err(NumericError::JetOrderTooLow {
            order: jet_order,
            k,
            needed,
        });
    }
    Ok(jet_order + 1)
}

/// Maximum residual of the transformation law over the sample radii,
/// normalized by the largest side magnitude across the whole sample set —
/// per-point normalization would blow up at the sign changes of `P_k u`.
pub fn conformal_law_residual(
    n: u32,
    k: u32,
    probe: &ConformalProbe,
    jet_order: usize,
    sample_rs: &[f64],
) -> Result<f64, NumericError> {
    let jet_len = validate_order(n, k, jet_order)?;
    if sample_rs.is_empty() {
        return Err(NumericError::InvalidArgument {
            message: "need at least one sample radius".to_string(),
        });
    }
    if sample_rs.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
        return Err(NumericError::InvalidArgument {
            message: "sample radii must be positive and finite".to_string(),
        });
    }
    if let ConformalProbe::Extremal { beta } = probe {
        // borrows the parameter validation (and the β cap)
        ExtremalParams::new(n, k, *beta)?;
    }

    let op = standard_operator(k);
    let exponent = (n as f64 + 2.0 * k as f64) / (n as f64 - 2.0 * k as f64);
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &r in sample_rs {
        let (pk_u, _) = operator_value_at(&op, n, k, probe, r, jet_len);
        // ξ_k at the matched point, via 2/(1-ρ²) = cosh r + 1
        let xi = (r.cosh() + 1.0).powf((n as f64 - 2.0 * k as f64) / 2.0);
        let curved_side = xi.powf(exponent) * pk_u;
        let (flat_side, _) = flat_side_at(probe, n, k, r, jet_len);
        worst = worst.max((curved_side - flat_side).abs());
        scale = scale.max(curved_side.abs()).max(flat_side.abs());
    }
    if scale == 0.0 {
        return Ok(0.0);
    }
    Ok(worst / scale)
}

/// Evenly spaced radii covering the middle of a bump's support: from
/// `center - 0.8·width` to `center + 0.8·width`, floored away from `r = 0`.
pub fn bump_sample_points(center: f64, width: f64, count: usize) -> Vec<f64> {
    assert!(count >= 1, "need at least one sample point");
    assert!(width > 0.0, "bump width must be positive");
    let lo = (center - 0.8 * width).max(1e-3);
    let hi = center + 0.8 * width;
    if count == 1 {
        return vec![0.5 * (lo + hi)];
    }
    (0..count)
        .map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64)
        .collect()
}

/// The k-th order Sobolev quotient of a bump, computed independently on the
/// two sides of the transformation law:
///
/// * curved: `∫(P_k u)·u dV_h / (∫|u|^q dV_h)^(2/q)` with `P_k u` via jets;
/// * flat: the same quotient for the lifted function `ξ_k·(u∘σ)` on the
///   unit ball with Lebesgue measure.
///
/// Compact support makes the two quotients equal; the returned pair is the
/// raw `(curved, flat)` measurement of that identity.
pub fn bump_quotient_pair(
    n: u32,
    k: u32,
    center: f64,
    width: f64,
    jet_order: usize,
    rel_tol: f64,
) -> Result<(f64, f64), NumericError> {
    let jet_len = validate_order(n, k, jet_order)?;
    if !(width > 0.0 && center - width >= 0.0) {
        return Err(NumericError::InvalidArgument {
            message: "bump support must sit inside r > 0".to_string(),
        });
    }
    if !(rel_tol > 0.0) {
        return Err(NumericError::InvalidArgument {
            message: format!("rel_tol must be positive (got {rel_tol})"),
        });
    }
    let probe = ConformalProbe::Bump { center, width };
    let op = standard_operator(k);
    let weight = sphere_area(n - 1);
    let q = 2.0 * n as f64 / (n as f64 - 2.0 * k as f64);
    let (lo, hi) = (center - width, center + width);

    let curved_num = integrate_adaptive(
        |r: f64| {
            if r <= 0.0 {
                return 0.0;
            }
            let (pk_u, u) = operator_value_at(&op, n, k, &probe, r, jet_len);
            pk_u * u * weight * r.sinh().powi(n as i32 - 1)
        },
        lo,
        hi,
        rel_tol,
    );
    require_converged(&curved_num, rel_tol)?;
    let curved_den = integrate_adaptive(
        |r: f64| {
            let y = (r - center) / width;
            let arg = 1.0 - y * y;
            if arg < BUMP_SUPPORT_GUARD {
                return 0.0;
            }
            (-q / arg).exp() * weight * r.sinh().powi(n as i32 - 1)
        },
        lo,
        hi,
        rel_tol,
    );
    require_converged(&curved_den, rel_tol)?;

    let (rho_lo, rho_hi) = ((0.5 * lo).tanh().max(0.0), (0.5 * hi).tanh());
    let flat_num = integrate_adaptive(
        |rho: f64| {
            if rho <= 0.0 {
                return 0.0;
            }
            let r = 2.0 * rho.atanh();
            let (lap_k, lifted) = flat_side_at(&probe, n, k, r, jet_len);
            lap_k * lifted * weight * rho.powi(n as i32 - 1)
        },
        rho_lo,
        rho_hi,
        rel_tol,
    );
    require_converged(&flat_num, rel_tol)?;
    let flat_den = integrate_adaptive(
        |rho: f64| {
            if rho <= 0.0 {
                return 0.0;
            }
            let r = 2.0 * rho.atanh();
            let y = (r - center) / width;
            let arg = 1.0 - y * y;
            if arg < BUMP_SUPPORT_GUARD {
                return 0.0;
            }
            let xi = (r.cosh() + 1.0).powf((n as f64 - 2.0 * k as f64) / 2.0);
            (xi * (-1.0 / arg).exp()).powf(q) * weight * rho.powi(n as i32 - 1)
        },
        rho_lo,
        rho_hi,
        rel_tol,
    );
    require_converged(&flat_den, rel_tol)?;

    Ok((
        curved_num.value / curved_den.value.powf(2.0 / q),
        flat_num.value / flat_den.value.powf(2.0 / q),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_probe_reduces_to_closed_identity() {
        let residual =
            conformal_law_residual(5, 1, &ConformalProbe::Constant(2.5), 6, &[0.3, 0.7, 1.5])
                .unwrap();
        assert!(residual <= 1e-12, "residual {residual}");
    }

    #[test]
    fn extremal_probe_satisfies_the_law() {
        let residual = conformal_law_residual(
            5,
            1,
            &ConformalProbe::Extremal { beta: 0.4 },
            6,
            &[0.2, 0.5, 1.0, 2.0],
        )
        .unwrap();
        assert!(residual <= 1e-10, "first order residual {residual}");

        let residual = conformal_law_residual(
            6,
            2,
            &ConformalProbe::Extremal { beta: 0.3 },
            8,
            &[0.3, 0.8, 1.6],
        )
        .unwrap();
        assert!(residual <= 1e-10, "second order residual {residual}");
    }

    #[test]
    fn bump_probe_satisfies_the_law() {
        let probe = ConformalProbe::Bump {
            center: 1.0,
            width: 0.8,
        };
        let samples = bump_sample_points(1.0, 0.8, 20);
        let residual = conformal_law_residual(5, 1, &probe, 8, &samples).unwrap();
        assert!(residual <= 1e-6, "bump residual {residual}");
    }

    #[test]
    fn bump_quotients_agree_across_the_law() {
        let (curved, flat) = bump_quotient_pair(5, 1, 1.0, 0.8, 8, 1e-9).unwrap();
        assert!(
            (curved - flat).abs() <= 1e-5 * curved.abs(),
            "curved {curved} vs flat {flat}"
        );
    }

    #[test]
    fn argument_validation() {
        assert_eq!(
            conformal_law_residual(5, 1, &ConformalProbe::Constant(1.0), 3, &[0.5]),
            Err(NumericError::JetOrderTooLow {
                order: 3,
                k: 1,
                needed: 4
            })
        );
        assert!(matches!(
            conformal_law_residual(4, 2, &ConformalProbe::Constant(1.0), 8, &[0.5]),
            Err(NumericError::DimensionTooSmall { .. })
        ));
        assert!(matches!(
            conformal_law_residual(5, 1, &ConformalProbe::Constant(1.0), 6, &[]),
            Err(NumericError::InvalidArgument { .. })
        ));
        assert!(matches!(
            conformal_law_residual(5, 1, &ConformalProbe::Constant(1.0), 6, &[-0.5]),
            Err(NumericError::InvalidArgument { .. })
        ));
        assert!(matches!(
            conformal_law_residual(5, 1, &ConformalProbe::Extremal { beta: 1.5 }, 6, &[0.5]),
            Err(NumericError::BetaOutOfRange { .. })
        ));
    }

    #[test]
    fn sample_points_stay_inside_support() {
        let points = bump_sample_points(1.0, 0.8, 20);
        assert_eq!(points.len(), 20);
        assert!(points.iter().all(|r| *r > 0.0));
        assert!(points.iter().all(|r| ((r - 1.0) / 0.8).abs() <= 0.8 + 1e-12));
        assert!(points.windows(2).all(|w| w[0] < w[1]));
    }
}
