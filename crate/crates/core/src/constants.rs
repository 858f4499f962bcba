//! Sphere areas and the sharp constants attached to the k-th operator.
//!
//! `sphere_area(n)` is the surface area of the unit n-sphere in `R^(n+1)`,
//! `ω_n = 2π^((n+1)/2) / Γ((n+1)/2)`. The sharp constant of the k-order
//! Sobolev inequality on `R^n` is
//!
//! ```text
//! Λ_k = 2^(2k) ω_n^(-2k/n) / ( n(n-2k) · Π_{j=1..k-1} (n² - (2j)²) )
//! ```
//!
//! and the extremal-equation constant `b_k` ties everything together through
//! `b_k · Λ_k · ω_n^(2k/n) = 1`. [`consistency_residual`] measures that
//! product against 1 with `b_k` taken from the exact operator expansion, so
//! the closed-form denominator above and the symbolic route check each other.
//!
//! Powers `ω_n^(±2k/n)` are taken in log space to keep relative error uniform
//! in `n`.

use std::f64::consts::PI;

use crate::exact::{rat, rat_int, Rational};
use crate::numeric::rat_to_f64;
use crate::operator::b_constant;

/// Everything the `constants` CLI subcommand reports for one `(n, k)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsRecord {
    pub n: u32,
    pub k: u32,
    /// Critical exponent `q = 2n/(n-2k)`, kept exact.
    pub q: Rational,
    pub omega_n: f64,
    pub lambda_k: f64,
    /// Extremal-equation constant `b_k(n)`, kept exact.
    pub b_k: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstantsError {
    #[error("order k must be at least 1 (got k={k})")]
    OrderTooSmall { k: u32 },
    #[error("dimension n={n} is too small for order k={k}: n > 2k is required")]
    DimensionTooSmall { n: u32, k: u32 },
}

fn require_supercritical(n: u32, k: u32) -> Result<(), ConstantsError> {
    if k < 1 {
        return Err(ConstantsError::OrderTooSmall { k });
    }
    if n <= 2 * k {
        return Err(ConstantsError::DimensionTooSmall { n, k });
    }
    Ok(())
}

/// Lanczos approximation, `g = 7` with nine coefficients: relative error
/// below `1e-13` over the range used here. Arguments below 1/2 go through the
/// reflection formula.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_series(z: f64) -> f64 {
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    acc
}

/// Γ(x) for real `x` (poles at the nonpositive integers are the caller's
/// problem; they return non-finite values).
pub fn gamma(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) Γ(1-x) = π / sin(πx)
        PI / ((PI * x).sin() * gamma(1.0 - x))
    } else {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * lanczos_series(z)
    }
}

/// ln Γ(x) for `x > 0`, stable for large arguments.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs a positive argument");
    if x < 0.5 {
        return gamma(x).ln();
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + lanczos_series(z).ln()
}

/// Surface area `ω_n` of the unit n-sphere in `R^(n+1)`.
pub fn sphere_area(n: u32) -> f64 {
    assert!(n >= 1, "sphere dimension must be at least 1");
    let half = (n as f64 + 1.0) / 2.0;
    2.0 * PI.powf(half) / gamma(half)
}

/// `ln ω_n`, for forming powers of the sphere area without overflow.
pub fn ln_sphere_area(n: u32) -> f64 {
    assert!(n >= 1, "sphere dimension must be at least 1");
    let half = (n as f64 + 1.0) / 2.0;
    2f64.ln() + half * PI.ln() - ln_gamma(half)
}

/// The sharp constant `Λ_k` on `R^n`.
pub fn best_constant(n: u32, k: u32) -> Result<f64, ConstantsError> {
    require_supercritical(n, k)?;
    let mut denom: i128 = i128::from(n) * i128::from(n - 2 * k);
    for j in 1..k {
        denom *= i128::from(n) * i128::from(n) - i128::from(2 * j) * i128::from(2 * j);
    }
    let ln_lambda = 2.0 * k as f64 * 2f64.ln()
        - (2.0 * k as f64 / n as f64) * ln_sphere_area(n)
        - (denom as f64).ln();
    Ok(ln_lambda.exp())
}

/// `b_k(n) · Λ_k · ω_n^(2k/n) - 1`, with `b_k` from the exact operator route
/// and `Λ_k` from the closed-form denominator product. Zero up to rounding.
pub fn consistency_residual(n: u32, k: u32) -> Result<f64, ConstantsError> {
    let lambda = best_constant(n, k)?;
    let b_k = b_constant(k).eval(&rat_int(i64::from(n)));
    let omega_pow = ((2.0 * k as f64 / n as f64) * ln_sphere_area(n)).exp();
    Ok(rat_to_f64(&b_k) * lambda * omega_pow - 1.0)
}

/// Assemble the full record for one `(n, k)` pair.
pub fn constants_record(n: u32, k: u32) -> Result<ConstantsRecord, ConstantsError> {
    require_supercritical(n, k)?;
    Ok(ConstantsRecord {
        n,
        k,
        q: rat(2 * i64::from(n), i64::from(n) - 2 * i64::from(k)),
        omega_n: sphere_area(n),
        lambda_k: best_constant(n, k)?,
        b_k: b_constant(k).eval(&rat_int(i64::from(n))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel_err(got: f64, want: f64) -> f64 {
        ((got - want) / want).abs()
    }

    #[test]
    fn gamma_at_integers_and_half_integers() {
        assert!(rel_err(gamma(1.0), 1.0) < 1e-14);
        assert!(rel_err(gamma(5.0), 24.0) < 1e-14);
        assert!(rel_err(gamma(0.5), PI.sqrt()) < 1e-14);
        assert!(rel_err(gamma(1.5), PI.sqrt() / 2.0) < 1e-14);
        assert!(rel_err(gamma(3.5), 15.0 * PI.sqrt() / 8.0) < 1e-14);
    }

    #[test]
    fn gamma_matches_exact_half_integer_recursion() {
        // Γ(m + 1/2) = (2m)! √π / (4^m m!)
        let mut exact = PI.sqrt();
        for m in 0..16 {
            let x = m as f64 + 0.5;
            assert!(rel_err(gamma(x), exact) < 1e-13, "Γ({x})");
            assert!((ln_gamma(x) - exact.ln()).abs() < 1e-13, "ln Γ({x})");
            exact *= x;
        }
    }

    #[test]
    fn ln_gamma_consistent_with_gamma() {
        for i in 1..=60 {
            let x = i as f64 / 2.0;
            assert!((ln_gamma(x) - gamma(x).ln()).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn sphere_areas_low_dimensions() {
        assert!(rel_err(sphere_area(1), 2.0 * PI) < 1e-14);
        assert!(rel_err(sphere_area(2), 4.0 * PI) < 1e-14);
        assert!(rel_err(sphere_area(3), 2.0 * PI * PI) < 1e-14);
        assert!(rel_err(sphere_area(4), 8.0 * PI * PI / 3.0) < 1e-14);
        assert!((sphere_area(4) - 26.318945).abs() < 1e-6);
        assert!(rel_err(sphere_area(6), 16.0 * PI.powi(3) / 15.0) < 1e-14);
    }

    #[test]
    fn sphere_area_recurrence() {
        // ω_n = 2π ω_{n-2} / (n-1)
        for n in 3..=30u32 {
            let got = sphere_area(n);
            let want = 2.0 * PI * sphere_area(n - 2) / (n as f64 - 1.0);
            assert!(rel_err(got, want) < 1e-13, "n={n}");
        }
    }

    #[test]
    fn log_route_matches_linear_route() {
        for n in 1..=30u32 {
            assert!(rel_err(ln_sphere_area(n).exp(), sphere_area(n)) < 1e-13);
        }
    }

    #[test]
    fn best_constant_examples() {
        // k=1, n=4: 4 / (8 ω_4^(1/2))
        let want = 4.0 / (8.0 * sphere_area(4).powf(0.5));
        assert!(rel_err(best_constant(4, 1).unwrap(), want) < 1e-14);
        assert!((best_constant(4, 1).unwrap() - 0.097462).abs() < 1e-6);
        // k=2, n=6: 1 / (24 ω_6^(2/3))
        let want = 1.0 / (24.0 * sphere_area(6).powf(2.0 / 3.0));
        assert!(rel_err(best_constant(6, 2).unwrap(), want) < 1e-14);
        assert!((best_constant(6, 2).unwrap() - 4.044e-3).abs() < 1e-6);
    }

    #[test]
    fn first_order_reduces_to_classical_form() {
        for n in 3..=20u32 {
            let general = best_constant(n, 1).unwrap();
            let classical =
                4.0 / (n as f64 * (n as f64 - 2.0) * sphere_area(n).powf(2.0 / n as f64));
            assert!(rel_err(general, classical) < 1e-14, "n={n}");
        }
    }

    #[test]
    fn domain_errors() {
        assert_eq!(
            best_constant(4, 2),
            Err(ConstantsError::DimensionTooSmall { n: 4, k: 2 })
        );
        assert_eq!(
            best_constant(6, 3),
            Err(ConstantsError::DimensionTooSmall { n: 6, k: 3 })
        );
        assert_eq!(best_constant(5, 0), Err(ConstantsError::OrderTooSmall { k: 0 }));
    }

    #[test]
    fn consistency_examples() {
        assert!(consistency_residual(5, 1).unwrap().abs() < 1e-14);
        assert!(consistency_residual(9, 3).unwrap().abs() < 1e-13);
        assert!(consistency_residual(5, 2).unwrap().abs() < 1e-13);
    }

    #[test]
    fn consistency_over_grid() {
        for k in 1..=5u32 {
            for n in (2 * k + 1)..=20 {
                let r = consistency_residual(n, k).unwrap();
                assert!(r.abs() < 1e-12, "n={n} k={k}: {r:e}");
            }
        }
    }

    #[test]
    fn doubling_identity_for_sphere_areas() {
        // 2^(n-1) ω_{n-1} Γ(n/2)² / Γ(n) = ω_n
        for n in 3..=30u32 {
            let lhs = ((n as f64 - 1.0) * 2f64.ln()
                + ln_sphere_area(n - 1)
                + 2.0 * ln_gamma(n as f64 / 2.0)
                - ln_gamma(n as f64))
            .exp();
            assert!(rel_err(lhs, sphere_area(n)) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn record_fields() {
        let rec = constants_record(6, 2).unwrap();
        assert_eq!(rec.q, rat_int(6)); // 2·6/(6-4) = 6
        assert_eq!(rec.b_k, rat_int(24)); // 6·2·32/16
        assert!(rel_err(rec.omega_n, 16.0 * PI.powi(3) / 15.0) < 1e-13);
        assert!(rec.lambda_k > 0.0);
    }
}
