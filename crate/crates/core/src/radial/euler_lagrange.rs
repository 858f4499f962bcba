//! Exact recovery of the operator coefficients from the extremal equation.
//!
//! Powers of the radial Laplacian applied to the profile `(c-β)^(k-n/2)` stay
//! in the hyperbolic radial ring, and the combination
//!
//! ```text
//! Σ_{m=0..k} a_m Δ_r^m (c-β)^(k-n/2)  =  b · (1-β²)^k (c-β)^(-k-n/2)
//! ```
//!
//! with `a_k = 1` determines the lower coefficients `a_0..a_{k-1}` and the
//! constant `b` uniquely. The right-hand side lives in the same ring thanks to
//! `1-β² = (1-c²) + 2c(c-β) - (c-β)²`. Clearing the common factor
//! `(c-β)^(k-n/2-2k)` turns the identity into a polynomial identity in
//! `(n, c, β)`; matching `(c, β)` monomials yields an overdetermined linear
//! system over rational functions of `n`, which [`el_solve`] solves exactly
//! and then re-checks on every equation. [`el_solve_instantiated`] runs the
//! same derivation with `n` fixed to an integer, giving an independent route
//! for cross-checks.
//!
//! [`el_residual`] goes the other way: it takes the coefficients produced by
//! expanding the factorized operator and certifies that the cleared residual
//! is the zero polynomial. [`euclid_el_residual`] certifies the flat-space
//! mirror `Δ^k (τ²+ρ²)^(k-n/2) = b_k (4τ²)^k (τ²+ρ²)^(-k-n/2)` the same way.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::exact::{
    rat, rat_int, solve_linear_exact, DimPoly, ExactError, Expts, MultiPoly, RatFun, Rational,
};
use crate::operator::{b_constant, standard_operator};

use super::euclidean::{euclid_laplacian, EuclidRadialExpr};
use super::hyperbolic::{extremal_expr, hyp_laplacian, HypRadialExpr};
use super::{RadialError, VarPoly};

/// Output of [`el_solve`]: the operator written as `Σ_m coefficients[m] Δ_r^m`
/// (length `k + 1`, leading coefficient 1) and the extremal-equation constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElSolution {
    pub k: u32,
    pub coefficients: Vec<DimPoly>,
    pub b: DimPoly,
}

/// `1 - β²` as a ring element with integer anchor 2:
/// `-(c-β)² + 2c·(c-β) + (1-c²)`.
fn one_minus_beta_sq() -> HypRadialExpr {
    let anchor = DimPoly::constant(rat_int(2));
    let t0 = HypRadialExpr::from_term(anchor.clone(), 0, VarPoly::constant(DimPoly::from_ints(&[-1])));
    let t1 = HypRadialExpr::from_term(
        anchor.clone(),
        1,
        VarPoly::from_coeffs(vec![DimPoly::zero(), DimPoly::constant(rat_int(2))]),
    );
    let t2 = HypRadialExpr::from_term(
        anchor,
        2,
        VarPoly::from_coeffs(vec![DimPoly::one(), DimPoly::zero(), DimPoly::from_ints(&[-1])]),
    );
    t0.add(&t1).add(&t2)
}

/// `(1-β²)^k (c-β)^(-k-n/2)`, anchored at `k - n/2` with shifts `0..=2k`.
fn hyp_rhs(k: u32) -> HypRadialExpr {
    let factor = one_minus_beta_sq();
    let mut pow = HypRadialExpr::from_term(DimPoly::zero(), 0, VarPoly::one());
    for _ in 0..k {
        pow = pow.mul(&factor);
    }
    let tail_anchor = DimPoly::from_coeffs(vec![rat_int(-(k as i64)), rat(-1, 2)]);
    pow.mul(&HypRadialExpr::from_term(tail_anchor, 0, VarPoly::one()))
}

/// `Δ_r^m (c-β)^(k-n/2)` for `m = 0..=k`.
fn laplacian_images(k: u32) -> Vec<HypRadialExpr> {
    let mut images = Vec::with_capacity(k as usize + 1);
    images.push(extremal_expr(k));
    for _ in 0..k {
        let next = hyp_laplacian(images.last().expect("nonempty"));
        images.push(next);
    }
    images
}

/// Assemble the monomial-matching system for order `k`. Unknowns are ordered
/// `(a_0, …, a_{k-1}, b)`; one row per `(c, β)` monomial appearing anywhere,
/// with the known `a_k = 1` column moved to the right-hand side.
fn assemble_system(k: u32) -> (Vec<Expts>, Vec<Vec<DimPoly>>, Vec<DimPoly>) {
    let total = 2 * k;
    let images = laplacian_images(k);
    let grouped: Vec<_> = images
        .iter()
        .map(|im| im.cleared_multipoly(total).group_by_non_n())
        .collect();
    let rhs_grouped = hyp_rhs(k).cleared_multipoly(total).group_by_non_n();

    let mut keys: BTreeSet<Expts> = BTreeSet::new();
    for g in &grouped {
        keys.extend(g.keys().copied());
    }
    keys.extend(rhs_grouped.keys().copied());

    let keys: Vec<Expts> = keys.into_iter().collect();
    let mut matrix = Vec::with_capacity(keys.len());
    let mut rhs = Vec::with_capacity(keys.len());
    for key in &keys {
        let mut row = Vec::with_capacity(k as usize + 1);
        for g in grouped.iter().take(k as usize) {
            row.push(g.get(key).cloned().unwrap_or_else(DimPoly::zero));
        }
        row.push(-&rhs_grouped.get(key).cloned().unwrap_or_else(DimPoly::zero));
        matrix.push(row);
        rhs.push(-&grouped[k as usize]
            .get(key)
            .cloned()
            .unwrap_or_else(DimPoly::zero));
    }
    (keys, matrix, rhs)
}

/// Solve the assembled system over `RatFun`, then verify the solution against
/// every equation (the system is overdetermined; the solver only consumes a
/// square subsystem).
fn solve_and_verify(
    k: u32,
    keys: &[Expts],
    matrix: &[Vec<RatFun>],
    rhs: &[RatFun],
) -> Result<Vec<RatFun>, RadialError> {
    let solution = solve_linear_exact(matrix, rhs).map_err(|e| match e {
        ExactError::SingularSystem => RadialError::SingularSystem { k },
        other => panic!("unexpected solver error: {other}"),
    })?;
    for (i, row) in matrix.iter().enumerate() {
        let mut acc = RatFun::zero();
        for (entry, x) in row.iter().zip(&solution) {
            acc = &acc + &(entry * x);
        }
        if &acc - &rhs[i] != RatFun::zero() {
            return Err(RadialError::SurplusNonzero {
                k,
                monomial: MultiPoly::render_monomial(&keys[i]),
            });
        }
    }
    Ok(solution)
}

/// Derive the operator coefficients and the constant `b` for order `k`
/// symbolically in `n`.
pub fn el_solve(k: u32) -> Result<ElSolution, RadialError> {
    assert!(k >= 1, "order must be at least 1");
    let (keys, matrix, rhs) = assemble_system(k);
    let matrix: Vec<Vec<RatFun>> = matrix
        .into_iter()
        .map(|row| row.into_iter().map(RatFun::from_poly).collect())
        .collect();
    let rhs: Vec<RatFun> = rhs.into_iter().map(RatFun::from_poly).collect();
    let solution = solve_and_verify(k, &keys, &matrix, &rhs)?;

    let mut coefficients: Vec<DimPoly> = solution[..k as usize]
        .iter()
        .map(|x| {
            x.as_poly()
                .expect("operator coefficients are polynomial in n")
                .clone()
        })
        .collect();
    coefficients.push(DimPoly::one());
    let b = solution[k as usize]
        .as_poly()
        .expect("extremal constant is polynomial in n")
        .clone();
    Ok(ElSolution { k, coefficients, b })
}

/// Run the same derivation with the dimension fixed to `n_value`, solving
/// over plain rationals. Returns `(a_0, …, a_k)` (with `a_k = 1`) and `b`.
pub fn el_solve_instantiated(k: u32, n_value: i64) -> Result<(Vec<Rational>, Rational), RadialError> {
    assert!(k >= 1, "order must be at least 1");
    let nv = rat_int(n_value);
    let (keys, matrix, rhs) = assemble_system(k);
    let matrix: Vec<Vec<RatFun>> = matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| RatFun::from_poly(DimPoly::constant(p.eval(&nv))))
                .collect()
        })
        .collect();
    let rhs: Vec<RatFun> = rhs
        .iter()
        .map(|p| RatFun::from_poly(DimPoly::constant(p.eval(&nv))))
        .collect();
    let solution = solve_and_verify(k, &keys, &matrix, &rhs)?;

    let constant = |x: &RatFun| -> Rational {
        x.as_poly()
            .expect("instantiated solution is rational")
            .coeff(0)
    };
    let mut coefficients: Vec<Rational> =
        solution[..k as usize].iter().map(constant).collect();
    coefficients.push(rat_int(1));
    Ok((coefficients, constant(&solution[k as usize])))
}

/// Cleared residual of the extremal equation for the given coefficients
/// (`coefficients[m]` multiplies `Δ_r^m`; length `k + 1`) and constant `b`.
/// Zero exactly when the identity holds.
pub fn el_residual_with(k: u32, coefficients: &[DimPoly], b: &DimPoly) -> MultiPoly {
    assert_eq!(coefficients.len(), k as usize + 1, "need k+1 coefficients");
    let images = laplacian_images(k);
    let mut combo = HypRadialExpr::zero();
    for (im, a) in images.iter().zip(coefficients) {
        combo = combo.add(&im.scale_dim(a));
    }
    let residual = combo.sub(&hyp_rhs(k).scale_dim(b));
    residual.cleared_multipoly(2 * k)
}

/// Certify the extremal equation for the independently expanded operator:
/// returns the (identically zero) cleared residual, or reports the first
/// surviving monomial.
pub fn el_residual(k: u32) -> Result<MultiPoly, RadialError> {
    assert!(k >= 1, "order must be at least 1");
    let op = standard_operator(k);
    let residual = el_residual_with(k, op.coeffs(), &b_constant(k));
    require_zero(k, residual)
}

/// Cleared residual of the flat-space mirror identity with constant `b`.
pub fn euclid_el_residual_with(k: u32, b: &DimPoly) -> MultiPoly {
    let mut image = EuclidRadialExpr::extremal(k);
    for _ in 0..k {
        image = euclid_laplacian(&image);
    }
    // b (4τ²)^k (τ²+ρ²)^(-k-n/2)
    let mut coeffs = vec![DimPoly::zero(); k as usize];
    coeffs.push(DimPoly::constant(Rational::from_integer(
        BigInt::from(4).pow(k),
    )));
    let tail_anchor = DimPoly::from_coeffs(vec![rat_int(-(k as i64)), rat(-1, 2)]);
    let rhs = EuclidRadialExpr::from_term(tail_anchor, 0, VarPoly::from_coeffs(coeffs)).scale_dim(b);
    image.sub(&rhs).cleared_multipoly(2 * k)
}

/// Certify the flat-space mirror identity with the closed-form constant.
pub fn euclid_el_residual(k: u32) -> Result<MultiPoly, RadialError> {
    assert!(k >= 1, "order must be at least 1");
    let residual = euclid_el_residual_with(k, &b_constant(k));
    require_zero(k, residual)
}

fn require_zero(k: u32, residual: MultiPoly) -> Result<MultiPoly, RadialError> {
    if residual.is_zero() {
        return Ok(residual);
    }
    let grouped = residual.group_by_non_n();
    let (key, coefficient) = grouped.iter().next().expect("nonzero residual has a term");
    Err(RadialError::NonzeroResidual {
        k,
        monomial: MultiPoly::render_monomial(key),
        coefficient: coefficient.to_string(),
    })
}
