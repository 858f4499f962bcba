//! The Euclidean radial ring and its Laplacian.
//!
//! Radial functions of `ρ` are written in `B = τ² + ρ²`. With the geometer's
//! sign the flat radial Laplacian is `Δ f = -[f'' + (n-1) ρ^{-1} f']`, and in
//! the variable `w = ρ²` (so `B = τ² + w`, `Δ = -[4w ∂_ww + 2n ∂_w]`) a term
//! `θ(τ²)·B^e` maps to
//!
//! ```text
//! Δ (θ B^e) = -2e(2e + n - 2) θ B^(e-1) + 4e(e-1) τ² θ B^(e-2)
//! ```
//!
//! after eliminating `w = B - τ²`. Coefficients therefore stay polynomial in
//! `τ²` and the ring of [`EuclidRadialExpr`] values is closed, with shifts
//! growing by at most two per application.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{rat, rat_int, DimPoly, MultiPoly, Rational, Sym};

use super::VarPoly;

/// `Σ_s θ_s(τ²; n) · (τ² + ρ²)^(anchor - s)`, shifts nonnegative, no zero
/// polynomials stored. The anchor is a degree-≤1 polynomial in `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidRadialExpr {
    anchor: DimPoly,
    terms: BTreeMap<u32, VarPoly>,
}

impl EuclidRadialExpr {
    pub fn zero() -> Self {
        EuclidRadialExpr {
            anchor: DimPoly::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(anchor: DimPoly, shift: u32, poly: VarPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !poly.is_zero() {
            terms.insert(shift, poly);
        }
        EuclidRadialExpr { anchor, terms }
    }

    /// The mirror extremal profile `(τ² + ρ²)^(k - n/2)`. The lift
    /// normalization `(2τ)^(n/2 - k)` is carried separately by callers.
    pub fn extremal(k: u32) -> Self {
        let anchor = DimPoly::from_coeffs(vec![rat_int(k as i64), rat(-1, 2)]);
        EuclidRadialExpr::from_term(anchor, 0, VarPoly::one())
    }

    /// `ρ²` as a ring element: `B - τ²` with integer anchor 1.
    pub fn rho_squared() -> Self {
        let mut e = EuclidRadialExpr::from_term(DimPoly::one(), 0, VarPoly::one());
        e.insert(
            1,
            VarPoly::from_coeffs(vec![DimPoly::zero(), DimPoly::constant(rat_int(-1))]),
        );
        e
    }

    /// A polynomial in `τ²` alone (anchor 0).
    pub fn from_tau_poly(poly: VarPoly) -> Self {
        EuclidRadialExpr::from_term(DimPoly::zero(), 0, poly)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn anchor(&self) -> &DimPoly {
        &self.anchor
    }

    pub fn terms(&self) -> impl Iterator<Item = (&u32, &VarPoly)> {
        self.terms.iter()
    }

    pub fn max_shift(&self) -> u32 {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn exponent_at(&self, shift: u32) -> DimPoly {
        &self.anchor - &DimPoly::constant(rat_int(shift as i64))
    }

    fn insert(&mut self, shift: u32, poly: VarPoly) {
        if poly.is_zero() {
            return;
        }
        match self.terms.remove(&shift) {
            Some(existing) => {
                let sum = existing.add(&poly);
                if !sum.is_zero() {
                    self.terms.insert(shift, sum);
                }
            }
            None => {
                self.terms.insert(shift, poly);
            }
        }
    }

    pub fn add(&self, other: &EuclidRadialExpr) -> EuclidRadialExpr {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let diff = &self.anchor - &other.anchor;
        let offset = match diff.degree() {
            None => rat_int(0),
            Some(0) => diff.coeff(0),
            _ => panic!("incompatible anchors: {} vs {}", self.anchor, other.anchor),
        };
        assert!(offset.denom().is_one(), "anchors differ non-integrally");
        let offset: i64 = {
            use num_traits::ToPrimitive;
            offset.to_integer().to_i64().expect("anchor offset range")
        };
        let (anchor, self_off, other_off) = if offset >= 0 {
            (self.anchor.clone(), 0u32, offset as u32)
        } else {
            (other.anchor.clone(), (-offset) as u32, 0u32)
        };
        let mut out = EuclidRadialExpr {
            anchor,
            terms: BTreeMap::new(),
        };
        for (s, p) in &self.terms {
            out.insert(s + self_off, p.clone());
        }
        for (s, p) in &other.terms {
            out.insert(s + other_off, p.clone());
        }
        out
    }

    pub fn neg(&self) -> EuclidRadialExpr {
        EuclidRadialExpr {
            anchor: self.anchor.clone(),
            terms: self.terms.iter().map(|(s, p)| (*s, p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &EuclidRadialExpr) -> EuclidRadialExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &EuclidRadialExpr) -> EuclidRadialExpr {
        let mut out = EuclidRadialExpr {
            anchor: &self.anchor + &other.anchor,
            terms: BTreeMap::new(),
        };
        for (sa, pa) in &self.terms {
            for (sb, pb) in &other.terms {
                out.insert(sa + sb, pa.mul(pb));
            }
        }
        out
    }

    pub fn scale_dim(&self, c: &DimPoly) -> EuclidRadialExpr {
        let mut out = EuclidRadialExpr {
            anchor: self.anchor.clone(),
            terms: BTreeMap::new(),
        };
        for (s, p) in &self.terms {
            out.insert(*s, p.scale_dim(c));
        }
        out
    }

    /// Expand `Σ_s θ_s(τ²)·(τ²+ρ²)^(total-s)` in `(n, τ², ρ²)`, clearing the
    /// common factor `(τ²+ρ²)^(anchor-total)`.
    pub fn cleared_multipoly(&self, total: u32) -> MultiPoly {
        assert!(
            self.terms.is_empty() || total >= self.max_shift(),
            "clearing power below maximal shift"
        );
        let mut out = MultiPoly::zero();
        for (s, p) in &self.terms {
            let expansion = binomial_tau2_plus_rho2(total - s);
            out.add_assign(&p.to_multi_poly(Sym::Tau2).mul(&expansion));
        }
        out
    }
}

/// `(τ² + ρ²)^power` expanded binomially.
fn binomial_tau2_plus_rho2(power: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    let mut binom = BigInt::one();
    for j in 0..=power {
        let mut e = [0u16; crate::exact::NUM_SYMS];
        e[Sym::Tau2 as usize] = (power - j) as u16;
        e[Sym::Rho2 as usize] = j as u16;
        out.add_term(e, Rational::from_integer(binom.clone()));
        binom = binom * BigInt::from(power - j) / BigInt::from(j + 1);
    }
    out
}

/// Apply the flat radial Laplacian once.
pub fn euclid_laplacian(expr: &EuclidRadialExpr) -> EuclidRadialExpr {
    let n = DimPoly::n();
    let mut out = EuclidRadialExpr {
        anchor: expr.anchor.clone(),
        terms: BTreeMap::new(),
    };
    for (s, p) in &expr.terms {
        let e = expr.exponent_at(*s);
        let em1 = &e - &DimPoly::one();
        // -2e(2e + n - 2) θ B^(e-1)
        let lin = &(&e.scale(&rat_int(2)) + &n) - &DimPoly::constant(rat_int(2));
        out.insert(
            s + 1,
            p.scale_dim(&(&e.scale(&rat_int(-2)) * &lin)),
        );
        // 4e(e-1) τ² θ B^(e-2)
        out.insert(
            s + 2,
            p.mul_var().scale_dim(&(&e * &em1).scale(&rat_int(4))),
        );
    }
    out
}

/// `d/dρ` of a Euclidean radial expression: `d/dρ g(w) = 2ρ · g_w`. The
/// record stores `g_w`; the `2ρ` prefactor is implicit and its square
/// `4w = 4(B - τ²)` multiplies back into the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidRadialDerivative {
    pub w_derivative: EuclidRadialExpr,
}

pub fn euclid_radial_derivative(expr: &EuclidRadialExpr) -> EuclidRadialDerivative {
    let mut out = EuclidRadialExpr {
        anchor: expr.anchor.clone(),
        terms: BTreeMap::new(),
    };
    for (s, p) in &expr.terms {
        let e = expr.exponent_at(*s);
        out.insert(s + 1, p.scale_dim(&e));
    }
    EuclidRadialDerivative { w_derivative: out }
}

impl fmt::Display for EuclidRadialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, p)| {
                let e = self.exponent_at(*s);
                format!("[{}]·(τ² + ρ²)^({})", p.render("τ²"), e)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laplacian_kills_constants() {
        let one = EuclidRadialExpr::from_tau_poly(VarPoly::one());
        assert!(euclid_laplacian(&one).is_zero());
    }

    #[test]
    fn laplacian_of_rho_squared() {
        // Δ ρ² = -(2 + 2(n-1)) = -2n
        let image = euclid_laplacian(&EuclidRadialExpr::rho_squared());
        // The image keeps the anchor of ρ² = B - τ², so the constant -2n sits
        // at shift 1 (exponent 1 - 1 = 0) rather than at a fresh zero anchor.
        let expect = EuclidRadialExpr::from_term(
            DimPoly::one(),
            1,
            VarPoly::constant(DimPoly::n().scale(&rat_int(-2))),
        );
        assert_eq!(image, expect);
    }

    #[test]
    fn laplacian_of_first_mirror_extremal() {
        // Δ (τ²+ρ²)^(1-n/2) = n(n-2) τ² (τ²+ρ²)^(-1-n/2), i.e. b_1·(4τ²)·B^(e-2).
        let g = EuclidRadialExpr::extremal(1);
        let image = euclid_laplacian(&g);
        let nn2 = DimPoly::from_ints(&[0, -2, 1]); // n(n-2)
        let expect = EuclidRadialExpr::from_term(
            g.anchor().clone(),
            2,
            VarPoly::var().scale_dim(&nn2),
        );
        assert_eq!(image, expect);
    }

    #[test]
    fn radial_derivative_of_base_power() {
        // d/dρ (τ²+ρ²)^e = 2eρ (τ²+ρ²)^(e-1)
        let g = EuclidRadialExpr::extremal(2);
        let d = euclid_radial_derivative(&g);
        let e = g.exponent_at(0);
        let expect = EuclidRadialExpr::from_term(g.anchor().clone(), 1, VarPoly::constant(e));
        assert_eq!(d.w_derivative, expect);
    }

    #[test]
    fn shift_growth_bounded_by_two() {
        let mut expr = EuclidRadialExpr::extremal(3);
        for step in 1..=4u32 {
            expr = euclid_laplacian(&expr);
            assert!(expr.max_shift() <= 2 * step);
        }
    }
}
