//! The hyperbolic radial ring and its Laplacian.
//!
//! In the variable `c = cosh r` the radial hyperbolic Laplacian (geometer's
//! sign) acts as
//!
//! ```text
//! Δ_r f = -[(c² - 1) f_cc + n c f_c]
//! ```
//!
//! On a term `p(c)·(c-β)^e` this produces terms with exponents `e`, `e-1`,
//! `e-2`, so the ring of [`HypRadialExpr`] values is closed and each
//! application raises the maximal shift by at most two.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{rat, rat_int, DimPoly, MultiPoly, Rational, Sym};

use super::VarPoly;

/// `Σ_s p_s(c; n) · (c - β)^(anchor - s)` with all shifts `s ≥ 0` and no zero
/// polynomials stored. The anchor is a degree-≤1 polynomial in `n`; the
/// extremal family uses `k - n/2`, plain polynomial expressions use integer
/// anchors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypRadialExpr {
    anchor: DimPoly,
    terms: BTreeMap<u32, VarPoly>,
}

impl HypRadialExpr {
    pub fn zero() -> Self {
        HypRadialExpr {
            anchor: DimPoly::zero(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_term(anchor: DimPoly, shift: u32, poly: VarPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !poly.is_zero() {
            terms.insert(shift, poly);
        }
        HypRadialExpr { anchor, terms }
    }

    /// A polynomial in `c` alone (anchor 0: exponents are `-s`, and only the
    /// `s = 0` slot is populated).
    pub fn from_c_poly(poly: VarPoly) -> Self {
        HypRadialExpr::from_term(DimPoly::zero(), 0, poly)
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

    /// Exponent of the `(c - β)` power at shift `s`, as a polynomial in `n`.
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

    /// Add with anchor alignment: anchors must differ by an integer constant,
    /// and the result is re-anchored so that all shifts stay nonnegative.
    pub fn add(&self, other: &HypRadialExpr) -> HypRadialExpr {
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
        let offset: i64 = rational_to_i64(&offset);
        // Re-anchor to the larger anchor so added shifts are nonnegative.
        let (anchor, self_off, other_off) = if offset >= 0 {
            (self.anchor.clone(), 0u32, offset as u32)
        } else {
            (other.anchor.clone(), (-offset) as u32, 0u32)
        };
        let mut out = HypRadialExpr {
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

    pub fn neg(&self) -> HypRadialExpr {
        HypRadialExpr {
            anchor: self.anchor.clone(),
            terms: self
                .terms
                .iter()
                .map(|(s, p)| (*s, p.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &HypRadialExpr) -> HypRadialExpr {
        self.add(&other.neg())
    }

    /// Ring product: anchors add, shifts convolve.
    pub fn mul(&self, other: &HypRadialExpr) -> HypRadialExpr {
        let mut out = HypRadialExpr {
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

    pub fn scale_dim(&self, c: &DimPoly) -> HypRadialExpr {
        let mut out = HypRadialExpr {
            anchor: self.anchor.clone(),
            terms: BTreeMap::new(),
        };
        for (s, p) in &self.terms {
            out.insert(*s, p.scale_dim(c));
        }
        out
    }

    /// Expand `Σ_s p_s(c)·(c-β)^(total-s)` as a multivariate polynomial in
    /// `(n, c, β)`; this clears the common factor `(c-β)^(anchor-total)`.
    /// Requires `total ≥ max_shift()`.
    pub fn cleared_multipoly(&self, total: u32) -> MultiPoly {
        assert!(
            self.terms.is_empty() || total >= self.max_shift(),
            "clearing power below maximal shift"
        );
        let mut out = MultiPoly::zero();
        for (s, p) in &self.terms {
            let power = total - s;
            let expansion = binomial_c_minus_beta(power);
            out.add_assign(&p.to_multi_poly(Sym::C).mul(&expansion));
        }
        out
    }
}

fn rational_to_i64(r: &Rational) -> i64 {
    use num_traits::ToPrimitive;
    r.to_integer().to_i64().expect("anchor offset out of range")
}

/// `(c - β)^power` expanded binomially.
fn binomial_c_minus_beta(power: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    let mut binom = BigInt::one();
    for j in 0..=power {
        let mut e = [0u16; crate::exact::NUM_SYMS];
        e[Sym::C as usize] = (power - j) as u16;
        e[Sym::Beta as usize] = j as u16;
        let sign = if j % 2 == 0 { 1 } else { -1 };
        out.add_term(e, Rational::from_integer(&binom * BigInt::from(sign)));
        // C(power, j+1) = C(power, j)·(power-j)/(j+1)
        binom = binom * BigInt::from(power - j) / BigInt::from(j + 1);
    }
    out
}

/// Apply the radial hyperbolic Laplacian once.
pub fn hyp_laplacian(expr: &HypRadialExpr) -> HypRadialExpr {
    let c = VarPoly::var();
    let c2m1 = VarPoly::from_coeffs(vec![
        DimPoly::constant(rat_int(-1)),
        DimPoly::zero(),
        DimPoly::one(),
    ]);
    let n = DimPoly::n();
    let mut out = HypRadialExpr {
        anchor: expr.anchor.clone(),
        terms: BTreeMap::new(),
    };
    for (s, p) in &expr.terms {
        let e = expr.exponent_at(*s);
        let em1 = &e - &DimPoly::one();
        let dp = p.derivative();
        let ddp = dp.derivative();
        // -[(c²-1) p'' + n c p']
        out.insert(*s, c2m1.mul(&ddp).add(&c.mul(&dp).scale_dim(&n)).neg());
        // -e [2(c²-1) p' + n c p]
        let mid = c2m1
            .mul(&dp)
            .scale_dim(&DimPoly::constant(rat_int(2)))
            .add(&c.mul(p).scale_dim(&n));
        out.insert(s + 1, mid.scale_dim(&e).neg());
        // -e(e-1) (c²-1) p
        out.insert(s + 2, c2m1.mul(p).scale_dim(&(&e * &em1)).neg());
    }
    out
}

/// The unnormalized extremal profile `(c - β)^(k - n/2)`. The normalization
/// `(1-β²)^((n-2k)/4)` is carried separately; see [`extremal_norm_exponent`].
pub fn extremal_expr(k: u32) -> HypRadialExpr {
    let anchor = DimPoly::from_coeffs(vec![rat_int(k as i64), rat(-1, 2)]);
    HypRadialExpr::from_term(anchor, 0, VarPoly::one())
}

/// Exponent of `(1-β²)` in the extremal normalization: `(n - 2k)/4`.
pub fn extremal_norm_exponent(k: u32) -> DimPoly {
    DimPoly::from_coeffs(vec![rat(-(k as i64), 2), rat(1, 4)])
}

/// `d/dr` of a hyperbolic radial expression. The chain rule gives
/// `d/dr f(c) = sinh r · f_c(c)`; the returned record stores `f_c` in the
/// ring and the `sinh r` prefactor is implicit (its square is `c² - 1`,
/// which multiplies back into the ring).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypRadialDerivative {
    pub c_derivative: HypRadialExpr,
}

pub fn hyp_radial_derivative(expr: &HypRadialExpr) -> HypRadialDerivative {
    let mut out = HypRadialExpr {
        anchor: expr.anchor.clone(),
        terms: BTreeMap::new(),
    };
    for (s, p) in &expr.terms {
        let e = expr.exponent_at(*s);
        out.insert(*s, p.derivative());
        out.insert(s + 1, p.scale_dim(&e));
    }
    HypRadialDerivative { c_derivative: out }
}

impl fmt::Display for HypRadialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(s, p)| {
                let e = self.exponent_at(*s);
                format!("[{}]·(c - β)^({})", p.render("c"), e)
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
        let one = HypRadialExpr::from_c_poly(VarPoly::one());
        assert!(hyp_laplacian(&one).is_zero());
    }

    #[test]
    fn laplacian_of_cosh() {
        // Δ_r cosh r = -n cosh r
        let c = HypRadialExpr::from_c_poly(VarPoly::var());
        let image = hyp_laplacian(&c);
        let expect = HypRadialExpr::from_c_poly(VarPoly::var().scale_dim(&-&DimPoly::n()));
        assert_eq!(image, expect);
    }

    #[test]
    fn laplacian_of_first_extremal() {
        // Δ_r (c-β)^(1-n/2) = (1-n/2)[ (n/2)(c²-1)(c-β)^(-1-n/2) - n c (c-β)^(-n/2) ]
        let psi = extremal_expr(1);
        let image = hyp_laplacian(&psi);
        let e0 = DimPoly::from_coeffs(vec![rat_int(1), rat(-1, 2)]);
        let half_n = DimPoly::from_coeffs(vec![rat_int(0), rat(1, 2)]);
        let mut expect = HypRadialExpr::from_term(
            psi.anchor().clone(),
            1,
            VarPoly::var().scale_dim(&(&e0 * &-&DimPoly::n())),
        );
        let c2m1 = VarPoly::from_coeffs(vec![
            DimPoly::constant(rat_int(-1)),
            DimPoly::zero(),
            DimPoly::one(),
        ]);
        expect = expect.add(&HypRadialExpr::from_term(
            psi.anchor().clone(),
            2,
            c2m1.scale_dim(&(&e0 * &half_n)),
        ));
        assert_eq!(image, expect);
    }

    #[test]
    fn shift_growth_bounded_by_two() {
        let mut expr = extremal_expr(2);
        for step in 1..=4u32 {
            expr = hyp_laplacian(&expr);
            assert!(expr.max_shift() <= 2 * step);
        }
    }

    #[test]
    fn radial_derivative_of_extremal() {
        // d/dr (c-β)^e = e sinh r (c-β)^(e-1)
        let psi = extremal_expr(3);
        let d = hyp_radial_derivative(&psi);
        let e = psi.exponent_at(0);
        let expect = HypRadialExpr::from_term(psi.anchor().clone(), 1, VarPoly::constant(e));
        assert_eq!(d.c_derivative, expect);
    }

    #[test]
    fn cleared_zero_is_canonical() {
        let psi = extremal_expr(1);
        let diff = psi.sub(&extremal_expr(1));
        assert!(diff.is_zero());
        assert!(diff.cleared_multipoly(4).is_zero());
    }

    #[test]
    fn binomial_expansion_square() {
        // (c-β)² = c² - 2cβ + β²
        let mp = binomial_c_minus_beta(2);
        let mut expect = MultiPoly::monomial(Sym::C, 2, rat_int(1));
        let mut cross = [0u16; crate::exact::NUM_SYMS];
        cross[Sym::C as usize] = 1;
        cross[Sym::Beta as usize] = 1;
        expect.add_term(cross, rat_int(-2));
        expect.add_assign(&MultiPoly::monomial(Sym::Beta, 2, rat_int(1)));
        assert_eq!(mp, expect);
    }
}
