//! The k-th standard operator on hyperbolic space as an exact polynomial in
//! the Laplacian.
//!
//! With the geometer's sign convention (`Δ_h = -div grad`) the first-order
//! operator is `P_1 = Δ_h - n(n-2)/4`, and the k-th one factorizes as
//!
//! ```text
//! P_k = P_1 (P_1 + 2)(P_1 + 6) ··· (P_1 + k(k-1))
//! ```
//!
//! equivalently `P_k = P_{k-1}(P_1 + k(k-1))`. Expanding the product gives
//! `P_k = Δ_h^k + Σ_{m<k} a_{km} Δ_h^m` with `a_{km}` polynomials in `n`;
//! [`standard_operator`] computes them exactly. The zero-order coefficient
//! satisfies `(-1)^k a_{k0} = b_k` with `b_k` the closed-form product of
//! [`b_constant`].


use crate::exact::{rat, rat_int, DimPoly, Rational};

/// `P_k` expanded in powers of the Laplacian: `coeffs[m]` multiplies `Δ_h^m`,
/// the leading coefficient is 1, and the length is `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorPoly {
    pub k: u32,
    coeffs: Vec<DimPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error("coefficient index {m} out of range for order {k}")]
    IndexOutOfRange { k: u32, m: u32 },
}

impl OperatorPoly {
    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn coeffs(&self) -> &[DimPoly] {
        &self.coeffs
    }
}

/// Constant term of `P_1`: `-n(n-2)/4`.
fn p1_constant() -> DimPoly {
    DimPoly::from_coeffs(vec![rat_int(0), rat(1, 2), rat(-1, 4)])
}

/// Build `P_k` from the factorized recursion. `k = 0` gives the identity
/// operator.
pub fn standard_operator(k: u32) -> OperatorPoly {
    let mut coeffs = vec![DimPoly::one()];
    for j in 1..=k {
        // Multiply by (P_1 + j(j-1)): one factor per step, as a linear
        // polynomial in Δ_h with constant term -n(n-2)/4 + j(j-1).
        let shift = rat_int((j * (j - 1)) as i64);
        let constant = &p1_constant() + &DimPoly::constant(shift);
        let mut next = vec![DimPoly::zero(); coeffs.len() + 1];
        for (m, c) in coeffs.iter().enumerate() {
            next[m + 1] = &next[m + 1] + c;
            next[m] = &next[m] + &(c * &constant);
        }
        coeffs = next;
    }
    OperatorPoly { k, coeffs }
}

/// The coefficient of `Δ_h^m` in `op`.
pub fn coefficient(op: &OperatorPoly, m: u32) -> Result<DimPoly, OperatorError> {
    op.coeffs
        .get(m as usize)
        .cloned()
        .ok_or(OperatorError::IndexOutOfRange { k: op.k, m })
}

/// Closed form for the zero-order magnitude:
/// `b_k = n(n-2k) Π_{j=1}^{k-1} (n² - (2j)²) / 2^{2k}`.
pub fn b_constant(k: u32) -> DimPoly {
    assert!(k >= 1, "b_constant needs k >= 1");
    // n(n - 2k)
    let mut prod = DimPoly::from_ints(&[0, -2 * (k as i64), 1]);
    for j in 1..k {
        let sq = (2 * j as i64) * (2 * j as i64);
        prod = prod.mul_poly(&DimPoly::from_ints(&[-sq, 0, 1]));
    }
    let two_2k = Rational::from_integer(num_bigint::BigInt::from(2).pow(2 * k));
    prod.scale(&two_2k.recip())
}

/// Check `(-1)^k a_{k0} = b_k` exactly.
pub fn verify_a0_identity(k: u32) -> bool {
    let op = standard_operator(k);
    let a0 = &op.coeffs[0];
    let signed = if k % 2 == 0 { a0.clone() } else { -a0 };
    (&signed - &b_constant(k)).is_zero()
}

/// Evaluate every coefficient at an integer dimension.
pub fn instantiate(op: &OperatorPoly, n_value: i64) -> Vec<Rational> {
    op.coeffs
        .iter()
        .map(|c| c.eval(&rat_int(n_value)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[(i64, i64)]) -> DimPoly {
        DimPoly::from_coeffs(coeffs.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    #[test]
    fn first_order() {
        let op = standard_operator(1);
        assert_eq!(op.coeffs(), &[poly(&[(0, 1), (1, 2), (-1, 4)]), DimPoly::one()]);
    }

    #[test]
    fn second_order() {
        // P_2 = Δ² - (n²-2n-4)/2 Δ + n(n-4)(n²-4)/16
        let op = standard_operator(2);
        assert_eq!(
            op.coeffs(),
            &[
                poly(&[(0, 1), (1, 1), (-1, 4), (-1, 4), (1, 16)]),
                poly(&[(2, 1), (1, 1), (-1, 2)]),
                DimPoly::one(),
            ]
        );
    }

    #[test]
    fn second_order_at_n6() {
        let vals = instantiate(&standard_operator(2), 6);
        assert_eq!(vals, vec![rat_int(24), rat_int(-10), rat_int(1)]);
    }

    #[test]
    fn zero_order_is_identity() {
        let op = standard_operator(0);
        assert_eq!(op.coeffs(), &[DimPoly::one()]);
    }

    #[test]
    fn third_order_middle_coefficient() {
        // a_32 = -(3n² - 6n - 32)/4
        let op = standard_operator(3);
        assert_eq!(
            coefficient(&op, 2).unwrap(),
            poly(&[(8, 1), (3, 2), (-3, 4)])
        );
    }

    #[test]
    fn fourth_order_cubic_coefficient() {
        // a_43 = -(n² - 2n - 20)
        let op = standard_operator(4);
        assert_eq!(coefficient(&op, 3).unwrap(), DimPoly::from_ints(&[20, 2, -1]));
    }

    #[test]
    fn coefficient_out_of_range() {
        let op = standard_operator(2);
        assert_eq!(
            coefficient(&op, 3),
            Err(OperatorError::IndexOutOfRange { k: 2, m: 3 })
        );
    }

    #[test]
    fn b3_closed_form() {
        // b_3 = n(n-6)(n²-16)(n²-4)/64
        let expect = DimPoly::from_ints(&[0, 1])
            .mul_poly(&DimPoly::from_ints(&[-6, 1]))
            .mul_poly(&DimPoly::from_ints(&[-16, 0, 1]))
            .mul_poly(&DimPoly::from_ints(&[-4, 0, 1]))
            .scale(&rat(1, 64));
        assert_eq!(b_constant(3), expect);
        assert_eq!(b_constant(3).eval(&rat_int(8)), rat_int(720));
    }

    #[test]
    fn b1_closed_form() {
        assert_eq!(b_constant(1), poly(&[(0, 1), (-1, 2), (1, 4)]));
    }

    #[test]
    fn a0_identity_through_k8() {
        for k in 1..=8 {
            assert!(verify_a0_identity(k), "a0 identity failed at k={}", k);
        }
    }

    #[test]
    fn multiplicative_recursion() {
        // P_k = P_{k-1} · (P_1 + k(k-1)) expanded coefficientwise.
        for k in 2..=8u32 {
            let pk = standard_operator(k);
            let pk1 = standard_operator(k - 1);
            let shift = DimPoly::constant(rat_int((k * (k - 1)) as i64));
            let factor_const = &p1_constant() + &shift;
            let mut prod = vec![DimPoly::zero(); pk1.coeffs().len() + 1];
            for (m, c) in pk1.coeffs().iter().enumerate() {
                prod[m + 1] = &prod[m + 1] + c;
                prod[m] = &prod[m] + &(c * &factor_const);
            }
            assert_eq!(pk.coeffs(), prod.as_slice(), "recursion failed at k={}", k);
        }
    }

    #[test]
    fn sum_of_roots() {
        // coeff(P_k, k-1) = k(k²-1)/3 - k·n(n-2)/4
        for k in 1..=8u32 {
            let op = standard_operator(k);
            let got = coefficient(&op, k - 1).unwrap();
            let kk = k as i64;
            let expect = &DimPoly::constant(rat(kk * (kk * kk - 1), 3))
                + &p1_constant().scale(&rat_int(kk));
            assert_eq!(got, expect, "sum of roots failed at k={}", k);
        }
    }

    #[test]
    fn instantiate_first_order_at_n3() {
        let vals = instantiate(&standard_operator(1), 3);
        assert_eq!(vals, vec![rat(-3, 4), rat_int(1)]);
    }
}
