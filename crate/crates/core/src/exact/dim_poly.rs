//! Dense polynomials in the dimension symbol `n` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat_int, Rational};

/// Polynomial in `n`, coefficients ascending by power. Trailing zero
/// coefficients are never stored; the zero polynomial is the empty list and
/// its degree is `None`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DimPoly {
    coeffs: Vec<Rational>,
}

impl DimPoly {
    pub fn zero() -> Self {
        DimPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DimPoly::constant(rat_int(1))
    }

    /// The symbol `n` itself.
    pub fn n() -> Self {
        DimPoly::from_coeffs(vec![rat_int(0), rat_int(1)])
    }

    pub fn constant(c: Rational) -> Self {
        DimPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = DimPoly { coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        DimPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return DimPoly::zero();
        }
        DimPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul_poly(&self, other: &DimPoly) -> Self {
        if self.is_zero() || other.is_zero() {
            return DimPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DimPoly::from_coeffs(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = DimPoly::one();
        for _ in 0..e {
            out = out.mul_poly(self);
        }
        out
    }

    /// Quotient of `self / div`, requiring the remainder to vanish. Used by
    /// fraction-free elimination, where divisibility is guaranteed.
    pub fn div_exact(&self, div: &DimPoly) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "exact polynomial division left a remainder");
        q
    }

    pub fn div_rem(&self, div: &DimPoly) -> (DimPoly, DimPoly) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.coeffs.len() < div.coeffs.len() {
            return (DimPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dlen = div.coeffs.len();
        let lead = div.leading_coeff();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![Rational::zero(); qlen];
        for i in (0..qlen).rev() {
            let factor = &rem[i + dlen - 1] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (j, d) in div.coeffs.iter().enumerate() {
                let t = d * &factor;
                rem[i + j] -= t;
            }
            quot[i] = factor;
        }
        (DimPoly::from_coeffs(quot), DimPoly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (Euclidean algorithm over Q[n]).
    pub fn gcd(&self, other: &DimPoly) -> DimPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading_coeff();
        a.scale(&lead.recip())
    }

    /// Canonical text form: ascending coefficients as `p/q` entries, e.g.
    /// `[0, -1/2, -1/2]`.
    pub fn serialize(&self) -> String {
        if self.is_zero() {
            return "[0]".to_string();
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }

    /// Parse the canonical text form produced by [`DimPoly::serialize`].
    pub fn parse(text: &str) -> Option<DimPoly> {
        let inner = text.trim().strip_prefix('[')?.strip_suffix(']')?;
        let mut coeffs = Vec::new();
        for part in inner.split(',') {
            coeffs.push(part.trim().parse::<Rational>().ok()?);
        }
        Some(DimPoly::from_coeffs(coeffs))
    }
}

impl Add for &DimPoly {
    type Output = DimPoly;
    fn add(self, rhs: &DimPoly) -> DimPoly {
        let mut out = vec![Rational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        DimPoly::from_coeffs(out)
    }
}

impl Sub for &DimPoly {
    type Output = DimPoly;
    fn sub(self, rhs: &DimPoly) -> DimPoly {
        self + &(-rhs)
    }
}

impl Mul for &DimPoly {
    type Output = DimPoly;
    fn mul(self, rhs: &DimPoly) -> DimPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &DimPoly {
    type Output = DimPoly;
    fn neg(self) -> DimPoly {
        DimPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for DimPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (i, unit_mag) {
                (0, _) => write!(f, "{}", mag)?,
                (_, false) => write!(f, "{}*", mag)?,
                (_, true) => {}
            }
            match i {
                0 => {}
                1 => write!(f, "n")?,
                _ => write!(f, "n^{}", i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn eval_quarter_n_n_minus_2() {
        // n(n-2)/4 at n=5 is 15/4.
        let p = DimPoly::from_coeffs(vec![rat_int(0), rat(-1, 2), rat(1, 4)]);
        assert_eq!(p.eval(&rat_int(5)), rat(15, 4));
    }

    #[test]
    fn eval_zero_poly() {
        assert_eq!(DimPoly::zero().eval(&rat_int(7)), rat_int(0));
        assert_eq!(DimPoly::zero().degree(), None);
    }

    #[test]
    fn eval_a21_at_6() {
        // -(n^2 - 2n - 4)/2 at n=6 is -10.
        let p = DimPoly::from_coeffs(vec![rat_int(2), rat_int(1), rat(-1, 2)]);
        assert_eq!(p.eval(&rat_int(6)), rat_int(-10));
    }

    #[test]
    fn serialize_round_trip() {
        let p = DimPoly::from_coeffs(vec![rat_int(0), rat(-1, 2), rat(-1, 2)]);
        assert_eq!(p.serialize(), "[0, -1/2, -1/2]");
        assert_eq!(DimPoly::parse("[0, -1/2, -1/2]").unwrap(), p);
    }

    #[test]
    fn division_and_gcd() {
        let a = DimPoly::from_ints(&[-4, 0, 1]); // (n-2)(n+2)
        let b = DimPoly::from_ints(&[2, 1]); // n+2
        let q = a.div_exact(&b);
        assert_eq!(q, DimPoly::from_ints(&[-2, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, b);
    }

    #[test]
    fn display_renders_signs() {
        let p = DimPoly::from_coeffs(vec![rat_int(8), rat(3, 2), rat(-3, 4)]);
        assert_eq!(p.to_string(), "8 + 3/2*n - 3/4*n^2");
    }
}
