//! Rational functions in the dimension symbol `n`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Zero;

use super::{DimPoly, Rational};

/// Reduced rational function: numerator and denominator share no common
/// factor and the denominator is monic (so equality is structural).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: DimPoly,
    den: DimPoly,
}

impl RatFun {
    pub fn new(num: DimPoly, den: DimPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut rf = RatFun { num, den };
        rf.reduce();
        rf
    }

    pub fn from_poly(p: DimPoly) -> Self {
        RatFun {
            num: p,
            den: DimPoly::one(),
        }
    }

    pub fn zero() -> Self {
        RatFun::from_poly(DimPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(DimPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &DimPoly {
        &self.num
    }

    pub fn den(&self) -> &DimPoly {
        &self.den
    }

    /// The polynomial content, if the denominator is trivial.
    pub fn as_poly(&self) -> Option<&DimPoly> {
        if self.den == DimPoly::one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = DimPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().map_or(false, |d| d > 0) {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let lead = self.den.leading_coeff().recip();
        self.num = self.num.scale(&lead);
        self.den = self.den.scale(&lead);
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Evaluate at a rational point; `None` when the denominator vanishes.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        self * &rhs.recip()
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == DimPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
