//! Dense polynomials in one auxiliary variable with [`DimPoly`] coefficients.

use std::fmt;

use crate::exact::{DimPoly, MultiPoly, Rational, Sym};

/// Polynomial in a single auxiliary variable (`c` or `τ²`), ascending powers,
/// coefficients polynomial in `n`. Trailing zero coefficients are trimmed;
/// zero is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarPoly {
    coeffs: Vec<DimPoly>,
}

impl VarPoly {
    pub fn zero() -> Self {
        VarPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        VarPoly::constant(DimPoly::one())
    }

    pub fn constant(c: DimPoly) -> Self {
        VarPoly::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        VarPoly::from_coeffs(vec![DimPoly::zero(), DimPoly::one()])
    }

    pub fn from_coeffs(coeffs: Vec<DimPoly>) -> Self {
        let mut p = VarPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, DimPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[DimPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &VarPoly) -> VarPoly {
        let mut out = vec![DimPoly::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] = &out[i] + c;
        }
        VarPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> VarPoly {
        VarPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &VarPoly) -> VarPoly {
        if self.is_zero() || other.is_zero() {
            return VarPoly::zero();
        }
        let mut out = vec![DimPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        VarPoly::from_coeffs(out)
    }

    pub fn scale_dim(&self, c: &DimPoly) -> VarPoly {
        if c.is_zero() {
            return VarPoly::zero();
        }
        VarPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by the variable (shift all powers up by one).
    pub fn mul_var(&self) -> VarPoly {
        if self.is_zero() {
            return VarPoly::zero();
        }
        let mut coeffs = vec![DimPoly::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        VarPoly::from_coeffs(coeffs)
    }

    /// Derivative with respect to the variable.
    pub fn derivative(&self) -> VarPoly {
        if self.coeffs.len() <= 1 {
            return VarPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.scale(&Rational::from_integer((i as i64).into())))
            .collect();
        VarPoly::from_coeffs(coeffs)
    }

    /// Expand into a [`MultiPoly`], mapping the variable to `sym`.
    pub fn to_multi_poly(&self, sym: Sym) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let embedded = MultiPoly::from_dim_poly(c);
            let mono = MultiPoly::monomial(sym, i as u16, Rational::from_integer(1.into()));
            out.add_assign(&embedded.mul(&mono));
        }
        out
    }

    pub fn render(&self, var_name: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let coeff = format!("({})", c);
                match i {
                    0 => coeff,
                    1 => format!("{}·{}", coeff, var_name),
                    _ => format!("{}·{}^{}", coeff, var_name, i),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for VarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("v"))
    }
}
