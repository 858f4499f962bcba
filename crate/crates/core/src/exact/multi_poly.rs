//! Sparse multivariate polynomials over the fixed symbol set
//! `{n, β, c, τ², ρ²}`, used as the expansion workspace when radial
//! identities are cleared to a common power and compared monomial by
//! monomial.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::{DimPoly, Rational};

/// Number of symbols in the fixed alphabet.
pub const NUM_SYMS: usize = 5;

/// Symbol indices into a [`MultiPoly`] exponent tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    N = 0,
    Beta = 1,
    C = 2,
    Tau2 = 3,
    Rho2 = 4,
}

const SYM_NAMES: [&str; NUM_SYMS] = ["n", "β", "c", "τ²", "ρ²"];

/// Exponent tuple, one entry per symbol.
pub type Expts = [u16; NUM_SYMS];

/// Sparse multivariate polynomial: exponent tuple → coefficient. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Expts, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term([0; NUM_SYMS], c);
        p
    }

    /// Monomial `coeff * sym^power`.
    pub fn monomial(sym: Sym, power: u16, coeff: Rational) -> Self {
        let mut e = [0u16; NUM_SYMS];
        e[sym as usize] = power;
        let mut p = MultiPoly::zero();
        p.add_term(e, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expts, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Expts, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &MultiPoly) {
        for (e, c) in &other.terms {
            self.add_term(*e, -c.clone());
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (i, x) in eb.iter().enumerate() {
                    e[i] += x;
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, a) in &self.terms {
            out.add_term(*e, a * c);
        }
        out
    }

    /// Embed a polynomial in `n`.
    pub fn from_dim_poly(p: &DimPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = [0u16; NUM_SYMS];
            e[Sym::N as usize] = i as u16;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Group terms by their non-`n` exponents, collecting the `n`-dependence
    /// of each group into a [`DimPoly`]. The group key has the `n` slot
    /// zeroed.
    pub fn group_by_non_n(&self) -> BTreeMap<Expts, DimPoly> {
        let mut groups: BTreeMap<Expts, Vec<(usize, Rational)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = *e;
            let npow = key[Sym::N as usize] as usize;
            key[Sym::N as usize] = 0;
            groups.entry(key).or_default().push((npow, c.clone()));
        }
        groups
            .into_iter()
            .map(|(key, parts)| {
                let top = parts.iter().map(|(p, _)| *p).max().unwrap_or(0);
                let mut coeffs = vec![Rational::zero(); top + 1];
                for (p, c) in parts {
                    coeffs[p] += c;
                }
                (key, DimPoly::from_coeffs(coeffs))
            })
            .collect()
    }

    /// Render a single exponent tuple, e.g. `c^2·β`.
    pub fn render_monomial(e: &Expts) -> String {
        let mut parts = Vec::new();
        for (i, &p) in e.iter().enumerate() {
            match p {
                0 => {}
                1 => parts.push(SYM_NAMES[i].to_string()),
                _ => parts.push(format!("{}^{}", SYM_NAMES[i], p)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("·")
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("({})·{}", c, MultiPoly::render_monomial(e)))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}
