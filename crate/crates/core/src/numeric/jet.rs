//! Truncated Taylor expansions ("jets") of smooth radial functions.
//!
//! A [`Jet`] stores the scaled derivatives `f(a), f'(a), f''(a)/2!, …` of a
//! function at a base point, so coefficient `i` is the coefficient of `h^i`
//! in the local expansion. Arithmetic and the elementary transcendentals act
//! on these coefficients by the usual power-series recurrences, truncated to
//! the shorter operand. Differentiating shifts the coefficients down and
//! costs one order; each radial Laplacian costs two.
//!
//! Jets carry no symbolic content — they are the purely numeric probe used
//! to apply high-order operators to non-polynomial test functions (bumps,
//! lifted profiles) where the ring expressions of [`crate::radial`] do not
//! reach.

/// Truncated Taylor expansion with scaled coefficients `f^(i)(a) / i!`.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// The constant function `v`, expanded to `len` coefficients.
    pub fn constant(value: f64, len: usize) -> Jet {
        assert!(len > 0, "a jet needs at least one coefficient");
        let mut coeffs = vec![0.0; len];
        coeffs[0] = value;
        Jet { coeffs }
    }

    /// The identity function at base point `value`: coefficients `[v, 1, 0, …]`.
    pub fn variable(value: f64, len: usize) -> Jet {
        assert!(len > 0, "a jet needs at least one coefficient");
        let mut coeffs = vec![0.0; len];
        coeffs[0] = value;
        if len > 1 {
            coeffs[1] = 1.0;
        }
        Jet { coeffs }
    }

    /// Number of stored coefficients (expansion order plus one).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value at the base point, `f(a)`.
    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Scaled coefficient `f^(i)(a) / i!`; zero beyond the stored order.
    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    fn common_len(&self, other: &Jet) -> usize {
        self.coeffs.len().min(other.coeffs.len())
    }

    pub fn add(&self, other: &Jet) -> Jet {
        let len = self.common_len(other);
        Jet {
            coeffs: (0..len).map(|i| self.coeffs[i] + other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        let len = self.common_len(other);
        Jet {
            coeffs: (0..len).map(|i| self.coeffs[i] - other.coeffs[i]).collect(),
        }
    }

    pub fn neg(&self) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Product, truncated to the shorter operand.
    pub fn mul(&self, other: &Jet) -> Jet {
        let len = self.common_len(other);
        let mut coeffs = vec![0.0; len];
        for i in 0..len {
            for j in 0..=i {
                coeffs[i] += self.coeffs[j] * other.coeffs[i - j];
            }
        }
        Jet { coeffs }
    }

    /// Reciprocal `1/f`; requires `f(a) ≠ 0`.
    pub fn recip(&self) -> Jet {
        let f0 = self.coeffs[0];
        debug_assert!(f0 != 0.0, "reciprocal of a jet vanishing at the base point");
        let mut g = vec![0.0; self.coeffs.len()];
        g[0] = 1.0 / f0;
        for m in 1..g.len() {
            let mut acc = 0.0;
            for j in 1..=m {
                acc += self.coeffs[j] * g[m - j];
            }
            g[m] = -acc / f0;
        }
        Jet { coeffs: g }
    }

    pub fn div(&self, other: &Jet) -> Jet {
        self.mul(&other.recip())
    }

    /// Composition with the exponential: `m·g_m = Σ_{j=1..m} j·f_j·g_{m-j}`.
    pub fn exp(&self) -> Jet {
        let mut g = vec![0.0; self.coeffs.len()];
        g[0] = self.coeffs[0].exp();
        for m in 1..g.len() {
            let mut acc = 0.0;
            for j in 1..=m {
                acc += j as f64 * self.coeffs[j] * g[m - j];
            }
            g[m] = acc / m as f64;
        }
        Jet { coeffs: g }
    }

    /// Composition with the natural logarithm; requires `f(a) > 0`.
    pub fn ln(&self) -> Jet {
        let f0 = self.coeffs[0];
        debug_assert!(f0 > 0.0, "logarithm of a jet non-positive at the base point");
        let mut g = vec![0.0; self.coeffs.len()];
        g[0] = f0.ln();
        for m in 1..g.len() {
            let mut acc = m as f64 * self.coeffs[m];
            for j in 1..m {
                acc -= j as f64 * g[j] * self.coeffs[m - j];
            }
            g[m] = acc / (m as f64 * f0);
        }
        Jet { coeffs: g }
    }

    /// Real power `f^p`; requires `f(a) > 0`. Direct recurrence
    /// `m·f_0·g_m = Σ_{j=1..m} (j(p+1) - m)·f_j·g_{m-j}`.
    pub fn powf(&self, p: f64) -> Jet {
        let f0 = self.coeffs[0];
        debug_assert!(f0 > 0.0, "power of a jet non-positive at the base point");
        let mut g = vec![0.0; self.coeffs.len()];
        g[0] = f0.powf(p);
        for m in 1..g.len() {
            let mut acc = 0.0;
            for j in 1..=m {
                acc += (j as f64 * (p + 1.0) - m as f64) * self.coeffs[j] * g[m - j];
            }
            g[m] = acc / (m as f64 * f0);
        }
        Jet { coeffs: g }
    }

    pub fn sqrt(&self) -> Jet {
        self.powf(0.5)
    }

    /// `cosh f` and `sinh f` together, sharing the coupled recurrence
    /// `m·c_m = Σ j·f_j·s_{m-j}`, `m·s_m = Σ j·f_j·c_{m-j}`.
    pub fn cosh_sinh(&self) -> (Jet, Jet) {
        let len = self.coeffs.len();
        let mut c = vec![0.0; len];
        let mut s = vec![0.0; len];
        c[0] = self.coeffs[0].cosh();
        s[0] = self.coeffs[0].sinh();
        for m in 1..len {
            let mut ac = 0.0;
            let mut asn = 0.0;
            for j in 1..=m {
                let jf = j as f64 * self.coeffs[j];
                ac += jf * s[m - j];
                asn += jf * c[m - j];
            }
            c[m] = ac / m as f64;
            s[m] = asn / m as f64;
        }
        (Jet { coeffs: c }, Jet { coeffs: s })
    }

    pub fn cosh(&self) -> Jet {
        self.cosh_sinh().0
    }

    pub fn sinh(&self) -> Jet {
        self.cosh_sinh().1
    }

    /// Derivative jet: one order shorter, `g_i = (i+1)·f_{i+1}`.
    pub fn derivative(&self) -> Jet {
        assert!(
            self.coeffs.len() > 1,
            "differentiating a jet with no stored derivative"
        );
        Jet {
            coeffs: (1..self.coeffs.len())
                .map(|i| i as f64 * self.coeffs[i])
                .collect(),
        }
    }
}

/// Hyperbolic radial Laplacian `Δf = -(f'' + (n-1)·coth r·f')` applied to a
/// jet based at `r > 0`. The result is two orders shorter than the input.
pub fn hyp_laplacian_jet(f: &Jet, r: f64, n: u32) -> Jet {
    assert!(r > 0.0, "the radial hyperbolic Laplacian needs r > 0");
    let f1 = f.derivative();
    let f2 = f1.derivative();
    let var = Jet::variable(r, f2.len());
    let (c, s) = var.cosh_sinh();
    let coth = c.div(&s);
    f2.add(&coth.mul(&f1).scale(n as f64 - 1.0)).neg()
}

/// Euclidean radial Laplacian `Δf = -(f'' + (n-1)/ρ·f')` applied to a jet
/// based at `ρ > 0`. The result is two orders shorter than the input.
pub fn euclid_laplacian_jet(f: &Jet, rho: f64, n: u32) -> Jet {
    assert!(rho > 0.0, "the radial Euclidean Laplacian needs ρ > 0");
    let f1 = f.derivative();
    let f2 = f1.derivative();
    let inv = Jet::variable(rho, f2.len()).recip();
    f2.add(&inv.mul(&f1).scale(n as f64 - 1.0)).neg()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol * b.abs().max(1.0),
            "{a} vs {b} (tol {tol})"
        );
    }

    #[test]
    fn product_with_reciprocal_is_one() {
        let f = Jet::variable(1.0, 10); // 1 + h
        let p = f.mul(&f.recip());
        assert_close(p.coeff(0), 1.0, 1e-15);
        for i in 1..10 {
            assert!(p.coeff(i).abs() < 1e-14, "coefficient {i} = {}", p.coeff(i));
        }
    }

    #[test]
    fn exp_of_variable_has_factorial_coefficients() {
        let g = Jet::variable(0.3, 8).exp();
        let e = 0.3f64.exp();
        let mut fact = 1.0;
        for i in 0..8 {
            if i > 0 {
                fact *= i as f64;
            }
            assert_close(g.coeff(i), e / fact, 1e-14);
        }
    }

    #[test]
    fn ln_inverts_exp() {
        let f = Jet::variable(0.7, 9);
        let back = f.exp().ln();
        assert_close(back.coeff(0), 0.7, 1e-14);
        assert_close(back.coeff(1), 1.0, 1e-13);
        for i in 2..9 {
            assert!(back.coeff(i).abs() < 1e-12);
        }
    }

    #[test]
    fn powf_matches_binomial_series() {
        // (1+h)^(-2) = Σ (-1)^i (i+1) h^i
        let g = Jet::variable(1.0, 7).powf(-2.0);
        for i in 0..7 {
            let expect = if i % 2 == 0 {
                (i + 1) as f64
            } else {
                -((i + 1) as f64)
            };
            assert_close(g.coeff(i), expect, 1e-13);
        }
        // and powf agrees with exp∘scale∘ln on a generic jet
        let f = Jet::variable(2.0, 7).mul(&Jet::variable(2.0, 7)).add(&Jet::constant(1.0, 7));
        let direct = f.powf(1.7);
        let via_log = f.ln().scale(1.7).exp();
        for i in 0..7 {
            assert_close(direct.coeff(i), via_log.coeff(i), 1e-12);
        }
    }

    #[test]
    fn cosh_sinh_at_zero_interleave() {
        let (c, s) = Jet::variable(0.0, 6).cosh_sinh();
        assert_close(c.coeff(0), 1.0, 1e-15);
        assert_close(c.coeff(2), 0.5, 1e-15);
        assert_close(c.coeff(4), 1.0 / 24.0, 1e-15);
        assert!(c.coeff(1).abs() < 1e-15 && c.coeff(3).abs() < 1e-15);
        assert_close(s.coeff(1), 1.0, 1e-15);
        assert_close(s.coeff(3), 1.0 / 6.0, 1e-15);
        assert!(s.coeff(0).abs() < 1e-15 && s.coeff(2).abs() < 1e-15);
    }

    #[test]
    fn derivative_shifts_coefficients() {
        let g = Jet::variable(0.4, 6).exp();
        let d = g.derivative();
        assert_eq!(d.len(), 5);
        for i in 0..5 {
            assert_close(d.coeff(i), g.coeff(i), 1e-14);
        }
    }

    #[test]
    fn hyp_laplacian_of_cosh_is_minus_n_cosh() {
        // f'' = cosh, coth·f' = cosh, so Δ cosh r = -n cosh r at every r.
        let r = 0.9;
        let f = Jet::variable(r, 7).cosh();
        let image = hyp_laplacian_jet(&f, r, 5);
        assert_eq!(image.len(), 5);
        assert_close(image.coeff(0), -5.0 * r.cosh(), 1e-13);
        assert_close(image.coeff(1), -5.0 * r.sinh(), 1e-13);
        assert_close(image.coeff(2), -5.0 * r.cosh() / 2.0, 1e-13);
    }

    #[test]
    fn euclid_laplacian_of_rho_squared_is_constant() {
        let rho = 0.6;
        let var = Jet::variable(rho, 6);
        let image = euclid_laplacian_jet(&var.mul(&var), rho, 4);
        assert_close(image.coeff(0), -8.0, 1e-14);
        for i in 1..image.len() {
            assert!(image.coeff(i).abs() < 1e-13);
        }
    }
}
