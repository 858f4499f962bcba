//! Closed rings of radial expressions and the exact Euler–Lagrange machinery.
//!
//! Radial functions built from the extremal family live in rings of the form
//!
//! ```text
//! Σ_s  p_s(v; n) · B^(anchor - s)
//! ```
//!
//! where on the hyperbolic side `v = c = cosh r` and `B = c - β`, and on the
//! Euclidean side `v = τ²` and `B = τ² + ρ²`. The anchor is an exponent that
//! may involve `n` (the extremal family uses `k - n/2`); each application of
//! the corresponding radial Laplacian raises the maximal shift `s` by at most
//! two and stays inside the ring. Representations are canonical: an
//! expression is zero exactly when it stores no terms.

mod euclidean;
mod euler_lagrange;
mod hyperbolic;
mod var_poly;

pub use euclidean::{
    euclid_laplacian, euclid_radial_derivative, EuclidRadialDerivative, EuclidRadialExpr,
};
pub use euler_lagrange::{
    el_residual, el_residual_with, el_solve, el_solve_instantiated, euclid_el_residual,
    euclid_el_residual_with, ElSolution,
};
pub use hyperbolic::{
    extremal_expr, extremal_norm_exponent, hyp_laplacian, hyp_radial_derivative,
    HypRadialDerivative, HypRadialExpr,
};
pub use var_poly::VarPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RadialError {
    /// The linear system assembled from the cleared identity has no
    /// full-column-rank square subsystem.
    #[error("singular Euler-Lagrange system at k={k}")]
    SingularSystem { k: u32 },
    /// A surplus equation did not vanish on the solved coefficients.
    #[error("surplus equation nonzero at k={k}, monomial {monomial}")]
    SurplusNonzero { k: u32, monomial: String },
    /// A residual certificate failed: the cleared expansion kept a monomial.
    #[error("nonzero residual at k={k}: ({coefficient})·{monomial}")]
    NonzeroResidual {
        k: u32,
        monomial: String,
        coefficient: String,
    },
}
