//! Exact construction and numeric exploration of the k-th order conformal
//! operators on hyperbolic space and their sharp Sobolev quotients.
//!
//! The crate is organized in layers:
//!
//! * [`exact`] — arbitrary-precision rational arithmetic, dense polynomials in
//!   the dimension symbol `n`, sparse multivariate polynomials, rational
//!   functions, fraction-free linear solving, and interpolation.
//! * [`operator`] — the k-th standard operator `P_k` as an exact polynomial in
//!   the hyperbolic Laplacian, built from the factorized recursion.
//! * [`radial`] — closed rings of radial expressions on which the hyperbolic
//!   and Euclidean radial Laplacians act exactly, the Euler–Lagrange
//!   coefficient solver, and exact residual certificates.
//! * [`constants`] — sphere areas, the sharp constants, and floating-point
//!   consistency checks.
//! * [`numeric`] — Taylor-jet automatic differentiation, adaptive quadrature
//!   with endpoint diagnostics, extremal-family quotients, truncated energies,
//!   and the conformal transformation-law checker.
//! * [`cli`] — the command-line front end.

pub mod cli;
pub mod constants;
pub mod exact;
pub mod numeric;
pub mod operator;
pub mod radial;
