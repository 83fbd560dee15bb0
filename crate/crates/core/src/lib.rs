//! Closed-form degree derivatives of Legendre functions.
//!
//! For integer degrees n the derivatives of the Legendre functions with
//! respect to the degree ν have closed forms built from the Legendre
//! polynomial P_n, the dilogarithm, the logarithms ln((z±1)/2), and
//! three families of companion polynomials with exactly rational
//! coefficients:
//!
//! * ∂P_ν(z)/∂ν|_{ν=n}  =  P_n(z)·ln((z+1)/2) + R_n(z)
//! * ∂²P_ν(z)/∂ν²|_{ν=n} = −2P_n(z)·Li₂((1−z)/2) + B_n(z)·ln((z+1)/2) + C_n(z)
//! * ∂Q_ν(z)/∂ν|_{ν=n}   = a combination of the same ingredients at ±z
//!
//! This crate generates R_n, B_n, C_n exactly (arbitrary-precision
//! rationals, no floating-point in the coefficients), evaluates the
//! closed forms over ℂ with explicit branch handling, and ships
//! independent oracles — hypergeometric series, finite differences in
//! the degree, brute-force summation — that every closed form is checked
//! against.
//!
//! Entry points:
//! * [`polys`] — exact generation of the coefficient polynomials;
//! * [`derivs`] — the derivative evaluators;
//! * [`specfun`] — dilogarithm, shifted logarithms, digamma/trigamma;
//! * [`oracle`] — independent verification machinery;
//! * [`verify`] — ready-made verification suites;
//! * [`cache`] — the on-disk coefficient cache;
//! * [`cli`] — the `lnd` command-line front end.
//!
//! The `examples/` directory has one runnable example per capability.

pub mod basis;
pub mod cache;
pub mod cli;
pub mod derivs;
pub mod exact;
pub mod oracle;
pub mod polys;
pub mod specfun;
pub mod verify;

pub use basis::LegendreSeries;
pub use derivs::{
    d2p_dnu2, d2p_dnu2_anydeg, dp_dnu, dq_dnu_offcut, dq_dnu_oncut, DerivativeResult, EvalError,
    EvalPoint, Formula,
};
pub use exact::{harmonic, harmonic2, psi_diff, rational_to_f64, Rational};
pub use num_complex::Complex64;
pub use polys::{b_poly, c_poly, coeff_triple, r_poly, CoeffTriple};
pub use specfun::{digamma_int, dilog, trigamma_int, Side};
pub use verify::{run_suite, Suite, VerificationReport};
