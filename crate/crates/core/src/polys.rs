//! Exact generation of the three coefficient-polynomial families that
//! appear in the closed-form degree derivatives:
//!
//! * `r_poly(n)` — the polynomial next to P_n·ln((z+1)/2) in ∂P_ν/∂ν|_{ν=n};
//! * `b_poly(n)` — the logarithm coefficient in ∂²P_ν/∂ν²|_{ν=n};
//! * `c_poly(n)` — the purely polynomial part of ∂²P_ν/∂ν²|_{ν=n}.
//!
//! All digamma/trigamma content is rationalized through harmonic numbers,
//! so every coefficient is an exact [`Rational`].

use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::basis::LegendreSeries;
use crate::exact::{harmonic, harmonic2, rat, rat_int, rational_to_f64, Rational};
use crate::specfun::{digamma_int, trigamma_int, PI_SQUARED};

/// Errors from coefficient generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Index out of the valid range (k must satisfy k < n).
    DomainError(String),
    /// A generation-time cross-check failed; this signals an
    /// implementation bug, never bad input.
    InternalInconsistency(String),
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DomainError(m) => write!(f, "domain error: {m}"),
            Self::InternalInconsistency(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl std::error::Error for PolyError {}

/// R_n = 2[ψ(2n+1)−ψ(n+1)]P_n + 2 Σ_{k<n} (−1)^{n+k} (2k+1)/((n−k)(n+k+1)) P_k.
pub fn r_poly(n: u32) -> LegendreSeries {
    let n = n as i64;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..n {
        let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
        coeffs.push(rat(2 * sign * (2 * k + 1), (n - k) * (n + k + 1)));
    }
    coeffs.push(rat_int(2) * (harmonic(2 * n as u32) - harmonic(n as u32)));
    LegendreSeries::new(coeffs)
}

/// B_n = 4[ψ(2n+1)−ψ(n+1)]P_n + 4 Σ_{k<n} (2k+1)/((n−k)(n+k+1)) P_k.
pub fn b_poly(n: u32) -> LegendreSeries {
    let n = n as i64;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..n {
        coeffs.push(rat(4 * (2 * k + 1), (n - k) * (n + k + 1)));
    }
    coeffs.push(rat_int(4) * (harmonic(2 * n as u32) - harmonic(n as u32)));
    LegendreSeries::new(coeffs)
}

/// The off-diagonal coefficient of P_k in C_n, for 0 ≤ k ≤ n−1:
///
/// c_nk = (−1)^{n+k} · 8(2k+1)/((n−k)(n+k+1)) ·
///            [H_{n+k} − H_{n−k} − H_{⌊(n+k)/2⌋} + H_{⌊(n−k)/2⌋}]
///        − 4(2k+1)²/((n−k)²(n+k+1)²)
///        − (−1)^{n+k} · 4(2n+1)(2k+1)/((n−k)²(n+k+1)²).
pub fn c_coeff(n: u32, k: u32) -> Result<Rational, PolyError> {
    if k >= n {
        return Err(PolyError::DomainError(format!(
            "c_coeff requires k < n, got n={n}, k={k}"
        )));
    }
    let ni = n as i64;
    let ki = k as i64;
    let sign = if (ni + ki) % 2 == 0 { 1 } else { -1 };
    let d1 = (ni - ki) * (ni + ki + 1);
    // the squared denominator is kept in big integers so no fixed-width
    // product can overflow, whatever the degree
    let d1_sq = num_bigint::BigInt::from(d1) * num_bigint::BigInt::from(d1);
    let bracket =
        harmonic(n + k) - harmonic(n - k) - harmonic((n + k) / 2) + harmonic((n - k) / 2);
    let term1 = rat(8 * sign * (2 * ki + 1), d1) * bracket;
    let term2 = Rational::new(
        num_bigint::BigInt::from(-4 * (2 * ki + 1) * (2 * ki + 1)),
        d1_sq.clone(),
    );
    let term3 = Rational::new(
        num_bigint::BigInt::from(-4 * sign * (2 * ni + 1) * (2 * ki + 1)),
        d1_sq,
    );
    Ok(term1 + term2 + term3)
}

/// The diagonal coefficient c_nn, in the rationalized form
/// c_nn = 4(H_{2n} − H_n)² − 4 H_{2n}⁽²⁾ + 2 H_n⁽²⁾
/// (the π² and γ terms of the transcendental form cancel exactly).
///
/// The value is cross-checked on every call against the transcendental
/// float form and against the exact constraint c_nn = −Σ_{k<n} c_nk;
/// disagreement panics, since it would mean a generation bug.
pub fn c_nn_coeff(n: u32) -> Rational {
    let dh = harmonic(2 * n) - harmonic(n);
    let value = rat_int(4) * (&dh * &dh) - rat_int(4) * harmonic2(2 * n)
        + rat_int(2) * harmonic2(n);

    // transcendental route, evaluated in floating point
    let psi_d = digamma_int(2 * n + 1) - digamma_int(n + 1);
    let float_form = -PI_SQUARED / 3.0 + 4.0 * psi_d * psi_d + 4.0 * trigamma_int(2 * n + 1)
        - 2.0 * trigamma_int(n + 1);
    let value_f = rational_to_f64(&value);
    assert!(
        (value_f - float_form).abs() <= 1e-12 * value_f.abs().max(1.0),
        "c_nn rationalization disagrees with the transcendental form at n={n}: \
         {value_f} vs {float_form}"
    );

    // exact route through the off-diagonal coefficients
    let mut sum = Rational::zero();
    for k in 0..n {
        sum += c_coeff(n, k).expect("k < n by construction");
    }
    assert!(
        value == -sum,
        "c_nn rationalization disagrees with the negated coefficient sum at n={n}"
    );

    value
}

/// C_n = c_nn P_n + Σ_{k<n} c_nk P_k.
pub fn c_poly(n: u32) -> LegendreSeries {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..n {
        coeffs.push(c_coeff(n, k).expect("k < n by construction"));
    }
    coeffs.push(c_nn_coeff(n));
    LegendreSeries::new(coeffs)
}

/// C_n in the alternative form Σ_{k<n} c_nk (P_k − P_n), which must agree
/// with [`c_poly`] exactly.
pub fn c_poly_difference_form(n: u32) -> LegendreSeries {
    let mut out = LegendreSeries::zero();
    for k in 0..n {
        let c = c_coeff(n, k).expect("k < n by construction");
        let pk = LegendreSeries::basis_term(k as usize, c.clone());
        let pn = LegendreSeries::basis_term(n as usize, c);
        out = out.add(&pk.sub(&pn));
    }
    out
}

/// The bundle (R_n, B_n, C_n) with the cross-relations between the three
/// families verified at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTriple {
    pub n: u32,
    pub r: LegendreSeries,
    pub b: LegendreSeries,
    pub c: LegendreSeries,
}

impl CoeffTriple {
    fn check(n: u32, r: &LegendreSeries, b: &LegendreSeries, c: &LegendreSeries)
        -> Result<(), PolyError>
    {
        let fail = |msg: String| Err(PolyError::InternalInconsistency(msg));
        if n == 0 {
            if !(r.is_zero() && b.is_zero() && c.is_zero()) {
                return fail("degree-0 polynomials must all vanish".into());
            }
            return Ok(());
        }
        let want = Some(n as usize);
        if r.degree() != want || b.degree() != want || c.degree() != want {
            return fail(format!("series degrees differ from n={n}"));
        }
        // B_n(z) = 2 (−1)^n R_n(−z)
        let mut from_r = r.parity_flip().scale(&rat_int(2));
        if n % 2 == 1 {
            from_r = from_r.scale(&rat_int(-1));
        }
        if *b != from_r {
            return fail(format!("B_{n} differs from the parity image of R_{n}"));
        }
        if !r.eval_at_one().is_zero() {
            return fail(format!("R_{n}(1) != 0"));
        }
        if !b.eval_at_minus_one().is_zero() {
            return fail(format!("B_{n}(-1) != 0"));
        }
        if !c.eval_at_one().is_zero() {
            return fail(format!("C_{n}(1) != 0"));
        }
        Ok(())
    }
}

/// Generates the verified triple (R_n, B_n, C_n).
pub fn coeff_triple(n: u32) -> Result<CoeffTriple, PolyError> {
    let r = r_poly(n);
    let b = b_poly(n);
    let c = c_poly(n);
    CoeffTriple::check(n, &r, &b, &c)?;
    Ok(CoeffTriple { n, r, b, c })
}

static TRIPLE_MEMO: RwLock<Vec<Option<Arc<CoeffTriple>>>> = RwLock::new(Vec::new());

/// Memoized [`coeff_triple`]; generation is pure, so racing writers agree.
pub fn coeff_triple_cached(n: u32) -> Arc<CoeffTriple> {
    {
        let memo = TRIPLE_MEMO.read().unwrap();
        if let Some(Some(t)) = memo.get(n as usize) {
            return Arc::clone(t);
        }
    }
    let t = Arc::new(coeff_triple(n).expect("coefficient generation must be self-consistent"));
    let mut memo = TRIPLE_MEMO.write().unwrap();
    if memo.len() <= n as usize {
        memo.resize(n as usize + 1, None);
    }
    memo[n as usize].get_or_insert_with(|| Arc::clone(&t));
    Arc::clone(memo[n as usize].as_ref().unwrap())
}
