//! Floating-point scalar special functions used at evaluation time:
//! the complex dilogarithm Li₂ with principal cut [1, ∞), the shifted
//! logarithms ln((z±1)/2), and digamma/trigamma at positive integers.
//!
//! Branch convention: principal logarithm with arg ∈ (−π, π]; every cut
//! here is inherited from it.

use std::fmt;
use std::sync::LazyLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::exact::{harmonic, harmonic2, rational_to_f64, Rational};

/// Euler–Mascheroni constant γ, correctly rounded.
pub const EULER_GAMMA: f64 = 0.5772156649015328606065120900824024310421593359399235988;
/// π², correctly rounded.
pub const PI_SQUARED: f64 = 9.869604401089358618834490999876151135313699407240790626;
/// ζ(2) = π²/6, correctly rounded.
pub const ZETA_2: f64 = 1.6449340668482264364724151666460251892189499012067984377;

/// Absolute tolerance on the imaginary part below which a point counts
/// as lying on the real axis; side information is numerically
/// meaningless closer to the cut than this.
pub const CUT_IM_TOL: f64 = 1e-14;

/// Which side of a branch cut to evaluate on (+i0 or −i0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Approach from the upper half-plane (+i0).
    Above,
    /// Approach from the lower half-plane (−i0).
    Below,
}

/// Errors from special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecFunError {
    /// The argument lies on a branch cut and no side directive was given.
    CutAmbiguity,
    /// The argument sits on a logarithmic singularity.
    SingularPoint,
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::CutAmbiguity => write!(f, "argument on a branch cut without a side directive"),
            Self::SingularPoint => write!(f, "argument at a logarithmic singularity"),
        }
    }
}

impl std::error::Error for SpecFunError {}

// ---------------------------------------------------------------------
// Dilogarithm
// ---------------------------------------------------------------------

// Series coefficients B_{2m}/(2m+1)! for Li₂(w) = u − u²/4 + Σ_m c_m u^{2m+1}
// with u = −ln(1−w). Generated exactly from the Bernoulli recurrence and
// rounded once; the argument reductions below keep |u| ≤ 1.26, so the
// term ratio is at most (|u|/2π)² ≈ 0.04 and 18 terms reach f64 precision.
static BERN_COEFFS: LazyLock<Vec<f64>> = LazyLock::new(|| {
    let m_max = 18usize;
    let n = 2 * m_max + 1;
    // Bernoulli numbers B_0..B_n via Σ_{j≤m} C(m+1,j) B_j = 0
    let mut bern: Vec<Rational> = Vec::with_capacity(n + 1);
    bern.push(Rational::from_integer(BigInt::from(1)));
    for m in 1..=n {
        let mut acc = Rational::zero();
        let mut binom = BigInt::from(1); // C(m+1, 0)
        for (j, b) in bern.iter().enumerate() {
            acc += b * Rational::from_integer(binom.clone());
            binom = binom * BigInt::from((m + 1 - j) as i64) / BigInt::from((j + 1) as i64);
        }
        bern.push(-acc / Rational::from_integer(BigInt::from((m + 1) as i64)));
    }
    let mut factorial = Rational::from_integer(BigInt::from(6)); // 3!
    let mut out = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        out.push(rational_to_f64(&(&bern[2 * m] / &factorial)));
        let k = 2 * m + 2;
        factorial *= Rational::from_integer(BigInt::from((k * (k + 1)) as i64));
    }
    out
});

/// ln(1 + t) with full relative accuracy for small |t|.
fn ln1p_complex(t: Complex64) -> Complex64 {
    let re = 0.5 * (2.0 * t.re + t.norm_sqr()).ln_1p();
    let im = t.im.atan2(1.0 + t.re);
    Complex64::new(re, im)
}

fn bern_series_complex(w: Complex64) -> Complex64 {
    let u = -ln1p_complex(-w);
    let u2 = u * u;
    let mut sum = u - 0.25 * u2;
    let mut pw = u * u2;
    for &c in BERN_COEFFS.iter() {
        let term = c * pw;
        sum += term;
        if term.norm_sqr() <= 1e-34 * sum.norm_sqr() {
            break;
        }
        pw *= u2;
    }
    sum
}

fn bern_series_real(x: f64) -> f64 {
    let u = -(-x).ln_1p();
    let u2 = u * u;
    let mut sum = u - 0.25 * u2;
    let mut pw = u * u2;
    for &c in BERN_COEFFS.iter() {
        let term = c * pw;
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
        pw *= u2;
    }
    sum
}

/// Li₂ for real x ≤ 1 (strictly below the cut endpoint handling).
fn dilog_real_below1(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x < -1.0 {
        // inversion: Li₂(x) = −Li₂(1/x) − π²/6 − ½ ln²(−x)
        let l = (-x).ln();
        return -dilog_real_below1(1.0 / x) - ZETA_2 - 0.5 * l * l;
    }
    if x > 0.5 {
        // reflection: Li₂(x) = π²/6 − ln x · ln(1−x) − Li₂(1−x)
        return ZETA_2 - x.ln() * (-x).ln_1p() - bern_series_real(1.0 - x);
    }
    bern_series_real(x)
}

/// Core complex evaluation, assuming |Im w| > 0 meaningfully.
fn dilog_complex_core(w: Complex64) -> Complex64 {
    if w.norm_sqr() > 1.0 {
        // inversion: Li₂(w) = −Li₂(1/w) − π²/6 − ½ ln²(−w)
        let l = (-w).ln();
        return -dilog_unit(1.0 / w) - ZETA_2 - 0.5 * l * l;
    }
    dilog_unit(w)
}

fn dilog_unit(w: Complex64) -> Complex64 {
    if w.re > 0.5 {
        // reflection into the well-conditioned half-disk
        let om = Complex64::new(1.0, 0.0) - w;
        return ZETA_2 - w.ln() * ln1p_complex(-w) - bern_series_complex(om);
    }
    bern_series_complex(w)
}

/// Principal-branch dilogarithm Li₂(w) with cut along [1, ∞).
///
/// The cut endpoint w = 1 evaluates to ζ(2); real arguments beyond it
/// need a side directive (see [`dilog_side`]).
pub fn dilog(w: Complex64) -> Result<Complex64, SpecFunError> {
    if w.im.abs() <= CUT_IM_TOL {
        let x = w.re;
        if (x - 1.0).abs() <= CUT_IM_TOL {
            return Ok(Complex64::new(ZETA_2, 0.0));
        }
        if x > 1.0 {
            return Err(SpecFunError::CutAmbiguity);
        }
        return Ok(Complex64::new(dilog_real_below1(x), 0.0));
    }
    Ok(dilog_complex_core(w))
}

/// Li₂ with an explicit side directive for arguments on the cut [1, ∞):
/// Li₂(x ± i0) = π²/3 − ½ ln²x − Li₂(1/x) ± iπ ln x for x > 1.
/// Off the cut the directive is ignored.
pub fn dilog_side(w: Complex64, side: Side) -> Complex64 {
    if w.im.abs() <= CUT_IM_TOL {
        let x = w.re;
        if (x - 1.0).abs() <= CUT_IM_TOL {
            return Complex64::new(ZETA_2, 0.0);
        }
        if x > 1.0 {
            let l = x.ln();
            let re = PI_SQUARED / 3.0 - 0.5 * l * l - dilog_real_below1(1.0 / x);
            let im = match side {
                Side::Above => std::f64::consts::PI * l,
                Side::Below => -std::f64::consts::PI * l,
            };
            return Complex64::new(re, im);
        }
        return Complex64::new(dilog_real_below1(x), 0.0);
    }
    dilog_complex_core(w)
}

// ---------------------------------------------------------------------
// Shifted logarithms
// ---------------------------------------------------------------------

/// Principal log with the boundary convention arg ∈ (−π, π]: on the
/// negative real axis a signed-zero imaginary part is normalized so the
/// argument is +π, never −π.
fn principal_ln(w: Complex64) -> Complex64 {
    let w = if w.im == 0.0 {
        Complex64::new(w.re, 0.0)
    } else {
        w
    };
    w.ln()
}

/// ln((z+1)/2) on the principal branch; cut along z ∈ (−∞, −1].
pub fn log_shift_plus(z: Complex64) -> Result<Complex64, SpecFunError> {
    let w = 0.5 * (z + Complex64::new(1.0, 0.0));
    if w.norm_sqr() == 0.0 {
        return Err(SpecFunError::SingularPoint);
    }
    Ok(principal_ln(w))
}

/// ln((z−1)/2) on the principal branch; cut along z ∈ (−∞, 1].
/// Real z < 1 is ambiguous without a side directive.
pub fn log_shift_minus(z: Complex64) -> Result<Complex64, SpecFunError> {
    let w = 0.5 * (z - Complex64::new(1.0, 0.0));
    if w.norm_sqr() == 0.0 {
        return Err(SpecFunError::SingularPoint);
    }
    if z.im.abs() <= CUT_IM_TOL && z.re < 1.0 {
        return Err(SpecFunError::CutAmbiguity);
    }
    Ok(principal_ln(w))
}

/// ln((z−1)/2) with a side directive resolving the on-cut case:
/// for real z < 1 the value is ln((1−z)/2) ± iπ.
pub fn log_shift_minus_side(z: Complex64, side: Side) -> Result<Complex64, SpecFunError> {
    let w = 0.5 * (z - Complex64::new(1.0, 0.0));
    if w.norm_sqr() == 0.0 {
        return Err(SpecFunError::SingularPoint);
    }
    if z.im.abs() <= CUT_IM_TOL && z.re < 1.0 {
        let re = (0.5 * (1.0 - z.re)).ln();
        let im = match side {
            Side::Above => std::f64::consts::PI,
            Side::Below => -std::f64::consts::PI,
        };
        return Ok(Complex64::new(re, im));
    }
    Ok(principal_ln(w))
}

// ---------------------------------------------------------------------
// Digamma / trigamma at positive integers
// ---------------------------------------------------------------------

/// ψ(m) = −γ + H_{m−1} as a double, for m ≥ 1.
pub fn digamma_int(m: u32) -> f64 {
    assert!(m >= 1, "digamma_int requires a positive argument");
    -EULER_GAMMA + rational_to_f64(&harmonic(m - 1))
}

/// ψ₁(m) = π²/6 − H_{m−1}⁽²⁾ as a double, for m ≥ 1.
pub fn trigamma_int(m: u32) -> f64 {
    assert!(m >= 1, "trigamma_int requires a positive argument");
    ZETA_2 - rational_to_f64(&harmonic2(m - 1))
}
