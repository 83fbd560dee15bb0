//! Independent verification machinery: P_ν at non-integer degree via the
//! Gauss hypergeometric series, Q_ν from its definition in terms of P_ν,
//! Richardson-extrapolated finite differences in the degree, and exact
//! brute-force evaluation of the summation identities behind the
//! coefficient formulas.
//!
//! Nothing here shares an algorithm with the closed-form evaluators; the
//! two paths meet only in the verification suites.

use std::fmt;

use num_complex::Complex64;

use crate::exact::{harmonic, harmonic2, rat, rat_int, Rational};
use num_traits::Zero;

/// Errors from oracle evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Series did not converge within the term cap.
    NoConvergence,
    /// Argument outside the convergence disk or index range.
    DomainError(String),
    /// Degree too close to an integer for the Q_ν definition.
    NearIntegerDegree,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoConvergence => write!(f, "series did not converge within the term cap"),
            Self::DomainError(m) => write!(f, "domain error: {m}"),
            Self::NearIntegerDegree => {
                write!(f, "degree too close to an integer for the Q definition")
            }
        }
    }
}

impl std::error::Error for OracleError {}

/// Finite-difference configuration.
#[derive(Debug, Clone, Copy)]
pub struct FDConfig {
    /// Base step in the degree; must lie in [1e−5, 1e−1].
    pub step: f64,
    /// Number of step halvings for Richardson extrapolation, at most 4.
    pub richardson_levels: u32,
    /// Acceptance tolerance used by the verification suites.
    pub tolerance: f64,
}

impl Default for FDConfig {
    fn default() -> Self {
        FDConfig {
            step: 1e-3,
            richardson_levels: 2,
            tolerance: 1e-5,
        }
    }
}

impl FDConfig {
    fn validate(&self) -> Result<(), OracleError> {
        if !(1e-5..=1e-1).contains(&self.step) {
            return Err(OracleError::DomainError(format!(
                "step {} outside [1e-5, 1e-1]",
                self.step
            )));
        }
        if self.richardson_levels == 0 || self.richardson_levels > 4 {
            return Err(OracleError::DomainError(format!(
                "richardson_levels {} outside 1..=4",
                self.richardson_levels
            )));
        }
        if self.tolerance <= 0.0 {
            return Err(OracleError::DomainError("tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// P_ν(z) by the hypergeometric series
/// Σ_{k≥0} (−ν)_k (ν+1)_k / (k!)² · ((1−z)/2)^k, valid for |1−z|/2 < 1.
pub fn p_nu_hyp(nu: f64, z: Complex64) -> Result<Complex64, OracleError> {
    let w = 0.5 * (Complex64::new(1.0, 0.0) - z);
    if w.norm() >= 1.0 {
        return Err(OracleError::DomainError(format!(
            "|1-z|/2 = {} is outside the convergence disk",
            w.norm()
        )));
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut quiet = 0u32;
    for k in 0..100_000u64 {
        let kf = k as f64;
        term *= (kf - nu) * (kf + nu + 1.0) / ((kf + 1.0) * (kf + 1.0)) * w;
        sum += term;
        // terms are not monotone for complex arguments: require a small
        // relative tail over three consecutive terms
        if term.norm() < 1e-15 * sum.norm().max(f64::MIN_POSITIVE) {
            quiet += 1;
            if quiet >= 3 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(OracleError::NoConvergence)
}

/// Q_ν(z) from the first-kind functions:
/// (π/2)·[e^{∓iπν} P_ν(z) − P_ν(−z)] / sin(πν), sign by Im z ≷ 0.
/// Requires non-real z and a degree at least 1e−6 from any integer.
pub fn q_nu(nu: f64, z: Complex64) -> Result<Complex64, OracleError> {
    if z.im == 0.0 {
        return Err(OracleError::DomainError(
            "Q_nu here requires z off the real axis".into(),
        ));
    }
    if (nu - nu.round()).abs() < 1e-6 {
        return Err(OracleError::NearIntegerDegree);
    }
    let p_pos = p_nu_hyp(nu, z)?;
    let p_neg = p_nu_hyp(nu, -z)?;
    let angle = if z.im > 0.0 {
        -std::f64::consts::PI * nu
    } else {
        std::f64::consts::PI * nu
    };
    let phase = Complex64::from_polar(1.0, angle);
    let s = (std::f64::consts::PI * nu).sin();
    Ok(std::f64::consts::FRAC_PI_2 * (phase * p_pos - p_neg) / s)
}

/// Neville extrapolation to step zero of values d[i] computed at steps
/// h/2^i, assuming an error expansion in even powers of the step.
fn richardson(d: &[Complex64]) -> Complex64 {
    let mut t = d.to_vec();
    let m = t.len();
    for j in 1..m {
        let factor = 4f64.powi(j as i32);
        for i in (j..m).rev() {
            t[i] = t[i] + (t[i] - t[i - 1]) / (factor - 1.0);
        }
    }
    t[m - 1]
}

/// Central second difference of P_ν in the degree at ν = n, Richardson
/// extrapolated: approximates ∂²P_ν(z)/∂ν²|_{ν=n}.
pub fn fd2_nu(n: u32, z: Complex64, cfg: &FDConfig) -> Result<Complex64, OracleError> {
    cfg.validate()?;
    let p_center = p_nu_hyp(n as f64, z)?;
    let mut diffs = Vec::with_capacity(cfg.richardson_levels as usize);
    for level in 0..cfg.richardson_levels {
        let h = cfg.step / 2f64.powi(level as i32);
        let plus = p_nu_hyp(n as f64 + h, z)?;
        let minus = p_nu_hyp(n as f64 - h, z)?;
        diffs.push((plus - 2.0 * p_center + minus) / (h * h));
    }
    Ok(richardson(&diffs))
}

/// Central first difference of Q_ν in the degree at ν = n, Richardson
/// extrapolated: approximates ∂Q_ν(z)/∂ν|_{ν=n}.
pub fn fd1_q(n: u32, z: Complex64, cfg: &FDConfig) -> Result<Complex64, OracleError> {
    cfg.validate()?;
    let mut diffs = Vec::with_capacity(cfg.richardson_levels as usize);
    for level in 0..cfg.richardson_levels {
        let h = cfg.step / 2f64.powi(level as i32);
        let plus = q_nu(n as f64 + h, z)?;
        let minus = q_nu(n as f64 - h, z)?;
        diffs.push((plus - minus) / (2.0 * h));
    }
    Ok(richardson(&diffs))
}

// ---------------------------------------------------------------------
// Exact summation identities
// ---------------------------------------------------------------------

fn check_s1_range(n: u32, m: u32) -> Result<(), OracleError> {
    if n == 0 || m >= n {
        return Err(OracleError::DomainError(format!(
            "indices must satisfy 0 <= m <= n-1, got n={n}, m={m}"
        )));
    }
    Ok(())
}

fn check_positive(n: u32) -> Result<(), OracleError> {
    if n == 0 {
        return Err(OracleError::DomainError("index must satisfy n >= 1".into()));
    }
    Ok(())
}

/// Direct summation of S₁ = Σ_{k=m}^{n−1} (−1)^{n+k} (2k+1)/((n−k)(n+k+1)).
pub fn brute_s1(n: u32, m: u32) -> Result<Rational, OracleError> {
    check_s1_range(n, m)?;
    let ni = n as i64;
    let mut sum = Rational::zero();
    for k in m as i64..ni {
        let sign = if (ni + k) % 2 == 0 { 1 } else { -1 };
        sum += rat(sign * (2 * k + 1), (ni - k) * (ni + k + 1));
    }
    Ok(sum)
}

/// Closed form of S₁, rationalized through harmonic numbers:
/// −H_{2n} + H_{n+m} + H_n − H_{n−m} − H_{⌊(n+m)/2⌋} + H_{⌊(n−m)/2⌋}.
pub fn closed_s1(n: u32, m: u32) -> Result<Rational, OracleError> {
    check_s1_range(n, m)?;
    Ok(-harmonic(2 * n) + harmonic(n + m) + harmonic(n) - harmonic(n - m)
        - harmonic((n + m) / 2)
        + harmonic((n - m) / 2))
}

/// Direct double sum S₂ = Σ_k f_k Σ_{m≥k} f_m with
/// f_k = (−1)^k (2k+1)/((n−k)(n+k+1)), 0 ≤ k ≤ n−1.
pub fn brute_s2(n: u32) -> Result<Rational, OracleError> {
    check_positive(n)?;
    let ni = n as i64;
    let f = |k: i64| -> Rational {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        rat(sign * (2 * k + 1), (ni - k) * (ni + k + 1))
    };
    // accumulate inner tails from the top down
    let mut tail = Rational::zero();
    let mut sum = Rational::zero();
    for k in (0..ni).rev() {
        let fk = f(k);
        tail += &fk;
        sum += fk * &tail;
    }
    Ok(sum)
}

/// Closed form of S₂: ½(H_{2n} − H_n)² + ½H_{2n}⁽²⁾ − H_{2n}/(2n+1).
pub fn closed_s2(n: u32) -> Result<Rational, OracleError> {
    check_positive(n)?;
    let d = harmonic(2 * n) - harmonic(n);
    Ok(rat(1, 2) * (&d * &d) + rat(1, 2) * harmonic2(2 * n)
        - harmonic(2 * n) / rat_int(2 * n as i64 + 1))
}

/// Direct sum S₃ = Σ_{k<n} (2k+1)²/((n−k)²(n+k+1)²).
pub fn brute_s3(n: u32) -> Result<Rational, OracleError> {
    check_positive(n)?;
    let ni = n as i64;
    let mut sum = Rational::zero();
    for k in 0..ni {
        let num = (2 * k + 1) * (2 * k + 1);
        let den = (ni - k) * (ni - k) * (ni + k + 1) * (ni + k + 1);
        sum += rat(num, den);
    }
    Ok(sum)
}

/// Closed form of S₃: H_{2n}⁽²⁾ − 2H_{2n}/(2n+1).
pub fn closed_s3(n: u32) -> Result<Rational, OracleError> {
    check_positive(n)?;
    Ok(harmonic2(2 * n) - rat_int(2) * harmonic(2 * n) / rat_int(2 * n as i64 + 1))
}

/// Direct sum S₄ = Σ_{k<n} (−1)^{n+k} (2n+1)(2k+1)/((n−k)²(n+k+1)²).
pub fn brute_s4(n: u32) -> Result<Rational, OracleError> {
    check_positive(n)?;
    let ni = n as i64;
    let mut sum = Rational::zero();
    for k in 0..ni {
        let sign = if (ni + k) % 2 == 0 { 1 } else { -1 };
        let num = sign * (2 * ni + 1) * (2 * k + 1);
        let den = (ni - k) * (ni - k) * (ni + k + 1) * (ni + k + 1);
        sum += rat(num, den);
    }
    Ok(sum)
}

/// Closed form of S₄: −H_{2n}⁽²⁾ + ½H_n⁽²⁾.
pub fn closed_s4(n: u32) -> Result<Rational, OracleError> {
    check_positive(n)?;
    Ok(-harmonic2(2 * n) + rat(1, 2) * harmonic2(n))
}

/// Checks the triangular-sum identity
/// Σ_k f_k Σ_{m≥k} f_m = ½(Σ f_k)² + ½ Σ f_k², exactly.
pub fn identity_a10_check(values: &[Rational]) -> bool {
    if values.is_empty() {
        return false;
    }
    let mut tail = Rational::zero();
    let mut lhs = Rational::zero();
    for f in values.iter().rev() {
        tail += f;
        lhs += f * &tail;
    }
    let total: Rational = values.iter().sum();
    let squares: Rational = values.iter().map(|f| f * f).sum();
    lhs == rat(1, 2) * (&total * &total) + rat(1, 2) * squares
}
