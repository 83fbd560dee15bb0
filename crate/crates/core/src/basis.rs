//! Exact polynomial algebra over the Legendre basis {P_0, …, P_n}.
//!
//! A [`LegendreSeries`] holds rational coefficients; everything here is
//! exact except evaluation, which rounds each coefficient to `f64` once
//! and then runs the three-term recurrence
//! (k+1) P_{k+1}(z) = (2k+1) z P_k(z) − k P_{k−1}(z).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;

use crate::exact::{rat_int, rational_to_f64, Rational};

/// A polynomial expressed as Σ_k coeffs[k]·P_k(z). Trailing zero
/// coefficients are trimmed; the zero polynomial is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendreSeries {
    coeffs: Vec<Rational>,
}

impl LegendreSeries {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        LegendreSeries { coeffs }
    }

    pub fn zero() -> Self {
        LegendreSeries { coeffs: Vec::new() }
    }

    /// The single-term series c·P_k.
    pub fn basis_term(k: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        LegendreSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of P_k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The series representing s(−z): coeffs[k] ↦ (−1)^k coeffs[k].
    pub fn parity_flip(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .collect();
        // sign flips never create trailing zeros
        LegendreSeries { coeffs }
    }

    /// Applies [d/dz (1−z²) d/dz + n(n+1)], which is diagonal in this
    /// basis: coeffs[k] ↦ (n−k)(n+k+1)·coeffs[k]. The k = n component is
    /// annihilated.
    pub fn legendre_operator(&self, n: u32) -> Self {
        let n = n as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let k = k as i64;
                c * rat_int((n - k) * (n + k + 1))
            })
            .collect();
        Self::new(coeffs)
    }

    /// Σ_k coeffs[k]·P_k(z) at a complex point.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let coeffs = self.f64_coeffs();
        let mut sum = Complex64::new(0.0, 0.0);
        let mut p_prev = Complex64::new(1.0, 0.0);
        let mut p_curr = z;
        for (k, c) in coeffs.iter().enumerate() {
            let p_k = match k {
                0 => p_prev,
                1 => p_curr,
                _ => {
                    let k = (k - 1) as f64;
                    let p_next = ((2.0 * k + 1.0) * z * p_curr - k * p_prev) / (k + 1.0);
                    p_prev = p_curr;
                    p_curr = p_next;
                    p_curr
                }
            };
            sum += c * p_k;
        }
        sum
    }

    /// Σ_k coeffs[k]·P_k(x) at a real point.
    pub fn eval_real(&self, x: f64) -> f64 {
        let coeffs = self.f64_coeffs();
        let mut sum = 0.0;
        let mut p_prev = 1.0;
        let mut p_curr = x;
        for (k, c) in coeffs.iter().enumerate() {
            let p_k = match k {
                0 => p_prev,
                1 => p_curr,
                _ => {
                    let k = (k - 1) as f64;
                    let p_next = ((2.0 * k + 1.0) * x * p_curr - k * p_prev) / (k + 1.0);
                    p_prev = p_curr;
                    p_curr = p_next;
                    p_curr
                }
            };
            sum += c * p_k;
        }
        sum
    }

    /// Exact value at z = 1, where P_k(1) = 1 for every k.
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// Exact value at z = −1, where P_k(−1) = (−1)^k.
    pub fn eval_at_minus_one(&self) -> Rational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Exact monomial coefficients, ascending powers of z.
    pub fn to_monomial(&self) -> Vec<Rational> {
        if self.coeffs.is_empty() {
            return Vec::new();
        }
        let n = self.coeffs.len() - 1;
        let mut out = vec![Rational::zero(); n + 1];
        // monomial vectors of P_{k-1} and P_k, built by the recurrence
        let mut p_prev = vec![rat_int(1)];
        let mut p_curr = vec![rat_int(0), rat_int(1)];
        for (k, c) in self.coeffs.iter().enumerate() {
            let p_k: &[Rational] = match k {
                0 => &p_prev,
                1 => &p_curr,
                _ => {
                    let km1 = (k - 1) as i64;
                    let mut next = vec![Rational::zero(); k + 1];
                    for (j, a) in p_curr.iter().enumerate() {
                        next[j + 1] += a * rat_int(2 * km1 + 1);
                    }
                    for (j, a) in p_prev.iter().enumerate() {
                        next[j] -= a * rat_int(km1);
                    }
                    let inv = Rational::new(BigInt::from(1), BigInt::from(km1 + 1));
                    for a in next.iter_mut() {
                        *a *= &inv;
                    }
                    p_prev = std::mem::replace(&mut p_curr, next);
                    &p_curr
                }
            };
            if !c.is_zero() {
                for (j, a) in p_k.iter().enumerate() {
                    out[j] += c * a;
                }
            }
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Coefficients rounded once each to `f64`.
    pub fn f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }
}

/// Legendre-basis expansion of (z−1)·dP_n/dz, which equals
/// n·P_n + Σ_{k<n} (−1)^{n+k} (2k+1) P_k.
pub fn zminus1_dz(n: u32) -> LegendreSeries {
    if n == 0 {
        return LegendreSeries::zero();
    }
    let n = n as usize;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..n {
        let sign = if (n + k) % 2 == 0 { 1 } else { -1 };
        coeffs.push(rat_int(sign * (2 * k as i64 + 1)));
    }
    coeffs.push(rat_int(n as i64));
    LegendreSeries::new(coeffs)
}

/// Legendre-basis expansion of (z+1)·dP_n/dz = n·P_n + Σ_{k<n} (2k+1) P_k.
pub fn zplus1_dz(n: u32) -> LegendreSeries {
    if n == 0 {
        return LegendreSeries::zero();
    }
    let n = n as usize;
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..n {
        coeffs.push(rat_int(2 * k as i64 + 1));
    }
    coeffs.push(rat_int(n as i64));
    LegendreSeries::new(coeffs)
}

/// Exact expansion of (z−1)·ds/dz for an arbitrary series, by linearity
/// over the per-degree expansions.
pub fn zminus1_dz_series(s: &LegendreSeries) -> LegendreSeries {
    let mut out = LegendreSeries::zero();
    for (k, c) in s.coeffs().iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&zminus1_dz(k as u32).scale(c));
        }
    }
    out
}

/// P_n(z) at a complex point by upward recurrence.
pub fn legendre_p_complex(n: u32, z: Complex64) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut p_prev = Complex64::new(1.0, 0.0);
    let mut p_curr = z;
    for k in 1..n as u64 {
        let k = k as f64;
        let p_next = ((2.0 * k + 1.0) * z * p_curr - k * p_prev) / (k + 1.0);
        p_prev = p_curr;
        p_curr = p_next;
    }
    p_curr
}

/// P_n(x) at a real point by upward recurrence.
pub fn legendre_p_real(n: u32, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut p_prev = 1.0;
    let mut p_curr = x;
    for k in 1..n as u64 {
        let k = k as f64;
        let p_next = ((2.0 * k + 1.0) * x * p_curr - k * p_prev) / (k + 1.0);
        p_prev = p_curr;
        p_curr = p_next;
    }
    p_curr
}
