//! Exact rational arithmetic and harmonic-number machinery.
//!
//! Every digamma/trigamma expression in the coefficient formulas is a
//! *difference* at positive integer arguments, so it reduces to harmonic
//! numbers: ψ(m+1) = −γ + H_m and ψ₁(m+1) = π²/6 − H_m⁽²⁾. Keeping those
//! differences as [`Rational`] values means coefficient generation never
//! touches floating point.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision signed rational, always in canonical form
/// (positive denominator, gcd(|numerator|, denominator) = 1).
pub type Rational = BigRational;

/// Shorthand for a rational from two machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts a rational to the nearest `f64`, handling numerators and
/// denominators far outside the `f64` range (harmonic numbers of large
/// index have denominators with hundreds of digits).
pub fn rational_to_f64(r: &Rational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    if nb <= 52 && db <= 52 {
        // both fit exactly in f64
        return num.to_f64().unwrap() / den.to_f64().unwrap();
    }
    // Scale the numerator so the integer quotient retains ~64 significant
    // bits, convert that, and undo the scaling with an exact power of two.
    let shift = db - nb + 64;
    let q = if shift >= 0 {
        (num << shift as usize) / den
    } else {
        num / (den << (-shift) as usize)
    };
    q.to_f64().unwrap() * 2f64.powi(-shift as i32)
}

/// Growable tables of H_N = Σ_{k≤N} 1/k and H_N⁽²⁾ = Σ_{k≤N} 1/k².
///
/// Concurrent reads are safe once a write completes; writes are serialized.
pub struct HarmonicCache {
    h1: RwLock<Vec<Rational>>,
    h2: RwLock<Vec<Rational>>,
}

impl HarmonicCache {
    pub fn new() -> Self {
        HarmonicCache {
            h1: RwLock::new(vec![Rational::zero()]),
            h2: RwLock::new(vec![Rational::zero()]),
        }
    }

    /// H_n, extending the table on demand.
    pub fn h1(&self, n: usize) -> Rational {
        {
            let table = self.h1.read().unwrap();
            if let Some(v) = table.get(n) {
                return v.clone();
            }
        }
        let mut table = self.h1.write().unwrap();
        while table.len() <= n {
            let k = table.len() as i64;
            let next = table.last().unwrap() + rat(1, k);
            table.push(next);
        }
        table[n].clone()
    }

    /// H_n⁽²⁾, extending the table on demand.
    pub fn h2(&self, n: usize) -> Rational {
        {
            let table = self.h2.read().unwrap();
            if let Some(v) = table.get(n) {
                return v.clone();
            }
        }
        let mut table = self.h2.write().unwrap();
        while table.len() <= n {
            let k = table.len() as i64;
            let next = table.last().unwrap() + rat(1, k * k);
            table.push(next);
        }
        table[n].clone()
    }
}

impl Default for HarmonicCache {
    fn default() -> Self {
        Self::new()
    }
}

static CACHE: LazyLock<HarmonicCache> = LazyLock::new(HarmonicCache::new);

/// H_N = Σ_{k=1}^N 1/k, with H_0 = 0.
pub fn harmonic(n: u32) -> Rational {
    CACHE.h1(n as usize)
}

/// H_N⁽²⁾ = Σ_{k=1}^N 1/k², with H_0⁽²⁾ = 0.
pub fn harmonic2(n: u32) -> Rational {
    CACHE.h2(n as usize)
}

/// ψ(a) − ψ(b) = H_{a−1} − H_{b−1} for positive integer arguments.
pub fn psi_diff(a: u32, b: u32) -> Rational {
    assert!(a >= 1 && b >= 1, "psi_diff requires positive arguments");
    harmonic(a - 1) - harmonic(b - 1)
}

/// Σ_{k=1}^N (−1)^k/k, in the rationalized form −H_N + H_{⌊N/2⌋}.
pub fn alt_harmonic(n: u32) -> Rational {
    -harmonic(n) + harmonic(n / 2)
}

/// True iff `r` is in canonical form (the representation invariant).
pub fn is_canonical(r: &Rational) -> bool {
    use num_integer::Integer;
    r.denom().is_positive() && r.numer().gcd(r.denom()) == BigInt::from(1)
        || (r.numer().is_zero() && *r.denom() == BigInt::from(1))
}
