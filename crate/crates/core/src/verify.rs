//! Ready-made verification suites over the exact identities and the
//! numerical oracles, reported as structured pass/fail cases. The CLI
//! `verify` subcommand is a thin wrapper over [`run_suite`].

use std::fmt;

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::basis::{legendre_p_complex, LegendreSeries, zminus1_dz, zminus1_dz_series, zplus1_dz};
use crate::derivs::{d2p_dnu2, dq_dnu_offcut, dq_dnu_oncut, EvalPoint};
use crate::exact::{rat, rat_int, rational_to_f64, Rational};
use crate::oracle::{
    brute_s2, brute_s3, brute_s4, closed_s1, closed_s2, closed_s3, closed_s4, fd1_q, fd2_nu,
    FDConfig,
};
use crate::polys::{b_poly, c_coeff, c_nn_coeff, c_poly, c_poly_difference_form, r_poly};
use crate::specfun::{digamma_int, log_shift_plus, trigamma_int, EULER_GAMMA, PI_SQUARED};
use num_traits::Zero;

/// The suites the CLI can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Exact low-degree coefficient tables.
    LowN,
    /// Brute-force vs closed-form summation identities.
    Sums,
    /// Differential-operator identities and endpoint constraints.
    Ode,
    /// Difference-relation residuals of the second derivative.
    Recurrence,
    /// Finite-difference oracles vs the closed forms.
    Oracle,
    /// Everything above.
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lown" => Ok(Suite::LowN),
            "sums" => Ok(Suite::Sums),
            "ode" => Ok(Suite::Ode),
            "recurrence" => Ok(Suite::Recurrence),
            "oracle" => Ok(Suite::Oracle),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}' (expected lown|sums|ode|recurrence|oracle|all)"
            )),
        }
    }
}

/// Residual of a verified identity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Residual {
    /// The identity held exactly in rational arithmetic.
    Exact,
    /// Floating-point residual magnitude.
    Abs(f64),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Exact => write!(f, "exact"),
            Residual::Abs(r) => write!(f, "{r:.3e}"),
        }
    }
}

/// One verified identity instance.
#[derive(Debug, Clone)]
pub struct VerificationCase {
    pub identity: String,
    pub subject: String,
    pub passed: bool,
    pub residual: Residual,
}

/// Structured pass/fail record for a suite run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<VerificationCase>,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            cases: Vec::new(),
        }
    }

    fn record(&mut self, identity: &str, subject: String, passed: bool, residual: Residual) {
        self.cases.push(VerificationCase {
            identity: identity.to_string(),
            subject,
            passed,
            residual,
        });
    }

    fn record_exact(&mut self, identity: &str, subject: String, passed: bool) {
        let residual = if passed { Residual::Exact } else { Residual::Abs(f64::NAN) };
        self.record(identity, subject, passed, residual);
    }

    pub fn all_passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    /// (passed, failed) counts; they always sum to the case total.
    pub fn counts(&self) -> (usize, usize) {
        let passed = self.cases.iter().filter(|c| c.passed).count();
        (passed, self.cases.len() - passed)
    }

    fn merge(&mut self, other: VerificationReport) {
        self.cases.extend(other.cases);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            writeln!(
                f,
                "{} {:<34} {:<14} residual={}",
                if c.passed { "pass" } else { "FAIL" },
                c.identity,
                c.subject,
                c.residual
            )?;
        }
        let (passed, failed) = self.counts();
        write!(
            f,
            "suite {}: {} passed, {} failed, {} cases",
            self.suite,
            passed,
            failed,
            self.cases.len()
        )
    }
}

fn mono(vals: &[(i64, i64)]) -> Vec<Rational> {
    vals.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Exact low-degree tables: the monomial forms of R, B, C for n ≤ 3 and
/// the building blocks of the explicit first-kind/second-kind derivative
/// formulas at those degrees.
pub fn suite_lown() -> VerificationReport {
    let mut rep = VerificationReport::new("lown");

    let b_tables: [Vec<Rational>; 4] = [
        mono(&[]),
        mono(&[(2, 1), (2, 1)]),
        mono(&[(-1, 2), (3, 1), (7, 2)]),
        mono(&[(-4, 3), (-5, 2), (5, 1), (37, 6)]),
    ];
    let c_tables: [Vec<Rational>; 4] = [
        mono(&[]),
        mono(&[(2, 1), (-2, 1)]),
        mono(&[(1, 4), (5, 2), (-11, 4)]),
        mono(&[(-10, 9), (19, 12), (23, 6), (-155, 36)]),
    ];
    let r_tables: [Vec<Rational>; 2] = [mono(&[]), mono(&[(-1, 1), (1, 1)])];

    for (n, table) in b_tables.iter().enumerate() {
        let ok = b_poly(n as u32).to_monomial() == *table;
        rep.record_exact("B_n monomial form", format!("n={n}"), ok);
    }
    for (n, table) in c_tables.iter().enumerate() {
        let ok = c_poly(n as u32).to_monomial() == *table;
        rep.record_exact("C_n monomial form", format!("n={n}"), ok);
    }
    for (n, table) in r_tables.iter().enumerate() {
        let ok = r_poly(n as u32).to_monomial() == *table;
        rep.record_exact("R_n monomial form", format!("n={n}"), ok);
    }

    // building blocks of the explicit dQ/dnu forms at n <= 3, ascending
    // monomial coefficients
    let lnp_tables: [Vec<Rational>; 4] = [
        mono(&[]),
        mono(&[(1, 2), (1, 2)]),
        mono(&[(-1, 8), (3, 4), (7, 8)]),
        mono(&[(-1, 3), (-5, 8), (5, 4), (37, 24)]),
    ];
    let lnm_tables: [Vec<Rational>; 4] = [
        mono(&[]),
        mono(&[(1, 2), (-1, 2)]),
        mono(&[(1, 8), (3, 4), (-7, 8)]),
        mono(&[(-1, 3), (5, 8), (5, 4), (-37, 24)]),
    ];
    let rational_tables: [Vec<Rational>; 4] = [
        mono(&[]),
        mono(&[(1, 1)]),
        mono(&[(0, 1), (5, 4)]),
        mono(&[(-5, 9), (0, 1), (23, 12)]),
    ];
    let pi2_tables: [Vec<Rational>; 4] = [
        mono(&[(-1, 6)]),
        mono(&[(0, 1), (-1, 6)]),
        mono(&[(1, 12), (0, 1), (-1, 4)]),
        mono(&[(0, 1), (1, 4), (0, 1), (-5, 12)]),
    ];

    for n in 0..=3u32 {
        let b = b_poly(n);
        let c = c_poly(n);
        let quarter = rat(1, 4);
        let signed_quarter = if n % 2 == 0 { rat(1, 4) } else { rat(-1, 4) };

        let lnp = b.scale(&quarter).to_monomial();
        rep.record_exact(
            "dQ ln((z+1)/2) coefficient",
            format!("n={n}"),
            lnp == lnp_tables[n as usize],
        );

        let lnm = b.parity_flip().scale(&(-signed_quarter.clone())).to_monomial();
        rep.record_exact(
            "dQ ln((z-1)/2) coefficient",
            format!("n={n}"),
            lnm == lnm_tables[n as usize],
        );

        let rational_part = c
            .scale(&quarter)
            .sub(&c.parity_flip().scale(&signed_quarter))
            .to_monomial();
        rep.record_exact(
            "dQ rational polynomial part",
            format!("n={n}"),
            rational_part == rational_tables[n as usize],
        );

        let pi2_part = LegendreSeries::basis_term(n as usize, rat(-1, 6)).to_monomial();
        rep.record_exact(
            "dQ pi^2 multiplier",
            format!("n={n}"),
            pi2_part == pi2_tables[n as usize],
        );
    }

    rep
}

/// Brute-force sums vs rationalized closed forms, plus float agreement
/// with the transcendental forms.
pub fn suite_sums(n_max: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("sums");
    let n_max = n_max.max(1);

    for n in 1..=n_max {
        // accumulate the brute sum from the top index downward so that
        // every partial sum is exactly the direct summation from m
        let ni = n as i64;
        let mut brute = Rational::zero();
        let mut ok = true;
        for m in (0..ni).rev() {
            let sign = if (ni + m) % 2 == 0 { 1 } else { -1 };
            brute += rat(sign * (2 * m + 1), (ni - m) * (ni + m + 1));
            if brute != closed_s1(n, m as u32).unwrap() {
                ok = false;
            }
        }
        rep.record_exact("S1 brute = closed", format!("n={n}, all m"), ok);
    }

    for n in 1..=n_max {
        rep.record_exact(
            "S2 brute = closed",
            format!("n={n}"),
            brute_s2(n).unwrap() == closed_s2(n).unwrap(),
        );
        rep.record_exact(
            "S3 brute = closed",
            format!("n={n}"),
            brute_s3(n).unwrap() == closed_s3(n).unwrap(),
        );
        rep.record_exact(
            "S4 brute = closed",
            format!("n={n}"),
            brute_s4(n).unwrap() == closed_s4(n).unwrap(),
        );

        let two_n1 = 2.0 * n as f64 + 1.0;
        let psi_d = digamma_int(2 * n + 1) - digamma_int(n + 1);
        let s2_float = PI_SQUARED / 12.0 - EULER_GAMMA / two_n1 + 0.5 * psi_d * psi_d
            - digamma_int(2 * n + 1) / two_n1
            - 0.5 * trigamma_int(2 * n + 1);
        let s3_float = PI_SQUARED / 6.0 - 2.0 * EULER_GAMMA / two_n1
            - 2.0 * digamma_int(2 * n + 1) / two_n1
            - trigamma_int(2 * n + 1);
        let s4_float = -PI_SQUARED / 12.0 + trigamma_int(2 * n + 1) - 0.5 * trigamma_int(n + 1);
        for (label, closed, float) in [
            ("S2 float form", closed_s2(n).unwrap(), s2_float),
            ("S3 float form", closed_s3(n).unwrap(), s3_float),
            ("S4 float form", closed_s4(n).unwrap(), s4_float),
        ] {
            let resid = (rational_to_f64(&closed) - float).abs();
            rep.record(label, format!("n={n}"), resid <= 1e-12, Residual::Abs(resid));
        }
    }

    rep
}

/// Differential-operator identities, the parity cross-relation, the two
/// C_n constructions, and the endpoint constraints, all exact.
pub fn suite_ode(n_max: u32) -> VerificationReport {
    let mut rep = VerificationReport::new("ode");

    for n in 0..=n_max {
        let r = r_poly(n);
        let b = b_poly(n);
        let c = c_poly(n);
        let p_n = LegendreSeries::basis_term(n as usize, rat_int(1));

        let lhs = r.legendre_operator(n);
        let rhs = zminus1_dz(n)
            .sub(&p_n.scale(&rat_int(n as i64)))
            .scale(&rat_int(2));
        rep.record_exact("R ODE identity", format!("n={n}"), lhs == rhs);

        let lhs = b.legendre_operator(n);
        let rhs = zplus1_dz(n)
            .sub(&p_n.scale(&rat_int(n as i64)))
            .scale(&rat_int(4));
        rep.record_exact("B ODE identity", format!("n={n}"), lhs == rhs);

        let lhs = c.legendre_operator(n);
        let rhs = zminus1_dz_series(&b)
            .scale(&rat_int(2))
            .add(&b)
            .sub(&r.scale(&rat_int(2 * (2 * n as i64 + 1))));
        rep.record_exact("C ODE identity", format!("n={n}"), lhs == rhs);

        let mut from_r = r.parity_flip().scale(&rat_int(2));
        if n % 2 == 1 {
            from_r = from_r.scale(&rat_int(-1));
        }
        rep.record_exact("B from R parity relation", format!("n={n}"), b == from_r);

        rep.record_exact(
            "C forms agree",
            format!("n={n}"),
            c == c_poly_difference_form(n),
        );

        let mut sum = Rational::zero();
        for k in 0..n {
            sum += c_coeff(n, k).unwrap();
        }
        rep.record_exact("c_nn dual route", format!("n={n}"), c_nn_coeff(n) == -sum);

        rep.record_exact("R(1) = 0", format!("n={n}"), r.eval_at_one().is_zero());
        rep.record_exact(
            "B(-1) = 0",
            format!("n={n}"),
            b.eval_at_minus_one().is_zero(),
        );
        rep.record_exact("C(1) = 0", format!("n={n}"), c.eval_at_one().is_zero());

        // parity of the polynomial part of the Q derivative: the
        // combination ¼C_n(z) − ((−1)^n/4)C_n(−z) has parity opposite to
        // P_n, exactly at the series level
        let signed_quarter = if n % 2 == 0 { rat(1, 4) } else { rat(-1, 4) };
        let comb = c.scale(&rat(1, 4)).sub(&c.parity_flip().scale(&signed_quarter));
        let opposite = if n % 2 == 0 { rat_int(-1) } else { rat_int(1) };
        rep.record_exact(
            "dQ polynomial part parity",
            format!("n={n}"),
            comb.parity_flip() == comb.scale(&opposite),
        );
    }

    rep
}

/// Points off (−∞, −1] for the difference-relation sweep: a mix of
/// complex points and real points inside and beyond the interval.
fn recurrence_points(seed: u64, count: usize) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        match points.len() % 4 {
            0 | 1 => {
                let re = rng.gen_range(-0.85..2.5);
                let im = rng.gen_range(0.05..1.5);
                let im = if rng.gen::<bool>() { im } else { -im };
                points.push(Complex64::new(re, im));
            }
            2 => points.push(Complex64::new(rng.gen_range(-0.85..0.95), 0.0)),
            _ => points.push(Complex64::new(rng.gen_range(1.05..2.5), 0.0)),
        }
    }
    points
}

/// Residuals of the second-order difference relation satisfied by the
/// second derivative, relative to max(1, |D_n|).
pub fn suite_recurrence(n_max: u32, tol: f64, seed: u64) -> VerificationReport {
    let mut rep = VerificationReport::new("recurrence");
    let points = recurrence_points(seed, 50);

    for (idx, &z) in points.iter().enumerate() {
        let point = EvalPoint::classify(z).expect("generated points are classifiable");
        let lp = if z.im == 0.0 {
            Complex64::new((0.5 * (z.re + 1.0)).ln(), 0.0)
        } else {
            log_shift_plus(z).unwrap()
        };
        let d: Vec<Complex64> = (0..=n_max + 1)
            .map(|m| d2p_dnu2(m, &point).unwrap().value)
            .collect();
        let mut worst = 0f64;
        for n in 1..=n_max as usize {
            let nf = n as f64;
            let p = |m: usize| legendre_p_complex(m as u32, z);
            let r = |m: usize| r_poly(m as u32).eval_complex(z);
            let lhs = (nf + 1.0) * d[n + 1] - (2.0 * nf + 1.0) * z * d[n] + nf * d[n - 1];
            let rhs = -2.0 * (p(n + 1) - 2.0 * z * p(n) + p(n - 1)) * lp
                - 2.0 * (r(n + 1) - 2.0 * z * r(n) + r(n - 1));
            let resid = (lhs - rhs).norm() / d[n].norm().max(1.0);
            worst = worst.max(resid);
        }
        rep.record(
            "second-derivative difference relation",
            format!("z#{idx}"),
            worst <= tol,
            Residual::Abs(worst),
        );
    }

    rep
}

/// Polynomial extrapolation to zero offset through values taken at the
/// given offsets. The boundary averages approach their limit with both
/// odd and even powers of the offset present, so the variable is the
/// offset itself.
fn extrapolate_to_zero(eps: &[f64], vals: &[f64]) -> f64 {
    let mut t: Vec<f64> = vals.to_vec();
    for j in 1..t.len() {
        for i in (j..t.len()).rev() {
            t[i] = (eps[i - j] * t[i] - eps[i] * t[i - 1]) / (eps[i - j] - eps[i]);
        }
    }
    t[t.len() - 1]
}

/// Finite-difference oracle agreement and on-cut boundary-value
/// consistency of the Q derivative.
pub fn suite_oracle(n_max: u32, tol: f64) -> VerificationReport {
    let mut rep = VerificationReport::new("oracle");
    let cfg = FDConfig {
        tolerance: tol,
        ..FDConfig::default()
    };

    let p_grid = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.6, 0.0),
        Complex64::new(-0.6, 0.0),
        Complex64::new(0.3, 0.8),
        Complex64::new(0.3, -0.8),
        Complex64::new(-0.2, 0.7),
        Complex64::new(1.4, 0.5),
    ];
    for &z in &p_grid {
        let point = EvalPoint::classify(z).expect("grid points are classifiable");
        for n in 0..=n_max {
            let fd = fd2_nu(n, z, &cfg).unwrap();
            let closed = d2p_dnu2(n, &point).unwrap().value;
            let resid = (fd - closed).norm() / closed.norm().max(1.0);
            rep.record(
                "fd2 vs d2P/dnu2",
                format!("n={n}, z={z}"),
                resid <= cfg.tolerance,
                Residual::Abs(resid),
            );
        }
    }

    // Q-side grid: off-axis points with both +-z inside the series disk
    let q_grid = [
        Complex64::new(0.3, 0.8),
        Complex64::new(0.3, -0.8),
        Complex64::new(-0.2, 0.7),
    ];
    for &z in &q_grid {
        for n in 0..=n_max {
            let fd = fd1_q(n, z, &cfg).unwrap();
            let closed = dq_dnu_offcut(n, z).unwrap().value;
            let resid = (fd - closed).norm() / closed.norm().max(1.0);
            rep.record(
                "fd1 vs dQ/dnu",
                format!("n={n}, z={z}"),
                resid <= cfg.tolerance,
                Residual::Abs(resid),
            );
        }
    }

    // on-cut values as extrapolated averages of the off-cut limits
    let eps = [1e-3, 1e-4, 1e-5];
    for &x in &[-0.9, -0.5, 0.0, 0.5, 0.9] {
        for n in 0..=n_max.min(6) {
            let vals: Vec<f64> = eps
                .iter()
                .map(|&e| {
                    let up = dq_dnu_offcut(n, Complex64::new(x, e)).unwrap().value;
                    let dn = dq_dnu_offcut(n, Complex64::new(x, -e)).unwrap().value;
                    0.5 * (up + dn).re
                })
                .collect();
            let limit = extrapolate_to_zero(&eps, &vals);
            let oncut = dq_dnu_oncut(n, x).unwrap().value.re;
            let resid = (limit - oncut).abs();
            rep.record(
                "on-cut boundary average",
                format!("n={n}, x={x}"),
                resid <= 1e-6,
                Residual::Abs(resid),
            );
        }
    }

    rep
}

/// Runs one suite (or all of them merged) with shared parameters.
pub fn run_suite(suite: Suite, n_max: u32, tol: f64, seed: u64) -> VerificationReport {
    match suite {
        Suite::LowN => suite_lown(),
        Suite::Sums => suite_sums(n_max),
        Suite::Ode => suite_ode(n_max),
        Suite::Recurrence => suite_recurrence(n_max.min(20), tol.max(1e-11), seed),
        Suite::Oracle => suite_oracle(n_max.min(6), tol),
        Suite::All => {
            let mut rep = VerificationReport::new("all");
            rep.merge(suite_lown());
            rep.merge(suite_sums(n_max));
            rep.merge(suite_ode(n_max));
            rep.merge(suite_recurrence(n_max.min(20), 1e-11, seed));
            rep.merge(suite_oracle(n_max.min(6), 1e-5));
            rep
        }
    }
}
