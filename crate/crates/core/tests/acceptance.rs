//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines for passing criteria too.

use std::time::Instant;

use lnd::basis::{zminus1_dz, zminus1_dz_series, zplus1_dz, LegendreSeries};
use lnd::derivs::{d2p_dnu2, dq_dnu_offcut, dq_dnu_oncut, EvalPoint};
use lnd::exact::{rat, rat_int, rational_to_f64, Rational};
use lnd::oracle::{
    brute_s2, brute_s3, brute_s4, closed_s1, closed_s2, closed_s3, closed_s4, fd1_q, fd2_nu,
    FDConfig,
};
use lnd::polys::{b_poly, c_coeff, c_nn_coeff, c_poly, r_poly};
use lnd::specfun::{
    digamma_int, dilog, log_shift_plus, trigamma_int, EULER_GAMMA, PI_SQUARED, ZETA_2,
};
use lnd::Complex64;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mono(vals: &[(i64, i64)]) -> Vec<Rational> {
    vals.iter().map(|&(n, d)| rat(n, d)).collect()
}

fn report(id: u32, title: &str) {
    println!("acceptance {id} ({title}): PASS");
}

#[test]
fn acceptance_1_low_n_exactness_p_side() {
    let start = Instant::now();
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
    for n in 0..=3u32 {
        assert_eq!(
            b_poly(n).to_monomial(),
            b_tables[n as usize],
            "B_{n} monomial form"
        );
        assert_eq!(
            c_poly(n).to_monomial(),
            c_tables[n as usize],
            "C_{n} monomial form"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    report(1, "low-n exactness, first-kind side");
}

/// Direct evaluation of the explicit degree-0..3 forms of dQ/dnu, from
/// hard-coded monomial tables (independent of the polynomial generator).
fn dq_explicit(n: u32, z: Complex64) -> Complex64 {
    type Tab = &'static [(i64, i64)];
    // ascending monomial coefficients of the six building blocks:
    // dilog factor, log-product factor, ln((z+1)/2) factor,
    // ln((z-1)/2) factor, pi^2 multiplier, rational polynomial part
    const TABLES: [[Tab; 6]; 4] = [
        [
            &[(-1, 1)],
            &[(-1, 2)],
            &[],
            &[],
            &[(-1, 6)],
            &[],
        ],
        [
            &[(0, 1), (-1, 1)],
            &[(0, 1), (-1, 2)],
            &[(1, 2), (1, 2)],
            &[(1, 2), (-1, 2)],
            &[(0, 1), (-1, 6)],
            &[(1, 1)],
        ],
        [
            &[(1, 2), (0, 1), (-3, 2)],
            &[(1, 4), (0, 1), (-3, 4)],
            &[(-1, 8), (3, 4), (7, 8)],
            &[(1, 8), (3, 4), (-7, 8)],
            &[(1, 12), (0, 1), (-1, 4)],
            &[(0, 1), (5, 4)],
        ],
        [
            &[(0, 1), (3, 2), (0, 1), (-5, 2)],
            &[(0, 1), (3, 4), (0, 1), (-5, 4)],
            &[(-1, 3), (-5, 8), (5, 4), (37, 24)],
            &[(-1, 3), (5, 8), (5, 4), (-37, 24)],
            &[(0, 1), (1, 4), (0, 1), (-5, 12)],
            &[(-5, 9), (0, 1), (23, 12)],
        ],
    ];
    let horner = |tab: Tab| -> Complex64 {
        tab.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &(p, q)| {
            acc * z + Complex64::new(p as f64 / q as f64, 0.0)
        })
    };
    let one = Complex64::new(1.0, 0.0);
    let li = dilog(0.5 * (one - z)).unwrap();
    let lp = (0.5 * (z + one)).ln();
    let lm = (0.5 * (z - one)).ln();
    let t = &TABLES[n as usize];
    horner(t[0]) * li
        + horner(t[1]) * lp * lm
        + horner(t[2]) * lp
        + horner(t[3]) * lm
        + PI_SQUARED * horner(t[4])
        + horner(t[5])
}

#[test]
fn acceptance_2_low_n_exactness_q_side() {
    let start = Instant::now();
    // Sample box with Re z > 1 or |Im z| > 0.1 at moderate |z|: the value
    // decays like |z|^{-n-1} while the closed form's terms grow like
    // |z|^n, so the intrinsic f64 cancellation ratio |z|^{2n+1} must stay
    // well below 1e4 for a 1e-12 relative comparison to be meaningful.
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut points = Vec::with_capacity(100);
    for i in 0..100 {
        if i % 2 == 0 {
            points.push(Complex64::new(
                rng.gen_range(1.05..1.7),
                rng.gen_range(-0.5..0.5),
            ));
        } else {
            let im = rng.gen_range(0.1..0.9);
            let im = if rng.gen::<bool>() { im } else { -im };
            points.push(Complex64::new(rng.gen_range(-1.1..1.5), im));
        }
    }
    let mut worst = 0f64;
    for &z in &points {
        for n in 0..=3u32 {
            let closed = dq_dnu_offcut(n, z).unwrap().value;
            let direct = dq_explicit(n, z);
            let rel = (closed - direct).norm() / direct.norm();
            worst = worst.max(rel);
            assert!(
                rel <= 1e-12,
                "n={n}, z={z}: closed {closed} vs explicit {direct}, rel {rel:.2e}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!("  worst relative deviation: {worst:.2e}");
    report(2, "low-n exactness, second-kind side");
}

#[test]
fn acceptance_3_appendix_sum_equivalence() {
    let start = Instant::now();
    // S1 for all 0 <= m < n <= 200, accumulating the brute sum downward
    for n in 1..=200u32 {
        let ni = n as i64;
        let mut brute = Rational::zero();
        for m in (0..ni).rev() {
            let sign = if (ni + m) % 2 == 0 { 1 } else { -1 };
            brute += rat(sign * (2 * m + 1), (ni - m) * (ni + m + 1));
            assert_eq!(
                brute,
                closed_s1(n, m as u32).unwrap(),
                "S1 mismatch at n={n}, m={m}"
            );
        }
    }
    // S2-S4 exact equivalence and float agreement for 1 <= n <= 200
    for n in 1..=200u32 {
        let s2 = closed_s2(n).unwrap();
        let s3 = closed_s3(n).unwrap();
        let s4 = closed_s4(n).unwrap();
        assert_eq!(brute_s2(n).unwrap(), s2, "S2 mismatch at n={n}");
        assert_eq!(brute_s3(n).unwrap(), s3, "S3 mismatch at n={n}");
        assert_eq!(brute_s4(n).unwrap(), s4, "S4 mismatch at n={n}");

        let two_n1 = 2.0 * n as f64 + 1.0;
        let psi_d = digamma_int(2 * n + 1) - digamma_int(n + 1);
        let s2_float = PI_SQUARED / 12.0 - EULER_GAMMA / two_n1 + 0.5 * psi_d * psi_d
            - digamma_int(2 * n + 1) / two_n1
            - 0.5 * trigamma_int(2 * n + 1);
        let s3_float = PI_SQUARED / 6.0 - 2.0 * EULER_GAMMA / two_n1
            - 2.0 * digamma_int(2 * n + 1) / two_n1
            - trigamma_int(2 * n + 1);
        let s4_float = -PI_SQUARED / 12.0 + trigamma_int(2 * n + 1) - 0.5 * trigamma_int(n + 1);
        assert!((rational_to_f64(&s2) - s2_float).abs() <= 1e-10, "S2 float n={n}");
        assert!((rational_to_f64(&s3) - s3_float).abs() <= 1e-10, "S3 float n={n}");
        assert!((rational_to_f64(&s4) - s4_float).abs() <= 1e-10, "S4 float n={n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "took {elapsed:?}, budget 30 s");
    report(3, "appendix sum equivalences");
}

#[test]
fn acceptance_4_ode_identities_and_constraints() {
    for n in 0..=100u32 {
        let r = r_poly(n);
        let b = b_poly(n);
        let c = c_poly(n);
        let p_n = LegendreSeries::basis_term(n as usize, rat_int(1));
        let n_term = p_n.scale(&rat_int(n as i64));

        let rhs = zminus1_dz(n).sub(&n_term).scale(&rat_int(2));
        assert_eq!(r.legendre_operator(n), rhs, "R operator identity at n={n}");

        let rhs = zplus1_dz(n).sub(&n_term).scale(&rat_int(4));
        assert_eq!(b.legendre_operator(n), rhs, "B operator identity at n={n}");

        let rhs = zminus1_dz_series(&b)
            .scale(&rat_int(2))
            .add(&b)
            .sub(&r.scale(&rat_int(2 * (2 * n as i64 + 1))));
        assert_eq!(c.legendre_operator(n), rhs, "C operator identity at n={n}");
    }
    for n in 0..=200u32 {
        assert!(r_poly(n).eval_at_one().is_zero(), "R_{n}(1) != 0");
        assert!(b_poly(n).eval_at_minus_one().is_zero(), "B_{n}(-1) != 0");
        assert!(c_poly(n).eval_at_one().is_zero(), "C_{n}(1) != 0");
    }
    report(4, "operator identities and endpoint constraints");
}

#[test]
fn acceptance_5_cross_relations() {
    for n in 0..=200u32 {
        let mut from_r = r_poly(n).parity_flip().scale(&rat_int(2));
        if n % 2 == 1 {
            from_r = from_r.scale(&rat_int(-1));
        }
        assert_eq!(b_poly(n), from_r, "parity relation at n={n}");

        let mut sum = Rational::zero();
        for k in 0..n {
            sum += c_coeff(n, k).unwrap();
        }
        assert_eq!(c_nn_coeff(n), -sum, "diagonal coefficient routes at n={n}");

        assert_eq!(
            c_poly(n),
            lnd::polys::c_poly_difference_form(n),
            "two C constructions at n={n}"
        );
    }
    report(5, "parity and diagonal-coefficient cross-relations");
}

#[test]
fn acceptance_6_finite_difference_oracles() {
    let start = Instant::now();
    let cfg = FDConfig::default();
    let p_grid = [
        Complex64::new(0.0, 0.0),
        Complex64::new(0.6, 0.0),
        Complex64::new(-0.6, 0.0),
        Complex64::new(0.3, 0.8),
        Complex64::new(0.3, -0.8),
        Complex64::new(-0.2, 0.7),
        Complex64::new(1.4, 0.5),
    ];
    let mut worst = 0f64;
    for &z in &p_grid {
        let point = EvalPoint::classify(z).unwrap();
        for n in 0..=6u32 {
            let fd = fd2_nu(n, z, &cfg).unwrap();
            let closed = d2p_dnu2(n, &point).unwrap().value;
            let rel = (fd - closed).norm() / closed.norm().max(1.0);
            worst = worst.max(rel);
            assert!(rel <= 1e-5, "fd2 at n={n}, z={z}: rel {rel:.2e}");
        }
    }
    // second-kind side: off-axis points with both +-z inside the disk
    let q_grid = [
        Complex64::new(0.3, 0.8),
        Complex64::new(0.3, -0.8),
        Complex64::new(-0.2, 0.7),
        Complex64::new(0.1, 0.9),
    ];
    for &z in &q_grid {
        for n in 0..=6u32 {
            let fd = fd1_q(n, z, &cfg).unwrap();
            let closed = dq_dnu_offcut(n, z).unwrap().value;
            let rel = (fd - closed).norm() / closed.norm().max(1.0);
            worst = worst.max(rel);
            assert!(rel <= 1e-5, "fd1_q at n={n}, z={z}: rel {rel:.2e}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
    println!("  worst oracle deviation: {worst:.2e}");
    report(6, "finite-difference oracle agreement");
}

#[test]
fn acceptance_7_recurrence_residual() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut points: Vec<Complex64> = Vec::with_capacity(50);
    while points.len() < 50 {
        match points.len() % 4 {
            0 | 1 => {
                let im = rng.gen_range(0.05..1.5);
                points.push(Complex64::new(
                    rng.gen_range(-0.85..2.5),
                    if rng.gen::<bool>() { im } else { -im },
                ));
            }
            2 => points.push(Complex64::new(rng.gen_range(-0.85..0.95), 0.0)),
            _ => points.push(Complex64::new(rng.gen_range(1.05..2.5), 0.0)),
        }
    }
    let mut worst = 0f64;
    for &z in &points {
        let point = EvalPoint::classify(z).unwrap();
        let lp = if z.im == 0.0 {
            Complex64::new((0.5 * (z.re + 1.0)).ln(), 0.0)
        } else {
            log_shift_plus(z).unwrap()
        };
        let d: Vec<Complex64> = (0..=21u32)
            .map(|m| d2p_dnu2(m, &point).unwrap().value)
            .collect();
        let p: Vec<Complex64> = (0..=21u32)
            .map(|m| lnd::basis::legendre_p_complex(m, z))
            .collect();
        let r: Vec<Complex64> = (0..=21u32).map(|m| r_poly(m).eval_complex(z)).collect();
        for n in 1..=20usize {
            let nf = n as f64;
            let lhs = (nf + 1.0) * d[n + 1] - (2.0 * nf + 1.0) * z * d[n] + nf * d[n - 1];
            let rhs = -2.0 * (p[n + 1] - 2.0 * z * p[n] + p[n - 1]) * lp
                - 2.0 * (r[n + 1] - 2.0 * z * r[n] + r[n - 1]);
            let rel = (lhs - rhs).norm() / d[n].norm().max(1.0);
            worst = worst.max(rel);
            assert!(rel <= 1e-11, "n={n}, z={z}: residual {rel:.2e}");
        }
    }
    println!("  worst recurrence residual: {worst:.2e}");
    report(7, "difference-relation residual");
}

#[test]
fn acceptance_8_on_cut_consistency() {
    let eps = [1e-3, 1e-4, 1e-5];
    let mut worst = 0f64;
    for &x in &[-0.9, -0.5, 0.0, 0.5, 0.9] {
        for n in 0..=6u32 {
            let vals: Vec<f64> = eps
                .iter()
                .map(|&e| {
                    let up = dq_dnu_offcut(n, Complex64::new(x, e)).unwrap().value;
                    let dn = dq_dnu_offcut(n, Complex64::new(x, -e)).unwrap().value;
                    0.5 * (up + dn).re
                })
                .collect();
            // polynomial extrapolation of the averages to zero offset
            let mut t = vals.clone();
            for j in 1..t.len() {
                for i in (j..t.len()).rev() {
                    t[i] = (eps[i - j] * t[i] - eps[i] * t[i - 1]) / (eps[i - j] - eps[i]);
                }
            }
            let limit = t[t.len() - 1];
            let oncut = dq_dnu_oncut(n, x).unwrap().value.re;
            let resid = (limit - oncut).abs();
            worst = worst.max(resid);
            assert!(resid <= 1e-6, "n={n}, x={x}: residual {resid:.2e}");
        }
    }
    println!("  worst boundary-average residual: {worst:.2e}");
    report(8, "on-cut boundary consistency");
}

#[test]
fn acceptance_9_dilogarithm_quality() {
    let at_minus_one = dilog(Complex64::new(-1.0, 0.0)).unwrap();
    assert!(
        (at_minus_one.re + PI_SQUARED / 12.0).abs() <= 1e-14,
        "value at -1: {at_minus_one}"
    );
    let at_one = dilog(Complex64::new(1.0, 0.0)).unwrap();
    assert!((at_one.re - ZETA_2).abs() <= 1e-14, "value at 1: {at_one}");

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0f64;
    for _ in 0..10_000 {
        let im = rng.gen_range(0.01..3.0);
        let w = Complex64::new(
            rng.gen_range(-3.0..3.0),
            if rng.gen::<bool>() { im } else { -im },
        );
        let one_minus = Complex64::new(1.0, 0.0) - w;
        let lhs = dilog(w).unwrap() + dilog(one_minus).unwrap();
        let rhs = Complex64::new(ZETA_2, 0.0) - w.ln() * one_minus.ln();
        let resid = (lhs - rhs).norm();
        worst = worst.max(resid);
        assert!(resid <= 1e-12, "w={w}: residual {resid:.2e}");
    }
    println!("  worst reflection residual: {worst:.2e}");
    report(9, "dilogarithm quality");
}
