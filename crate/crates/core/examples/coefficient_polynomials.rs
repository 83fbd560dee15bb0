//! Generate the coefficient polynomials R_n, B_n, C_n exactly and print
//! them in both the Legendre basis and the monomial basis.
//!
//! Run with: cargo run --example coefficient_polynomials

use lnd::exact::Rational;
use lnd::polys::coeff_triple;

fn fmt_coeffs(coeffs: &[Rational]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn fmt_monomial(coeffs: &[Rational]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (p, c) in coeffs.iter().enumerate().rev() {
        if c == &Rational::from_integer(0.into()) {
            continue;
        }
        let var = match p {
            0 => String::new(),
            1 => " z".to_string(),
            _ => format!(" z^{p}"),
        };
        terms.push(format!("({c}){var}"));
    }
    terms.join(" + ")
}

fn main() {
    for n in 0..=4u32 {
        let triple = coeff_triple(n).expect("generation is self-consistent");
        println!("degree n = {n}");
        println!("  R_{n} legendre basis: [{}]", fmt_coeffs(triple.r.coeffs()));
        println!("  R_{n} monomial:       {}", fmt_monomial(&triple.r.to_monomial()));
        println!("  B_{n} legendre basis: [{}]", fmt_coeffs(triple.b.coeffs()));
        println!("  B_{n} monomial:       {}", fmt_monomial(&triple.b.to_monomial()));
        println!("  C_{n} legendre basis: [{}]", fmt_coeffs(triple.c.coeffs()));
        println!("  C_{n} monomial:       {}", fmt_monomial(&triple.c.to_monomial()));
        println!();
    }

    // the constraints that pin the polynomials down
    let t = coeff_triple(6).unwrap();
    println!("constraint check at n = 6:");
    println!("  R_6(1)  = {}", t.r.eval_at_one());
    println!("  B_6(-1) = {}", t.b.eval_at_minus_one());
    println!("  C_6(1)  = {}", t.c.eval_at_one());
}
