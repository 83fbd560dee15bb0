//! The complex dilogarithm with its principal cut along [1, ∞): special
//! values, reflection identity, and explicit side directives on the cut.
//!
//! Run with: cargo run --example dilogarithm

use lnd::specfun::{dilog, dilog_side, Side, ZETA_2};
use lnd::Complex64;

fn main() {
    let c = Complex64::new;

    println!("Li2(0)    = {}", dilog(c(0.0, 0.0)).unwrap());
    println!("Li2(1)    = {} (= pi^2/6 = {ZETA_2})", dilog(c(1.0, 0.0)).unwrap().re);
    println!("Li2(-1)   = {} (= -pi^2/12)", dilog(c(-1.0, 0.0)).unwrap().re);
    println!("Li2(1/2)  = {}", dilog(c(0.5, 0.0)).unwrap().re);
    println!("Li2(2+i)  = {}", dilog(c(2.0, 1.0)).unwrap());

    // reflection identity: Li2(w) + Li2(1-w) = pi^2/6 - ln(w) ln(1-w)
    let w = c(0.3, 0.7);
    let lhs = dilog(w).unwrap() + dilog(c(1.0, 0.0) - w).unwrap();
    let rhs = Complex64::new(ZETA_2, 0.0) - w.ln() * (c(1.0, 0.0) - w).ln();
    println!("reflection residual at w={w}: {:.3e}", (lhs - rhs).norm());

    // real arguments beyond 1 sit on the cut and need a side directive
    match dilog(c(2.0, 0.0)) {
        Err(e) => println!("Li2(2) without a side: error as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    let above = dilog_side(c(2.0, 0.0), Side::Above);
    let below = dilog_side(c(2.0, 0.0), Side::Below);
    println!("Li2(2 + i0) = {above}");
    println!("Li2(2 - i0) = {below}");
}
