//! Evaluate ∂Q_ν/∂ν at integer degrees, both off the cut (complex z) and
//! on the open interval (−1, 1), where the derivative is defined through
//! the average of the boundary values and the computation is purely real.
//!
//! Run with: cargo run --example q_derivative

use lnd::derivs::{dq_dnu_offcut, dq_dnu_oncut};
use lnd::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // off the cut: complex z or real z > 1
    for n in 0..=3u32 {
        let r = dq_dnu_offcut(n, Complex64::new(3.0, 0.0))?;
        println!("dQ/dnu at nu={n}, z=3: {:.15}", r.value.re);
    }
    let z = Complex64::new(0.3, 0.8);
    let r = dq_dnu_offcut(2, z)?;
    println!("dQ/dnu at nu=2, z={z}: {:.15}", r.value);

    // on the cut: real arithmetic, exactly real results
    for n in 0..=3u32 {
        let r = dq_dnu_oncut(n, 0.5)?;
        println!(
            "dQ/dnu at nu={n}, x=0.5 (on-cut): {:.15}, im = {}",
            r.value.re, r.value.im
        );
    }

    // the on-cut value is the average of the two boundary limits
    let eps = 1e-7;
    let up = dq_dnu_offcut(1, Complex64::new(0.5, eps))?.value;
    let dn = dq_dnu_offcut(1, Complex64::new(0.5, -eps))?.value;
    let avg = 0.5 * (up + dn).re;
    let oncut = dq_dnu_oncut(1, 0.5)?.value.re;
    println!("boundary average {avg:.12} vs on-cut {oncut:.12}");

    // a real point inside the interval handed to the off-cut evaluator is
    // rejected rather than silently reinterpreted
    match dq_dnu_offcut(1, Complex64::new(0.5, 0.0)) {
        Err(e) => println!("off-cut evaluator at x=0.5: error as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
