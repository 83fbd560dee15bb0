//! Evaluate ∂²P_ν(z)/∂ν² at integer degrees, including the exact zero at
//! z = 1, the finite limit at z = −1, and negative degrees through the
//! symmetry under ν ↦ −ν−1.
//!
//! Run with: cargo run --example second_derivative

use lnd::derivs::{d2p_dnu2, d2p_dnu2_anydeg, EvalPoint};
use lnd::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = EvalPoint::on_cut(0.0)?;
    for n in 0..=4u32 {
        let r = d2p_dnu2(n, &x)?;
        println!("d2P/dnu2 at nu={n}, x=0: {:.15}", r.value.re);
    }

    let z = Complex64::new(0.4, 0.9);
    let r = d2p_dnu2(2, &EvalPoint::off_cut(z))?;
    println!("d2P/dnu2 at nu=2, z={z}: {:.15}", r.value);

    // endpoints: exact zero at z = 1, analytic limit at z = -1
    let r = d2p_dnu2(5, &EvalPoint::EndpointPlusOne)?;
    println!("d2P/dnu2 at nu=5, z=1: {}", r.value.re);
    let r = d2p_dnu2(5, &EvalPoint::EndpointMinusOne)?;
    println!(
        "d2P/dnu2 at nu=5, z=-1 (limit, formula {}): {:.15}",
        r.formula.as_str(),
        r.value.re
    );

    // negative degrees map onto nonnegative ones: nu = -n-1 matches nu = n
    let p = EvalPoint::on_cut(0.3)?;
    let neg = d2p_dnu2_anydeg(-4, &p)?;
    let pos = d2p_dnu2_anydeg(3, &p)?;
    println!(
        "d2P/dnu2 at nu=-4 vs nu=3, x=0.3: {:.15} vs {:.15}",
        neg.value.re, pos.value.re
    );
    Ok(())
}
