//! Evaluate ∂P_ν(z)/∂ν at integer degrees: P_n(z)·ln((z+1)/2) + R_n(z).
//!
//! Run with: cargo run --example first_derivative

use lnd::derivs::{dp_dnu, EvalPoint};
use lnd::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // real argument inside the interval
    let p = EvalPoint::on_cut(0.5)?;
    for n in 0..=4u32 {
        let r = dp_dnu(n, &p)?;
        println!("dP/dnu at nu={n}, x=0.5: {:.15}", r.value.re);
    }

    // complex argument off the cut
    let z = Complex64::new(1.2, 0.75);
    let r = dp_dnu(3, &EvalPoint::off_cut(z))?;
    println!("dP/dnu at nu=3, z={z}: {:.15}", r.value);

    // the derivative vanishes identically at z = 1 for every degree
    let r = dp_dnu(7, &EvalPoint::EndpointPlusOne)?;
    println!("dP/dnu at nu=7, z=1: {}", r.value.re);

    // z = -1 is a logarithmic singularity and is reported, not returned
    match dp_dnu(2, &EvalPoint::EndpointMinusOne) {
        Err(e) => println!("dP/dnu at z=-1: error as expected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
