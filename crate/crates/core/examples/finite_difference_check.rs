//! Check the closed forms against finite differences in the degree:
//! a Richardson-extrapolated second difference of P_ν for ∂²P_ν/∂ν², and
//! a first difference of Q_ν for ∂Q_ν/∂ν, both built on the
//! hypergeometric series for P_ν at non-integer degree.
//!
//! Run with: cargo run --example finite_difference_check

use lnd::derivs::{d2p_dnu2, dq_dnu_offcut, EvalPoint};
use lnd::oracle::{fd1_q, fd2_nu, FDConfig};
use lnd::Complex64;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = FDConfig::default();
    println!(
        "finite differences: step {}, {} Richardson levels\n",
        cfg.step, cfg.richardson_levels
    );

    println!("second derivative of P:");
    for (n, z) in [
        (0u32, Complex64::new(0.0, 0.0)),
        (2, Complex64::new(0.6, 0.0)),
        (4, Complex64::new(0.3, 0.8)),
        (5, Complex64::new(-0.2, 0.7)),
    ] {
        let fd = fd2_nu(n, z, &cfg)?;
        let closed = d2p_dnu2(n, &EvalPoint::classify(z)?)?.value;
        let rel = (fd - closed).norm() / closed.norm().max(1.0);
        println!("  n={n}, z={z}: closed {closed:.12}, fd {fd:.12}, rel dev {rel:.2e}");
    }

    println!("\nfirst derivative of Q:");
    for (n, z) in [
        (0u32, Complex64::new(0.3, 0.8)),
        (1, Complex64::new(0.1, 0.9)),
        (3, Complex64::new(-0.2, 0.7)),
    ] {
        let fd = fd1_q(n, z, &cfg)?;
        let closed = dq_dnu_offcut(n, z)?.value;
        let rel = (fd - closed).norm() / closed.norm().max(1.0);
        println!("  n={n}, z={z}: closed {closed:.12}, fd {fd:.12}, rel dev {rel:.2e}");
    }
    Ok(())
}
