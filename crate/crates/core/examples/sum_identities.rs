//! The four summation identities behind the coefficient formulas: brute
//! direct summation equals the harmonic-number closed forms, exactly.
//!
//! Run with: cargo run --example sum_identities

use lnd::exact::{rat, Rational};
use lnd::oracle::{
    brute_s1, brute_s2, brute_s3, brute_s4, closed_s1, closed_s2, closed_s3, closed_s4,
    identity_a10_check,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("S1(n, m) spot checks:");
    for (n, m) in [(2u32, 0u32), (5, 3), (9, 4), (40, 17)] {
        let brute = brute_s1(n, m)?;
        let closed = closed_s1(n, m)?;
        println!("  n={n}, m={m}: {brute} (brute) == {closed} (closed): {}", brute == closed);
    }

    println!("\nS2/S3/S4 spot checks:");
    for n in [1u32, 2, 7, 30] {
        println!(
            "  n={n}: S2 {} S3 {} S4 {}",
            brute_s2(n)? == closed_s2(n)?,
            brute_s3(n)? == closed_s3(n)?,
            brute_s4(n)? == closed_s4(n)?,
        );
    }
    println!("  closed_s2(1) = {}", closed_s2(1)?);
    println!("  closed_s3(1) = {}", closed_s3(1)?);
    println!("  closed_s4(1) = {}", closed_s4(1)?);

    // the triangular-sum identity that reduces the double sum S2
    let values: Vec<Rational> = (1..=8i64).map(|k| rat(k * k - 3, k)).collect();
    println!("\ntriangular-sum identity on a sample list: {}", identity_a10_check(&values));

    // exhaustive sweep over a modest range
    let mut all = true;
    for n in 1..=80u32 {
        for m in 0..n {
            all &= brute_s1(n, m)? == closed_s1(n, m)?;
        }
        all &= brute_s2(n)? == closed_s2(n)?;
        all &= brute_s3(n)? == closed_s3(n)?;
        all &= brute_s4(n)? == closed_s4(n)?;
    }
    println!("exhaustive agreement for n <= 80: {all}");
    Ok(())
}
