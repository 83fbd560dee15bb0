//! Build, inspect and reload the on-disk coefficient cache. Entries are
//! JSON files with numerator/denominator strings, so reloaded
//! polynomials compare exactly equal to freshly generated ones.
//!
//! Run with: cargo run --example coefficient_cache

use lnd::cache;
use lnd::polys::coeff_triple;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("lnd-cache-example");
    let _ = cache::clear(&dir);

    let stats = cache::build(&dir, 20)?;
    println!("built {} entries ({} already valid) in {}", stats.written, stats.skipped, dir.display());

    let stat = cache::stat(&dir)?;
    println!("cache now holds {} entries, max degree {:?}", stat.entries, stat.max_n);

    // reloaded entries are exactly the freshly generated ones
    let loaded = cache::read_entry(&dir, 17)?.expect("entry exists");
    let fresh = coeff_triple(17)?;
    println!("reload of degree 17 is exact: {}", loaded == fresh);

    // rebuilding skips valid entries
    let stats = cache::build(&dir, 20)?;
    println!("rebuild wrote {} entries, kept {}", stats.written, stats.skipped);

    let removed = cache::clear(&dir)?;
    println!("cleared {removed} entries");
    Ok(())
}
