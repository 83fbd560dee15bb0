//! On-disk cache of generated coefficient triples, one JSON file per
//! degree. Coefficients are stored as decimal numerator/denominator
//! strings so the cache is exact; floats never enter the format.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::basis::LegendreSeries;
use crate::exact::Rational;
use crate::polys::{coeff_triple, CoeffTriple};

pub const FORMAT_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "LND_CACHE_DIR";

/// Serialized form of one cached degree.
#[derive(Debug, Serialize, Deserialize)]
struct CacheRecord {
    n: u32,
    r: Vec<(String, String)>,
    b: Vec<(String, String)>,
    c: Vec<(String, String)>,
    format_version: u32,
}

/// Errors from cache operations.
#[derive(Debug)]
pub enum CacheError {
    Io(std::io::Error),
    Malformed(String),
}

impl fmt::Display for CacheError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Io(e) => write!(f, "cache I/O error: {e}"),
            Self::Malformed(m) => write!(f, "malformed cache entry: {m}"),
        }
    }
}

impl std::error::Error for CacheError {}

impl From<std::io::Error> for CacheError {
    fn from(e: std::io::Error) -> Self {
        CacheError::Io(e)
    }
}

/// Resolves the cache directory: explicit flag, then the environment
/// variable, then `.lnd-cache` under the working directory.
pub fn resolve_dir(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    if let Ok(p) = std::env::var(CACHE_DIR_ENV) {
        if !p.is_empty() {
            return PathBuf::from(p);
        }
    }
    PathBuf::from(".lnd-cache")
}

fn entry_path(dir: &Path, n: u32) -> PathBuf {
    dir.join(format!("coeff_{n:05}.json"))
}

fn series_to_pairs(s: &LegendreSeries) -> Vec<(String, String)> {
    s.coeffs()
        .iter()
        .map(|c| (c.numer().to_string(), c.denom().to_string()))
        .collect()
}

fn pairs_to_series(pairs: &[(String, String)]) -> Result<LegendreSeries, CacheError> {
    let mut coeffs = Vec::with_capacity(pairs.len());
    for (num, den) in pairs {
        let num = BigInt::from_str(num)
            .map_err(|e| CacheError::Malformed(format!("bad numerator '{num}': {e}")))?;
        let den = BigInt::from_str(den)
            .map_err(|e| CacheError::Malformed(format!("bad denominator '{den}': {e}")))?;
        if den == BigInt::from(0) {
            return Err(CacheError::Malformed("zero denominator".into()));
        }
        coeffs.push(Rational::new(num, den));
    }
    Ok(LegendreSeries::new(coeffs))
}

/// Reads the entry for degree `n`, if present and well-formed.
pub fn read_entry(dir: &Path, n: u32) -> Result<Option<CoeffTriple>, CacheError> {
    let path = entry_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let record: CacheRecord = serde_json::from_str(&text)
        .map_err(|e| CacheError::Malformed(format!("{}: {e}", path.display())))?;
    if record.format_version != FORMAT_VERSION {
        return Err(CacheError::Malformed(format!(
            "{}: format_version {} != {}",
            path.display(),
            record.format_version,
            FORMAT_VERSION
        )));
    }
    if record.n != n {
        return Err(CacheError::Malformed(format!(
            "{}: stored degree {} != requested {}",
            path.display(),
            record.n,
            n
        )));
    }
    Ok(Some(CoeffTriple {
        n,
        r: pairs_to_series(&record.r)?,
        b: pairs_to_series(&record.b)?,
        c: pairs_to_series(&record.c)?,
    }))
}

/// Writes the entry for one triple; returns false when a valid entry was
/// already present (the write is skipped, keeping builds idempotent).
pub fn write_entry(dir: &Path, triple: &CoeffTriple) -> Result<bool, CacheError> {
    if let Ok(Some(existing)) = read_entry(dir, triple.n) {
        if existing == *triple {
            return Ok(false);
        }
    }
    fs::create_dir_all(dir)?;
    let record = CacheRecord {
        n: triple.n,
        r: series_to_pairs(&triple.r),
        b: series_to_pairs(&triple.b),
        c: series_to_pairs(&triple.c),
        format_version: FORMAT_VERSION,
    };
    let text = serde_json::to_string(&record)
        .map_err(|e| CacheError::Malformed(format!("serialization failed: {e}")))?;
    fs::write(entry_path(dir, triple.n), text)?;
    Ok(true)
}

/// Result of a cache build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildStats {
    pub written: u32,
    pub skipped: u32,
}

/// Generates and stores triples for every degree 0..=n_max.
pub fn build(dir: &Path, n_max: u32) -> Result<BuildStats, CacheError> {
    let mut stats = BuildStats {
        written: 0,
        skipped: 0,
    };
    for n in 0..=n_max {
        let triple = coeff_triple(n)
            .map_err(|e| CacheError::Malformed(format!("generation failed at n={n}: {e}")))?;
        if write_entry(dir, &triple)? {
            stats.written += 1;
        } else {
            stats.skipped += 1;
        }
    }
    Ok(stats)
}

/// Removes all cache entries; returns how many files were deleted.
pub fn clear(dir: &Path) -> Result<usize, CacheError> {
    let mut removed = 0;
    let entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(e.into()),
    };
    for entry in entries {
        let entry = entry?;
        let name = entry.file_name();
        let name = name.to_string_lossy();
        if name.starts_with("coeff_") && name.ends_with(".json") {
            fs::remove_file(entry.path())?;
            removed += 1;
        }
    }
    Ok(removed)
}

/// Summary of the cache contents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CacheStat {
    pub entries: usize,
    pub max_n: Option<u32>,
}

/// Scans the cache directory for entries.
pub fn stat(dir: &Path) -> Result<CacheStat, CacheError> {
    let mut entries = 0;
    let mut max_n = None;
    let dir_entries = match fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Ok(CacheStat {
                entries: 0,
                max_n: None,
            })
        }
        Err(e) => return Err(e.into()),
    };
    for entry in dir_entries {
        let entry = entry?;
        let name = entry.file_name();
        let name = name.to_string_lossy();
        if let Some(stem) = name.strip_prefix("coeff_").and_then(|s| s.strip_suffix(".json")) {
            if let Ok(n) = stem.parse::<u32>() {
                entries += 1;
                max_n = Some(max_n.map_or(n, |m: u32| m.max(n)));
            }
        }
    }
    Ok(CacheStat { entries, max_n })
}
