//! On-disk cache of `b` tables.
//!
//! One JSON file per `k`, holding the coefficients as decimal strings and a
//! SHA-256 of them. A file is used when its `k` matches and its order is at
//! least the requested one; anything unreadable, mismatched or failing the
//! checksum is ignored and overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bseries::{BTable, GonalParams};
use crate::error::{Error, Result};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "KGONAL_CACHE";

#[derive(Serialize, Deserialize)]
struct Document {
    version: u32,
    k: u32,
    order: usize,
    coefficients: Vec<String>,
    sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
    /// A file existed but could not be used.
    Rejected(String),
}

fn checksum(k: u32, coefficients: &[String]) -> String {
    let mut h = Sha256::new();
    h.update(k.to_le_bytes());
    for c in coefficients {
        h.update(c.as_bytes());
        h.update(b",");
    }
    hex::encode(h.finalize())
}

pub fn cache_path(dir: &Path, k: u32) -> PathBuf {
    dir.join(format!("b-k{k}.json"))
}

/// Explicit directory, else the `KGONAL_CACHE` environment variable.
pub fn resolve_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}

fn read(path: &Path, params: GonalParams, order: usize) -> Result<BTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::Cache(e.to_string()))?;
    let doc: Document = serde_json::from_str(&text).map_err(|e| Error::Cache(e.to_string()))?;
    if doc.version != CACHE_VERSION {
        return Err(Error::Cache(format!("version {} != {CACHE_VERSION}", doc.version)));
    }
    if doc.k != params.k() {
        return Err(Error::Cache(format!("file is for k = {}", doc.k)));
    }
    if doc.order < order || doc.coefficients.len() != doc.order + 1 {
        return Err(Error::Cache(format!("file holds order {}", doc.order)));
    }
    if checksum(doc.k, &doc.coefficients) != doc.sha256 {
        return Err(Error::Cache("checksum mismatch".into()));
    }
    let b = doc.coefficients[..=order]
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(|e| Error::Cache(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    BTable::from_coefficients(params, b)
}

fn write(path: &Path, table: &BTable) -> Result<()> {
    let coefficients: Vec<String> = table.b().iter().map(BigInt::to_string).collect();
    let doc = Document {
        version: CACHE_VERSION,
        k: table.params().k(),
        order: table.order(),
        sha256: checksum(table.params().k(), &coefficients),
        coefficients,
    };
    let dir = path.parent().expect("cache file has a parent");
    fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
    let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
    let body = serde_json::to_string(&doc).map_err(|e| Error::Cache(e.to_string()))?;
    fs::write(&tmp, body).map_err(|e| Error::Cache(e.to_string()))?;
    fs::rename(&tmp, path).map_err(|e| Error::Cache(e.to_string()))
}

/// `b` table from the cache when possible, otherwise computed and stored.
/// Write failures are not errors; the cache is only an accelerator.
pub fn load_or_compute(
    dir: Option<&Path>,
    params: GonalParams,
    order: usize,
) -> Result<(BTable, CacheStatus)> {
    let Some(dir) = dir else {
        return Ok((BTable::compute(params, order)?, CacheStatus::Disabled));
    };
    let path = cache_path(dir, params.k());
    let status = if path.exists() {
        match read(&path, params, order) {
            Ok(table) => return Ok((table, CacheStatus::Hit)),
            Err(e) => CacheStatus::Rejected(e.to_string()),
        }
    } else {
        CacheStatus::Miss
    };
    let table = BTable::compute(params, order)?;
    let _ = write(&path, &table);
    Ok((table, status))
}
