//! On-disk result cache: one JSON file per `(operation, k, n, cap)`, named
//! `{op}_k{K}_n{N}_c{CAP}.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CacheKey<'a> {
    pub op: &'a str,
    pub k: u32,
    pub n: u32,
    pub cap: u32,
}

impl CacheKey<'_> {
    pub fn file_name(&self) -> String {
        format!("{}_k{}_n{}_c{}.json", self.op, self.k, self.n, self.cap)
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Returns the cached value for `key`, or computes and stores it.
    /// Unreadable or stale entries are recomputed and overwritten.
    pub fn get_or_compute<T, F>(&self, key: CacheKey<'_>, compute: F) -> Result<T, CliError>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T, CliError>,
    {
        let Some(dir) = &self.dir else {
            return compute();
        };
        let path = dir.join(key.file_name());
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(value) = serde_json::from_str(&text) {
                return Ok(value);
            }
        }
        let value = compute()?;
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
        let text = serde_json::to_string_pretty(&value).map_err(|e| CliError::Output(e.to_string()))?;
        // write-then-rename so concurrent readers never see a partial file
        let tmp = dir.join(format!(".{}.{}.tmp", key.file_name(), std::process::id()));
        fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(&path, e))?;
        Ok(value)
    }
}
