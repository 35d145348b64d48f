//! On-disk cache of transition matrices, one JSON file per `(from, to, n)`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bases::{transition_matrix, BasisTag};
use crate::error::Result;
use crate::matrix::{MatrixJson, TransitionMatrix};
use crate::perm::Permutation;

/// Bump whenever the stored layout or any expansion convention changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const CACHE_DIR_ENV: &str = "FQSYM_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub from: BasisTag,
    pub to: BasisTag,
    pub n: usize,
    pub matrix: MatrixJson,
}

#[derive(Clone, Debug)]
pub struct MatrixCache {
    dir: Option<PathBuf>,
}

impl MatrixCache {
    pub fn disabled() -> Self {
        MatrixCache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        MatrixCache { dir: Some(dir.into()) }
    }

    /// Explicit directory, else `FQSYM_CACHE_DIR`, else the user cache directory.
    pub fn resolve(flag: Option<&Path>) -> Self {
        if let Some(d) = flag {
            return MatrixCache::at(d);
        }
        if let Some(d) = std::env::var_os(CACHE_DIR_ENV).filter(|d| !d.is_empty()) {
            return MatrixCache::at(PathBuf::from(d));
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .filter(|d| !d.is_empty())
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")));
        match base {
            Some(b) => MatrixCache::at(b.join("fqsym")),
            None => MatrixCache::disabled(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn path_for(&self, from: BasisTag, to: BasisTag, n: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| {
            d.join(format!("v{SCHEMA_VERSION}"))
                .join(format!("{from}-{to}-{n}.json"))
        })
    }

    /// A stored matrix, if present, readable and of the current version.
    pub fn load(&self, from: BasisTag, to: BasisTag, n: usize) -> Option<TransitionMatrix<Permutation>> {
        let text = fs::read_to_string(self.path_for(from, to, n)?).ok()?;
        let entry: CacheEntry = serde_json::from_str(&text).ok()?;
        if entry.version != SCHEMA_VERSION || entry.from != from || entry.to != to || entry.n != n {
            return None;
        }
        TransitionMatrix::from_json(&entry.matrix).ok()
    }

    pub fn store(&self, from: BasisTag, to: BasisTag, n: usize, m: &TransitionMatrix<Permutation>) -> Result<()> {
        let Some(path) = self.path_for(from, to, n) else {
            return Ok(());
        };
        let parent = path.parent().expect("cache paths have a parent");
        fs::create_dir_all(parent)?;
        let entry = CacheEntry {
            version: SCHEMA_VERSION,
            from,
            to,
            n,
            matrix: m.to_json(),
        };
        // write-then-rename so concurrent readers never see a partial file
        let tmp = parent.join(format!(".{from}-{to}-{n}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    pub fn matrix(&self, from: BasisTag, to: BasisTag, n: usize) -> Result<TransitionMatrix<Permutation>> {
        if let Some(m) = self.load(from, to, n) {
            return Ok(m);
        }
        let m = transition_matrix(from, to, n)?;
        self.store(from, to, n, &m)?;
        Ok(m)
    }
}
