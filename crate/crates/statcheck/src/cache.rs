//! On-disk cache of Kostka matrices, one CSV file per `N`.
//!
//! Files are written to a temporary name and renamed into place, so readers
//! never observe a half-written matrix. A file that fails to parse or is not
//! lower-unitriangular with a first column of ones is recomputed and replaced.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use statcheck_core::partitions::enumerate_partitions;
use statcheck_core::symfunc::kostka_matrix;
use statcheck_core::KostkaMatrix;

/// Overrides the cache directory.
pub const CACHE_ENV: &str = "STATCHECK_CACHE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache io error at {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed cache file {path}: {reason}")]
    Malformed { path: PathBuf, reason: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Computed,
    /// The file existed but was invalid and has been rewritten.
    Repaired,
}

/// `$STATCHECK_CACHE_DIR`, else `$XDG_CACHE_HOME/statcheck`, else
/// `$HOME/.cache/statcheck`, else a directory under the system temp dir.
pub fn default_cache_dir() -> PathBuf {
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return PathBuf::from(dir);
    }
    if let Some(dir) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(dir).join("statcheck");
    }
    if let Some(home) = std::env::var_os("HOME").filter(|d| !d.is_empty()) {
        return PathBuf::from(home).join(".cache").join("statcheck");
    }
    std::env::temp_dir().join("statcheck-cache")
}

#[derive(Clone, Debug)]
pub struct KostkaCache {
    dir: PathBuf,
}

impl KostkaCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn from_env() -> Self {
        Self::new(default_cache_dir())
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, n: usize) -> PathBuf {
        self.dir.join(format!("kostka_N{n}.csv"))
    }

    /// `Ok(None)` when no file exists yet.
    pub fn load(&self, n: usize) -> Result<Option<KostkaMatrix>, CacheError> {
        let path = self.path(n);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        parse_matrix(n, &text)
            .map(Some)
            .map_err(|reason| CacheError::Malformed { path, reason })
    }

    pub fn store(&self, k: &KostkaMatrix) -> Result<PathBuf, CacheError> {
        static COUNTER: AtomicU64 = AtomicU64::new(0);
        let io_err = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CacheError::Io { path, source }
        };
        fs::create_dir_all(&self.dir).map_err(io_err(&self.dir))?;
        let target = self.path(k.n);
        let tmp = self.dir.join(format!(
            ".kostka_N{}.csv.{}.{}.tmp",
            k.n,
            std::process::id(),
            COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let result = (|| {
            let mut file = fs::File::create(&tmp)?;
            file.write_all(render_matrix(k).as_bytes())?;
            file.sync_all()?;
            fs::rename(&tmp, &target)
        })();
        if let Err(source) = result {
            let _ = fs::remove_file(&tmp);
            return Err(CacheError::Io { path: target, source });
        }
        Ok(target)
    }

    /// Loads the matrix, computing and storing it on a miss or a bad file.
    pub fn get_or_compute(&self, n: usize) -> Result<(KostkaMatrix, CacheStatus), CacheError> {
        let status = match self.load(n) {
            Ok(Some(k)) => return Ok((k, CacheStatus::Hit)),
            Ok(None) => CacheStatus::Computed,
            Err(CacheError::Malformed { .. }) => CacheStatus::Repaired,
            Err(e) => return Err(e),
        };
        let k = kostka_matrix(n);
        self.store(&k)?;
        Ok((k, status))
    }
}

pub fn render_matrix(k: &KostkaMatrix) -> String {
    let mut out = String::new();
    for row in &k.entries {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn parse_matrix(n: usize, text: &str) -> Result<KostkaMatrix, String> {
    let size = enumerate_partitions(n).len();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut entries = Vec::with_capacity(size);
    for (r, record) in reader.records().enumerate() {
        let record = record.map_err(|e| e.to_string())?;
        let row = record
            .iter()
            .map(|cell| cell.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("row {}: {e}", r + 1))?;
        entries.push(row);
    }
    if entries.len() != size {
        return Err(format!("expected {size} rows, found {}", entries.len()));
    }
    let k = KostkaMatrix { n, entries };
    if !k.is_well_formed() {
        return Err("not unitriangular with a first column of ones".into());
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn miss_then_hit() {
        let dir = tempfile::tempdir().unwrap();
        let cache = KostkaCache::new(dir.path());
        let (k, status) = cache.get_or_compute(4).unwrap();
        assert_eq!(status, CacheStatus::Computed);
        assert_eq!(cache.path(4).file_name().unwrap(), "kostka_N4.csv");
        let (again, status) = cache.get_or_compute(4).unwrap();
        assert_eq!(status, CacheStatus::Hit);
        assert_eq!(k, again);
    }

    #[test]
    fn rendering() {
        let text = render_matrix(&kostka_matrix(3));
        assert_eq!(text, "1,0,0\n1,1,0\n1,2,1\n");
    }

    #[test]
    fn corrupt_files_are_repaired() {
        let dir = tempfile::tempdir().unwrap();
        let cache = KostkaCache::new(dir.path());
        for bad in ["1,0,0\n1,1,0\n", "1,0,0\n1,1,1\n1,2,1\n", "1,x,0\n1,1,0\n1,2,1\n", "2,0,0\n1,1,0\n1,2,1\n"] {
            fs::write(cache.path(3), bad).unwrap();
            assert!(matches!(cache.load(3), Err(CacheError::Malformed { .. })));
            let (k, status) = cache.get_or_compute(3).unwrap();
            assert_eq!(status, CacheStatus::Repaired);
            assert_eq!(k, kostka_matrix(3));
            assert_eq!(cache.load(3).unwrap(), Some(kostka_matrix(3)));
        }
    }

    #[test]
    fn no_temp_files_left() {
        let dir = tempfile::tempdir().unwrap();
        let cache = KostkaCache::new(dir.path().join("nested"));
        for n in 1..=5 {
            cache.get_or_compute(n).unwrap();
        }
        let names: Vec<_> = fs::read_dir(cache.dir()).unwrap().map(|e| e.unwrap().file_name()).collect();
        assert_eq!(names.len(), 5);
        assert!(names.iter().all(|n| n.to_string_lossy().starts_with("kostka_N")));
    }

    #[test]
    fn concurrent_writers() {
        let dir = tempfile::tempdir().unwrap();
        let cache = KostkaCache::new(dir.path());
        std::thread::scope(|s| {
            for _ in 0..8 {
                s.spawn(|| cache.get_or_compute(6).unwrap());
            }
        });
        assert_eq!(cache.load(6).unwrap(), Some(kostka_matrix(6)));
    }
}
