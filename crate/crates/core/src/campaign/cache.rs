//! Append-only JSON-lines cache of clique solutions.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub graph6: String,
    pub error_set: String,
    pub solver: String,
    pub members: Vec<u32>,
}

impl CacheEntry {
    fn key(&self) -> (String, String, String) {
        (self.graph6.clone(), self.error_set.clone(), self.solver.clone())
    }
}

/// Solutions keyed by `(graph6, error-set hash, solver key)`.
#[derive(Debug, Default)]
pub struct ResultCache {
    path: Option<PathBuf>,
    entries: HashMap<(String, String, String), Vec<u32>>,
    pending: Vec<CacheEntry>,
}

impl ResultCache {
    /// A cache that is never persisted.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path` if it exists; new entries are appended on [`Self::flush`].
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut entries = HashMap::new();
        if path.exists() {
            let file = File::open(&path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(|e| Error::Parse(e.to_string()))?;
                if line.trim().is_empty() {
                    continue;
                }
                let entry: CacheEntry = serde_json::from_str(&line)
                    .map_err(|e| Error::Parse(format!("{} line {}: {e}", path.display(), i + 1)))?;
                entries.insert(entry.key(), entry.members);
            }
        }
        Ok(Self { path: Some(path), entries, pending: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, graph6: &str, error_set: &str, solver: &str) -> Option<&[u32]> {
        self.entries
            .get(&(graph6.to_string(), error_set.to_string(), solver.to_string()))
            .map(Vec::as_slice)
    }

    pub fn insert(&mut self, entry: CacheEntry) {
        if self.entries.insert(entry.key(), entry.members.clone()).is_none() {
            self.pending.push(entry);
        }
    }

    /// Appends entries added since the last flush.
    pub fn flush(&mut self) -> Result<()> {
        let Some(path) = &self.path else {
            self.pending.clear();
            return Ok(());
        };
        if self.pending.is_empty() {
            return Ok(());
        }
        let io = |e: std::io::Error| Error::Parse(format!("{}: {e}", path.display()));
        let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
        for entry in self.pending.drain(..) {
            let line = serde_json::to_string(&entry).expect("cache entries serialize");
            writeln!(file, "{line}").map_err(io)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn persists_across_opens() {
        let dir = std::env::temp_dir().join(format!("cws-cache-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cache.jsonl");
        let _ = std::fs::remove_file(&path);
        let mut cache = ResultCache::open(&path).unwrap();
        assert!(cache.is_empty());
        let entry = CacheEntry { graph6: "Dhc".into(), error_set: "abc".into(), solver: "exact".into(), members: vec![3, 5] };
        cache.insert(entry.clone());
        cache.insert(entry);
        cache.flush().unwrap();
        let again = ResultCache::open(&path).unwrap();
        assert_eq!(again.len(), 1);
        assert_eq!(again.get("Dhc", "abc", "exact"), Some(&[3, 5][..]));
        assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 1);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
