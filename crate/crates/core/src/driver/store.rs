use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::pairs::GdKey;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Formula,
    Solved,
    Ingested,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StoreEntry {
    pub genus: u32,
    pub degree: u32,
    #[serde(rename = "N")]
    pub value: Rational,
    pub provenance: Provenance,
}

/// Cache of computed `N_{g,d}` backed by a JSON file. Entries never change:
/// recording a different value for a stored key is an integrity error.
/// Writers take `<path>.lock` (created exclusively) while saving.
#[derive(Debug, Default)]
pub struct InvariantStore {
    path: Option<PathBuf>,
    entries: BTreeMap<GdKey, StoreEntry>,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io { path: path.display().to_string(), source }
}

impl InvariantStore {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Opens the store at `path`; a missing file is an empty store.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let mut store = InvariantStore { path: Some(path.clone()), entries: BTreeMap::new() };
        if !path.exists() {
            return Ok(store);
        }
        let text = fs::read_to_string(&path).map_err(io_err(&path))?;
        let de = &mut serde_json::Deserializer::from_str(&text);
        let list: Vec<StoreEntry> = serde_path_to_error::deserialize(de)
            .map_err(|e| Error::parse(e.path().to_string(), e.into_inner().to_string()))?;
        for e in list {
            let key = GdKey::new(e.genus, e.degree)?;
            if store.entries.insert(key, e).is_some() {
                return Err(Error::Integrity(format!(
                    "{} lists (g,d) = ({},{}) twice",
                    path.display(),
                    key.g,
                    key.d
                )));
            }
        }
        Ok(store)
    }

    pub fn get(&self, key: GdKey) -> Option<&StoreEntry> {
        self.entries.get(&key)
    }

    pub fn entries(&self) -> impl Iterator<Item = &StoreEntry> {
        self.entries.values()
    }

    /// Adds an entry, or confirms an existing one. A stored value that
    /// disagrees with `value` is an integrity error.
    pub fn record(&mut self, key: GdKey, value: Rational, provenance: Provenance) -> Result<()> {
        if let Some(old) = self.entries.get(&key) {
            if old.value != value {
                return Err(Error::Integrity(format!(
                    "N_{{{},{}}} stored as {} but recomputed as {value}",
                    key.g, key.d, old.value
                )));
            }
            return Ok(());
        }
        self.entries.insert(key, StoreEntry { genus: key.g, degree: key.d, value, provenance });
        Ok(())
    }

    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let lock = path.with_extension("lock");
        OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&lock)
            .map_err(|e| {
                if e.kind() == std::io::ErrorKind::AlreadyExists {
                    Error::Integrity(format!("{} is held by another writer", lock.display()))
                } else {
                    Error::Io { path: lock.display().to_string(), source: e }
                }
            })?;
        let result = self.write_file(path);
        let _ = fs::remove_file(&lock);
        result
    }

    fn write_file(&self, path: &Path) -> Result<()> {
        let list: Vec<&StoreEntry> = self.entries.values().collect();
        let text = serde_json::to_string_pretty(&list).expect("entries serialize");
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp).map_err(io_err(&tmp))?;
        f.write_all(text.as_bytes()).map_err(io_err(&tmp))?;
        f.sync_all().map_err(io_err(&tmp))?;
        fs::rename(&tmp, path).map_err(io_err(path))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn roundtrip_and_conflict() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        let k = GdKey::new(2, 1).unwrap();
        let mut s = InvariantStore::open(&path).unwrap();
        s.record(k, q(2875, 240), Provenance::Solved).unwrap();
        s.record(GdKey::new(2, 2).unwrap(), q(-1, 7), Provenance::Ingested).unwrap();
        s.save().unwrap();
        assert!(!path.with_extension("lock").exists());

        let mut back = InvariantStore::open(&path).unwrap();
        assert_eq!(back.get(k).unwrap().value, q(575, 48));
        assert_eq!(back.get(k).unwrap().provenance, Provenance::Solved);
        back.record(k, q(2875, 240), Provenance::Solved).unwrap();
        assert!(matches!(back.record(k, q(1, 2), Provenance::Solved), Err(Error::Integrity(_))));
        assert_eq!(back.entries().count(), 2);
    }

    #[test]
    fn lock_blocks_second_writer() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        fs::write(path.with_extension("lock"), "").unwrap();
        let s = InvariantStore::open(&path).unwrap();
        assert!(matches!(s.save(), Err(Error::Integrity(_))));
    }

    #[test]
    fn bad_file_reports_path() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("store.json");
        fs::write(&path, r#"[{"genus":2,"degree":1,"N":"1/0","provenance":"solved"}]"#).unwrap();
        match InvariantStore::open(&path) {
            Err(Error::Parse { path, .. }) => assert_eq!(path, "[0].N"),
            other => panic!("{other:?}"),
        }
    }
}
