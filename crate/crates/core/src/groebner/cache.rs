use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::buchberger::{GbStats, GroebnerBasis};
use super::reduce::normal_form;
use crate::algebra::{parse_polynomial, Polynomial, Ring};
use crate::error::Result;

/// Content-addressed on-disk store of reduced Gröbner bases.
#[derive(Clone, Debug)]
pub struct GbCache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    basis: Vec<String>,
    stats: GbStats,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CacheEntry {
    pub key: String,
    pub elements: usize,
    pub bytes: u64,
}

impl GbCache {
    pub fn new(dir: impl AsRef<Path>) -> GbCache {
        GbCache { dir: dir.as_ref().to_path_buf() }
    }

    /// Directory from `REGLAB_CACHE`, defaulting to `./.reglab-cache`.
    pub fn from_env() -> GbCache {
        GbCache::new(std::env::var_os("REGLAB_CACHE").map(PathBuf::from).unwrap_or_else(|| ".reglab-cache".into()))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// sha256 of the ring JSON and the sorted generator renderings.
    pub fn key(ring: &Ring, gens: &[Polynomial]) -> String {
        let mut rendered: Vec<String> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic().render()).collect();
        rendered.sort();
        rendered.dedup();
        let mut h = Sha256::new();
        h.update(ring.to_json().as_bytes());
        for r in &rendered {
            h.update(b"\n");
            h.update(r.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Loads a cached basis. Entries that fail to parse or do not reduce the
    /// generators to zero are ignored.
    pub fn load(&self, ring: &Ring, gens: &[Polynomial]) -> Result<Option<GroebnerBasis>> {
        let path = self.path(&GbCache::key(ring, gens));
        let Ok(text) = fs::read_to_string(&path) else { return Ok(None) };
        let Ok(file) = serde_json::from_str::<CacheFile>(&text) else { return Ok(None) };
        let mut basis = Vec::with_capacity(file.basis.len());
        for s in &file.basis {
            match parse_polynomial(ring, s) {
                Ok(p) => basis.push(p),
                Err(_) => return Ok(None),
            }
        }
        if gens.iter().any(|g| !normal_form(g, &basis).is_zero()) {
            return Ok(None);
        }
        Ok(Some(GroebnerBasis::from_parts(ring, basis, file.stats)))
    }

    /// Writes atomically via a temporary file and rename.
    pub fn store(&self, ring: &Ring, gens: &[Polynomial], gb: &GroebnerBasis) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let key = GbCache::key(ring, gens);
        let file = CacheFile { basis: gb.basis().iter().map(|g| g.render()).collect(), stats: gb.stats.clone() };
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&file)?)?;
        fs::rename(&tmp, self.path(&key))?;
        Ok(())
    }

    pub fn list(&self) -> Result<Vec<CacheEntry>> {
        let mut out = Vec::new();
        let Ok(entries) = fs::read_dir(&self.dir) else { return Ok(out) };
        for e in entries {
            let e = e?;
            let path = e.path();
            if path.extension().and_then(|s| s.to_str()) != Some("json") {
                continue;
            }
            let key = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
            let bytes = e.metadata()?.len();
            let elements = fs::read_to_string(&path)
                .ok()
                .and_then(|t| serde_json::from_str::<CacheFile>(&t).ok())
                .map(|f| f.basis.len())
                .unwrap_or(0);
            out.push(CacheEntry { key, elements, bytes });
        }
        out.sort_by(|a, b| a.key.cmp(&b.key));
        Ok(out)
    }

    /// Removes every cache entry; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let entries = self.list()?;
        for e in &entries {
            fs::remove_file(self.path(&e.key))?;
        }
        Ok(entries.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial_list, RingSpec};
    use crate::groebner::IdealPresentation;

    #[test]
    fn store_load_clear() {
        let dir = tempfile::tempdir().unwrap();
        let cache = GbCache::new(dir.path());
        let r = RingSpec::degrevlex(0, &["x", "y"]).unwrap();
        let gens = parse_polynomial_list(&r, "x^2+y^2, x*y").unwrap();
        let ideal = IdealPresentation::new(&r, gens.clone()).unwrap();
        let (gb, hit) = ideal.groebner_cached(&cache).unwrap();
        assert!(!hit);
        let again = IdealPresentation::new(&r, gens.iter().rev().cloned().collect()).unwrap();
        let (gb2, hit2) = again.groebner_cached(&cache).unwrap();
        assert!(hit2);
        assert_eq!(gb.basis(), gb2.basis());
        assert_eq!(cache.list().unwrap().len(), 1);
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.list().unwrap().is_empty());
    }
}
