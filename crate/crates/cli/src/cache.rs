//! On-disk cache of normalized invariants. Entries are canonical fixture
//! JSON keyed by `(n, m)` and a hash of the crate version; anything
//! unreadable is treated as a miss, so the directory can be deleted at will.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use sha2::{Digest, Sha256};
use torus_super::invariant::KnotFixture;

pub const ENV_VAR: &str = "TORUS_SUPER_CACHE";

pub struct Cache {
    dir: PathBuf,
}

fn version_hash() -> String {
    let digest = Sha256::digest(concat!("torus-super ", env!("CARGO_PKG_VERSION"), " fixture-json-1"));
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

impl Cache {
    /// `$TORUS_SUPER_CACHE`, else the user cache directory. An empty
    /// variable disables caching.
    pub fn from_env() -> Option<Cache> {
        let dir = match std::env::var_os(ENV_VAR) {
            Some(v) if v.is_empty() => return None,
            Some(v) => PathBuf::from(v),
            None => dirs::cache_dir()?.join("torus-super"),
        };
        Some(Cache { dir })
    }

    fn path(&self, n: u32, m: u32) -> PathBuf {
        self.dir.join(format!("torus_{n}_{m}_{}.json", version_hash()))
    }

    pub fn load(&self, n: u32, m: u32) -> Option<String> {
        let text = fs::read_to_string(self.path(n, m)).ok()?;
        let fixture = KnotFixture::from_json(&text).ok()?;
        (fixture.n == n && fixture.m == m && fixture.normalized && fixture.to_canonical_json() == text).then_some(text)
    }

    /// Write-then-rename; failures are ignored.
    pub fn store(&self, n: u32, m: u32, json: &str) {
        let write = || -> std::io::Result<()> {
            fs::create_dir_all(&self.dir)?;
            let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
            tmp.write_all(json.as_bytes())?;
            tmp.persist(self.path(n, m)).map_err(|e| e.error)?;
            Ok(())
        };
        let _ = write();
    }
}
