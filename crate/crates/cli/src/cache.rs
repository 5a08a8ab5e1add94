//! Content-addressed store of rendered command output.
//!
//! Each entry lives in `<dir>/<sha256 of key>.json` and carries a checksum of
//! its payload; entries whose checksum does not match are treated as missing
//! and overwritten on the next store.

use std::cell::Cell;
use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::render::Output;

pub const ENV_DIR: &str = "LAYERLIE_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Entry {
    key: Value,
    checksum: String,
    payload: Output,
}

pub struct Cache {
    dir: PathBuf,
    version: String,
    enabled: Cell<bool>,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn default_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(ENV_DIR) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("layerlie"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("layerlie"))
}

impl Cache {
    /// Open (creating if needed) the cache directory. Returns `None` with a
    /// warning when it cannot be written.
    pub fn open(dir: Option<PathBuf>, version: &str) -> Option<Cache> {
        let dir = dir.or_else(default_dir)?;
        let probe = dir.join(".probe");
        let writable = fs::create_dir_all(&dir).is_ok() && fs::write(&probe, b"").is_ok();
        let _ = fs::remove_file(&probe);
        if !writable {
            eprintln!("warning: cache directory {} is not writable; caching disabled", dir.display());
            return None;
        }
        Some(Cache { dir, version: version.to_string(), enabled: Cell::new(true) })
    }

    fn full_key(&self, key: &Value) -> Value {
        serde_json::json!({ "version": self.version, "request": key })
    }

    fn path(&self, full_key: &Value) -> PathBuf {
        self.dir.join(format!("{}.json", sha256_hex(full_key.to_string().as_bytes())))
    }

    pub fn get(&self, key: &Value) -> Option<Output> {
        let full = self.full_key(key);
        let text = fs::read_to_string(self.path(&full)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        let payload = serde_json::to_string(&entry.payload).ok()?;
        (entry.key == full && entry.checksum == sha256_hex(payload.as_bytes())).then_some(entry.payload)
    }

    pub fn put(&self, key: &Value, out: &Output) {
        if !self.enabled.get() {
            return;
        }
        let full = self.full_key(key);
        let payload = serde_json::to_string(out).expect("output serializes");
        let entry = Entry { key: full.clone(), checksum: sha256_hex(payload.as_bytes()), payload: out.clone() };
        let path = self.path(&full);
        let tmp = path.with_extension("tmp");
        let written = fs::write(&tmp, serde_json::to_string(&entry).expect("entry serializes"))
            .and_then(|_| fs::rename(&tmp, &path));
        if let Err(e) = written {
            eprintln!("warning: cannot write cache entry {}: {e}; caching disabled", path.display());
            self.enabled.set(false);
        }
    }
}
