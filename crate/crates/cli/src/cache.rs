//! On-disk cache of constructed Lie algebras, as `LieData` JSON.

use std::fs;
use std::path::PathBuf;

use anyhow::{Context, Result};
use octoplane::lie::{killing_and_identify, Construction, LieData};
use octoplane::LieSubalgebra;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "OCTOPLANE_CACHE_DIR";

/// Bumped whenever the stored format or a construction changes.
const FORMAT: u32 = 1;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    /// The directory from the environment, else a folder under the system
    /// temporary directory. `enabled = false` disables reads and writes.
    pub fn new(enabled: bool) -> Self {
        let dir = enabled.then(|| {
            std::env::var_os(CACHE_ENV)
                .map(PathBuf::from)
                .unwrap_or_else(|| std::env::temp_dir().join("octoplane-cache"))
        });
        Self { dir }
    }

    fn version_digest() -> String {
        let text = format!("{}:{FORMAT}", octoplane::VERSION);
        hex::encode(&Sha256::digest(text.as_bytes())[..6])
    }

    fn path(&self, c: &Construction) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{}-{}.json", c.key(), Self::version_digest())))
    }

    fn load(&self, c: &Construction) -> Option<LieSubalgebra> {
        let text = fs::read_to_string(self.path(c)?).ok()?;
        let data: LieData = serde_json::from_str(&text).ok()?;
        LieSubalgebra::from_data(&data).ok()
    }

    fn store(&self, c: &Construction, sub: &LieSubalgebra) -> Result<()> {
        let Some(path) = self.path(c) else { return Ok(()) };
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, serde_json::to_vec(&sub.to_data())?).with_context(|| format!("writing {}", tmp.display()))?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// The construction with its structure, from the cache when present.
    /// Parents are looked up the same way.
    pub fn get(&self, c: &Construction) -> Result<LieSubalgebra> {
        if let Some(sub) = self.load(c) {
            return Ok(sub);
        }
        let parent = c.parent().map(|p| self.get(&p)).transpose()?;
        let raw = c.build_raw(parent.as_ref())?;
        let sub = match killing_and_identify(raw.clone()) {
            Ok(s) => s,
            // keep the span so the caller can report it
            Err(e @ octoplane::LieError::NotClosed(..)) => return Err(anyhow::Error::new(e).context(format!("{c}: bracket leaves the span of {} elements", raw.dim()))),
            Err(e) => return Err(e.into()),
        };
        self.store(c, &sub)?;
        Ok(sub)
    }
}
