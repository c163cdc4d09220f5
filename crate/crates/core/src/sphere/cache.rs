use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::exact::Matrix;

use super::block::BlockKind;
use super::SphereError;

/// Bumped whenever block conventions change; stale documents are ignored.
pub const CACHE_FORMAT: &str = "hsd-block-v1";

#[derive(Serialize, Deserialize)]
struct BlockDoc {
    format: String,
    kind: BlockKind,
    m: u32,
    n: u32,
    matrix: Matrix,
}

/// One JSON document per `(kind, m, n)` in a directory.
#[derive(Clone, Debug)]
pub struct BlockCache {
    dir: PathBuf,
}

impl BlockCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self, SphereError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| SphereError::Cache(format!("{}: {e}", dir.display())))?;
        Ok(BlockCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, kind: BlockKind, m: u32, n: u32) -> PathBuf {
        self.dir.join(format!("{kind}-m{m}-n{n}.json"))
    }

    /// Returns the cached matrix only if format, tags and shape all match.
    pub fn load(&self, kind: BlockKind, m: u32, n: u32, shape: (usize, usize)) -> Result<Option<Matrix>, SphereError> {
        let Ok(text) = fs::read_to_string(self.path(kind, m, n)) else {
            return Ok(None);
        };
        let Ok(doc) = serde_json::from_str::<BlockDoc>(&text) else {
            return Ok(None);
        };
        let ok = doc.format == CACHE_FORMAT && doc.kind == kind && doc.m == m && doc.n == n && doc.matrix.shape() == shape;
        Ok(ok.then_some(doc.matrix))
    }

    /// Writes through a temporary file and a rename so readers never see a
    /// partial document.
    pub fn store(&self, kind: BlockKind, m: u32, n: u32, matrix: &Matrix) -> Result<(), SphereError> {
        let err = |e: std::io::Error| SphereError::Cache(format!("{}: {e}", self.dir.display()));
        let doc = BlockDoc { format: CACHE_FORMAT.to_string(), kind, m, n, matrix: matrix.clone() };
        let text = serde_json::to_string(&doc).map_err(|e| SphereError::Cache(e.to_string()))?;
        let target = self.path(kind, m, n);
        let tmp = self.dir.join(format!(".{kind}-m{m}-n{n}.{}.tmp", std::process::id()));
        let mut file = fs::File::create(&tmp).map_err(err)?;
        file.write_all(text.as_bytes()).map_err(err)?;
        file.sync_all().map_err(err)?;
        fs::rename(&tmp, &target).map_err(err)?;
        Ok(())
    }
}
