//! On-disk cache of Coxeter complexes, keyed by root system and tool version.

use std::fs;
use std::path::{Path, PathBuf};

use log::{debug, warn};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use toricrep::coxeter::{build_coxeter_complex_with, BuildOptions, CoxeterComplex};
use toricrep::{RootSystem, SimplicialComplex};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize, Deserialize)]
struct Entry {
    root_system: String,
    rank: usize,
    version: String,
    complex: SimplicialComplex,
    ray_coords: Vec<Vec<i64>>,
    ray_type: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    sha256: String,
    entry: Entry,
}

fn digest(entry: &Entry) -> String {
    let bytes = serde_json::to_vec(entry).expect("entry serializes");
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug)]
pub struct ComplexCache {
    dir: Option<PathBuf>,
}

impl ComplexCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self { dir }
    }

    pub fn disabled() -> Self {
        Self { dir: None }
    }

    /// Cache file for `rs`, named by the hash of `(type, rank, version)`.
    pub fn path_for(&self, rs: &RootSystem) -> Option<PathBuf> {
        let key = format!("coxeter:{:?}:{}:{}", rs.kind(), rs.rank(), TOOL_VERSION);
        let name = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.as_ref().map(|d| d.join(format!("{name}.json")))
    }

    pub fn load(&self, rs: &RootSystem) -> Option<CoxeterComplex> {
        let path = self.path_for(rs)?;
        if !path.exists() {
            return None;
        }
        match read_entry(&path, rs) {
            Ok(cx) => {
                debug!("loaded {rs} from {}", path.display());
                Some(cx)
            }
            Err(reason) => {
                warn!(
                    "ignoring cache file {}: {reason}; recomputing",
                    path.display()
                );
                None
            }
        }
    }

    pub fn store(&self, cx: &CoxeterComplex) {
        let Some(path) = self.path_for(&cx.root_system) else {
            return;
        };
        let entry = Entry {
            root_system: cx.root_system.to_string(),
            rank: cx.root_system.rank(),
            version: TOOL_VERSION.to_string(),
            complex: cx.complex.clone(),
            ray_coords: cx.ray_coords.clone(),
            ray_type: cx.ray_type.clone(),
        };
        let file = CacheFile {
            sha256: digest(&entry),
            entry,
        };
        if let Err(e) = write_atomic(
            &path,
            &serde_json::to_vec(&file).expect("cache file serializes"),
        ) {
            warn!("could not write cache file {}: {e}", path.display());
        }
    }

    pub fn get_or_build(
        &self,
        rs: &RootSystem,
        options: BuildOptions,
    ) -> toricrep::Result<CoxeterComplex> {
        if let Some(cx) = self.load(rs) {
            return Ok(cx);
        }
        let cx = build_coxeter_complex_with(rs, options)?;
        self.store(&cx);
        Ok(cx)
    }
}

fn read_entry(path: &Path, rs: &RootSystem) -> Result<CoxeterComplex, String> {
    let bytes = fs::read(path).map_err(|e| e.to_string())?;
    let file: CacheFile =
        serde_json::from_slice(&bytes).map_err(|e| format!("unreadable ({e})"))?;
    if digest(&file.entry) != file.sha256 {
        return Err("hash mismatch".into());
    }
    let e = file.entry;
    if e.root_system != rs.to_string() || e.rank != rs.rank() || e.version != TOOL_VERSION {
        return Err("key mismatch".into());
    }
    if e.ray_coords.len() != e.complex.n_vertices() || e.ray_type.len() != e.complex.n_vertices() {
        return Err("inconsistent vertex data".into());
    }
    Ok(CoxeterComplex {
        root_system: rs.clone(),
        complex: e.complex,
        ray_coords: e.ray_coords,
        fundamental_vertices: (0..rs.rank() as u32).collect(),
        ray_type: e.ray_type,
    })
}

fn write_atomic(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, bytes)?;
    fs::rename(&tmp, path)
}
