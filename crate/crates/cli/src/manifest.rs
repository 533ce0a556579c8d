//! On-disk layout of an extremal family: `manifest.json` plus one
//! interchange file per representative, in canonical-key order.

use std::fs;
use std::path::{Path, PathBuf};

use antiramsey_core::oracle::ExtremalFamily;
use serde::{Deserialize, Serialize};

use crate::format;

pub const MANIFEST_NAME: &str = "manifest.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partite_sizes: Option<Vec<usize>>,
    pub vertex_count: usize,
    pub k: usize,
    pub ar_value: u64,
    pub count: usize,
    pub complete: bool,
    /// File names relative to the manifest.
    pub representatives: Vec<String>,
}

pub fn representative_name(i: usize) -> String {
    format!("rep_{i:04}.json")
}

/// Writes the family into `dir` and returns the manifest path.
pub fn write_family(dir: &Path, fam: &ExtremalFamily) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let mut names = Vec::with_capacity(fam.representatives.len());
    for (i, cg) in fam.representatives.iter().enumerate() {
        let name = representative_name(i);
        format::write_coloring(&dir.join(&name), cg, None)?;
        names.push(name);
    }
    let manifest = Manifest {
        partite_sizes: fam.host.part_sizes().map(<[usize]>::to_vec),
        vertex_count: fam.host.vertex_count(),
        k: fam.k,
        ar_value: fam.ar_value,
        count: names.len(),
        complete: fam.complete,
        representatives: names,
    };
    let path = dir.join(MANIFEST_NAME);
    let mut text = serde_json::to_string_pretty(&manifest).expect("serializable");
    text.push('\n');
    fs::write(&path, text)?;
    Ok(path)
}

pub fn read_manifest(path: &Path) -> Result<Manifest, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}
