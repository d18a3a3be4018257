//! On-disk catalogs: a directory of structure files plus an `index` file.
//!
//! ```text
//! # homorder catalog
//! kind structures
//! type 2
//! n_max 2
//! version 1
//! 0000.ds core=1 tree=1 forest=1 connected=1 balanced=1
//! 0001.ds core=1 tree=0 forest=0 connected=1 balanced=0
//! ```
//!
//! Directories are written under a temporary name and renamed into place.

use std::fs;
use std::path::Path;

use super::{Catalog, CatalogKind, Entry, Flags};
use crate::model::{parse, Signature};
use crate::{Error, Result};

/// Bumped whenever catalog contents or ordering change.
pub const GENERATOR_VERSION: u32 = 1;

const FLAG_NAMES: [&str; 5] = ["core", "tree", "forest", "connected", "balanced"];

fn flag_values(f: &Flags) -> [bool; 5] {
    [f.core, f.tree, f.forest, f.connected, f.balanced]
}

pub fn save_catalog(catalog: &Catalog, dir: &Path) -> Result<()> {
    let parent = dir.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    let name = dir
        .file_name()
        .ok_or_else(|| Error::io(dir, "catalog path has no directory name"))?;
    let tmp = parent.join(format!(".{}.tmp-{}", name.to_string_lossy(), std::process::id()));
    if tmp.exists() {
        fs::remove_dir_all(&tmp).map_err(|e| Error::io(&tmp, e))?;
    }
    fs::create_dir(&tmp).map_err(|e| Error::io(&tmp, e))?;

    let mut index = format!(
        "# homorder catalog\nkind {}\ntype {}\nn_max {}\nversion {GENERATOR_VERSION}\n",
        catalog.kind.name(),
        catalog.sig,
        catalog.n_max
    );
    for (i, entry) in catalog.entries.iter().enumerate() {
        let file = format!("{i:04}.ds");
        let path = tmp.join(&file);
        fs::write(&path, entry.structure.to_text()).map_err(|e| Error::io(&path, e))?;
        index.push_str(&file);
        for (name, value) in FLAG_NAMES.iter().zip(flag_values(&entry.flags)) {
            index.push_str(&format!(" {name}={}", u8::from(value)));
        }
        index.push('\n');
    }
    let path = tmp.join("index");
    fs::write(&path, index).map_err(|e| Error::io(&path, e))?;

    match fs::rename(&tmp, dir) {
        Ok(()) => Ok(()),
        // Another writer won the race; its catalog is identical.
        Err(_) if dir.join("index").is_file() => {
            fs::remove_dir_all(&tmp).map_err(|e| Error::io(&tmp, e))
        }
        Err(e) => Err(Error::io(dir, e)),
    }
}

fn bad(dir: &Path, message: impl Into<String>) -> Error {
    Error::io(&dir.join("index"), message.into())
}

pub fn load_catalog(dir: &Path) -> Result<Catalog> {
    let index_path = dir.join("index");
    let text = fs::read_to_string(&index_path).map_err(|e| Error::io(&index_path, e))?;
    let mut kind = None;
    let mut sig = None;
    let mut n_max = None;
    let mut version = None;
    let mut entries = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        match key {
            "kind" => kind = CatalogKind::from_name(rest),
            "type" => {
                let arities = rest
                    .split_whitespace()
                    .map(|w| w.parse::<usize>().map_err(|_| bad(dir, "bad arity")))
                    .collect::<Result<Vec<_>>>()?;
                sig = Some(Signature::new(arities)?);
            }
            "n_max" => n_max = rest.parse::<usize>().ok(),
            "version" => version = rest.parse::<u32>().ok(),
            file => {
                let path = dir.join(file);
                let body = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
                let structure = parse(&body)?;
                let mut values = [false; 5];
                for token in rest.split_whitespace() {
                    let (name, value) = token
                        .split_once('=')
                        .ok_or_else(|| bad(dir, format!("bad flag `{token}`")))?;
                    let slot = FLAG_NAMES
                        .iter()
                        .position(|&f| f == name)
                        .ok_or_else(|| bad(dir, format!("unknown flag `{name}`")))?;
                    values[slot] = value == "1";
                }
                let [core, tree, forest, connected, balanced] = values;
                let flags = Flags { core, tree, forest, connected, balanced };
                entries.push(Entry { structure, flags });
            }
        }
    }
    if version != Some(GENERATOR_VERSION) {
        return Err(bad(dir, "missing or stale generator version"));
    }
    let sig = sig.ok_or_else(|| bad(dir, "missing type"))?;
    if entries.iter().any(|e| e.structure.sig() != &sig) {
        return Err(bad(dir, "entry signature differs from the catalog type"));
    }
    Ok(Catalog {
        sig,
        n_max: n_max.ok_or_else(|| bad(dir, "missing n_max"))?,
        kind: kind.ok_or_else(|| bad(dir, "missing or unknown kind"))?,
        entries,
    })
}
