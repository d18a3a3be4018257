//! Brute-force catalogs: all structures, all cores and all trees of a
//! signature up to a vertex bound, one canonical representative per
//! isomorphism class. These catalogs are the oracle behind every bounded
//! verification in the crate.

mod labeled;
mod store;
mod trees;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use crate::hom::is_core;
use crate::model::{is_balanced, is_connected, is_forest, Signature, Structure};
use crate::{par, Config, Error, Result};

pub use store::{load_catalog, save_catalog, GENERATOR_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogKind {
    Structures,
    Cores,
    Trees,
    /// Trees with at most one tuple of each kind.
    OneEdgeTrees,
}

impl CatalogKind {
    pub fn name(self) -> &'static str {
        match self {
            CatalogKind::Structures => "structures",
            CatalogKind::Cores => "cores",
            CatalogKind::Trees => "trees",
            CatalogKind::OneEdgeTrees => "one-edge-trees",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [
            CatalogKind::Structures,
            CatalogKind::Cores,
            CatalogKind::Trees,
            CatalogKind::OneEdgeTrees,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Flags {
    pub core: bool,
    pub tree: bool,
    pub forest: bool,
    pub connected: bool,
    pub balanced: bool,
}

impl Flags {
    pub fn of(s: &Structure) -> Self {
        let connected = is_connected(s);
        let forest = is_forest(s);
        Flags {
            core: is_core(s),
            tree: connected && forest,
            forest,
            connected,
            balanced: is_balanced(s).is_some(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub structure: Structure,
    pub flags: Flags,
}

/// Pairwise non-isomorphic canonical structures ordered by vertex count,
/// then by the structure order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub sig: Signature,
    pub n_max: usize,
    pub kind: CatalogKind,
    pub entries: Vec<Entry>,
}

impl Catalog {
    fn build(sig: &Signature, n_max: usize, kind: CatalogKind, mut items: Vec<Structure>, cfg: &Config) -> Self {
        items.sort();
        let flags = par::map(cfg, &items, Flags::of);
        let entries = items
            .into_iter()
            .zip(flags)
            .map(|(structure, flags)| Entry { structure, flags })
            .collect();
        Catalog {
            sig: sig.clone(),
            n_max,
            kind,
            entries,
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn structures(&self) -> Vec<Structure> {
        self.entries.iter().map(|e| e.structure.clone()).collect()
    }

    /// The sub-catalog of cores.
    pub fn cores(&self) -> Catalog {
        Catalog {
            sig: self.sig.clone(),
            n_max: self.n_max,
            kind: CatalogKind::Cores,
            entries: self.entries.iter().filter(|e| e.flags.core).cloned().collect(),
        }
    }
}

/// Number of labeled candidates visited by [`all_structures`].
pub fn labeled_candidates(sig: &Signature, n_max: usize) -> u128 {
    (1..=n_max)
        .map(|n| {
            let slots = labeled::slot_count(sig, n);
            if slots >= 127 {
                u128::MAX
            } else {
                1u128 << slots
            }
        })
        .fold(0u128, u128::saturating_add)
}

fn check_bound(n_max: usize) -> Result<()> {
    if n_max == 0 {
        return Err(Error::Precondition("vertex bound must be at least 1".into()));
    }
    Ok(())
}

/// Every isomorphism class of structures with at most `n_max` vertices.
pub fn all_structures(sig: &Signature, n_max: usize, cfg: &Config) -> Result<Catalog> {
    check_bound(n_max)?;
    let needed = labeled_candidates(sig, n_max);
    if needed > cfg.ceiling as u128 || labeled::slot_count(sig, n_max) > 63 {
        return Err(Error::CeilingExceeded {
            what: format!("enumerating type ({sig}) up to {n_max} vertices"),
            needed,
            ceiling: cfg.ceiling,
        });
    }
    let items = (1..=n_max)
        .flat_map(|n| labeled::SlotSpace::new(sig, n).canonical_structures(cfg))
        .collect();
    Ok(Catalog::build(sig, n_max, CatalogKind::Structures, items, cfg))
}

pub fn all_cores(sig: &Signature, n_max: usize, cfg: &Config) -> Result<Catalog> {
    Ok(all_structures(sig, n_max, cfg)?.cores())
}

/// Every Δ-tree with at most `n_max` vertices.
pub fn all_trees(sig: &Signature, n_max: usize, cfg: &Config) -> Result<Catalog> {
    check_bound(n_max)?;
    let items = trees::grow(sig, n_max, false);
    Ok(Catalog::build(sig, n_max, CatalogKind::Trees, items, cfg))
}

/// The finite family of Δ-trees with at most one tuple of each kind.
pub fn all_trees_one_edge_per_kind(sig: &Signature, cfg: &Config) -> Catalog {
    let bound = trees::one_per_kind_bound(sig);
    let items = trees::grow(sig, bound, true);
    Catalog::build(sig, bound, CatalogKind::OneEdgeTrees, items, cfg)
}

/// Lazily built, shared catalogs for one signature.
///
/// Catalogs are built on first use and kept for the lifetime of the oracle.
/// With a cache directory they are also persisted between runs.
pub struct Oracle {
    sig: Signature,
    config: Config,
    cache_dir: Option<PathBuf>,
    built: Mutex<BTreeMap<(CatalogKind, usize), Arc<Catalog>>>,
}

impl Oracle {
    pub fn new(sig: Signature, config: Config) -> Self {
        Oracle {
            sig,
            config,
            cache_dir: None,
            built: Mutex::new(BTreeMap::new()),
        }
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    fn cache_path(&self, kind: CatalogKind, n: usize) -> Option<PathBuf> {
        let sig = self.sig.arities().iter().map(|a| a.to_string()).collect::<Vec<_>>().join("_");
        self.cache_dir
            .as_deref()
            .map(|d| d.join(format!("{}-t{sig}-n{n}-v{GENERATOR_VERSION}", kind.name())))
    }

    fn get(&self, kind: CatalogKind, n: usize, build: impl FnOnce() -> Result<Catalog>) -> Result<Arc<Catalog>> {
        let mut built = self.built.lock().expect("oracle lock poisoned");
        if let Some(c) = built.get(&(kind, n)) {
            return Ok(Arc::clone(c));
        }
        let path = self.cache_path(kind, n);
        let cached = path
            .as_deref()
            .filter(|p| p.is_dir())
            .and_then(|p| load_catalog(p).ok())
            .filter(|c| c.sig == self.sig && c.n_max == n && c.kind == kind);
        let catalog = match cached {
            Some(c) => c,
            None => {
                let c = build()?;
                if let Some(p) = path.as_deref() {
                    save_catalog(&c, p)?;
                }
                c
            }
        };
        let catalog = Arc::new(catalog);
        built.insert((kind, n), Arc::clone(&catalog));
        Ok(catalog)
    }

    pub fn structures(&self, n_max: usize) -> Result<Arc<Catalog>> {
        self.get(CatalogKind::Structures, n_max, || {
            all_structures(&self.sig, n_max, &self.config)
        })
    }

    pub fn cores(&self, n_max: usize) -> Result<Arc<Catalog>> {
        let all = self.structures(n_max)?;
        self.get(CatalogKind::Cores, n_max, || Ok(all.cores()))
    }

    pub fn trees(&self, n_max: usize) -> Result<Arc<Catalog>> {
        self.get(CatalogKind::Trees, n_max, || {
            all_trees(&self.sig, n_max, &self.config)
        })
    }
}

impl std::fmt::Debug for Oracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Oracle")
            .field("sig", &self.sig)
            .field("config", &self.config)
            .field("cache_dir", &self.cache_dir)
            .finish()
    }
}

/// Used by the CLI to report where a catalog would be cached.
pub fn cache_key(kind: CatalogKind, sig: &Signature, n_max: usize, dir: &Path) -> PathBuf {
    Oracle::new(sig.clone(), Config::default())
        .with_cache_dir(dir)
        .cache_path(kind, n_max)
        .expect("cache dir is set")
}
