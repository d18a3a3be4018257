//! Antichains of cores, maximality, `D*`, smallness, cut-points and the
//! antichain splitting procedure.

mod small;
mod split;

pub use small::{is_small_bounded, SmallnessVerdict};
pub use split::{
    split_antichain, ContractCheck, Placement, Rejection, SplitOptions, SplitResult, SplitVerdict, Witness,
    WitnessSource,
};

use crate::algebra::{product_unchecked, sum_all, sum_unchecked};
use crate::duality::{dual_of_tree, verify_duality_bounded};
use crate::enumerate::{all_trees_one_edge_per_kind, Oracle};
use crate::hom::{core_of, incomparable, le, lt};
use crate::model::{is_connected, is_tree, Signature, Structure};
use crate::{par, Config, Error, Result};

/// Pairwise incomparable cores, in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antichain {
    elements: Vec<Structure>,
}

impl Antichain {
    /// Replaces every input by its core and checks incomparability.
    pub fn new(elements: Vec<Structure>) -> Result<Self> {
        let first = elements
            .first()
            .ok_or_else(|| Error::Precondition("an antichain needs at least one element".into()))?;
        for e in &elements[1..] {
            first.check_same_sig(e)?;
        }
        let elements: Vec<Structure> = elements.iter().map(|e| core_of(e).0).collect();
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if !incomparable(&elements[i], &elements[j]) {
                    return Err(Error::NotAnAntichain { first: i, second: j });
                }
            }
        }
        Ok(Antichain { elements })
    }

    pub fn elements(&self) -> &[Structure] {
        &self.elements
    }

    pub fn sig(&self) -> &Signature {
        self.elements[0].sig()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn reversed(&self) -> Antichain {
        let mut elements = self.elements.clone();
        elements.reverse();
        Antichain { elements }
    }
}

pub fn is_antichain(items: &[Structure]) -> Result<bool> {
    for w in items.windows(2) {
        w[0].check_same_sig(&w[1])?;
    }
    Ok((0..items.len()).all(|i| (i + 1..items.len()).all(|j| incomparable(&items[i], &items[j]))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalityReport {
    pub bound: usize,
    pub checked: usize,
    /// First catalog core incomparable with every element.
    pub witness: Option<Structure>,
}

impl MaximalityReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn is_maximal_antichain_bounded(oracle: &Oracle, a: &Antichain, n_max: usize) -> Result<MaximalityReport> {
    a.elements[0].check_same_sig(&crate::algebra::k1(oracle.sig()))?;
    let catalog = oracle.cores(n_max)?;
    let witness = par::find_map_first(oracle.config(), &catalog.entries, |e| {
        let x = &e.structure;
        a.elements
            .iter()
            .all(|el| incomparable(el, x))
            .then(|| x.clone())
    });
    Ok(MaximalityReport {
        bound: n_max,
        checked: catalog.len(),
        witness,
    })
}

/// `F ∪ {D ∈ D : D maps to no F}` for a duality verified up to `verify_bound`.
pub fn antichain_from_duality(
    oracle: &Oracle,
    forests: &[Structure],
    duals: &[Structure],
    verify_bound: usize,
) -> Result<Antichain> {
    let report = verify_duality_bounded(oracle, forests, duals, verify_bound)?;
    if let Some(c) = report.counterexample {
        return Err(Error::VerificationFailed {
            bound: verify_bound,
            detail: format!("catalog entry {} breaks the duality:\n{}", c.index, c.structure),
        });
    }
    let mut elements: Vec<Structure> = forests.to_vec();
    elements.extend(duals.iter().filter(|d| !forests.iter().any(|f| le(d, f))).cloned());
    Antichain::new(elements)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DStar {
    /// One component per tree with at most one tuple of each kind.
    pub components: Vec<Structure>,
    pub structure: Structure,
    pub core: Structure,
}

pub fn d_star(sig: &Signature, cfg: &Config) -> Result<DStar> {
    let components = all_trees_one_edge_per_kind(sig, cfg).structures();
    let structure = sum_all(&components)?;
    let core = core_of(&structure).0;
    Ok(DStar {
        components,
        structure,
        core,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutpointReport {
    pub tree: Structure,
    pub dual: Structure,
    /// `core(T × D)`: every `X < T` maps to it.
    pub below: Structure,
    /// `core(T + D)`: it maps to every `X > D`.
    pub above: Structure,
    pub bound: usize,
    pub checked: usize,
    pub below_failure: Option<Structure>,
    pub above_failure: Option<Structure>,
}

impl CutpointReport {
    pub fn passed(&self) -> bool {
        self.below_failure.is_none() && self.above_failure.is_none()
    }
}

pub fn cutpoint_certificates(oracle: &Oracle, t: &Structure, verify_bound: usize) -> Result<CutpointReport> {
    if !is_tree(t) || !is_connected(t) || t.tuple_count() == 0 {
        return Err(Error::NotAConnectedTree);
    }
    let dual = dual_of_tree(oracle, t, verify_bound)?.dual;
    let below = core_of(&product_unchecked(t, &dual)).0;
    let above = core_of(&sum_unchecked(t, &dual)).0;
    let catalog = oracle.cores(verify_bound)?;
    let cfg = oracle.config();
    let below_failure = par::find_map_first(cfg, &catalog.entries, |e| {
        let x = &e.structure;
        (lt(x, t) && !le(x, &below)).then(|| x.clone())
    });
    let above_failure = par::find_map_first(cfg, &catalog.entries, |e| {
        let x = &e.structure;
        (lt(&dual, x) && !le(&above, x)).then(|| x.clone())
    });
    Ok(CutpointReport {
        tree: t.clone(),
        dual,
        below,
        above,
        bound: verify_bound,
        checked: catalog.len(),
        below_failure,
        above_failure,
    })
}
