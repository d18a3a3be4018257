//! Duality pairs, finite dualities and gaps.
//!
//! # The dual of a tree
//!
//! For a Δ-tree `T` with at least one tuple, the raw dual has one vertex for
//! every *choice function* `f` assigning to each vertex `t` of `T` a block of
//! `T` containing `t`. A tuple `(f_1, …, f_k)` of kind `i` is present unless
//! some block `b = (t_1, …, t_k)` of kind `i` is chosen at every position,
//! i.e. `f_j(t_j) = b` for all `j`.
//!
//! `T` does not map to the dual: from a homomorphism `g`, walk from a vertex
//! `t` into the block `g(t)(t)`; the tuple condition yields another vertex of
//! that block whose choice differs, and the walk never turns back, which is
//! impossible in a finite tree.
//!
//! If `T` does not map to `X`, every `x` maps to the dual: at each `t`, some
//! branch of `T` through a block at `t` cannot be mapped with `t ↦ x`;
//! choosing the smallest such branch gives a choice function, and minimality
//! makes the tuple condition hold.
//!
//! The returned dual is the core of this structure, checked against the
//! catalog oracle before it is handed out.

use crate::algebra::{product_all, product_unchecked};
use crate::enumerate::Oracle;
use crate::hom::{core_of, equivalent, first_hom, is_isomorphic, le, lt};
use crate::model::{components, is_connected, is_forest, is_tree, Signature, Structure};
use crate::{par, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityPair {
    pub tree: Structure,
    pub dual: Structure,
    pub verified_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDuality {
    pub forests: Vec<Structure>,
    pub duals: Vec<Structure>,
    pub verified_bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapCertificate {
    pub bottom: Structure,
    pub top: Structure,
    pub verified_bound: usize,
}

/// Which side of `∃F: F ≤ X  ⟺  ∀D: X ↛ D` broke.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualityFailure {
    /// Forest `forest` maps to X and X maps to dual `dual`.
    Both { forest: usize, dual: usize },
    /// No forest maps to X and X maps to no dual.
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Position in the oracle catalog.
    pub index: usize,
    pub structure: Structure,
    pub failure: DualityFailure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub bound: usize,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn same_sig(sig: &Signature, items: &[Structure]) -> Result<()> {
    for s in items {
        if s.sig() != sig {
            return Err(Error::SignatureMismatch {
                left: sig.clone(),
                right: s.sig().clone(),
            });
        }
    }
    Ok(())
}

/// Checks the duality biconditional for every structure in the oracle
/// catalog up to `n_max` vertices. The first counterexample in catalog
/// order is reported.
pub fn verify_duality_bounded(
    oracle: &Oracle,
    forests: &[Structure],
    duals: &[Structure],
    n_max: usize,
) -> Result<DualityReport> {
    same_sig(oracle.sig(), forests)?;
    same_sig(oracle.sig(), duals)?;
    let catalog = oracle.structures(n_max)?;
    let counterexample = par::find_map_first(oracle.config(), &catalog.entries, |entry| {
        let x = &entry.structure;
        let forest = forests.iter().position(|f| le(f, x));
        let dual = duals.iter().position(|d| le(x, d));
        match (forest, dual) {
            (Some(forest), Some(dual)) => Some(DualityFailure::Both { forest, dual }),
            (None, None) => Some(DualityFailure::Neither),
            _ => None,
        }
        .map(|failure| (x.clone(), failure))
    })
    .map(|(structure, failure)| Counterexample {
        index: catalog
            .entries
            .iter()
            .position(|e| e.structure == structure)
            .expect("counterexample comes from the catalog"),
        structure,
        failure,
    });
    Ok(DualityReport {
        bound: n_max,
        checked: catalog.len(),
        counterexample,
    })
}

/// Number of raw dual vertices: the product of vertex degrees.
pub fn raw_dual_size(t: &Structure) -> u128 {
    t.degrees()
        .iter()
        .map(|&d| d.max(1) as u128)
        .fold(1u128, u128::saturating_mul)
}

/// The choice-function dual of a tree, before taking its core.
pub fn raw_dual(t: &Structure, ceiling: u64) -> Result<Structure> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if t.tuple_count() == 0 {
        return Err(Error::NotAConnectedTree);
    }
    let sig = t.sig();
    let blocks: Vec<(usize, &[usize])> = t.blocks().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); t.n()];
    for (b, (_, tuple)) in blocks.iter().enumerate() {
        for &v in tuple.iter() {
            incident[v].push(b);
        }
    }
    let size = raw_dual_size(t);
    let max_arity = sig.arities().iter().copied().max().unwrap_or(2) as u32;
    let tuples_needed = size.saturating_pow(max_arity);
    if tuples_needed > ceiling as u128 {
        return Err(Error::CeilingExceeded {
            what: format!("dual of a tree with {} incidences", t.degrees().iter().sum::<usize>()),
            needed: tuples_needed,
            ceiling,
        });
    }
    let size = size as usize;

    // choice[f][t] = block chosen at vertex t by choice function f.
    let mut choice = Vec::with_capacity(size);
    for mut code in 0..size {
        let f: Vec<usize> = incident
            .iter()
            .map(|opts| {
                let pick = opts[code % opts.len()];
                code /= opts.len();
                pick
            })
            .collect();
        choice.push(f);
    }

    let mut rels = vec![Vec::new(); sig.kinds()];
    for (kind, rel) in rels.iter_mut().enumerate() {
        let arity = sig.arity(kind);
        let own: Vec<(usize, &[usize])> = blocks
            .iter()
            .enumerate()
            .filter(|(_, (k, _))| *k == kind)
            .map(|(b, (_, tuple))| (b, *tuple))
            .collect();
        let mut tuple = vec![0usize; arity];
        loop {
            let blocked = own
                .iter()
                .any(|&(b, tt)| tuple.iter().zip(tt).all(|(&f, &v)| choice[f][v] == b));
            if !blocked {
                rel.push(tuple.clone());
            }
            // odometer over size^arity
            let mut j = arity;
            loop {
                if j == 0 {
                    break;
                }
                j -= 1;
                tuple[j] += 1;
                if tuple[j] < size {
                    break;
                }
                tuple[j] = 0;
            }
            if tuple.iter().all(|&v| v == 0) {
                break;
            }
        }
    }
    Ok(Structure::from_parts(sig.clone(), size, rels))
}

fn dual_unverified(t: &Structure, ceiling: u64) -> Result<Structure> {
    Ok(core_of(&raw_dual(t, ceiling)?).0)
}

fn describe(c: &Counterexample) -> String {
    let side = match c.failure {
        DualityFailure::Both { forest, dual } => {
            format!("forest {forest} maps to it and it maps to dual {dual}")
        }
        DualityFailure::Neither => "no forest maps to it and it maps to no dual".to_string(),
    };
    format!("catalog entry {} ({side}):\n{}", c.index, c.structure)
}

/// The dual of a Δ-tree with at least one tuple, verified against every
/// structure with at most `verify_bound` vertices.
pub fn dual_of_tree(oracle: &Oracle, t: &Structure, verify_bound: usize) -> Result<DualityPair> {
    same_sig(oracle.sig(), std::slice::from_ref(t))?;
    let dual = dual_unverified(t, oracle.config().ceiling)?;
    if first_hom(t, &dual).is_some() {
        return Err(Error::VerificationFailed {
            bound: verify_bound,
            detail: "the tree maps to its constructed dual".into(),
        });
    }
    let report = verify_duality_bounded(oracle, std::slice::from_ref(t), std::slice::from_ref(&dual), verify_bound)?;
    if let Some(c) = &report.counterexample {
        return Err(Error::VerificationFailed {
            bound: verify_bound,
            detail: describe(c),
        });
    }
    Ok(DualityPair {
        tree: t.clone(),
        dual,
        verified_bound: verify_bound,
    })
}

/// Keeps the first representative of every equivalence class and drops
/// elements strictly below another one (`up = false`) or strictly above
/// another one (`up = true`).
fn extremal(items: Vec<Structure>, keep_maximal: bool) -> Vec<Structure> {
    let mut kept: Vec<Structure> = Vec::new();
    for s in items {
        if kept.iter().any(|k| equivalent(k, &s)) {
            continue;
        }
        kept.push(s);
    }
    let dominated = |a: &Structure, b: &Structure| if keep_maximal { lt(a, b) } else { lt(b, a) };
    kept.iter()
        .filter(|s| !kept.iter().any(|o| dominated(s, o)))
        .cloned()
        .collect()
}

/// The dual family of a finite set of Δ-forests.
///
/// Every choice of one nontrivial component per forest contributes the core
/// of the product of the chosen components' duals; the family is reduced to
/// its maximal elements up to homomorphic equivalence. Inputs above another
/// input are dropped first, as they do not change the duality.
pub fn generalized_dual(oracle: &Oracle, forests: &[Structure], verify_bound: usize) -> Result<FiniteDuality> {
    same_sig(oracle.sig(), forests)?;
    if let Some(index) = forests.iter().position(|f| !is_forest(f)) {
        return Err(Error::NotAForest { index });
    }
    let minimal: Vec<Structure> = extremal(forests.iter().map(|f| core_of(f).0).collect(), false);

    let mut options: Vec<Vec<Structure>> = Vec::new();
    for f in &minimal {
        let mut duals: Vec<Structure> = Vec::new();
        let mut seen: Vec<Structure> = Vec::new();
        for c in components(f) {
            if c.structure.tuple_count() == 0 || seen.iter().any(|s| is_isomorphic(s, &c.structure)) {
                continue;
            }
            seen.push(c.structure.clone());
            duals.push(dual_unverified(&c.structure, oracle.config().ceiling)?);
        }
        options.push(duals);
    }

    let mut products = Vec::new();
    if options.iter().all(|o| !o.is_empty()) {
        let mut pick = vec![0usize; options.len()];
        loop {
            let chosen: Vec<Structure> = pick.iter().zip(&options).map(|(&i, o)| o[i].clone()).collect();
            let prod = if chosen.is_empty() {
                product_all(oracle.sig(), &[])?
            } else {
                chosen[1..]
                    .iter()
                    .fold(chosen[0].clone(), |acc, d| core_of(&product_unchecked(&acc, d)).0)
            };
            products.push(core_of(&prod).0);
            let mut j = 0;
            while j < pick.len() {
                pick[j] += 1;
                if pick[j] < options[j].len() {
                    break;
                }
                pick[j] = 0;
                j += 1;
            }
            if j == pick.len() {
                break;
            }
        }
    }
    let duals = extremal(products, true);

    let report = verify_duality_bounded(oracle, &minimal, &duals, verify_bound)?;
    if let Some(c) = &report.counterexample {
        return Err(Error::VerificationFailed {
            bound: verify_bound,
            detail: describe(c),
        });
    }
    Ok(FiniteDuality {
        forests: minimal,
        duals,
        verified_bound: verify_bound,
    })
}

/// The gap below a connected tree `T`: `(core(T × dual(T)), T)`, with the
/// absence of strictly intermediate structures checked up to `verify_bound`.
pub fn gap_certificate(oracle: &Oracle, t: &Structure, verify_bound: usize) -> Result<GapCertificate> {
    if !is_tree(t) || !is_connected(t) || t.tuple_count() == 0 {
        return Err(Error::NotAConnectedTree);
    }
    let pair = dual_of_tree(oracle, t, verify_bound)?;
    let bottom = core_of(&product_unchecked(t, &pair.dual)).0;
    if !lt(&bottom, t) {
        return Err(Error::VerificationFailed {
            bound: verify_bound,
            detail: "bottom is not strictly below the tree".into(),
        });
    }
    let catalog = oracle.structures(verify_bound)?;
    let between = par::position_first(oracle.config(), &catalog.entries, |e| {
        let x = &e.structure;
        lt(&bottom, x) && lt(x, t)
    });
    if let Some(i) = between {
        return Err(Error::VerificationFailed {
            bound: verify_bound,
            detail: format!(
                "catalog entry {i} lies strictly inside the interval:\n{}",
                catalog.entries[i].structure
            ),
        });
    }
    Ok(GapCertificate {
        bottom,
        top: t.clone(),
        verified_bound: verify_bound,
    })
}
