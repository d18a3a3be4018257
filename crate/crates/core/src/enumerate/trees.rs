//! Δ-trees grown from `K1` by attaching one block at a time.
//!
//! Every Δ-tree with at least one block has a block meeting the rest of the
//! tree in at most one vertex, so attaching a block at a single existing
//! vertex (all other positions fresh) reaches every tree.

use std::collections::BTreeSet;

use crate::algebra::k1;
use crate::hom::canonical_form;
use crate::model::{Signature, Structure};

fn attach(t: &Structure, kind: usize, at: usize, position: usize) -> Structure {
    let arity = t.sig().arity(kind);
    let mut fresh = t.n();
    let tuple: Vec<usize> = (0..arity)
        .map(|j| {
            if j == position {
                at
            } else {
                fresh += 1;
                fresh - 1
            }
        })
        .collect();
    let mut rels = t.relations().to_vec();
    rels[kind].push(tuple);
    Structure::from_parts(t.sig().clone(), fresh, rels)
}

/// Canonical Δ-trees with at most `n_max` vertices; with `one_per_kind`, only
/// those having at most one tuple of each kind. Sorted by the structure order.
pub(crate) fn grow(sig: &Signature, n_max: usize, one_per_kind: bool) -> Vec<Structure> {
    let root = k1(sig);
    let mut seen = BTreeSet::from([root.clone()]);
    let mut layer = vec![root];
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for t in &layer {
            for kind in 0..sig.kinds() {
                let arity = sig.arity(kind);
                if t.n() + arity - 1 > n_max || (one_per_kind && !t.relation(kind).is_empty()) {
                    continue;
                }
                for at in 0..t.n() {
                    for position in 0..arity {
                        let grown = canonical_form(&attach(t, kind, at, position));
                        if !seen.contains(&grown) {
                            seen.insert(grown.clone());
                            next.insert(grown);
                        }
                    }
                }
            }
        }
        layer = next.into_iter().collect();
    }
    seen.into_iter().collect()
}

/// Largest vertex count of a tree with at most one tuple per kind.
pub(crate) fn one_per_kind_bound(sig: &Signature) -> usize {
    1 + sig.arities().iter().map(|a| a - 1).sum::<usize>()
}
