#![allow(dead_code)]

use homorder::{Signature, Structure};
use proptest::prelude::*;

/// Digraphs on 1..=max_n vertices with arbitrary arc sets.
pub fn digraph(max_n: usize) -> impl Strategy<Value = Structure> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs: Vec<(usize, usize)> = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| (i / n, i % n))
                .collect();
            Structure::digraph(n, &arcs).unwrap()
        })
    })
}

/// Sparse structures of the given signature.
pub fn structure(sig: Signature, max_n: usize, max_tuples: usize) -> impl Strategy<Value = Structure> {
    (1..=max_n).prop_flat_map(move |n| {
        let sig = sig.clone();
        let kinds = sig.kinds();
        let max_arity = sig.arities().iter().copied().max().unwrap();
        proptest::collection::vec((0..kinds, proptest::collection::vec(0..n, max_arity)), 0..=max_tuples)
            .prop_map(move |raw| {
                let mut rels = vec![Vec::new(); kinds];
                for (k, mut t) in raw {
                    t.truncate(sig.arity(k));
                    rels[k].push(t);
                }
                Structure::new(sig.clone(), n, rels).unwrap()
            })
    })
}

/// A permutation of 0..n.
pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Every map from `a` to `b`, tested directly.
pub fn brute_force_homs(a: &Structure, b: &Structure) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = b.n().pow(a.n() as u32);
    for code in 0..total {
        let mut c = code;
        let f: Vec<usize> = (0..a.n())
            .map(|_| {
                let v = c % b.n();
                c /= b.n();
                v
            })
            .collect();
        let ok = a
            .blocks()
            .all(|(k, t)| b.has_tuple(k, &t.iter().map(|&v| f[v]).collect::<Vec<_>>()));
        if ok {
            out.push(f);
        }
    }
    out.sort();
    out
}
