//! Labeled enumeration over tuple slots.
//!
//! A labeled structure on `n` vertices is a bitmask over all possible tuples
//! ("slots"). Slots are listed in the graded order used by
//! [`canonical_form`](crate::hom::canonical_form), slot 0 being the most
//! significant bit, so the largest mask in an isomorphism class is exactly
//! the canonical representative.

use crate::model::{Signature, Structure};
use crate::{par, Config};

pub(crate) struct SlotSpace {
    sig: Signature,
    n: usize,
    /// (kind, tuple) in graded order.
    slots: Vec<(usize, Vec<usize>)>,
    /// For every vertex permutation, where each bit position moves to.
    moves: Vec<Vec<u8>>,
}

pub(crate) fn all_tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect();
    }
    out
}

/// Number of tuple slots for `n` vertices, saturating.
pub(crate) fn slot_count(sig: &Signature, n: usize) -> u128 {
    sig.arities()
        .iter()
        .map(|&a| (n as u128).saturating_pow(a as u32))
        .fold(0u128, u128::saturating_add)
}

impl SlotSpace {
    pub(crate) fn new(sig: &Signature, n: usize) -> Self {
        let mut slots: Vec<(usize, Vec<usize>)> = sig
            .arities()
            .iter()
            .enumerate()
            .flat_map(|(k, &a)| all_tuples(n, a).into_iter().map(move |t| (k, t)))
            .collect();
        slots.sort_by(|(ka, ta), (kb, tb)| {
            (ta.iter().max(), ka, ta).cmp(&(tb.iter().max(), kb, tb))
        });
        assert!(slots.len() <= 63, "slot space too large for a mask");
        let width = slots.len();
        let moves = permutations(n)
            .into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &v)| i != v))
            .map(|perm| {
                let mut moved = vec![0u8; width];
                for (idx, (k, t)) in slots.iter().enumerate() {
                    let image: Vec<usize> = t.iter().map(|&v| perm[v]).collect();
                    let target = slots
                        .iter()
                        .position(|(k2, t2)| k2 == k && *t2 == image)
                        .expect("permuted slot exists");
                    moved[width - 1 - idx] = (width - 1 - target) as u8;
                }
                moved
            })
            .collect();
        SlotSpace {
            sig: sig.clone(),
            n,
            slots,
            moves,
        }
    }

    pub(crate) fn width(&self) -> usize {
        self.slots.len()
    }

    fn is_canonical(&self, mask: u64) -> bool {
        self.moves.iter().all(|moved| {
            let mut image = 0u64;
            let mut bits = mask;
            while bits != 0 {
                let p = bits.trailing_zeros() as usize;
                image |= 1 << moved[p];
                bits &= bits - 1;
            }
            image <= mask
        })
    }

    pub(crate) fn structure(&self, mask: u64) -> Structure {
        let width = self.width();
        let mut rels = vec![Vec::new(); self.sig.kinds()];
        for (idx, (k, t)) in self.slots.iter().enumerate() {
            if mask >> (width - 1 - idx) & 1 == 1 {
                rels[*k].push(t.clone());
            }
        }
        Structure::from_parts(self.sig.clone(), self.n, rels)
    }

    /// One canonical structure per isomorphism class on exactly `n` vertices.
    pub(crate) fn canonical_structures(&self, cfg: &Config) -> Vec<Structure> {
        par::filter_map_range(cfg, 1u64 << self.width(), |mask| {
            self.is_canonical(mask).then(|| self.structure(mask))
        })
    }
}
