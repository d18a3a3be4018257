//! Canonical relabeling.
//!
//! Tuples are listed in graded order: by largest entry, then kind, then
//! lexicographically. The canonical form of a structure is the relabeling
//! whose graded tuple list is lexicographically least. New labels are handed
//! out one at a time; after label `m` is placed, every tuple whose largest
//! entry is `m` is known, so partial labelings can be compared level by level
//! and only the best ones kept.

use std::cmp::Ordering;

use crate::model::Structure;

type Segment = Vec<(usize, Vec<usize>)>;

/// Longer segments win over their prefixes: they claim an earlier slot.
fn cmp_segment(a: &Segment, b: &Segment) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| b.len().cmp(&a.len()))
}

/// `class[v]` is the least vertex `u` such that swapping `u` and `v` is an
/// automorphism.
fn twin_classes(a: &Structure) -> Vec<usize> {
    let n = a.n();
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            if class[u] != u {
                continue;
            }
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(u, v);
            if a.relabel(&perm) == *a {
                class[v] = u;
                break;
            }
        }
    }
    class
}

pub fn canonical_form(a: &Structure) -> Structure {
    let n = a.n();
    let blocks: Vec<(usize, &[usize])> = a.blocks().collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (b, (_, t)) in blocks.iter().enumerate() {
        for &v in t.iter() {
            if incident[v].last() != Some(&b) {
                incident[v].push(b);
            }
        }
    }
    let class = twin_classes(a);

    // Each frontier entry lists old vertices in order of their new labels.
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    let mut label = vec![usize::MAX; n];
    for m in 0..n {
        let mut best: Option<Segment> = None;
        let mut next = Vec::new();
        for order in &frontier {
            label.fill(usize::MAX);
            for (i, &v) in order.iter().enumerate() {
                label[v] = i;
            }
            let mut tried = vec![false; n];
            for u in 0..n {
                if label[u] != usize::MAX || tried[class[u]] {
                    continue;
                }
                tried[class[u]] = true;
                label[u] = m;
                let mut segment: Segment = incident[u]
                    .iter()
                    .map(|&b| blocks[b])
                    .filter(|(_, t)| t.iter().all(|&v| label[v] != usize::MAX))
                    .map(|(kind, t)| (kind, t.iter().map(|&v| label[v]).collect()))
                    .collect();
                label[u] = usize::MAX;
                segment.sort();
                let ord = best
                    .as_ref()
                    .map_or(Ordering::Less, |b| cmp_segment(&segment, b));
                if ord == Ordering::Less {
                    best = Some(segment);
                    next.clear();
                }
                if ord != Ordering::Greater {
                    let mut extended = order.clone();
                    extended.push(u);
                    next.push(extended);
                }
            }
        }
        frontier = next;
    }
    let mut perm = vec![0; n];
    for (new, &old) in frontier[0].iter().enumerate() {
        perm[old] = new;
    }
    a.relabel(&perm)
}

pub fn is_isomorphic(a: &Structure, b: &Structure) -> bool {
    a.sig() == b.sig()
        && a.n() == b.n()
        && a.relations().iter().map(Vec::len).eq(b.relations().iter().map(Vec::len))
        && canonical_form(a) == canonical_form(b)
}
