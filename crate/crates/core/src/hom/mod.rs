//! Homomorphisms, comparability in the homomorphism order, cores and
//! canonical forms.

mod canon;
mod core;
mod solver;

use std::fmt;

use crate::model::Structure;
use crate::Result;

pub use self::canon::{canonical_form, is_isomorphic};
pub use self::core::{core_of, is_core};
use self::solver::Problem;

/// A total map between base sets, used as a homomorphism witness.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexMap(Vec<usize>);

impl VertexMap {
    pub fn new(images: Vec<usize>) -> Self {
        VertexMap(images)
    }

    pub fn identity(n: usize) -> Self {
        VertexMap((0..n).collect())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        VertexMap(self.0.iter().map(|&v| next.0[v]).collect())
    }

    /// Sorted distinct images.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.0.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    /// Checks totality, range and tuple preservation from `from` into `to`.
    pub fn is_homomorphism(&self, from: &Structure, to: &Structure) -> bool {
        if from.sig() != to.sig() || self.0.len() != from.n() || self.0.iter().any(|&v| v >= to.n()) {
            return false;
        }
        let mut image = Vec::new();
        from.blocks().all(|(kind, t)| {
            image.clear();
            image.extend(t.iter().map(|&v| self.0[v]));
            to.has_tuple(kind, &image)
        })
    }
}

impl fmt::Display for VertexMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (v, w) in self.0.iter().enumerate() {
            if v > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}->{w}")?;
        }
        f.write_str("}")
    }
}

/// Position of two structures relative to each other in the homomorphism order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparability {
    Equivalent {
        forward: VertexMap,
        backward: VertexMap,
    },
    StrictlyBelow {
        forward: VertexMap,
    },
    StrictlyAbove {
        backward: VertexMap,
    },
    Incomparable,
}

impl Comparability {
    pub fn label(&self) -> &'static str {
        match self {
            Comparability::Equivalent { .. } => "equivalent",
            Comparability::StrictlyBelow { .. } => "strictly-below",
            Comparability::StrictlyAbove { .. } => "strictly-above",
            Comparability::Incomparable => "incomparable",
        }
    }

    pub fn is_incomparable(&self) -> bool {
        matches!(self, Comparability::Incomparable)
    }
}

impl fmt::Display for Comparability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// First homomorphism `a → b` in search order, if any.
pub fn find_hom(a: &Structure, b: &Structure) -> Result<Option<VertexMap>> {
    a.check_same_sig(b)?;
    Ok(first_hom(a, b))
}

pub(crate) fn first_hom(a: &Structure, b: &Structure) -> Option<VertexMap> {
    let mut found = None;
    Problem::new(a, b).search(&mut |map| {
        found = Some(VertexMap(map.to_vec()));
        false
    });
    found
}

/// `a ≤ b` in the homomorphism order. Signatures must agree.
pub(crate) fn le(a: &Structure, b: &Structure) -> bool {
    first_hom(a, b).is_some()
}

/// Whether some homomorphism `a → b` exists.
pub fn exists(a: &Structure, b: &Structure) -> Result<bool> {
    a.check_same_sig(b)?;
    Ok(le(a, b))
}

pub fn count_homs(a: &Structure, b: &Structure) -> Result<u64> {
    a.check_same_sig(b)?;
    let mut count = 0u64;
    Problem::new(a, b).search(&mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// All homomorphisms `a → b` in lexicographic order of their image vectors.
pub fn enumerate_homs(a: &Structure, b: &Structure) -> Result<Vec<VertexMap>> {
    a.check_same_sig(b)?;
    let mut all = Vec::new();
    Problem::new(a, b).search(&mut |map| {
        all.push(VertexMap(map.to_vec()));
        true
    });
    all.sort();
    Ok(all)
}

pub fn compare(a: &Structure, b: &Structure) -> Result<Comparability> {
    a.check_same_sig(b)?;
    Ok(compare_unchecked(a, b))
}

pub(crate) fn compare_unchecked(a: &Structure, b: &Structure) -> Comparability {
    match (first_hom(a, b), first_hom(b, a)) {
        (Some(forward), Some(backward)) => Comparability::Equivalent { forward, backward },
        (Some(forward), None) => Comparability::StrictlyBelow { forward },
        (None, Some(backward)) => Comparability::StrictlyAbove { backward },
        (None, None) => Comparability::Incomparable,
    }
}

pub(crate) fn equivalent(a: &Structure, b: &Structure) -> bool {
    le(a, b) && le(b, a)
}

/// `a < b`: a maps to b but not back.
pub(crate) fn lt(a: &Structure, b: &Structure) -> bool {
    le(a, b) && !le(b, a)
}

pub(crate) fn incomparable(a: &Structure, b: &Structure) -> bool {
    !le(a, b) && !le(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{k1, path, transitive_tournament};
    use crate::model::Signature;

    fn brute_force(a: &Structure, b: &Structure) -> Vec<VertexMap> {
        let total = b.n().pow(a.n() as u32);
        (0..total)
            .map(|mut code| {
                let mut map = vec![0; a.n()];
                for slot in map.iter_mut() {
                    *slot = code % b.n();
                    code /= b.n();
                }
                VertexMap(map)
            })
            .filter(|m| m.is_homomorphism(a, b))
            .collect()
    }

    #[test]
    fn edge_into_two_path() {
        assert_eq!(
            find_hom(&path(1), &path(2)).unwrap(),
            Some(VertexMap::new(vec![0, 1]))
        );
        let mut all = brute_force(&path(1), &path(2));
        all.sort();
        assert_eq!(all, enumerate_homs(&path(1), &path(2)).unwrap());
        assert_eq!(all[0], VertexMap::new(vec![0, 1]));
    }

    #[test]
    fn two_path_does_not_map_to_an_arc() {
        assert!(brute_force(&path(2), &transitive_tournament(2)).is_empty());
        assert_eq!(find_hom(&path(2), &transitive_tournament(2)).unwrap(), None);
    }

    #[test]
    fn identity_is_a_homomorphism() {
        let tt3 = transitive_tournament(3);
        assert!(VertexMap::identity(3).is_homomorphism(&tt3, &tt3));
        assert!(find_hom(&tt3, &tt3).unwrap().is_some());
    }

    #[test]
    fn counts() {
        let c3 = Structure::digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(count_homs(&path(1), &path(1)).unwrap(), 1);
        assert_eq!(brute_force(&path(1), &c3).len(), 3);
        assert_eq!(count_homs(&path(1), &c3).unwrap(), 3);
        let b = transitive_tournament(3);
        assert_eq!(count_homs(&k1(&Signature::digraph()), &b).unwrap(), 3);
        assert_eq!(enumerate_homs(&k1(&Signature::digraph()), &b).unwrap().len(), 3);
    }

    #[test]
    fn comparisons() {
        assert_eq!(compare(&path(1), &path(2)).unwrap().label(), "strictly-below");
        assert_eq!(compare(&path(2), &path(1)).unwrap().label(), "strictly-above");
        assert_eq!(compare(&path(3), &path(3)).unwrap().label(), "equivalent");
        assert_eq!(
            compare(&path(3), &transitive_tournament(3)).unwrap(),
            Comparability::Incomparable
        );
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let ternary = Structure::discrete(Signature::new(vec![3]).unwrap(), 1).unwrap();
        assert!(matches!(
            find_hom(&path(1), &ternary),
            Err(crate::Error::SignatureMismatch { .. })
        ));
        assert!(compare(&ternary, &path(1)).is_err());
        assert!(count_homs(&ternary, &path(1)).is_err());
    }

    #[test]
    fn repeated_source_vertex_needs_matching_target_entries() {
        let sig = Signature::new(vec![3]).unwrap();
        let a = Structure::new(sig.clone(), 2, vec![vec![vec![0, 1, 0]]]).unwrap();
        let b = Structure::new(sig.clone(), 3, vec![vec![vec![0, 1, 2]]]).unwrap();
        assert_eq!(find_hom(&a, &b).unwrap(), None);
        let c = Structure::new(sig, 3, vec![vec![vec![0, 1, 2], vec![2, 1, 2]]]).unwrap();
        assert_eq!(find_hom(&a, &c).unwrap(), Some(VertexMap::new(vec![2, 1])));
    }

    #[test]
    fn composition_and_image() {
        let f = VertexMap::new(vec![1, 2]);
        let g = VertexMap::new(vec![0, 0, 1]);
        assert_eq!(f.then(&g), VertexMap::new(vec![0, 1]));
        assert_eq!(g.image(), vec![0, 1]);
        assert_eq!(f.to_string(), "{0->1, 1->2}");
    }
}
