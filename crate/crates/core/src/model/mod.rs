//! Δ-structures: a finite base set `{0, …, n-1}` with one set of tuples per
//! relation kind, the arities of which are fixed by a [`Signature`].

mod analysis;
mod format;

use std::fmt;

use crate::{Error, Result};

pub use analysis::{
    components, directed_shadow, incidence_graph, is_balanced, is_connected, is_forest, is_tree,
    Component, IncidenceGraph, LevelAssignment,
};
pub use format::parse;

/// A type Δ: the arity of every relation kind, indexed by position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(arities: Vec<usize>) -> Result<Self> {
        if arities.is_empty() {
            return Err(Error::EmptySignature);
        }
        if let Some((kind, &arity)) = arities.iter().enumerate().find(|(_, &a)| a < 2) {
            return Err(Error::ArityTooSmall { kind, arity });
        }
        Ok(Signature(arities))
    }

    /// The signature `(2)` of digraphs.
    pub fn digraph() -> Self {
        Signature(vec![2])
    }

    pub fn arities(&self) -> &[usize] {
        &self.0
    }

    pub fn kinds(&self) -> usize {
        self.0.len()
    }

    pub fn arity(&self, kind: usize) -> usize {
        self.0[kind]
    }

    pub fn is_digraph(&self) -> bool {
        self.0 == [2]
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// A finite Δ-structure.
///
/// Relations are kept sorted and free of duplicates, so two structures are
/// equal exactly when they have the same signature, vertex count and tuples.
/// The derived order compares vertex count first and then the relations
/// kind by kind, lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Structure {
    sig: Signature,
    n: usize,
    rels: Vec<Vec<Vec<usize>>>,
}

impl Structure {
    /// Validates the raw data and normalises every relation to a sorted set.
    pub fn new(sig: Signature, n: usize, mut rels: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyBaseSet);
        }
        if rels.len() != sig.kinds() {
            return Err(Error::KindCountMismatch {
                expected: sig.kinds(),
                found: rels.len(),
            });
        }
        for (kind, rel) in rels.iter_mut().enumerate() {
            let expected = sig.arity(kind);
            for tuple in rel.iter() {
                if tuple.len() != expected {
                    return Err(Error::ArityMismatch {
                        kind,
                        expected,
                        found: tuple.len(),
                    });
                }
                if let Some(&vertex) = tuple.iter().find(|&&v| v >= n) {
                    return Err(Error::VertexOutOfRange { kind, vertex, n });
                }
            }
            rel.sort();
            rel.dedup();
        }
        Ok(Structure { sig, n, rels })
    }

    /// Builds from tuples already known to satisfy every invariant except
    /// ordering and uniqueness.
    pub(crate) fn from_parts(sig: Signature, n: usize, mut rels: Vec<Vec<Vec<usize>>>) -> Self {
        debug_assert!(n >= 1 && rels.len() == sig.kinds());
        for rel in rels.iter_mut() {
            rel.sort();
            rel.dedup();
        }
        Structure { sig, n, rels }
    }

    /// A digraph on `n` vertices with the given arcs.
    pub fn digraph(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let rel = arcs.iter().map(|&(u, v)| vec![u, v]).collect();
        Structure::new(Signature::digraph(), n, vec![rel])
    }

    /// `n` vertices and no tuples.
    pub fn discrete(sig: Signature, n: usize) -> Result<Self> {
        let kinds = sig.kinds();
        Structure::new(sig, n, vec![Vec::new(); kinds])
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relation(&self, kind: usize) -> &[Vec<usize>] {
        &self.rels[kind]
    }

    pub fn relations(&self) -> &[Vec<Vec<usize>>] {
        &self.rels
    }

    /// Total number of tuples over all kinds.
    pub fn tuple_count(&self) -> usize {
        self.rels.iter().map(Vec::len).sum()
    }

    /// All tuples as `(kind, tuple)` in kind order, then tuple order.
    pub fn blocks(&self) -> impl Iterator<Item = (usize, &[usize])> + '_ {
        self.rels
            .iter()
            .enumerate()
            .flat_map(|(kind, rel)| rel.iter().map(move |t| (kind, t.as_slice())))
    }

    pub fn has_tuple(&self, kind: usize, tuple: &[usize]) -> bool {
        self.rels[kind]
            .binary_search_by(|t| t.as_slice().cmp(tuple))
            .is_ok()
    }

    /// Number of tuple positions occupied by each vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (_, t) in self.blocks() {
            for &v in t {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Substructure induced on `keep` (sorted, distinct, nonempty); vertex
    /// `keep[i]` becomes `i`.
    pub fn induced(&self, keep: &[usize]) -> Structure {
        debug_assert!(!keep.is_empty());
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let rels = self
            .rels
            .iter()
            .map(|rel| {
                rel.iter()
                    .filter(|t| t.iter().all(|&v| index[v] != usize::MAX))
                    .map(|t| t.iter().map(|&v| index[v]).collect())
                    .collect()
            })
            .collect();
        Structure::from_parts(self.sig.clone(), keep.len(), rels)
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Structure {
        debug_assert_eq!(perm.len(), self.n);
        let rels = self
            .rels
            .iter()
            .map(|rel| {
                rel.iter()
                    .map(|t| t.iter().map(|&v| perm[v]).collect())
                    .collect()
            })
            .collect();
        Structure::from_parts(self.sig.clone(), self.n, rels)
    }

    /// Serializes to the line-oriented structure file format.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub(crate) fn check_same_sig(&self, other: &Structure) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig.clone(),
                right: other.sig.clone(),
            })
        }
    }
}
