//! Lattice operations of the homomorphism order and the named structures.
//!
//! [`sum`] is the join (disjoint union) and [`product`] the meet (categorical
//! product). Both return raw, un-cored structures.

use crate::hom::VertexMap;
use crate::model::{Signature, Structure};
use crate::Result;

/// `⊤`: one vertex carrying the constant tuple of every kind.
pub fn top(sig: &Signature) -> Structure {
    let rels = sig.arities().iter().map(|&a| vec![vec![0; a]]).collect();
    Structure::from_parts(sig.clone(), 1, rels)
}

/// `K1`: one vertex, no tuples.
pub fn k1(sig: &Signature) -> Structure {
    Structure::from_parts(sig.clone(), 1, vec![Vec::new(); sig.kinds()])
}

/// The directed path with `k` arcs `0 → 1 → … → k`.
pub fn path(k: usize) -> Structure {
    let arcs = (0..k).map(|i| vec![i, i + 1]).collect();
    Structure::from_parts(Signature::digraph(), k + 1, vec![arcs])
}

/// The transitive tournament on `k ≥ 1` vertices: `i → j` whenever `i < j`.
pub fn transitive_tournament(k: usize) -> Structure {
    assert!(k >= 1, "a tournament needs at least one vertex");
    let arcs = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| vec![i, j]))
        .collect();
    Structure::from_parts(Signature::digraph(), k, vec![arcs])
}

/// The directed cycle on `k ≥ 1` vertices.
pub fn directed_cycle(k: usize) -> Structure {
    assert!(k >= 1, "a cycle needs at least one vertex");
    let arcs = (0..k).map(|i| vec![i, (i + 1) % k]).collect();
    Structure::from_parts(Signature::digraph(), k, vec![arcs])
}

/// Disjoint union; the vertices of `b` are shifted by `a.n()`.
pub fn sum(a: &Structure, b: &Structure) -> Result<Structure> {
    a.check_same_sig(b)?;
    Ok(sum_unchecked(a, b))
}

pub(crate) fn sum_unchecked(a: &Structure, b: &Structure) -> Structure {
    let shift = a.n();
    let rels = a
        .relations()
        .iter()
        .zip(b.relations())
        .map(|(ra, rb)| {
            ra.iter()
                .cloned()
                .chain(rb.iter().map(|t| t.iter().map(|&v| v + shift).collect()))
                .collect()
        })
        .collect();
    Structure::from_parts(a.sig().clone(), a.n() + b.n(), rels)
}

/// Disjoint union of a nonempty list, left to right.
pub fn sum_all(parts: &[Structure]) -> Result<Structure> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| crate::Error::Precondition("sum of an empty list".into()))?;
    rest.iter().try_fold(first.clone(), |acc, s| sum(&acc, s))
}

/// Categorical product; the pair `(a, b)` becomes vertex `a * b.n() + b`.
pub fn product(a: &Structure, b: &Structure) -> Result<Structure> {
    a.check_same_sig(b)?;
    Ok(product_unchecked(a, b))
}

pub(crate) fn product_unchecked(a: &Structure, b: &Structure) -> Structure {
    let nb = b.n();
    let rels = a
        .relations()
        .iter()
        .zip(b.relations())
        .map(|(ra, rb)| {
            let mut out = Vec::with_capacity(ra.len() * rb.len());
            for ta in ra {
                for tb in rb {
                    out.push(ta.iter().zip(tb).map(|(&x, &y)| x * nb + y).collect());
                }
            }
            out
        })
        .collect();
    Structure::from_parts(a.sig().clone(), a.n() * nb, rels)
}

/// Product of a list; the empty product is `⊤`.
pub fn product_all(sig: &Signature, parts: &[Structure]) -> Result<Structure> {
    parts
        .iter()
        .try_fold(top(sig), |acc, s| product(&acc, s))
}

/// Projections of `product(a, b)` onto its factors.
pub fn projections(a: &Structure, b: &Structure) -> (VertexMap, VertexMap) {
    let nb = b.n();
    let n = a.n() * nb;
    (
        VertexMap::new((0..n).map(|v| v / nb).collect()),
        VertexMap::new((0..n).map(|v| v % nb).collect()),
    )
}

/// Injections of `a` and `b` into `sum(a, b)`.
pub fn injections(a: &Structure, b: &Structure) -> (VertexMap, VertexMap) {
    (
        VertexMap::identity(a.n()),
        VertexMap::new((0..b.n()).map(|v| v + a.n()).collect()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{core_of, is_isomorphic};

    #[test]
    fn sum_of_points() {
        let s = sum(&k1(&Signature::digraph()), &k1(&Signature::digraph())).unwrap();
        assert_eq!(s, Structure::digraph(2, &[]).unwrap());
    }

    #[test]
    fn sum_of_paths_cores_to_longer_path() {
        let s = sum(&path(1), &path(2)).unwrap();
        assert_eq!(s.n(), 5);
        assert!(is_isomorphic(&core_of(&s).0, &path(2)));
    }

    #[test]
    fn path_times_arc_is_two_arcs() {
        let p = product(&path(2), &transitive_tournament(2)).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.relation(0), &[vec![0, 3], vec![2, 5]]);
        assert!(is_isomorphic(&core_of(&p).0, &path(1)));
    }

    #[test]
    fn top_is_the_unit_of_product() {
        let tt3 = transitive_tournament(3);
        let p = product(&tt3, &top(&Signature::digraph())).unwrap();
        assert_eq!(p, tt3);
        assert_eq!(product_all(&Signature::digraph(), &[]).unwrap(), top(&Signature::digraph()));
    }

    #[test]
    fn projections_and_injections_are_homomorphisms() {
        let a = directed_cycle(3);
        let b = path(2);
        let p = product(&a, &b).unwrap();
        let (pa, pb) = projections(&a, &b);
        assert!(pa.is_homomorphism(&p, &a));
        assert!(pb.is_homomorphism(&p, &b));
        let s = sum(&a, &b).unwrap();
        let (ia, ib) = injections(&a, &b);
        assert!(ia.is_homomorphism(&a, &s));
        assert!(ib.is_homomorphism(&b, &s));
    }

    #[test]
    fn named_structures() {
        assert_eq!(path(0).n(), 1);
        assert_eq!(transitive_tournament(3).tuple_count(), 3);
        assert_eq!(directed_cycle(1), Structure::digraph(1, &[(0, 0)]).unwrap());
        let sig = Signature::new(vec![2, 3]).unwrap();
        assert_eq!(top(&sig).relation(1), &[vec![0, 0, 0]]);
        assert_eq!(k1(&sig).tuple_count(), 0);
    }
}
