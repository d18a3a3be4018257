use super::{first_hom, VertexMap};
use crate::model::Structure;

fn without(n: usize, v: usize) -> Vec<usize> {
    (0..n).filter(|&u| u != v).collect()
}

/// Endomorphism of `a` missing at least one vertex, if one exists.
fn shrinking_endomorphism(a: &Structure) -> Option<VertexMap> {
    if a.n() == 1 {
        return None;
    }
    (0..a.n()).find_map(|v| {
        let keep = without(a.n(), v);
        let sub = a.induced(&keep);
        first_hom(a, &sub).map(|f| VertexMap::new(f.as_slice().iter().map(|&i| keep[i]).collect()))
    })
}

/// The core of `a` and a retraction onto it.
///
/// Repeatedly finds an endomorphism with a proper image and restricts to that
/// image. The core is re-indexed; the returned map sends every vertex of `a`
/// to a vertex of the core.
pub fn core_of(a: &Structure) -> (Structure, VertexMap) {
    let mut current = a.clone();
    let mut retraction = VertexMap::identity(a.n());
    while let Some(f) = shrinking_endomorphism(&current) {
        let image = f.image();
        let mut index = vec![usize::MAX; current.n()];
        for (i, &v) in image.iter().enumerate() {
            index[v] = i;
        }
        let step = VertexMap::new(f.as_slice().iter().map(|&v| index[v]).collect());
        current = current.induced(&image);
        retraction = retraction.then(&step);
    }
    (current, retraction)
}

/// Every endomorphism is an automorphism: no homomorphism into `a` minus a vertex.
pub fn is_core(a: &Structure) -> bool {
    shrinking_endomorphism(a).is_none()
}
