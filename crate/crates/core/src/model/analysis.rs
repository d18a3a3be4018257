//! Structural analysis through the incidence multigraph.

use std::collections::VecDeque;

use super::{Signature, Structure};

/// Bipartite incidence multigraph: vertices on the left, blocks (tuples)
/// on the right, one edge per occurrence of a vertex in a tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    vertices: usize,
    blocks: Vec<(usize, Vec<usize>)>,
    edges: Vec<(usize, usize)>,
}

impl IncidenceGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Blocks as `(kind, tuple)`, ordered by kind and then tuple.
    pub fn blocks(&self) -> &[(usize, Vec<usize>)] {
        &self.blocks
    }

    /// `(vertex, block index)` pairs, with multiplicity.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn multiplicity(&self, vertex: usize, block: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&e| e == (vertex, block))
            .count()
    }

    fn union_find(&self) -> (UnionFind, bool) {
        let mut uf = UnionFind::new(self.vertices + self.blocks.len());
        let mut cyclic = false;
        for &(v, b) in &self.edges {
            if !uf.union(v, self.vertices + b) {
                cyclic = true;
            }
        }
        (uf, cyclic)
    }

    /// Whether the multigraph has a cycle; parallel edges form a 2-cycle.
    pub fn has_cycle(&self) -> bool {
        self.union_find().1
    }

    pub fn component_count(&self) -> usize {
        let (mut uf, _) = self.union_find();
        (0..self.vertices + self.blocks.len())
            .filter(|&x| uf.find(x) == x)
            .count()
    }
}

pub fn incidence_graph(a: &Structure) -> IncidenceGraph {
    let blocks: Vec<(usize, Vec<usize>)> = a.blocks().map(|(k, t)| (k, t.to_vec())).collect();
    let edges = blocks
        .iter()
        .enumerate()
        .flat_map(|(b, (_, t))| t.iter().map(move |&v| (v, b)))
        .collect();
    IncidenceGraph {
        vertices: a.n(),
        blocks,
        edges,
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// A connected component, re-indexed to `{0, …, m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub structure: Structure,
    /// `vertices[i]` is the vertex of the original structure renamed to `i`.
    pub vertices: Vec<usize>,
}

/// Components ordered by their least original vertex.
pub fn components(a: &Structure) -> Vec<Component> {
    let mut uf = UnionFind::new(a.n());
    for (_, t) in a.blocks() {
        for w in t.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; a.n()];
    for v in 0..a.n() {
        let root = uf.find(v);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(v);
    }
    groups
        .into_iter()
        .map(|vertices| Component {
            structure: a.induced(&vertices),
            vertices,
        })
        .collect()
}

pub fn is_connected(a: &Structure) -> bool {
    let mut uf = UnionFind::new(a.n());
    let mut parts = a.n();
    for (_, t) in a.blocks() {
        for w in t.windows(2) {
            if uf.union(w[0], w[1]) {
                parts -= 1;
            }
        }
    }
    parts == 1
}

/// Δ-tree: the incidence multigraph is a tree.
pub fn is_tree(a: &Structure) -> bool {
    is_connected(a) && is_forest(a)
}

/// Δ-forest: the incidence multigraph is acyclic.
pub fn is_forest(a: &Structure) -> bool {
    !incidence_graph(a).has_cycle()
}

/// Integer levels with `level(t[j+1]) = level(t[j]) + 1` inside every tuple,
/// shifted so that each component has minimum level 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelAssignment {
    pub levels: Vec<i64>,
}

/// Solves the level system by traversal; `None` when it is inconsistent.
pub fn is_balanced(a: &Structure) -> Option<LevelAssignment> {
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); a.n()];
    for (_, t) in a.blocks() {
        for w in t.windows(2) {
            adj[w[0]].push((w[1], 1));
            adj[w[1]].push((w[0], -1));
        }
    }
    let mut level: Vec<Option<i64>> = vec![None; a.n()];
    let mut queue = VecDeque::new();
    for start in 0..a.n() {
        if level[start].is_some() {
            continue;
        }
        level[start] = Some(0);
        queue.push_back(start);
        let mut members = vec![start];
        while let Some(u) = queue.pop_front() {
            let lu = level[u].expect("queued vertices are levelled");
            for &(w, d) in &adj[u] {
                match level[w] {
                    Some(lw) if lw != lu + d => return None,
                    Some(_) => {}
                    None => {
                        level[w] = Some(lu + d);
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
        }
        let min = members.iter().filter_map(|&v| level[v]).min().unwrap_or(0);
        for &v in &members {
            level[v] = level[v].map(|l| l - min);
        }
    }
    Some(LevelAssignment {
        levels: level.into_iter().map(|l| l.unwrap_or(0)).collect(),
    })
}

/// Digraph on the same vertices with an arc for every pair of consecutive
/// positions of every tuple.
pub fn directed_shadow(a: &Structure) -> Structure {
    let arcs = a
        .blocks()
        .flat_map(|(_, t)| t.windows(2).map(|w| w.to_vec()))
        .collect();
    Structure::from_parts(Signature::digraph(), a.n(), vec![arcs])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(k: usize) -> Structure {
        let arcs: Vec<_> = (0..k).map(|i| (i, i + 1)).collect();
        Structure::digraph(k + 1, &arcs).unwrap()
    }

    fn tt3() -> Structure {
        Structure::digraph(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn ternary(n: usize, tuples: &[[usize; 3]]) -> Structure {
        let sig = Signature::new(vec![3]).unwrap();
        Structure::new(sig, n, vec![tuples.iter().map(|t| t.to_vec()).collect()]).unwrap()
    }

    #[test]
    fn loop_has_two_parallel_incidence_edges() {
        let top = Structure::digraph(1, &[(0, 0)]).unwrap();
        let inc = incidence_graph(&top);
        assert_eq!((inc.vertex_count(), inc.blocks().len(), inc.edges().len()), (1, 1, 2));
        assert_eq!(inc.multiplicity(0, 0), 2);
        assert!(inc.has_cycle());
        assert!(!is_forest(&top));
    }

    #[test]
    fn single_edge_and_triple_are_acyclic() {
        let inc = incidence_graph(&path(1));
        assert_eq!((inc.vertex_count(), inc.blocks().len(), inc.edges().len()), (2, 1, 2));
        assert!(!inc.has_cycle());
        let inc = incidence_graph(&ternary(3, &[[0, 1, 2]]));
        assert_eq!((inc.vertex_count(), inc.blocks().len(), inc.edges().len()), (3, 1, 3));
        assert!(!inc.has_cycle());
    }

    #[test]
    fn edge_count_matches_arity_sum() {
        let s = ternary(4, &[[0, 1, 2], [2, 3, 3], [1, 1, 1]]);
        assert_eq!(incidence_graph(&s).edges().len(), 9);
    }

    #[test]
    fn components_of_disjoint_union() {
        let s = Structure::digraph(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
        let comps = components(&s);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].structure, path(2));
        assert_eq!(comps[1].vertices, vec![3, 4, 5]);
        assert_eq!(comps[1].structure.tuple_count(), 3);
    }

    #[test]
    fn connected_structure_is_its_own_component() {
        let comps = components(&tt3());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].structure, tt3());
        assert_eq!(comps[0].vertices, vec![0, 1, 2]);
    }

    #[test]
    fn isolated_vertices_are_singleton_components() {
        let s = Structure::digraph(3, &[]).unwrap();
        let comps = components(&s);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.structure.n() == 1 && is_tree(&c.structure)));
    }

    #[test]
    fn paths_are_trees() {
        for k in 0..6 {
            assert!(is_tree(&path(k)), "P{k}");
        }
    }

    #[test]
    fn tournament_is_not_a_forest() {
        let inc = incidence_graph(&tt3());
        assert_eq!(inc.vertex_count() + inc.blocks().len(), 6);
        assert_eq!(inc.edges().len(), 6);
        assert!(!is_forest(&tt3()));
    }

    #[test]
    fn path_levels() {
        assert_eq!(is_balanced(&path(3)).unwrap().levels, vec![0, 1, 2, 3]);
        let reversed = Structure::digraph(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(is_balanced(&reversed).unwrap().levels, vec![2, 1, 0]);
    }

    #[test]
    fn unbalanced_examples() {
        assert!(is_balanced(&tt3()).is_none());
        let c3 = Structure::digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(is_balanced(&c3).is_none());
        assert!(is_balanced(&Structure::digraph(1, &[(0, 0)]).unwrap()).is_none());
    }

    #[test]
    fn levels_are_normalised_per_component() {
        let s = Structure::digraph(4, &[(1, 0), (2, 3)]).unwrap();
        assert_eq!(is_balanced(&s).unwrap().levels, vec![1, 0, 0, 1]);
    }

    #[test]
    fn shadow_examples() {
        let s = directed_shadow(&ternary(3, &[[0, 1, 2]]));
        assert_eq!(s, path(2));
        assert_eq!(directed_shadow(&tt3()), tt3());
        let s = directed_shadow(&ternary(2, &[[0, 1, 0]]));
        assert_eq!(s, Structure::digraph(2, &[(0, 1), (1, 0)]).unwrap());
    }
}
