//! Cycle and tree based classes of structures.
//!
//! | condition | meaning |
//! |---|---|
//! | 1 | the structure maps to no Δ-forest |
//! | 2 | no component maps to a Δ-tree |
//! | 3 | the incidence multigraph has a cycle |
//! | 4 | every component's incidence multigraph has a cycle |
//! | 5 | digraphs only: the underlying multigraph has an odd cycle |
//! | 6 | digraphs only: every component has an odd cycle |
//!
//! The directed-shadow flag records whether the shadow has a directed cycle.

use std::fmt;

use crate::enumerate::{all_trees, Oracle};
use crate::hom::{first_hom, incomparable, le, lt};
use crate::model::{components, directed_shadow, incidence_graph, is_balanced, Structure};
use crate::{par, Config, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    NoTreeImage = 1,
    NoComponentTreeImage = 2,
    Cycle = 3,
    CycleInEachComponent = 4,
    OddCycle = 5,
    OddCycleInEachComponent = 6,
}

impl Condition {
    pub const ALL: [Condition; 6] = [
        Condition::NoTreeImage,
        Condition::NoComponentTreeImage,
        Condition::Cycle,
        Condition::CycleInEachComponent,
        Condition::OddCycle,
        Condition::OddCycleInEachComponent,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(k: u8) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.number() == k)
            .ok_or_else(|| Error::Precondition(format!("no condition {k}; expected 1 to 6")))
    }

    pub fn digraph_only(self) -> bool {
        matches!(self, Condition::OddCycle | Condition::OddCycleInEachComponent)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassMembership {
    pub no_tree_image: bool,
    pub no_component_tree_image: bool,
    pub cycle: bool,
    pub cycle_in_each_component: bool,
    /// `None` outside the digraph signature.
    pub odd_cycle: Option<bool>,
    pub odd_cycle_in_each_component: Option<bool>,
    pub shadow_directed_cycle: bool,
}

impl ClassMembership {
    pub fn holds(&self, c: Condition) -> Result<bool> {
        let value = match c {
            Condition::NoTreeImage => Some(self.no_tree_image),
            Condition::NoComponentTreeImage => Some(self.no_component_tree_image),
            Condition::Cycle => Some(self.cycle),
            Condition::CycleInEachComponent => Some(self.cycle_in_each_component),
            Condition::OddCycle => self.odd_cycle,
            Condition::OddCycleInEachComponent => self.odd_cycle_in_each_component,
        };
        value.ok_or_else(|| Error::Precondition(format!("condition {c} is defined for digraphs only")))
    }
}

/// Whether `a` maps to some Δ-forest, decided through balance where that is
/// exact and otherwise by [`tree_mappable_by_search`].
pub fn tree_mappable(a: &Structure) -> bool {
    // Forests are balanced and balance pulls back along homomorphisms.
    if is_balanced(a).is_none() {
        return false;
    }
    // A balanced digraph maps onto a directed path by its levels.
    if a.sig().is_digraph() {
        return true;
    }
    tree_mappable_by_search(a)
}

/// Exhaustive route: each component must map to a tree with at most as many
/// vertices as the component, since a homomorphic image of a component into
/// a tree is itself a tree.
pub fn tree_mappable_by_search(a: &Structure) -> bool {
    components(a)
        .iter()
        .all(|c| component_maps_to_tree(&c.structure))
}

fn component_maps_to_tree(c: &Structure) -> bool {
    if c.tuple_count() == 0 {
        return true;
    }
    let cfg = Config::sequential();
    match all_trees(c.sig(), c.n(), &cfg) {
        Ok(trees) => trees.entries.iter().any(|t| first_hom(c, &t.structure).is_some()),
        Err(_) => false,
    }
}

/// Two-colouring of the underlying undirected multigraph; loops are odd.
fn bipartite(a: &Structure) -> bool {
    let n = a.n();
    let mut adj = vec![Vec::new(); n];
    for (_, t) in a.blocks() {
        let (u, v) = (t[0], t[1]);
        if u == v {
            return false;
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colour = vec![None; n];
    for start in 0..n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            let cu = colour[u].expect("coloured before push");
            for &v in &adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        stack.push(v);
                    }
                    Some(cv) if cv == cu => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Directed cycle detection by iterative depth-first search.
pub fn has_directed_cycle(d: &Structure) -> bool {
    let n = d.n();
    let mut out = vec![Vec::new(); n];
    for (_, t) in d.blocks() {
        for w in t.windows(2) {
            out[w[0]].push(w[1]);
        }
    }
    // 0 = unseen, 1 = on the stack, 2 = done
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        state[root] = 1;
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (u, ref mut next)) = stack.last_mut() {
            if let Some(&v) = out[u].get(*next) {
                *next += 1;
                match state[v] {
                    1 => return true,
                    0 => {
                        state[v] = 1;
                        stack.push((v, 0));
                    }
                    _ => {}
                }
            } else {
                state[u] = 2;
                stack.pop();
            }
        }
    }
    false
}

pub fn membership(a: &Structure) -> ClassMembership {
    let comps: Vec<Structure> = components(a).into_iter().map(|c| c.structure).collect();
    let comp_mappable: Vec<bool> = comps.iter().map(tree_mappable).collect();
    let comp_cycle: Vec<bool> = comps.iter().map(|c| incidence_graph(c).has_cycle()).collect();
    let digraph = a.sig().is_digraph();
    ClassMembership {
        no_tree_image: comp_mappable.iter().any(|m| !m),
        no_component_tree_image: comp_mappable.iter().all(|m| !m),
        cycle: comp_cycle.iter().any(|&c| c),
        cycle_in_each_component: comp_cycle.iter().all(|&c| c),
        odd_cycle: digraph.then(|| !bipartite(a)),
        odd_cycle_in_each_component: digraph.then(|| comps.iter().all(|c| !bipartite(c))),
        shadow_directed_cycle: has_directed_cycle(&directed_shadow(a)),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Up => "up",
            Direction::Down => "down",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "up" => Some(Direction::Up),
            "down" => Some(Direction::Down),
            _ => None,
        }
    }
}

/// Least core `Y` in the catalog up to `n_max` vertices that lies in class
/// `c`, is incomparable with every element of `s`, and sits strictly above
/// (`Up`) or below (`Down`) `x`. `Ok(None)` means nothing was found at this
/// bound.
pub fn extension_witness_bounded(
    oracle: &Oracle,
    c: Condition,
    s: &[Structure],
    x: &Structure,
    direction: Direction,
    n_max: usize,
) -> Result<Option<Structure>> {
    for item in s.iter().chain(std::iter::once(x)) {
        if item.sig() != oracle.sig() {
            return Err(Error::SignatureMismatch {
                left: oracle.sig().clone(),
                right: item.sig().clone(),
            });
        }
    }
    if c.digraph_only() && !oracle.sig().is_digraph() {
        return Err(Error::NotDigraph(oracle.sig().clone()));
    }
    for (i, item) in s.iter().enumerate() {
        if !membership(item).holds(c)? {
            return Err(Error::Precondition(format!("element {i} of S is not in class {c}")));
        }
    }
    let blocked = match direction {
        Direction::Up => s.iter().position(|e| le(e, x)),
        Direction::Down => s.iter().position(|e| le(x, e)),
    };
    if let Some(i) = blocked {
        let rel = if direction == Direction::Up { "below" } else { "above" };
        return Err(Error::Precondition(format!("element {i} of S is {rel} X")));
    }
    let catalog = oracle.cores(n_max)?;
    Ok(par::find_map_first(oracle.config(), &catalog.entries, |e| {
        let y = &e.structure;
        let placed = match direction {
            Direction::Up => lt(x, y),
            Direction::Down => lt(y, x),
        };
        (placed
            && s.iter().all(|a| incomparable(a, y))
            && membership(y).holds(c).unwrap_or(false))
        .then(|| y.clone())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{directed_cycle, path, sum, transitive_tournament};
    use crate::model::Signature;

    #[test]
    fn transitive_tournament_classes() {
        let m = membership(&transitive_tournament(3));
        assert!(m.no_tree_image && m.cycle && m.odd_cycle == Some(true));
        assert!(!m.shadow_directed_cycle);
    }

    #[test]
    fn cycle_plus_arc() {
        let m = membership(&sum(&directed_cycle(3), &path(1)).unwrap());
        assert!(m.cycle && !m.cycle_in_each_component);
        assert!(m.no_tree_image && !m.no_component_tree_image);
        assert!(m.shadow_directed_cycle);
    }

    #[test]
    fn path_is_in_no_class() {
        let m = membership(&path(2));
        for c in Condition::ALL {
            assert!(!m.holds(c).unwrap(), "{c}");
        }
        assert!(!m.shadow_directed_cycle);
    }

    #[test]
    fn odd_cycles_need_digraphs() {
        let sig = Signature::new(vec![3]).unwrap();
        let m = membership(&crate::algebra::k1(&sig));
        assert!(m.holds(Condition::OddCycle).is_err());
        assert!(Condition::from_number(7).is_err());
    }

    #[test]
    fn ternary_balance_is_not_enough() {
        let sig = Signature::new(vec![3]).unwrap();
        let a = Structure::new(sig, 4, vec![vec![vec![0, 1, 2], vec![1, 2, 3]]]).unwrap();
        assert!(is_balanced(&a).is_some());
        assert!(!tree_mappable(&a));
    }

    #[test]
    fn extension_preconditions() {
        let oracle = Oracle::new(Signature::digraph(), Config::default());
        let tt3 = transitive_tournament(3);
        let err = extension_witness_bounded(&oracle, Condition::Cycle, &[tt3.clone()], &tt3, Direction::Up, 3);
        assert!(matches!(err, Err(Error::Precondition(_))));
        let y = extension_witness_bounded(&oracle, Condition::Cycle, &[], &path(1), Direction::Up, 2).unwrap();
        assert!(y.is_some());
    }
}
