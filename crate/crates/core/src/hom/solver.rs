//! Backtracking homomorphism search.
//!
//! Source vertices are variables, target vertices are values, every source
//! tuple is a constraint. Domains are bitsets; after each assignment the
//! constraints are made generalized arc consistent. Variables are assigned in
//! a static order (decreasing degree, then index) and values in ascending
//! order, so the sequence of solutions is fixed by the inputs alone.

use std::collections::VecDeque;

use crate::model::Structure;

#[derive(Clone)]
struct Domains {
    words: usize,
    bits: Vec<u64>,
}

impl Domains {
    fn full(vars: usize, values: usize) -> Self {
        let words = values.div_ceil(64);
        let mut row = vec![u64::MAX; words];
        if values % 64 != 0 {
            row[words - 1] = (1u64 << (values % 64)) - 1;
        }
        let bits = row.iter().copied().cycle().take(words * vars).collect();
        Domains { words, bits }
    }

    fn row(&self, var: usize) -> &[u64] {
        &self.bits[var * self.words..(var + 1) * self.words]
    }

    fn row_mut(&mut self, var: usize) -> &mut [u64] {
        &mut self.bits[var * self.words..(var + 1) * self.words]
    }

    fn contains(&self, var: usize, value: usize) -> bool {
        self.row(var)[value / 64] >> (value % 64) & 1 == 1
    }

    fn assign(&mut self, var: usize, value: usize) {
        let row = self.row_mut(var);
        row.fill(0);
        row[value / 64] |= 1 << (value % 64);
    }

    fn values(&self, var: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.row(var).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    fn first(&self, var: usize) -> usize {
        self.row(var)
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
            .expect("domain is nonempty")
    }
}

pub(crate) struct Problem<'a> {
    target: &'a Structure,
    /// Source tuples as (kind, tuple).
    constraints: Vec<(usize, &'a [usize])>,
    /// Constraint ids touching each source vertex.
    watch: Vec<Vec<usize>>,
    order: Vec<usize>,
    vars: usize,
}

impl<'a> Problem<'a> {
    pub(crate) fn new(source: &'a Structure, target: &'a Structure) -> Self {
        debug_assert_eq!(source.sig(), target.sig());
        let constraints: Vec<(usize, &[usize])> = source.blocks().collect();
        let mut watch = vec![Vec::new(); source.n()];
        for (c, (_, t)) in constraints.iter().enumerate() {
            for &v in t.iter() {
                if watch[v].last() != Some(&c) {
                    watch[v].push(c);
                }
            }
        }
        let degrees = source.degrees();
        let mut order: Vec<usize> = (0..source.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
        Problem {
            target,
            constraints,
            watch,
            order,
            vars: source.n(),
        }
    }

    /// Prunes `doms` to the supported values of constraint `c`. Returns the
    /// variables that changed, or `None` on a wipe-out.
    fn revise(&self, c: usize, doms: &mut Domains) -> Option<Vec<usize>> {
        let (kind, src) = self.constraints[c];
        let k = src.len();
        let mut support = vec![0u64; doms.words * k];
        'tuples: for t in self.target.relation(kind) {
            for j in 0..k {
                if !doms.contains(src[j], t[j]) {
                    continue 'tuples;
                }
                for l in 0..j {
                    if src[l] == src[j] && t[l] != t[j] {
                        continue 'tuples;
                    }
                }
            }
            for j in 0..k {
                support[j * doms.words + t[j] / 64] |= 1 << (t[j] % 64);
            }
        }
        let mut changed = Vec::new();
        for j in 0..k {
            let var = src[j];
            if src[..j].contains(&var) {
                continue;
            }
            let sup = &support[j * doms.words..(j + 1) * doms.words];
            let row = doms.row_mut(var);
            let mut any = false;
            let mut diff = false;
            for (d, &s) in row.iter_mut().zip(sup) {
                let next = *d & s;
                diff |= next != *d;
                any |= next != 0;
                *d = next;
            }
            if !any {
                return None;
            }
            if diff {
                changed.push(var);
            }
        }
        Some(changed)
    }

    fn propagate(&self, doms: &mut Domains, seeds: impl IntoIterator<Item = usize>) -> bool {
        let mut queued = vec![false; self.constraints.len()];
        let mut queue = VecDeque::new();
        for c in seeds {
            if !queued[c] {
                queued[c] = true;
                queue.push_back(c);
            }
        }
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            let Some(changed) = self.revise(c, doms) else {
                return false;
            };
            for var in changed {
                for &d in &self.watch[var] {
                    if d != c && !queued[d] {
                        queued[d] = true;
                        queue.push_back(d);
                    }
                }
            }
        }
        true
    }

    /// Calls `visit` on every homomorphism in search order until it returns
    /// `false`. Returns `false` if the visit was cut short.
    pub(crate) fn search(&self, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let mut doms = Domains::full(self.vars, self.target.n());
        if !self.propagate(&mut doms, 0..self.constraints.len()) {
            return true;
        }
        self.descend(&doms, 0, visit)
    }

    fn descend(&self, doms: &Domains, depth: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if depth == self.order.len() {
            let map: Vec<usize> = (0..self.vars).map(|v| doms.first(v)).collect();
            return visit(&map);
        }
        let var = self.order[depth];
        for value in doms.values(var) {
            let mut next = doms.clone();
            next.assign(var, value);
            if self.propagate(&mut next, self.watch[var].iter().copied())
                && !self.descend(&next, depth + 1, visit)
            {
                return false;
            }
        }
        true
    }
}
