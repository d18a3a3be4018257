//! The splitting procedure.
//!
//! Elements are processed in order. With `F` the elements already accepted,
//! `A_i` is accepted when some `X` satisfies
//!
//! 1. `A_i < X`,
//! 2. no accepted `F` maps to `X`,
//! 3. no later `A_j` maps to `X`,
//!
//! and rejected otherwise. A rejection is proved outright when the forests
//! among the forbidden structures have a dual family lying entirely below
//! `A_i`: any `X` avoiding those forests maps into the family and so cannot
//! lie strictly above `A_i`. Otherwise witnesses are searched, first among
//! `A_i + T` for small trees `T`, then among catalog cores.
//!
//! `(F, D)` is a splitting when every structure lies above some element of
//! `F` or below some element of `D`.

use super::small::{is_small_bounded, SmallnessVerdict};
use super::Antichain;
use crate::algebra::sum_unchecked;
use crate::duality::generalized_dual;
use crate::enumerate::Oracle;
use crate::hom::{core_of, first_hom, le, lt, VertexMap};
use crate::model::{is_forest, Structure};
use crate::{par, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitOptions {
    /// Largest tree added to `A_i` and largest catalog core tried as a witness.
    pub witness_bound: usize,
    /// Bound for dualities, the splitting contract and smallness.
    pub verify_bound: usize,
}

impl Default for SplitOptions {
    fn default() -> Self {
        SplitOptions {
            witness_bound: 4,
            verify_bound: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSource {
    /// `core(A_i + tree)`.
    TreeSum { tree: Structure },
    /// A core taken from the catalog.
    Catalog,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub structure: Structure,
    pub source: WitnessSource,
    /// A homomorphism `A_i → X`.
    pub embedding: VertexMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// The forests in `forests` (indices into the antichain) have duals
    /// `duals`, each mapping to `A_i`.
    DualityForced { forests: Vec<usize>, duals: Vec<Structure> },
    /// No witness among the candidates up to `bound`.
    SearchExhausted { bound: usize },
}

impl Rejection {
    pub fn tag(&self) -> String {
        match self {
            Rejection::DualityForced { .. } => "duality-forced".into(),
            Rejection::SearchExhausted { bound } => format!("search-exhausted({bound})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Placement {
    Upper(Witness),
    Lower(Rejection),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractCheck {
    pub bound: usize,
    pub checked: usize,
    /// First catalog core above no element of `F` and below no element of `D`.
    pub uncovered: Option<Structure>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    Splitting,
    /// The contract fails and some element of `F` is not shown to be non-small.
    BottomException,
    /// The contract fails although every element of `F` is not small.
    NotSplitting,
}

impl SplitVerdict {
    pub fn label(self) -> &'static str {
        match self {
            SplitVerdict::Splitting => "splitting",
            SplitVerdict::BottomException => "bottom-exception",
            SplitVerdict::NotSplitting => "not-splitting",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub elements: Vec<Structure>,
    pub placements: Vec<Placement>,
    pub contract: ContractCheck,
    /// Smallness of each element of `F`, by antichain index. Empty when the
    /// contract holds.
    pub smallness: Vec<(usize, SmallnessVerdict)>,
    pub verdict: SplitVerdict,
}

impl SplitResult {
    pub fn upper(&self) -> Vec<&Structure> {
        self.side(true)
    }

    pub fn lower(&self) -> Vec<&Structure> {
        self.side(false)
    }

    fn side(&self, upper: bool) -> Vec<&Structure> {
        self.elements
            .iter()
            .zip(&self.placements)
            .filter(|(_, p)| matches!(p, Placement::Upper(_)) == upper)
            .map(|(e, _)| e)
            .collect()
    }
}

fn forced_rejection(
    oracle: &Oracle,
    a: &Structure,
    forbidden: &[(usize, &Structure)],
    verify_bound: usize,
) -> Result<Option<Rejection>> {
    let (indices, forests): (Vec<usize>, Vec<Structure>) = forbidden
        .iter()
        .filter(|(_, s)| is_forest(s))
        .map(|&(i, s)| (i, s.clone()))
        .unzip();
    let family = match generalized_dual(oracle, &forests, verify_bound) {
        Ok(f) => f,
        // Too large to build: fall back to the search.
        Err(Error::CeilingExceeded { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(family.duals.iter().all(|d| le(d, a)).then(|| Rejection::DualityForced {
        forests: indices,
        duals: family.duals,
    }))
}

fn search_witness(
    oracle: &Oracle,
    a: &Structure,
    forbidden: &[(usize, &Structure)],
    witness_bound: usize,
) -> Result<Option<Witness>> {
    let cfg = oracle.config();
    let admissible = |x: &Structure| forbidden.iter().all(|(_, f)| first_hom(f, x).is_none());

    let trees = oracle.trees(witness_bound)?;
    let from_trees = par::find_map_first(cfg, &trees.entries, |e| {
        let t = &e.structure;
        if le(t, a) {
            return None;
        }
        let x = core_of(&sum_unchecked(a, t)).0;
        admissible(&x).then(|| (x, t.clone()))
    });
    if let Some((x, tree)) = from_trees {
        let embedding = first_hom(a, &x).expect("A_i maps into A_i + T");
        return Ok(Some(Witness {
            structure: x,
            source: WitnessSource::TreeSum { tree },
            embedding,
        }));
    }

    let cores = oracle.cores(witness_bound)?;
    Ok(par::find_map_first(cfg, &cores.entries, |e| {
        let x = &e.structure;
        (lt(a, x) && admissible(x)).then(|| x.clone())
    })
    .map(|x| Witness {
        embedding: first_hom(a, &x).expect("A_i < X"),
        structure: x,
        source: WitnessSource::Catalog,
    }))
}

pub fn split_antichain(oracle: &Oracle, a: &Antichain, opts: SplitOptions) -> Result<SplitResult> {
    if opts.witness_bound == 0 || opts.verify_bound == 0 {
        return Err(Error::Precondition("bounds must be at least 1".into()));
    }
    a.elements()[0].check_same_sig(&crate::algebra::k1(oracle.sig()))?;
    let elements = a.elements();
    let mut placements: Vec<Placement> = Vec::with_capacity(elements.len());
    for (i, ai) in elements.iter().enumerate() {
        let accepted = placements
            .iter()
            .enumerate()
            .filter(|(_, p)| matches!(p, Placement::Upper(_)))
            .map(|(j, _)| (j, &elements[j]));
        let later = elements.iter().enumerate().skip(i + 1);
        let forbidden: Vec<(usize, &Structure)> = accepted.chain(later).collect();

        let placement = if let Some(r) = forced_rejection(oracle, ai, &forbidden, opts.verify_bound)? {
            Placement::Lower(r)
        } else if let Some(w) = search_witness(oracle, ai, &forbidden, opts.witness_bound)? {
            Placement::Upper(w)
        } else {
            Placement::Lower(Rejection::SearchExhausted {
                bound: opts.witness_bound,
            })
        };
        placements.push(placement);
    }

    let upper: Vec<(usize, &Structure)> = elements
        .iter()
        .enumerate()
        .filter(|(i, _)| matches!(placements[*i], Placement::Upper(_)))
        .collect();
    let lower: Vec<&Structure> = elements
        .iter()
        .zip(&placements)
        .filter(|(_, p)| matches!(p, Placement::Lower(_)))
        .map(|(e, _)| e)
        .collect();

    let cores = oracle.cores(opts.verify_bound)?;
    let uncovered = par::find_map_first(oracle.config(), &cores.entries, |e| {
        let x = &e.structure;
        let covered = upper.iter().any(|(_, f)| le(f, x)) || lower.iter().any(|d| le(x, d));
        (!covered).then(|| x.clone())
    });
    let contract = ContractCheck {
        bound: opts.verify_bound,
        checked: cores.len(),
        uncovered,
    };

    let mut smallness = Vec::new();
    let verdict = if contract.uncovered.is_none() {
        SplitVerdict::Splitting
    } else {
        for &(i, f) in &upper {
            smallness.push((i, is_small_bounded(oracle, f, opts.verify_bound)?));
        }
        if smallness.iter().all(|(_, v)| v.is_not_small()) {
            SplitVerdict::NotSplitting
        } else {
            SplitVerdict::BottomException
        }
    };

    Ok(SplitResult {
        elements: elements.to_vec(),
        placements,
        contract,
        smallness,
        verdict,
    })
}
