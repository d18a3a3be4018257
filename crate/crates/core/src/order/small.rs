use super::d_star;
use crate::enumerate::Oracle;
use crate::hom::{le, lt};
use crate::model::Structure;
use crate::{par, Result};

/// `X` is small if `X ≤ D*`, or some `Y ≤ D*` with `Y < X` has every `Z`
/// strictly between `Y` and `X` below `D*`. Only the first clause can be
/// decided exactly; the other verdicts carry the catalog bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallnessVerdict {
    Small,
    /// No `Z` breaking the condition for `y` was found among cores up to `bound`.
    SmallUpToBound { y: Structure, bound: usize },
    /// Every candidate `Y` found up to `bound` is paired with a breaking `Z`.
    NotSmall { pairs: Vec<(Structure, Structure)>, bound: usize },
}

impl SmallnessVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            SmallnessVerdict::Small => "small",
            SmallnessVerdict::SmallUpToBound { .. } => "small-up-to-bound",
            SmallnessVerdict::NotSmall { .. } => "not-small",
        }
    }

    pub fn is_not_small(&self) -> bool {
        matches!(self, SmallnessVerdict::NotSmall { .. })
    }
}

pub fn is_small_bounded(oracle: &Oracle, x: &Structure, n_max: usize) -> Result<SmallnessVerdict> {
    x.check_same_sig(&crate::algebra::k1(oracle.sig()))?;
    let star = d_star(oracle.sig(), oracle.config())?.core;
    if le(x, &star) {
        return Ok(SmallnessVerdict::Small);
    }
    let catalog = oracle.cores(n_max)?;
    let cfg = oracle.config();
    // Larger candidates first: they leave fewer structures to check.
    let candidates: Vec<&Structure> = catalog
        .entries
        .iter()
        .rev()
        .map(|e| &e.structure)
        .filter(|y| le(y, &star) && lt(y, x))
        .collect();
    let mut pairs = Vec::new();
    for y in candidates {
        let breaking = par::find_map_first(cfg, &catalog.entries, |e| {
            let z = &e.structure;
            (lt(y, z) && lt(z, x) && !le(z, &star)).then(|| z.clone())
        });
        match breaking {
            None => {
                return Ok(SmallnessVerdict::SmallUpToBound {
                    y: y.clone(),
                    bound: n_max,
                })
            }
            Some(z) => pairs.push((y.clone(), z)),
        }
    }
    Ok(SmallnessVerdict::NotSmall { pairs, bound: n_max })
}
