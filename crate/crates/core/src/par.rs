//! Data-parallel helpers with a sequential fallback.
//!
//! Every helper returns exactly what its sequential counterpart returns;
//! searches pick the least index, maps preserve input order.

use crate::Config;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Index of the first item satisfying `pred`.
pub(crate) fn position_first<T, P>(cfg: &Config, items: &[T], pred: P) -> Option<usize>
where
    T: Sync,
    P: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        return items.par_iter().position_first(|item| pred(item));
    }
    let _ = cfg;
    items.iter().position(pred)
}

/// First `Some` produced by `f`, in item order.
pub(crate) fn find_map_first<T, R, F>(cfg: &Config, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        return items.par_iter().find_map_first(|item| f(item));
    }
    let _ = cfg;
    items.iter().find_map(f)
}

pub(crate) fn map<T, R, F>(cfg: &Config, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        return items.par_iter().map(f).collect();
    }
    let _ = cfg;
    items.iter().map(f).collect()
}

/// Values of `f` over `0..len` that are `Some`, in index order.
pub(crate) fn filter_map_range<R, F>(cfg: &Config, len: u64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(u64) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        return (0..len).into_par_iter().filter_map(f).collect();
    }
    let _ = cfg;
    (0..len).filter_map(f).collect()
}
