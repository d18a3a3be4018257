//! Computation in the homomorphism order of finite relational structures.
//!
//! The crate is organised bottom-up:
//!
//! * [`model`]: signatures, structures, the text format and purely structural
//!   analysis (incidence graphs, components, trees, balance, directed shadows).
//! * [`hom`]: the backtracking homomorphism solver, comparability, cores and
//!   canonical forms.
//! * [`algebra`]: disjoint union (join), categorical product (meet) and the
//!   named structures `⊤`, `K1`, directed paths and transitive tournaments.
//! * [`enumerate`]: brute-force catalogs of structures, cores and trees, used
//!   as the oracle for every bounded verification.
//! * [`duality`]: duals of trees, generalized duals of forests, bounded
//!   duality verification and gap certificates.
//! * [`order`]: antichains, maximality, the antichain splitting procedure,
//!   `D*`, smallness and cut-point certificates.
//! * [`classes`]: membership in the cycle/tree based subclasses and bounded
//!   extension-witness search.
//!
//! Bounded searches over catalogs run on rayon when the `parallel` feature is
//! enabled (the default) and [`Config::parallel`] is set. Results never depend
//! on the execution mode: every parallel search reduces to the least catalog
//! index.

pub mod algebra;
pub mod classes;
pub mod duality;
pub mod enumerate;
mod error;
pub mod hom;
pub mod model;
pub mod order;
mod par;

pub use error::{Error, Result};
pub use model::{Signature, Structure};

/// Default cap on the number of labeled candidates a catalog build may visit.
pub const DEFAULT_CEILING: u64 = 10_000_000;

/// Execution settings shared by the oracle-backed operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Upper bound on labeled candidates (catalogs) and raw dual size.
    pub ceiling: u64,
    /// Run catalog loops on the rayon pool. Ignored without the `parallel` feature.
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ceiling: DEFAULT_CEILING,
            parallel: true,
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            parallel: false,
            ..Config::default()
        }
    }
}
