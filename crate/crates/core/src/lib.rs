//! Grothendieck polynomials and the combinatorics around them: the 0-Hecke
//! monoid, divided-difference operators, Hecke factorizations, set-valued and
//! primed tableaux, Hecke insertion, explicit bijections and Q-Schur expansions.
//!
//! Start with the programs under `examples/`.

pub mod error;
pub mod perm;
pub mod poly;
pub mod operators;
pub mod factorization;
pub mod tableau;
pub mod insertion;
pub mod bijections;
pub mod stable;
pub mod worked;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
pub use perm::{HeckeWord, Permutation};
pub use poly::{Family, Monomial, Polynomial};
pub use factorization::{Factorization, Kind, Letter, WeightPair};
pub use stable::{Model, QExpansion, TruncationSpec};
pub use tableau::{Entry, Partition, SkewShape, Tableau};
