//! Computations around hyper-Kähler categories built from K3 surfaces.
//!
//! * [`permgroup`]: permutation groups, k-subset orbits, homogeneity,
//!   conjugacy classes and commuting pairs.
//! * [`projgroups`]: small finite fields and the groups PGL_2(q), PΓL_2(q)
//!   and AGL(1, q) as permutation groups.
//! * [`graded`]: graded dimensions, Künneth products and invariant
//!   dimensions of permutation actions on `H^•(O_S)^{⊗n}`.
//! * [`hodge`]: Hodge diamonds, HKR, semiorthogonal subtraction, the Serre
//!   shift and the numerical checks on the resulting Hochschild numbers.
//! * [`orbifold`]: orbifold Euler characteristics of `(S^n, G)` and the
//!   Göttsche series.

pub mod error;
pub mod graded;
pub mod hodge;
pub mod orbifold;
pub mod perm;
pub mod permgroup;
pub mod projgroups;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use permgroup::{PermutationGroup, DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_BUDGET};
