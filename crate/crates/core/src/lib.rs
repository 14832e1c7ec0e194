//! Permutation statistics, shuffle enumeration, and exhaustive verification
//! of the linear and cyclic shuffle generating-function identities.

pub mod cli;
pub mod error;
pub mod perm;
pub mod qpoly;
pub mod report;
pub mod shuffle;
pub mod sweep;
pub mod theorems;

pub use error::{Error, Result};
pub use perm::{canonicalize, CyclicPerm, Letter, LinearPerm, StatSummary};
pub use qpoly::{gauss_binomial, QPoly};
pub use shuffle::{
    cyclic_shuffles, cyclic_shuffles_oracle, is_circular_subsequence, linear_shuffles, ShuffleSet,
};
pub use theorems::{
    agrr_count, cyclic_shuffle_maj_gf, cyclic_stanley_rhs, psi_forward, psi_inverse,
    shuffle_maj_gf, stanley_rhs, CyclicShufflePair, PsiImage,
};
pub use sweep::{enumerate_pairs, run_sweep, SweepConfig, Theorem, VerificationReport};
