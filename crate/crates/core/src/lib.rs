//! Permutation statistics and two cyclic-to-linear bijections on `Sₙ`:
//!
//! * [`triple`]: a bijection carrying the value sets `(Êxc, Aexc, F̂ix)` to
//!   `(Asc₂, Des, Suc)`, with its inverse and a checkable iteration trace;
//! * [`signed`]: a sign- and first-letter-preserving bijection carrying
//!   `depth` to `drp`, built on the fundamental transformation.
//!
//! [`verify`] checks the surrounding equidistribution identities
//! exhaustively over small symmetric groups, using the slice-parallel sweep
//! in [`sweep`] (rayon behind the default `parallel` feature).

pub mod dist;
pub mod error;
pub mod perm;
pub mod poly;
pub mod signed;
pub mod stats;
pub mod sweep;
pub mod triple;
pub mod verify;

pub use error::{DomainError, PermError, VerifyError};
pub use perm::{standardize, unstandardize, CycleForm, Permutation};
pub use poly::MultiPoly;
pub use sweep::Execution;
