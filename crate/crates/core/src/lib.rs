//! Exact weighted Pólya enumeration.
//!
//! The crate computes cycle index polynomials of finite permutation groups,
//! the classical weighted Pólya generating function, its generalization in
//! which every group element carries an arbitrary rational weight `Δ(σ)`, and
//! two consequences of the signed case: the elementary symmetric polynomial
//! `e_n` as a signed cycle index of `Sym(n)`, and the determinant of a matrix
//! from the traces of its powers.
//!
//! Every identity has an independent brute-force counterpart (stabilizer
//! sums over all colorings, ordered set partitions, subset expansion,
//! Bareiss elimination) so that it can be checked as an exact equality.
//! All arithmetic is over arbitrary-precision rationals.
//!
//! Heavy loops run on rayon when the `parallel` feature is enabled (default);
//! see [`exec::Strategy`].

pub mod algebra;
pub mod cycleindex;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod formats;
pub mod permgroup;
pub mod symdet;
pub mod verify;

pub use algebra::{Monomial, MultiPoly, Rat};
pub use cycleindex::{CycleIndex, IntPartition};
pub use enumeration::{Caps, DeltaWeight, GenFunction, OrderedSetPartition};
pub use error::{Error, Result};
pub use exec::Strategy;
pub use permgroup::{Coloring, CompVector, PermGroup, Permutation};
pub use symdet::{RatMatrix, TraceVector};
