//! Generalized Springer correspondence for SO(N) in exact arithmetic.
//!
//! The crate maps pairs `(λ, [ε])` of an orthogonal partition and a
//! local-system sign class to bipartitions through symbols, computes
//! intersection-cohomology multiplicities by raising operators, finds the
//! dominance-maximal and minimal constituents of Springer fibre cohomology,
//! and verifies the surrounding theorems exhaustively for small `N`.
//!
//! Module map:
//! - [`partition`], [`seq`]: partitions, bipartitions, eventually arithmetic sequences
//! - [`order`]: index orders and the peeling procedures (a) and (b)
//! - [`pab`]: the sets `P(α,β,<)` and `P_{A,B;s}(α,β,<)`
//! - [`symbols`]: signs, symbols, `Φ_N` and its inverse, `H(n,k)`
//! - [`multiplicity`]: raising configurations, expansions, Pieri folds
//! - [`maxmin`]: maximal and minimal data, the recursive algorithm, the sign twist
//! - [`verify`]: exhaustive property suites
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod error;
pub mod maxmin;
pub mod multiplicity;
pub mod order;
pub mod pab;
pub mod partition;
pub mod seq;
pub mod symbols;
pub mod verify;

pub use error::{Error, Result};
pub use order::{IndexOrder, Tag};
pub use partition::{Bipartition, Partition};
pub use seq::{EventualSeq, Q};
pub use symbols::{GSCDatum, Sign};
