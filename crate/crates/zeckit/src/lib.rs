//! zeckit: exact arithmetic for linear recurrences and Zeckendorf-style
//! identities.
//!
//! Everything here is integer or rational arithmetic at arbitrary precision;
//! no floating point is used anywhere in the logic (the CLI can *display*
//! approximations on request). The crate provides:
//!
//! - [`recurrence`]: k-th order integer linear recurrences evaluated at any
//!   signed index, plus the second-order addition formula
//!   u_{m+n} = u_m u_n + t u_{m-1} u_{n-1}.
//! - [`quad`]: the quadratic integer rings Z[φ] (φ² = φ + 1) and Z[√2],
//!   with exact powers, Binet-formula checks, and power sums ω^r + ω^{-r}.
//! - [`zeck`]: Zeckendorf and negafibonacci encodings of integers.
//! - [`tiling`]: exhaustive enumeration of colored board tilings: the
//!   combinatorial oracle behind the recurrences, the breakability
//!   partition, and the 6 p_n = p_{n+2} + p_{n-2} bijection.
//! - [`identity`]: identities of the shape c·S_n = Σ S_{n+e_i}: numeric and
//!   symbolic verification, the (U_{r+1}+U_{r-1})U_n = U_{n+r}+U_{n-r}
//!   family generator, discovery via golden/silver ratio power expansions,
//!   and the Fibonacci/Lucas and Pell/Pell-Lucas Diophantine checks.
//! - [`catalog`]: the shipped identity catalog and its checker.
//! - [`cli`]: the command-line front end (the `zeckit` binary is a thin
//!   wrapper around [`cli::run`]).
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod identity;
mod json_num;
pub mod quad;
pub mod recurrence;
pub mod tiling;
pub mod zeck;

pub use error::{Error, Result};
pub use identity::{IdentityPattern, LinearForm, Verdict, VerifyMode, Witness};
pub use quad::{QuadInt, RingTag};
pub use recurrence::{RatValue, RecurrenceSpec, SeqValue, SequenceFamily};
pub use tiling::{BreakPartition, Tile, Tiling};
pub use zeck::{ReprKind, Representation};
