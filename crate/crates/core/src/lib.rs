//! Computer-assisted verification that no Lucas number is a palindromic
//! concatenation of two distinct repdigits.
//!
//! The argument has two halves. An exhaustive exact-integer search settles
//! `n <= 1000`. For `n > 1000` a chain of lower bounds for linear forms in
//! logarithms produces astronomical bounds on the block lengths and the
//! index, which three Dujella-Petho reduction sweeps collapse to
//! `l < 52`, `m < 54`, `n < 269`, contradicting `n > 1000`. The pipeline
//! module runs both halves and emits a machine-readable certificate.

pub mod bakerbounds;
pub mod digitforms;
pub mod error;
pub mod exhaustive;
pub mod pipeline;
pub mod realfield;
pub mod recurrences;
pub mod reduction;

pub use bakerbounds::{
    derive_bound_chain, guzman_luca, matveev_constant, BoundChainResult, CoverValue, HeightExpr,
    MatveevInstance,
};
pub use digitforms::{match_palindrome, palindrome_value, two_block_value, PalindromeSpec};
pub use error::{Error, Result};
pub use exhaustive::{search_palindromic, search_two_block, SearchMode, SearchReport};
pub use pipeline::{explain, run_full, BoundCertificate, Config, Verdict};
pub use realfield::{expand_cf, nearest_int_dist, Convergent, PrecReal, DEFAULT_DIGITS};
pub use recurrences::{check_growth_bounds, fibonacci, lucas};
pub use reduction::{dp_reduce, ReductionInstance, ReductionResult, StageAggregate};
