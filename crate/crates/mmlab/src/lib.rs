//! Guess-selection strategies and benchmarks for generalized Mastermind.
//!
//! The codebreaker repeatedly guesses a hidden length-`ell` code over a
//! `kappa`-symbol alphabet and receives (black, white) peg feedback. This
//! crate provides:
//!
//! * the feedback rule, consistency filtering, and code-space enumeration
//!   ([`code`]),
//! * feedback partitions of the candidate set and their scalar scores
//!   ([`partition`]),
//! * one-ply guess-selection strategies with seeded random tie-breaking,
//!   including subset-bounded variants ([`strategy`]),
//! * an estimation-of-distribution solver biased by local entropy ([`eda`]),
//! * a reproducible experiment runner with Wilcoxon rank-sum significance
//!   grouping ([`bench`]), and
//! * CSV/JSON reporting plus the `mmlab` command-line front end ([`report`],
//!   [`cli`]).

pub mod bench;
pub mod cli;
pub mod code;
pub mod eda;
mod error;
pub mod partition;
pub mod report;
pub mod space;
pub mod stats;
pub mod strategy;

pub use code::{Alphabet, Code, Feedback, GameHistory, Turn};
pub use error::{Error, Result};
pub use partition::{GuessScore, PartitionTable};
pub use space::Space;
pub use strategy::{StrategyConfig, StrategyKind};
