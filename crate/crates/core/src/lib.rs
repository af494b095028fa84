//! Cubic Cayley graphs `Cay(S_n, {c, c⁻¹, t})` with `c = (1 2 … n)` and
//! `t = (1 2)`: exact cycle censuses, automorphism search and normality
//! verdicts.
//!
//! Products compose left to right: `p.compose(q)` applies `p` first. The
//! neighbours of a vertex `g` are `s·g` for `s ∈ S`.

pub mod autgrp;
pub mod cayley;
pub mod cycles;
pub mod error;
pub mod genset;
pub mod parallel;
pub mod perm;

pub use autgrp::{AutMap, MapForm, StabilizerResult};
pub use cayley::{CayleyGraph, GraphMode, GraphOptions, VertexRank};
pub use cycles::{CaseTag, Census, CycleCert, ExponentSequence};
pub use error::{Error, Result};
pub use genset::{GenSet, Letter, Word};
pub use parallel::Parallelism;
pub use perm::{Parity, Permutation};
