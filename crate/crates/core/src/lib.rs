//! Exact-arithmetic engine for characters of the classical groups
//! `GL(n)`, `Sp(2n)`, `SO(2n+1)` and `O(2n)`, factorial and shifted Schur
//! polynomials, and the distinguished invariant bases built from them.
//!
//! Everything is computed over [`Q`] (arbitrary precision rationals); there
//! is no floating point anywhere in the crate. The verification routines in
//! [`binomial`], [`shifted`], [`characters`] and [`invariants`] return
//! reports rather than booleans so that sweeps can serialize every mismatch.

#![allow(clippy::needless_range_loop)]

pub mod binomial;
pub mod characters;
pub mod combinatorics;
pub mod error;
pub mod exactpoly;
pub mod golden;
pub mod invariants;
pub mod rational;
pub mod report;
pub mod shifted;
pub mod sweep;

pub use combinatorics::{Partition, Series, ShiftSequence, ShiftedWeight, Signature};
pub use error::{Error, Result};
pub use exactpoly::{LaurentPoly, SchurExpansion, UniPoly, Vars};
pub use rational::Q;
pub use report::{CheckReport, Mismatch};
