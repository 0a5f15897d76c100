//! Exact representation-theoretic counting behind Tate classes on Hilbert
//! modular varieties.
//!
//! Everything here is exact: rationals, cyclotomic numbers, Laurent
//! polynomials in weight variables, permutation groups with full Cayley
//! closure, and matrix representations with cyclotomic entries. The crate
//! computes
//!
//! * one-dimensional constituent counts in tensor powers of the standard
//!   representation of products of GL₂ factors ([`weightalg`]),
//! * the closed-form rank formula those counts collapse to ([`formulas`]),
//! * tensor-induced representations of finite groups, twist-equivalence
//!   stabilizers, and the quadratic descent step ([`asai`]),
//! * a mod-ℓ big-image check for 2×2 matrix groups ([`repcore`]),
//!
//! and cross-checks each computation against an independent brute-force
//! route. See the `examples/` directory for runnable tours of each
//! capability; the `tatecount` binary exposes the same operations on
//! fixture files.

pub mod asai;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod groupcore;
pub mod repcore;
pub mod weightalg;

pub use error::{Error, Result};
