//! Exact tree expansions of fixed-point equations over power series, the
//! free and word quasi-symmetric function algebras that lift them, and
//! checkers for the hook length identities they produce.

pub mod algebra;
pub mod arith;
pub mod combinat;
pub mod error;
pub mod fqsym;
pub mod identities;
pub mod series;
pub mod wqsym;

pub use error::{Error, Result};
