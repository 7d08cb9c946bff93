//! Truncated power series, binomial-basis polynomials and the tree-indexed
//! fixed-point engines.

pub mod binomial;
pub mod expansion;
pub mod operators;
pub mod qdivided;
pub mod special;
pub mod truncated;

pub use binomial::{binomial_to_monomial, has_natural_coefficients, monomial_to_binomial, BinomialPoly};
pub use expansion::{
    evaluate_tree, expand_with, fixed_point_binary, fixed_point_mary, fixed_point_plane, picard,
    Binary, Grammar, MAry, Plane, SeriesValue, TreeExpansion,
};
pub use qdivided::QDividedSeries;
pub use special::{binomial_series, exp_series, generalized_binomial};
pub use truncated::TruncatedSeries;
