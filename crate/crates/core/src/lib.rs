//! Exact computation of Chebyshev curves: the plane curves of side ratios
//! `[a:b:c]` of triangles whose base angles are in ratio `p:q`.
//!
//! The curve `C_{p,q}` is parametrized by `[U_{p−1}(t) : U_{q−1}(t) : U_{p+q−1}(t)]`
//! and its implicit equation `f_{p,q}` is obtained from the line `b = a` by
//! repeated Heron transforms and swaps, following the Euclidean algorithm on
//! `(p, q)`.

pub mod chebyshev;
pub mod cremona;
mod error;
pub mod factory;
pub mod poly;
pub mod triangle;

pub use error::{Error, Result};
