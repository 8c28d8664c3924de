//! Generating series of diagonally colored Young diagrams.
//!
//! The colored series `Z_a(q_0, ..., q_{n-1})` counts Young diagrams by the
//! number of boxes of each color under the diagonal coloring
//! `res(i, j) = a - i + j mod n`. This crate computes it three ways and
//! checks them against each other as exact truncated integer series:
//!
//! - [`partitions::z_brute`]: enumerate every diagram up to the truncation
//!   degree and bin its color weights;
//! - [`frobenius::z_via_constant_term`]: the `z^0` coefficient of the product
//!   of the two row generating functions of colored Frobenius partitions;
//! - [`identities::theta_closed_form`]: the Euler factor raised to the `n`-th
//!   power times a lattice sum graded by the `A_{n-1}` Cartan quadratic form.
//!
//! The [`abacus`] module supplies the core/quotient decomposition that
//! explains the factorization, and [`identities`] also carries the Jacobi
//! triple product checks and the infinite products for `n = 2, 3`.

pub mod abacus;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod identities;
pub mod partitions;
pub mod series;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{ColoringContext, Partition, PartitionTuple, WeightVector};
pub use series::{MultiSeries, ZLaurentSeries};
