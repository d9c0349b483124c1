//! Both quantizations of compact Hermitian symmetric spaces at desk scale.
//!
//! The KZ side computes cyclotomic associators and ribbon braids as normalized
//! monodromies. The quantum-group side computes Letzter–Kolb coideal generators
//! and K-matrices for `U_q(sl_N)` in type AIII. The two meet in [`braidb`],
//! where type-B braid group representations are compared by traces.

pub mod acceptance;
pub mod braidb;
pub mod cohoch;
pub mod digamma;
pub mod error;
pub mod kzmono;
pub mod linalg;
pub mod rootdata;
pub mod satake;
pub mod sln;
pub mod uqsl;

pub use error::{Error, Result};
