//! Exact construction and verification of the Stirling-coefficient linear
//! systems `M_{R,l} (a, 1)^t = 0` over `Z[x, y, z]`.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is exact:
//! coefficients are arbitrary-precision integers, or rationals where a
//! factorial denominator forces it.
//!
//! - [`polyring`]: sparse polynomials in `x, y, z`, polynomials in `s` over
//!   them, truncated exponential generating series in `t`, and normal forms
//!   modulo a linear relation `ax + by`.
//! - [`stirling`]: Stirling numbers of both kinds and their classical
//!   identities.
//! - [`csys`]: the polynomials `C(k1, k2, l)`, the matrices `M_{R,l}`,
//!   staircase point sets, root-encoded solutions and determinants.
//! - [`quotient`]: the same systems in `C[x,y,z]/(ax + by)`: reduced point
//!   sets, row-elimination certificates, reduced solutions and determinants.
//! - [`identities`]: Stirling-number identities obtained by specializing the
//!   above.
#![no_std]

extern crate alloc;

pub mod csys;
mod error;
pub mod identities;
pub mod num;
pub mod polyring;
pub mod quotient;
pub mod stirling;

pub use error::{Error, Result};
pub use polyring::{MultiPoly, QPoly, QuotientRel, TruncSeries, UniPoly, ZPoly};
