//! Exact polynomial arithmetic over `Z[x, y, z]` and `Q[x, y, z]`.

mod multi;
mod rel;
mod series;
mod uni;

pub use multi::{Coeff, Exp, MultiPoly, Named, QPoly, ZPoly, X, Y, Z};
pub use rel::QuotientRel;
pub use series::TruncSeries;
pub use uni::UniPoly;

/// Normal form of `p` modulo `rel`.
pub fn reduce_mod<C: Coeff>(p: &MultiPoly<C>, rel: &QuotientRel) -> MultiPoly<C> {
    rel.reduce(p)
}
