//! The polynomials `C(k1, k2, l)`, the matrices `M_{R,l}` built from them,
//! and the root-encoded solutions of `M_{R,l} (a, 1)^t = 0`.

pub mod counterexample;
mod cpoly;
mod det;
pub mod lemma;
mod matrix;
mod points;
mod solve;
pub mod unique;

pub use counterexample::{verify_counterexample, CounterexampleReport};
pub use cpoly::{cpoly, cpoly_egf, CGenerator};
pub use det::{bareiss, det_bareiss, det_closed_form, reversal_sign, ClosedForm};
pub use lemma::{lemma_comb_check, LemmaPart};
pub use matrix::{residual, CMatrix};
pub use points::{partitions, staircases, Multiplicity, Point, PointSet};
pub use solve::{b_r, residual_for_counts, residual_with, solve};
pub use unique::{unique_at_point, UniqueCheck};
