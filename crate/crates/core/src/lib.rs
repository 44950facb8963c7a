//! Exact algebra for sums-of-squares composition formulas.
//!
//! The crate verifies and constructs bilinear formulas
//! `(x_1^2 + ... + x_r^2)(y_1^2 + ... + y_s^2) = z_1^2 + ... + z_n^2`,
//! decides the binomial-parity Hopf condition, and computes in the presented
//! bigraded rings of deleted quadrics and the Chow rings of quadrics whose
//! arithmetic forces that condition.

pub mod algebra;
pub mod chow;
pub mod error;
pub mod formula;
pub mod hopf;
pub mod motivic;
pub mod search;

pub use error::{AlgebraError, ChowError, FormulaError, HopfError, RingError, SearchError};
