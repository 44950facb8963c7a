//! Sum-of-squares formulas of type `[r, s, n]`: representation, verification,
//! classical constructions, and the homotopy identities used alongside them.

mod classical;
mod homotopy;
pub(crate) mod hurwitz_radon;
pub mod json;
mod sos;

pub use classical::{construct_classical, construct_hurwitz_radon, ClassicalKind};
pub use homotopy::{
    homotopy_invariance_check, homotopy_names, homotopy_sum_of_squares, homotopy_with_vectors, HomotopyCheck,
    HomotopyMode, HomotopySize,
};
pub use hurwitz_radon::{hurwitz_radon_matrices, SignedPerm};
pub use json::{from_json, to_json, FieldJson, FormulaJson};
pub use sos::{
    orthonormal_vectors, point, pointwise_defect, restrict_formula, x_var, y_var, HurwitzSystem, OrthonormalPair,
    SosFormula,
};
