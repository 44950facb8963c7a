//! Exact coefficient rings and sparse multivariate polynomials.

mod bidegree;
mod coords;
mod poly;
mod ring;

pub use bidegree::BiDegree;
pub use coords::{hyperbolic_coordinate_change, hyperbolic_form, hyperbolic_names};
pub use poly::{Monomial, SparsePoly, Var, VarRegistry};
pub use ring::{Coeff, CoeffRing, RingKind};
