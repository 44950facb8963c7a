//! Mod-2 motivic cohomology of deleted quadrics as presented bigraded rings.

mod dq;
mod m2;
mod pipeline;
mod tensor;

pub use dq::{
    bockstein, dq_mul, dq_power_a, restrict_class, ring_additive_basis, DQClass, DQMono, DQRingSpec, Epsilon, RhoMode,
};
pub use m2::M2Poly;
pub use pipeline::{diagonal_power, diagonal_power_in, hopf_via_motivic, motivic_sweep};
pub use tensor::{tensor_mul, TensorClass};
