//! Chow rings of quadrics and the Gysin maps of `Q_{n-1} -> P^n`.

mod gysin;
mod ring;

pub use gysin::{
    dq_additive_basis_localization, generator_coordinates, gysin_pullback, gysin_pushforward, matrix_text,
    projection_formula_check, pullback_class, pushforward_class, quadric_generator_degrees, quadric_generators,
    GysinTable, IntMatrix, ProjClass,
};
pub use ring::{
    chow_basis, chow_mul, codimension_ranks, even_intersection_table, intersection_table_text, mono_codim,
    presentation, y_codim, ChowClass, ChowMono,
};
