//! Brute-force recomputations of the distribution and of the counts behind
//! it, sharing no code with the formula side beyond exact arithmetic.

pub mod clebsch_gordan;
pub mod grassmann;
pub mod tensor;

pub use clebsch_gordan::{cg_square, pmf_cg_oracle, HalfInt};
pub use grassmann::{
    count_intersection_pairs, count_relative_position, enumerate_subspaces,
    enumerate_subspaces_by_span, relative_grassmannian, FiniteField, FqSubspace,
};
pub use tensor::{
    hook_length_dim, is_orthogonal_projector, pmf_tensor_oracle, pmf_tensor_oracle_all,
    projector_matrix, quadratic_form, TensorState,
};
